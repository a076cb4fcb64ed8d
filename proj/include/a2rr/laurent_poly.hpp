#ifndef A2RR_LAURENT_POLY_HPP
#define A2RR_LAURENT_POLY_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace a2rr {

using Integer = mpz_class;

// operands from different rings, bad shapes
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxVars = 8;

struct Monomial {
  std::array<std::int32_t, kMaxVars> e{};

  std::int32_t& operator[](std::size_t i) { return e[i]; }
  std::int32_t operator[](std::size_t i) const { return e[i]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  Monomial operator+(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  Monomial operator-(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  std::int64_t total_degree() const {
    std::int64_t d = 0;
    for (auto x : e) d += x;
    return d;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : m.e) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ULL;
    }
    return h;
  }
};

bool grlex_less(const Monomial& a, const Monomial& b);

class VarList {
 public:
  VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}
  VarList(std::initializer_list<std::string> names);
  explicit VarList(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  int index_of(std::string_view name) const;

  friend bool operator==(const VarList& a, const VarList& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Terms sorted ascending in grlex, no zero coefficients stored.
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(VarList vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(const VarList& vars, const Integer& c);
  static LaurentPoly monomial(const VarList& vars, const Monomial& m,
                              const Integer& c = 1);
  static LaurentPoly variable(const VarList& vars, std::string_view name,
                              std::int32_t power = 1);
  static LaurentPoly from_terms(const VarList& vars, std::vector<Term> terms);

  const VarList& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Integer coeff(const Monomial& m) const;
  const Term& leading() const;

  std::int32_t max_degree(std::size_t var) const;
  std::int32_t min_degree(std::size_t var) const;
  Monomial min_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(const Integer& c) const;
  LaurentPoly shifted(const Monomial& m) const;
  LaurentPoly pow(unsigned k) const;

  // term with exponent e gets multiplied by the monomial sum_i e_i*images[i]
  LaurentPoly monomial_substitute(const std::vector<Monomial>& images) const;

  LaurentPoly exact_div(const LaurentPoly& d) const;
  bool try_exact_div(const LaurentPoly& d, LaurentPoly& quotient) const;

  Integer content() const;

  LaurentPoly embed(const VarList& target) const;

  std::uint64_t eval_mod(const std::vector<std::uint64_t>& point,
                         std::uint64_t p) const;

  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void check_same_ring(const LaurentPoly& o) const;
  VarList vars_;
  std::vector<Term> terms_;
};

// monomial factors are units here; result has positive leading coefficient
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// "2+3*x*q^4 - x q^-6"; juxtaposition means product
LaurentPoly parse_poly(const VarList& vars, std::string_view text);

}  // namespace a2rr

#endif  // A2RR_LAURENT_POLY_HPP
