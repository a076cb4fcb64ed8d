#ifndef A2RR_HOLONOMIC_HPP
#define A2RR_HOLONOMIC_HPP

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "a2rr/json_io.hpp"
#include "a2rr/rational_function.hpp"
#include "a2rr/series.hpp"

namespace a2rr {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;
using Point = std::vector<long>;

struct LinearForm {
  std::vector<long> coef;
  long constant = 0;
  long eval(const Point& z) const;
  // value of the homogeneous part
  long linear(const Point& z) const;
};

struct HypDenominator {
  LinearForm arg;
  int base = 1;  // 1/(q^base; q^base)_arg
};

// F(z) = q^{Q(z)} / prod (q^b;q^b)_{L(z)}, z = (n, k_1, ..., k_r),
// Q(z) = z.M.z/2 + l.z + c; zero when some L(z) < 0
struct HypTerm {
  std::vector<std::string> vars;
  std::vector<std::vector<long>> M;
  std::vector<long> l;
  long c = 0;
  std::vector<HypDenominator> denoms;
  LinearForm xexp;

  std::size_t dim() const { return vars.size(); }
  long exponent(const Point& z) const;
  bool supported(const Point& z) const;
  // exact value at an integer q
  Rational eval(const Point& z, long q) const;
  // ring q, q^{z_0}, q^{z_1}, ... with names "q", "q" + var
  VarList ring() const;

  static HypTerm from_text(const std::vector<std::string>& vars, const std::string& exponent,
                           const std::vector<std::pair<int, std::string>>& denoms,
                           const std::string& xexp = "");
};

LinearForm parse_linear(const std::vector<std::string>& vars, std::string_view text);

Json to_json(const HypTerm& t);
HypTerm hypterm_from_json(const Json& j);

// F(z - shift) / F(z)
RationalFunction term_ratio(const HypTerm& t, const std::vector<int>& shift);

// Element of the shift algebra: sum of coeff * S^shift, coefficients on the left.
// A coefficient is a Laurent polynomial in q and q^{z_i}.
class ShiftOp {
 public:
  using Shift = std::vector<int>;

  ShiftOp() = default;
  ShiftOp(VarList ring, std::size_t dim) : ring_(std::move(ring)), dim_(dim) {}
  static ShiftOp coefficient(const LaurentPoly& c, std::size_t dim);
  static ShiftOp shift(const VarList& ring, std::size_t dim, std::size_t var, int power = 1);

  const VarList& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  const std::map<Shift, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // true when the only shift is zero
  bool is_coefficient() const;
  LaurentPoly coeff(const Shift& s) const;

  ShiftOp operator-() const;
  ShiftOp& operator+=(const ShiftOp& o);
  ShiftOp& operator-=(const ShiftOp& o);
  friend ShiftOp operator+(ShiftOp a, const ShiftOp& b) { return a += b; }
  friend ShiftOp operator-(ShiftOp a, const ShiftOp& b) { return a -= b; }
  friend ShiftOp operator*(const ShiftOp& a, const ShiftOp& b);
  friend bool operator==(const ShiftOp& a, const ShiftOp& b) { return a.terms_ == b.terms_; }

  void add_term(const Shift& s, const LaurentPoly& c);
  std::string to_string(const std::vector<std::string>& shift_names) const;

 private:
  VarList ring_;
  std::size_t dim_ = 0;
  std::map<Shift, LaurentPoly> terms_;
};

// substitute z -> z - s in a coefficient
LaurentPoly shift_coefficient(const LaurentPoly& c, const std::vector<int>& s);

// Parser for the certificate notation: integers, q, q^{3n+8}, q^b, shifts
// (N for the first variable, upper-case letters for the others), named
// sub-expressions, parentheses with ^k, juxtaposition as product.
class CertificateParser {
 public:
  CertificateParser(std::vector<std::string> vars, VarList ring);
  ShiftOp parse(std::string_view text,
                const std::function<ShiftOp(const std::string&)>& lookup = nullptr) const;
  const VarList& ring() const { return ring_; }
  std::size_t dim() const { return vars_.size(); }

 private:
  std::vector<std::string> vars_;
  VarList ring_;
};

struct CertificateSet {
  int order = 0;
  // p[j] is the coefficient of N^j, a polynomial in q and q^n
  std::vector<LaurentPoly> p;
  // fam[i][j]: coefficient family of the i-th summation variable at N^j
  std::vector<std::vector<ShiftOp>> fam;
};

Json to_json(const CertificateSet& c);
CertificateSet certificate_from_json(const Json& j, const HypTerm& t);

// sum_j p_j N^j + sum_i (1 - K_i) sum_j fam_ij N^j
ShiftOp certificate_operator(const HypTerm& t, const CertificateSet& c);

struct VerifyResult {
  bool ok = false;
  RationalFunction residual;  // operator applied to F, divided by F
};

VerifyResult verify_certificate(const HypTerm& t, const CertificateSet& c);

// the operator applied to F divided by F, as one rational function
RationalFunction apply_to_term(const HypTerm& t, const ShiftOp& op);

// several operators applied to F, over one shared denominator
struct SharedNumerators {
  std::vector<LaurentPoly> nums;
  LaurentPoly den;
};
SharedNumerators apply_to_term_shared(const HypTerm& t, const std::vector<ShiftOp>& ops);

std::vector<LaurentPoly> recurrence_from_certificate(const CertificateSet& c);

// f_n = sum over the summation variables of F(n, k), for 0 <= n <= nmax, at integer q
std::vector<Rational> sum_sequence(const HypTerm& t, int nmax, long q);

// value of p_0 f_n + ... + p_J f_{n-J} at integer q, for each n in [0, nmax]
std::vector<Rational> recurrence_residuals(const std::vector<LaurentPoly>& p,
                                           const std::vector<Rational>& f, long q);

// Certificate source files: a term description plus named definitions in the
// notation above, with optional emendations applied on request.
struct Emendation {
  std::string target;
  std::string from;
  std::string to;
};

struct CertificateSource {
  std::string name;
  std::vector<std::string> vars;
  std::string exponent;
  std::vector<std::pair<int, std::string>> denoms;
  std::string xexp;
  int order = 0;
  std::vector<std::pair<std::string, std::string>> defs;  // name, text
  std::vector<Emendation> emendations;

  HypTerm term(bool emended) const;
  CertificateSet certificate(bool emended) const;
};

CertificateSource load_certificate_source(const std::string& path);
CertificateSource parse_certificate_source(const std::string& text, const std::string& name = "");

struct CertificateReport {
  bool verbatim_ok = false;
  std::string verbatim_error;  // parse error or empty
  bool emended_ok = false;
  std::string emended_error;
  RationalFunction verbatim_residual;
  RationalFunction emended_residual;
  // only when both of the above fail: a certificate found on the printed support
  std::optional<CertificateSet> regenerated;
  std::vector<std::string> p_differences;  // p_j not proportional to the printed ones
  bool ok() const { return verbatim_ok || emended_ok; }
};

// verbatim first, then with the listed emendations, then regenerated
CertificateReport check_certificate_source(const CertificateSource& src, bool regenerate = true);

// ---- Andrews-Gordon type sums

struct AGSumSpec {
  std::vector<std::string> vars;       // summation variables
  std::vector<std::vector<long>> M;    // exponent z.M.z/2 + l.z + c
  std::vector<long> l;
  long c = 0;
  std::vector<long> xexp;              // x exponent, linear
  std::vector<int> bases;              // 1/(q^b;q^b)_{z_i}

  static AGSumSpec from_text(const std::vector<std::string>& vars, const std::string& exponent,
                             const std::string& xexp, const std::vector<int>& bases);
  long exponent(const Point& z) const;
};

// the sums of the bigraded theorem, the cylindric propositions, and the auxiliary sum
AGSumSpec ag_spec_bir();
AGSumSpec ag_spec_birp();
AGSumSpec ag_spec_g111();
AGSumSpec ag_spec_g300();
AGSumSpec ag_spec_aux();

BiSeries evaluate_ag_sum(const AGSumSpec& spec, int N, long max_points = 10000000);

// ---- q-difference operators in x: sum coeff(x,q) s(x q^{unit*shift})

struct QDiffOperator {
  int unit = 3;
  std::vector<std::pair<LaurentPoly, int>> terms;

  static QDiffOperator from_text(const std::vector<std::pair<std::string, int>>& terms, int unit = 3);
  std::string to_string() const;
};

Json to_json(const QDiffOperator& op);
QDiffOperator qdiff_from_json(const Json& j);

BiSeries apply_qdiff(const QDiffOperator& op, const BiSeries& s);

// printed scalar equations, moved to one side
QDiffOperator qdiff_bir();
QDiffOperator qdiff_birp(bool printed_plus);
QDiffOperator qdiff_g300();
QDiffOperator qdiff_g111();

// ---- certificate search

struct CelineBounds {
  int order = 1;              // J
  int udeg = 2;               // degree in q^n of every coefficient
  std::vector<int> kdeg;      // degree in q^{k_i} of family coefficients
  std::vector<int> kshift;    // largest shift in each summation variable inside a family
  int qdeg_max = 40;          // bound on q-degree of reconstructed rational functions
  // when set, the ansatz uses exactly the (shift, monomial in q^n, q^k) support of this set,
  // ignoring powers of q; order, udeg, kdeg and kshift are then unused
  std::optional<CertificateSet> support;
};

std::optional<CertificateSet> celine_solve(const HypTerm& t, const CelineBounds& b);

// ---- uncoupling F(x) = A(x) F(x q^unit)

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

QDiffOperator uncouple_system(const PolyMatrix& A, std::size_t component, int unit = 3);

PolyMatrix poly_matrix_from_json(const Json& j, const VarList& vars);

}  // namespace a2rr

#endif  // A2RR_HOLONOMIC_HPP
