#include "a2rr/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

namespace a2rr {

bool grlex_less(const Monomial& a, const Monomial& b) {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

VarList::VarList(std::initializer_list<std::string> names)
    : VarList(std::vector<std::string>(names)) {}

VarList::VarList(std::vector<std::string> names) {
  if (names.size() > kMaxVars)
    throw StructuralError("too many variables (max " +
                          std::to_string(kMaxVars) + ")");
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

int VarList::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

struct TermLess {
  bool operator()(const LaurentPoly::Term& a,
                  const LaurentPoly::Term& b) const {
    return grlex_less(a.first, b.first);
  }
};

// merge two sorted term lists, b scaled by sign
std::vector<LaurentPoly::Term> merge_terms(
    const std::vector<LaurentPoly::Term>& a,
    const std::vector<LaurentPoly::Term>& b, bool negate) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, negate ? Integer(-b[j].second) : b[j].second);
      ++j;
    } else {
      Integer c = negate ? Integer(a[i].second - b[j].second)
                         : Integer(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const VarList& vars, const Integer& c) {
  LaurentPoly r(vars);
  if (c != 0) r.terms_.emplace_back(Monomial{}, c);
  return r;
}

LaurentPoly LaurentPoly::monomial(const VarList& vars, const Monomial& m,
                                  const Integer& c) {
  LaurentPoly r(vars);
  if (c != 0) r.terms_.emplace_back(m, c);
  return r;
}

LaurentPoly LaurentPoly::variable(const VarList& vars, std::string_view name,
                                  std::int32_t power) {
  int i = vars.index_of(name);
  if (i < 0) throw StructuralError("unknown variable " + std::string(name));
  Monomial m;
  m[i] = power;
  return monomial(vars, m);
}

LaurentPoly LaurentPoly::from_terms(const VarList& vars,
                                    std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), TermLess{});
  LaurentPoly r(vars);
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
    } else {
      if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
      r.terms_.push_back(std::move(t));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
  return r;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

Integer LaurentPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& k) { return grlex_less(t.first, k); });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

const LaurentPoly::Term& LaurentPoly::leading() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.back();
}

std::int32_t LaurentPoly::max_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  std::int32_t d = terms_[0].first[var];
  for (auto& t : terms_) d = std::max(d, t.first[var]);
  return d;
}

std::int32_t LaurentPoly::min_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  std::int32_t d = terms_[0].first[var];
  for (auto& t : terms_) d = std::min(d, t.first[var]);
  return d;
}

Monomial LaurentPoly::min_exponents() const {
  Monomial m;
  if (terms_.empty()) return m;
  m = terms_[0].first;
  for (auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      m.e[i] = std::min(m.e[i], t.first.e[i]);
  return m;
}

void LaurentPoly::check_same_ring(const LaurentPoly& o) const {
  if (!(vars_ == o.vars_))
    throw StructuralError("variable lists differ");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

// A polynomial over no variables is a plain integer and adapts to the other
// operand's ring.
LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (vars_.size() == 0 && o.vars_.size() != 0) vars_ = o.vars_;
  if (o.vars_.size() != 0) check_same_ring(o);
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (vars_.size() == 0 && o.vars_.size() != 0) vars_ = o.vars_;
  if (o.vars_.size() != 0) check_same_ring(o);
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  VarList vars = a.vars_.size() ? a.vars_ : b.vars_;
  if (a.vars_.size() && b.vars_.size()) a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return LaurentPoly(vars);
  if (b.terms_.size() == 1 && b.terms_[0].first == Monomial{}) {
    LaurentPoly r = a.scaled(b.terms_[0].second);
    r.vars_ = vars;
    return r;
  }
  if (a.terms_.size() == 1 && a.terms_[0].first == Monomial{}) {
    LaurentPoly r = b.scaled(a.terms_[0].second);
    r.vars_ = vars;
    return r;
  }
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Integer tmp;
  for (auto& [ma, ca] : a.terms_) {
    for (auto& [mb, cb] : b.terms_) {
      auto& slot = acc[ma + mb];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.emplace_back(m, std::move(c));
  std::sort(terms.begin(), terms.end(), TermLess{});
  LaurentPoly r(vars);
  r.terms_ = std::move(terms);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  LaurentPoly r(vars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  LaurentPoly r = *this;
  // a monomial shift preserves grlex order between terms
  for (auto& t : r.terms_) t.first = t.first + m;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r = constant(vars_, 1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

LaurentPoly LaurentPoly::monomial_substitute(
    const std::vector<Monomial>& images) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& [m, c] : terms_) {
    Monomial n = m;
    for (std::size_t i = 0; i < images.size() && i < kMaxVars; ++i) {
      if (m.e[i] == 0) continue;
      for (std::size_t j = 0; j < kMaxVars; ++j)
        n.e[j] += m.e[i] * images[i].e[j];
    }
    out.emplace_back(n, c);
  }
  return from_terms(vars_, std::move(out));
}

bool LaurentPoly::try_exact_div(const LaurentPoly& d,
                                LaurentPoly& quotient) const {
  if (d.is_zero()) throw DomainError("division by zero polynomial");
  VarList vars = vars_.size() ? vars_ : d.vars_;
  if (vars_.size() && d.vars_.size()) check_same_ring(d);
  quotient = LaurentPoly(vars);
  if (is_zero()) return true;
  if (d.terms_.size() == 1) {
    auto& [md, cd] = d.terms_[0];
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& [m, c] : terms_) {
      if (!mpz_divisible_p(c.get_mpz_t(), cd.get_mpz_t())) return false;
      Integer qc;
      mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
      out.emplace_back(m - md, std::move(qc));
    }
    quotient.terms_ = std::move(out);
    return true;
  }
  // Work with genuine polynomials: the quotient of two polynomials without
  // monomial content is itself a polynomial.
  Monomial sa = min_exponents(), sd = d.min_exponents();
  LaurentPoly dn = d.shifted(Monomial{} - sd);
  std::map<Monomial, Integer, decltype(&grlex_less)> rem(&grlex_less);
  for (auto& [m, c] : terms_) rem.emplace(m - sa, c);
  const auto& [ld, lc] = dn.leading();
  std::vector<Term> q;
  while (!rem.empty()) {
    auto it = std::prev(rem.end());
    const Monomial& lm = it->first;
    Monomial qm = lm - ld;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (qm.e[i] < 0) return false;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lc.get_mpz_t())) return false;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lc.get_mpz_t());
    for (auto& [m, c] : dn.terms_) {
      Monomial k = m + qm;
      auto f = rem.find(k);
      if (f == rem.end()) {
        rem.emplace(k, -(c * qc));
      } else {
        mpz_submul(f->second.get_mpz_t(), c.get_mpz_t(), qc.get_mpz_t());
        if (f->second == 0) rem.erase(f);
      }
    }
    q.emplace_back(qm, std::move(qc));
  }
  quotient = from_terms(vars, std::move(q)).shifted(sa - sd);
  return true;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  LaurentPoly q;
  if (!try_exact_div(d, q)) throw DomainError("inexact polynomial division");
  return q;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::embed(const VarList& target) const {
  std::vector<int> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    map[i] = target.index_of(vars_[i]);
    if (map[i] < 0) {
      bool used = false;
      for (auto& t : terms_) used = used || t.first[i] != 0;
      if (used) throw StructuralError("cannot embed: missing " + vars_[i]);
    }
  }
  std::vector<Term> out;
  for (auto& [m, c] : terms_) {
    Monomial n;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (map[i] >= 0) n[map[i]] = m[i];
    out.emplace_back(n, c);
  }
  return from_terms(target, std::move(out));
}

std::uint64_t LaurentPoly::eval_mod(const std::vector<std::uint64_t>& point,
                                    std::uint64_t p) const {
  std::size_t nv = vars_.size();
  if (point.size() < nv) throw StructuralError("evaluation point too short");
  // cache positive and negative powers per variable
  std::vector<std::int32_t> lo(nv), hi(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    lo[i] = min_degree(i);
    hi[i] = max_degree(i);
  }
  std::vector<std::vector<std::uint64_t>> pw(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    std::uint64_t x = point[i] % p;
    std::uint64_t xi = x ? powmod(x, p - 2, p) : 0;
    std::int32_t l = std::min(lo[i], 0), h = std::max(hi[i], 0);
    pw[i].assign(h - l + 1, 0);
    pw[i][-l] = 1;
    for (std::int32_t k = 1; k <= h; ++k) pw[i][k - l] = mulmod(pw[i][k - 1 - l], x, p);
    for (std::int32_t k = -1; k >= l; --k) pw[i][k - l] = mulmod(pw[i][k + 1 - l], xi, p);
    lo[i] = l;
  }
  std::uint64_t acc = 0;
  for (auto& [m, c] : terms_) {
    std::uint64_t v = mpz_fdiv_ui(c.get_mpz_t(), p);
    for (std::size_t i = 0; i < nv; ++i) v = mulmod(v, pw[i][m[i] - lo[i]], p);
    acc += v;
    if (acc >= p) acc -= p;
  }
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Integer a = abs(c);
    bool unit_mono = m == Monomial{};
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (a != 1 || unit_mono) {
      os << a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (m[i] != 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (!(a.vars_ == b.vars_) && a.vars_.size() && b.vars_.size()) return false;
  return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// gcd

namespace {

LaurentPoly strip_monomial(const LaurentPoly& p) {
  return p.shifted(Monomial{} - p.min_exponents());
}

LaurentPoly normalize_sign(LaurentPoly p) {
  if (!p.is_zero() && p.leading().second < 0) p = -p;
  return p;
}

// coefficients of p viewed as polynomial in variable v (p has no negative
// exponent in v)
std::vector<LaurentPoly> coeffs_in(const LaurentPoly& p, std::size_t v) {
  std::int32_t d = p.max_degree(v);
  std::vector<std::vector<LaurentPoly::Term>> buckets(d + 1);
  for (auto& [m, c] : p.terms()) {
    Monomial n = m;
    n[v] = 0;
    buckets[m[v]].emplace_back(n, c);
  }
  std::vector<LaurentPoly> out;
  out.reserve(d + 1);
  for (auto& b : buckets) out.push_back(LaurentPoly::from_terms(p.vars(), std::move(b)));
  return out;
}

LaurentPoly from_coeffs(const VarList& vars, const std::vector<LaurentPoly>& cs,
                        std::size_t v) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t k = 0; k < cs.size(); ++k)
    for (auto& [m, c] : cs[k].terms()) {
      Monomial n = m;
      n[v] = static_cast<std::int32_t>(k);
      terms.emplace_back(n, c);
    }
  return LaurentPoly::from_terms(vars, std::move(terms));
}

LaurentPoly gcd_impl(LaurentPoly a, LaurentPoly b);

LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
  auto cs = coeffs_in(p, v);
  LaurentPoly g(p.vars());
  for (auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize_sign(strip_monomial(c)) : gcd_impl(g, c);
    if (g.is_constant() && g.leading().second == 1) break;
  }
  return g;
}

LaurentPoly prem(const LaurentPoly& a, const LaurentPoly& b, std::size_t v) {
  auto ac = coeffs_in(a, v);
  auto bc = coeffs_in(b, v);
  while (!ac.empty() && ac.back().is_zero()) ac.pop_back();
  const LaurentPoly& lb = bc.back();
  std::size_t db = bc.size() - 1;
  while (ac.size() > db && !ac.empty()) {
    LaurentPoly la = ac.back();
    std::size_t shift = ac.size() - 1 - db;
    for (auto& c : ac) c = c * lb;
    for (std::size_t k = 0; k <= db; ++k) ac[k + shift] -= la * bc[k];
    while (!ac.empty() && ac.back().is_zero()) ac.pop_back();
  }
  return from_coeffs(a.vars(), ac, v);
}

LaurentPoly gcd_impl(LaurentPoly a, LaurentPoly b) {
  VarList vars = a.vars().size() ? a.vars() : b.vars();
  if (a.is_zero()) return normalize_sign(strip_monomial(b));
  if (b.is_zero()) return normalize_sign(strip_monomial(a));
  a = strip_monomial(a);
  b = strip_monomial(b);
  // pick a variable occurring in a or b
  int v = -1;
  bool in_a = false, in_b = false;
  for (std::size_t i = 0; i < vars.size() && v < 0; ++i) {
    in_a = a.max_degree(i) > 0;
    in_b = b.max_degree(i) > 0;
    if (in_a || in_b) v = static_cast<int>(i);
  }
  if (v < 0) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.leading().second.get_mpz_t(),
            b.leading().second.get_mpz_t());
    return LaurentPoly::constant(vars, g);
  }
  if (!in_a) return gcd_impl(a, content_in(b, v));
  if (!in_b) return gcd_impl(content_in(a, v), b);
  LaurentPoly ca = content_in(a, v), cb = content_in(b, v);
  LaurentPoly g = gcd_impl(ca, cb);
  LaurentPoly pa = a.exact_div(ca), pb = b.exact_div(cb);
  if (pa.max_degree(v) < pb.max_degree(v)) std::swap(pa, pb);
  while (true) {
    LaurentPoly r = prem(pa, pb, v);
    if (r.is_zero()) break;
    if (r.max_degree(v) == 0) {
      pb = LaurentPoly::constant(vars, 1);
      break;
    }
    pa = std::move(pb);
    pb = r.exact_div(content_in(r, v));
  }
  pb = pb.exact_div(content_in(pb, v));
  return normalize_sign(strip_monomial(pb * g));
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars().size() && b.vars().size() && !(a.vars() == b.vars()))
    throw StructuralError("variable lists differ");
  return gcd_impl(a, b);
}

// ---------------------------------------------------------------------------
// parsing

namespace {

class PolyParser {
 public:
  PolyParser(const VarList& vars, std::string_view s) : vars_(vars), s_(s) {}

  LaurentPoly parse() {
    LaurentPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw StructuralError("parse error at " + std::to_string(pos_) + ": " +
                          what + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  LaurentPoly expr() {
    LaurentPoly r(vars_);
    bool neg = false;
    if (peek('+')) ++pos_;
    else if (peek('-')) { ++pos_; neg = true; }
    LaurentPoly t = term();
    r = neg ? -t : t;
    while (true) {
      if (peek('+')) { ++pos_; r += term(); }
      else if (peek('-')) { ++pos_; r -= term(); }
      else break;
    }
    return r;
  }

  LaurentPoly term() {
    LaurentPoly r = power();
    while (true) {
      if (peek('*')) { ++pos_; r *= power(); }
      else if (starts_factor()) r *= power();
      else break;
    }
    return r;
  }

  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    skip();
    std::size_t st = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (st == pos_) fail("expected integer");
    long v = std::stol(std::string(s_.substr(st, pos_ - st)));
    return neg ? -v : v;
  }

  LaurentPoly power() {
    LaurentPoly b = atom();
    if (peek('^')) {
      ++pos_;
      long e;
      if (peek('{')) {
        ++pos_;
        e = integer();
        if (!peek('}')) fail("expected }");
        ++pos_;
      } else if (peek('(')) {
        ++pos_;
        e = integer();
        if (!peek(')')) fail("expected )");
        ++pos_;
      } else {
        e = integer();
      }
      if (e >= 0) return b.pow(static_cast<unsigned>(e));
      if (b.size() != 1) fail("negative power of non-monomial");
      auto [m, c] = b.leading();
      if (c != 1 && c != -1) fail("negative power of non-unit");
      Monomial n;
      for (std::size_t i = 0; i < kMaxVars; ++i) n[i] = m[i] * static_cast<std::int32_t>(e);
      return LaurentPoly::monomial(vars_, n, (c == -1 && (e % 2)) ? -1 : 1);
    }
    return b;
  }

  LaurentPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly r = expr();
      if (!peek(')')) fail("expected )");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return LaurentPoly::constant(vars_, Integer(std::string(s_.substr(st, pos_ - st))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      // longest variable name that matches
      int best = -1;
      std::size_t blen = 0;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto& nm = vars_[i];
        if (nm.size() > blen && s_.substr(pos_, nm.size()) == nm) {
          best = static_cast<int>(i);
          blen = nm.size();
        }
      }
      if (best < 0) fail("unknown variable");
      pos_ += blen;
      Monomial m;
      m[best] = 1;
      return LaurentPoly::monomial(vars_, m);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const VarList& vars_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(const VarList& vars, std::string_view text) {
  return PolyParser(vars, text).parse();
}

}  // namespace a2rr
