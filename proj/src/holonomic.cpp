#include "a2rr/holonomic.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace a2rr {

// ---- linear forms and terms

long LinearForm::linear(const Point& z) const {
  long s = 0;
  for (std::size_t i = 0; i < coef.size(); ++i) s += coef[i] * z[i];
  return s;
}

long LinearForm::eval(const Point& z) const { return linear(z) + constant; }

namespace {

VarList plain_vars(const std::vector<std::string>& vars) { return VarList(vars); }

// split a polynomial of degree <= 2 in the given variables into M, l, c
void quadratic_parts(const LaurentPoly& p, std::size_t dim, std::vector<std::vector<long>>& M,
                     std::vector<long>& l, long& c) {
  M.assign(dim, std::vector<long>(dim, 0));
  l.assign(dim, 0);
  c = 0;
  for (auto& [m, coef] : p.terms()) {
    if (!coef.fits_slong_p()) throw StructuralError("exponent coefficient too large");
    long v = coef.get_si();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < dim; ++i) {
      if (m[i] < 0) throw StructuralError("negative power in exponent");
      for (int k = 0; k < m[i]; ++k) idx.push_back(i);
    }
    if (idx.size() > 2) throw StructuralError("exponent is not quadratic");
    if (idx.empty()) c += v;
    else if (idx.size() == 1) l[idx[0]] += v;
    else if (idx[0] == idx[1]) M[idx[0]][idx[0]] += 2 * v;
    else {
      M[idx[0]][idx[1]] += v;
      M[idx[1]][idx[0]] += v;
    }
  }
}

long quad_value(const std::vector<std::vector<long>>& M, const std::vector<long>& l, long c,
                const Point& z) {
  long s = c;
  for (std::size_t i = 0; i < z.size(); ++i) {
    s += l[i] * z[i] + M[i][i] / 2 * z[i] * z[i];
    for (std::size_t j = i + 1; j < z.size(); ++j) s += M[i][j] * z[i] * z[j];
  }
  return s;
}

Rational rational_pow(long q, long e) {
  mpz_class b;
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(std::labs(q)), static_cast<unsigned long>(std::labs(e)));
  if (q < 0 && (std::labs(e) % 2)) b = -b;
  if (e >= 0) return Rational(b);
  Rational r(1, 1);
  r /= Rational(b);
  return r;
}

// exact value of a Laurent polynomial at rational points
Rational eval_exact(const LaurentPoly& p, const std::vector<Rational>& at) {
  Rational s = 0;
  for (auto& [m, c] : p.terms()) {
    Rational t(c);
    for (std::size_t i = 0; i < at.size(); ++i) {
      if (m[i] == 0) continue;
      Rational base = at[i];
      Rational pw = 1;
      long e = std::labs(m[i]);
      for (long k = 0; k < e; ++k) pw *= base;
      if (m[i] < 0) pw = 1 / pw;
      t *= pw;
    }
    s += t;
  }
  return s;
}

}  // namespace

LinearForm parse_linear(const std::vector<std::string>& vars, std::string_view text) {
  LaurentPoly p = parse_poly(plain_vars(vars), text);
  LinearForm f;
  f.coef.assign(vars.size(), 0);
  for (auto& [m, c] : p.terms()) {
    long v = c.get_si();
    int deg = 0;
    std::size_t which = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (m[i] < 0) throw StructuralError("negative power in linear form");
      if (m[i]) {
        deg += m[i];
        which = i;
      }
    }
    if (deg > 1) throw StructuralError("form is not linear: " + std::string(text));
    if (deg == 0) f.constant += v;
    else f.coef[which] += v;
  }
  return f;
}

long HypTerm::exponent(const Point& z) const { return quad_value(M, l, c, z); }

bool HypTerm::supported(const Point& z) const {
  for (auto& d : denoms)
    if (d.arg.eval(z) < 0) return false;
  return true;
}

Rational HypTerm::eval(const Point& z, long q) const {
  if (!supported(z)) return 0;
  Rational r = rational_pow(q, exponent(z));
  for (auto& d : denoms) {
    long L = d.arg.eval(z);
    mpz_class qb;
    mpz_ui_pow_ui(qb.get_mpz_t(), static_cast<unsigned long>(std::labs(q)), static_cast<unsigned long>(d.base));
    if (q < 0 && d.base % 2) qb = -qb;
    mpz_class x = 1, prod = 1;
    for (long j = 1; j <= L; ++j) {
      x *= qb;
      prod *= 1 - x;
    }
    r /= Rational(prod);
  }
  return r;
}

VarList HypTerm::ring() const {
  std::vector<std::string> names{"q"};
  for (auto& v : vars) names.push_back("q" + v);
  return VarList(names);
}

HypTerm HypTerm::from_text(const std::vector<std::string>& vars, const std::string& exponent,
                           const std::vector<std::pair<int, std::string>>& denoms,
                           const std::string& xexp) {
  if (vars.empty() || vars.size() + 1 > kMaxVars) throw StructuralError("bad variable count");
  HypTerm t;
  t.vars = vars;
  quadratic_parts(parse_poly(plain_vars(vars), exponent), vars.size(), t.M, t.l, t.c);
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (t.M[i][i] % 2) throw StructuralError("odd diagonal in quadratic form");
  for (auto& [b, txt] : denoms) {
    if (b < 1) throw StructuralError("pochhammer base must be positive");
    t.denoms.push_back({parse_linear(vars, txt), b});
  }
  t.xexp = xexp.empty() ? LinearForm{std::vector<long>(vars.size(), 0), 0} : parse_linear(vars, xexp);
  return t;
}

namespace {

Json linear_json(const LinearForm& f) { return Json{{"coef", f.coef}, {"constant", f.constant}}; }

LinearForm linear_from_json(const Json& j) {
  return LinearForm{j.at("coef").get<std::vector<long>>(), j.value("constant", 0L)};
}

}  // namespace

Json to_json(const HypTerm& t) {
  Json d = Json::array();
  for (auto& x : t.denoms) {
    Json e = linear_json(x.arg);
    e["base"] = x.base;
    d.push_back(e);
  }
  return Json{{"vars", t.vars},     {"matrix", t.M},      {"linear", t.l},
              {"constant", t.c},    {"denominators", d}, {"xexp", linear_json(t.xexp)}};
}

HypTerm hypterm_from_json(const Json& j) {
  HypTerm t;
  t.vars = j.at("vars").get<std::vector<std::string>>();
  std::size_t n = t.vars.size();
  if (n == 0 || n + 1 > kMaxVars) throw StructuralError("bad variable count");
  if (j.contains("exponent")) {
    quadratic_parts(parse_poly(plain_vars(t.vars), j.at("exponent").get<std::string>()), n, t.M, t.l, t.c);
  } else {
    t.M = j.at("matrix").get<std::vector<std::vector<long>>>();
    t.l = j.at("linear").get<std::vector<long>>();
    t.c = j.value("constant", 0L);
  }
  if (t.M.size() != n || t.l.size() != n) throw StructuralError("quadratic form has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (t.M[i].size() != n) throw StructuralError("quadratic form has wrong size");
    if (t.M[i][i] % 2) throw StructuralError("odd diagonal in quadratic form");
    for (std::size_t k = 0; k < n; ++k)
      if (t.M[i][k] != t.M[k][i]) throw StructuralError("quadratic form is not symmetric");
  }
  for (auto& e : j.at("denominators")) {
    HypDenominator d;
    if (e.contains("arg")) d.arg = parse_linear(t.vars, e.at("arg").get<std::string>());
    else d.arg = linear_from_json(e);
    d.base = e.value("base", 1);
    if (d.arg.coef.size() != n || d.base < 1) throw StructuralError("bad denominator");
    t.denoms.push_back(d);
  }
  if (j.contains("xexp")) {
    auto& x = j.at("xexp");
    t.xexp = x.is_string() ? parse_linear(t.vars, x.get<std::string>()) : linear_from_json(x);
  } else {
    t.xexp = LinearForm{std::vector<long>(n, 0), 0};
  }
  return t;
}

// ---- shift ratios

namespace {

// q^{base * (L(z) + m)} as a monomial of the ring
Monomial pochhammer_power(const HypDenominator& d, long m) {
  Monomial r;
  r[0] = static_cast<std::int32_t>(d.base * (d.arg.constant + m));
  for (std::size_t i = 0; i < d.arg.coef.size(); ++i)
    r[i + 1] = static_cast<std::int32_t>(d.base * d.arg.coef[i]);
  return r;
}

LaurentPoly one_minus(const VarList& ring, const Monomial& m) {
  return LaurentPoly::constant(ring, 1) - LaurentPoly::monomial(ring, m);
}

// exponent of F(z - s)/F(z) from the q-power: linear in z
Monomial ratio_monomial(const HypTerm& t, const std::vector<int>& s) {
  std::size_t n = t.dim();
  Monomial r;
  long cst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long Ms = 0;
    for (std::size_t j = 0; j < n; ++j) Ms += t.M[i][j] * s[j];
    r[i + 1] = static_cast<std::int32_t>(-Ms);
    cst += s[i] * Ms;
  }
  cst /= 2;
  for (std::size_t i = 0; i < n; ++i) cst -= t.l[i] * s[i];
  r[0] = static_cast<std::int32_t>(cst);
  return r;
}

long shift_delta(const HypDenominator& d, const std::vector<int>& s) {
  long v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) v += d.arg.coef[i] * s[i];
  return v;
}

}  // namespace

RationalFunction term_ratio(const HypTerm& t, const std::vector<int>& shift) {
  if (shift.size() != t.dim()) throw StructuralError("shift has wrong length");
  VarList ring = t.ring();
  LaurentPoly num = LaurentPoly::monomial(ring, ratio_monomial(t, shift));
  LaurentPoly den = LaurentPoly::constant(ring, 1);
  for (auto& d : t.denoms) {
    long delta = shift_delta(d, shift);
    // (x;x)_L / (x;x)_{L - delta}
    for (long k = 0; k < delta; ++k) num *= one_minus(ring, pochhammer_power(d, -k));
    for (long k = 1; k <= -delta; ++k) den *= one_minus(ring, pochhammer_power(d, k));
  }
  return RationalFunction(num, den);
}

// ---- shift algebra

LaurentPoly shift_coefficient(const LaurentPoly& c, const std::vector<int>& s) {
  bool any = false;
  for (int v : s) any |= v != 0;
  if (!any) return c;
  std::vector<Monomial> images(s.size() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) images[i + 1][0] = -s[i];
  return c.monomial_substitute(images);
}

ShiftOp ShiftOp::coefficient(const LaurentPoly& c, std::size_t dim) {
  ShiftOp r(c.vars(), dim);
  r.add_term(Shift(dim, 0), c);
  return r;
}

ShiftOp ShiftOp::shift(const VarList& ring, std::size_t dim, std::size_t var, int power) {
  ShiftOp r(ring, dim);
  Shift s(dim, 0);
  s.at(var) = power;
  r.add_term(s, LaurentPoly::constant(ring, 1));
  return r;
}

bool ShiftOp::is_coefficient() const {
  for (auto& [s, c] : terms_)
    for (int v : s)
      if (v) return false;
  return true;
}

LaurentPoly ShiftOp::coeff(const Shift& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? LaurentPoly(ring_) : it->second;
}

void ShiftOp::add_term(const Shift& s, const LaurentPoly& c) {
  if (s.size() != dim_) throw StructuralError("shift has wrong length");
  if (c.is_zero()) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ShiftOp ShiftOp::operator-() const {
  ShiftOp r(ring_, dim_);
  for (auto& [s, c] : terms_) r.terms_.emplace(s, -c);
  return r;
}

ShiftOp& ShiftOp::operator+=(const ShiftOp& o) {
  if (dim_ == 0) {
    ring_ = o.ring_;
    dim_ = o.dim_;
  }
  if (o.dim_ != dim_ && o.dim_ != 0) throw StructuralError("shift operators of different dimension");
  for (auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

ShiftOp& ShiftOp::operator-=(const ShiftOp& o) { return *this += -o; }

ShiftOp operator*(const ShiftOp& a, const ShiftOp& b) {
  std::size_t dim = a.dim_ ? a.dim_ : b.dim_;
  ShiftOp r(a.dim_ ? a.ring_ : b.ring_, dim);
  for (auto& [sa, ca] : a.terms_)
    for (auto& [sb, cb] : b.terms_) {
      ShiftOp::Shift s(dim);
      for (std::size_t i = 0; i < dim; ++i) s[i] = sa[i] + sb[i];
      r.add_term(s, ca * shift_coefficient(cb, sa));
    }
  return r;
}

std::string ShiftOp::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [s, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s[i]) continue;
      out += "*" + names.at(i);
      if (s[i] != 1) out += "^" + std::to_string(s[i]);
    }
  }
  return out;
}

// ---- certificate notation

CertificateParser::CertificateParser(std::vector<std::string> vars, VarList ring)
    : vars_(std::move(vars)), ring_(std::move(ring)) {}

namespace {

class OpParser {
 public:
  OpParser(const std::vector<std::string>& vars, const VarList& ring, std::string_view s,
           const std::function<ShiftOp(const std::string&)>& lookup)
      : vars_(vars), ring_(ring), s_(s), lookup_(lookup) {}

  ShiftOp parse() {
    ShiftOp r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw StructuralError("certificate parse error at " + std::to_string(pos_) + ": " + what +
                          " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (s_.substr(pos_, 5) == "\\left") {
        pos_ += 5;
      } else if (s_.substr(pos_, 6) == "\\right") {
        pos_ += 6;
      } else {
        break;
      }
    }
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  ShiftOp constant(long v) {
    return ShiftOp::coefficient(LaurentPoly::constant(ring_, v), vars_.size());
  }

  ShiftOp expr() {
    ShiftOp r = constant(0);
    bool neg = false;
    if (peek('+')) ++pos_;
    else if (peek('-')) {
      ++pos_;
      neg = true;
    }
    r = neg ? -term() : term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        r += term();
      } else if (peek('-')) {
        ++pos_;
        r -= term();
      } else {
        break;
      }
    }
    return r;
  }

  ShiftOp term() {
    ShiftOp r = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        r = r * factor();
      } else if (starts_factor()) {
        r = r * factor();
      } else {
        break;
      }
    }
    return r;
  }

  // text of an exponent: {...} or a single character
  std::string exponent_text() {
    skip();
    if (peek('{')) {
      std::size_t st = ++pos_;
      while (pos_ < s_.size() && s_[pos_] != '}') ++pos_;
      if (pos_ >= s_.size()) fail("expected }");
      return std::string(s_.substr(st, pos_++ - st));
    }
    if (pos_ >= s_.size()) fail("missing exponent");
    return std::string(1, s_[pos_++]);
  }

  ShiftOp factor() {
    ShiftOp b = atom();
    if (peek('^')) {
      ++pos_;
      std::string e = exponent_text();
      long k;
      try {
        std::size_t used = 0;
        k = std::stol(e, &used);
        if (used != e.size()) throw std::invalid_argument(e);
      } catch (const std::exception&) {
        fail("power must be an integer");
      }
      if (k < 0) fail("negative power of an expression");
      ShiftOp r = constant(1);
      for (long i = 0; i < k; ++i) r = r * b;
      return r;
    }
    return b;
  }

  ShiftOp q_power(const std::string& e) {
    LinearForm f = parse_linear(vars_, e);
    Monomial m;
    m[0] = static_cast<std::int32_t>(f.constant);
    for (std::size_t i = 0; i < vars_.size(); ++i) m[i + 1] = static_cast<std::int32_t>(f.coef[i]);
    return ShiftOp::coefficient(LaurentPoly::monomial(ring_, m), vars_.size());
  }

  ShiftOp atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ShiftOp r = expr();
      if (!peek(')')) fail("expected )");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer v(std::string(s_.substr(st, pos_ - st)));
      return ShiftOp::coefficient(LaurentPoly::constant(ring_, v), vars_.size());
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "'");
    ++pos_;
    std::string name(1, c);
    if (peek('_')) {
      ++pos_;
      std::string sub = peek('{') ? exponent_text() : exponent_text();
      name += "_" + sub;
    }
    if (name == "q") {
      if (peek('^')) {
        ++pos_;
        return q_power(exponent_text());
      }
      return q_power("1");
    }
    if (name.size() == 1 && std::isupper(static_cast<unsigned char>(c))) {
      if (c == 'N') return ShiftOp::shift(ring_, vars_.size(), 0);
      for (std::size_t i = 1; i < vars_.size(); ++i)
        if (vars_[i].size() == 1 && std::toupper(static_cast<unsigned char>(vars_[i][0])) == c)
          return ShiftOp::shift(ring_, vars_.size(), i);
    }
    if (!lookup_) fail("undefined symbol '" + name + "'");
    return lookup_(name);
  }

  const std::vector<std::string>& vars_;
  const VarList& ring_;
  std::string_view s_;
  const std::function<ShiftOp(const std::string&)>& lookup_;
  std::size_t pos_ = 0;
};

}  // namespace

ShiftOp CertificateParser::parse(std::string_view text,
                                 const std::function<ShiftOp(const std::string&)>& lookup) const {
  return OpParser(vars_, ring_, text, lookup).parse();
}

// ---- certificates

namespace {

const char* family_letters = "qrstuvw";

Json shiftop_json(const ShiftOp& op) {
  Json a = Json::array();
  for (auto& [s, c] : op.terms()) a.push_back(Json{{"shift", s}, {"coeff", to_json(c)}});
  return a;
}

ShiftOp shiftop_from_json(const Json& j, const VarList& ring, std::size_t dim,
                          const CertificateParser& parser) {
  if (j.is_string()) return parser.parse(j.get<std::string>());
  if (j.is_object()) return ShiftOp::coefficient(poly_from_json(j).embed(ring), dim);
  ShiftOp r(ring, dim);
  for (auto& e : j) {
    auto s = e.at("shift").get<std::vector<int>>();
    LaurentPoly c = poly_from_json(e.at("coeff"));
    r.add_term(s, c.embed(ring));
  }
  return r;
}

}  // namespace

Json to_json(const CertificateSet& c) {
  Json j;
  j["order"] = c.order;
  Json p = Json::array();
  for (auto& x : c.p) p.push_back(to_json(x));
  j["p"] = p;
  for (std::size_t i = 0; i < c.fam.size(); ++i) {
    Json f = Json::array();
    for (auto& op : c.fam[i]) f.push_back(shiftop_json(op));
    j[std::string(1, family_letters[i])] = f;
  }
  return j;
}

CertificateSet certificate_from_json(const Json& j, const HypTerm& t) {
  CertificateSet c;
  c.order = j.at("order").get<int>();
  VarList ring = t.ring();
  std::size_t dim = t.dim();
  CertificateParser parser(t.vars, ring);
  auto& p = j.at("p");
  if (static_cast<int>(p.size()) != c.order + 1) throw StructuralError("p family has wrong length");
  for (auto& e : p) {
    ShiftOp op = shiftop_from_json(e, ring, dim, parser);
    if (!op.is_coefficient()) throw StructuralError("p family entries must not contain shifts");
    c.p.push_back(op.coeff(ShiftOp::Shift(dim, 0)));
  }
  c.fam.resize(dim - 1);
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    std::string key(1, family_letters[i]);
    for (int k = 0; k <= c.order; ++k) {
      if (j.contains(key) && k < static_cast<int>(j.at(key).size()))
        c.fam[i].push_back(shiftop_from_json(j.at(key)[k], ring, dim, parser));
      else
        c.fam[i].push_back(ShiftOp(ring, dim));
    }
  }
  return c;
}

ShiftOp certificate_operator(const HypTerm& t, const CertificateSet& c) {
  VarList ring = t.ring();
  std::size_t dim = t.dim();
  ShiftOp total(ring, dim);
  ShiftOp one = ShiftOp::coefficient(LaurentPoly::constant(ring, 1), dim);
  auto tilde = [&](auto get) {
    ShiftOp s(ring, dim);
    for (int j = 0; j <= c.order; ++j) s += get(j) * ShiftOp::shift(ring, dim, 0, j);
    return s;
  };
  total += tilde([&](int j) {
    return j < static_cast<int>(c.p.size()) ? ShiftOp::coefficient(c.p[j].embed(ring), dim)
                                            : ShiftOp(ring, dim);
  });
  for (std::size_t i = 0; i < c.fam.size(); ++i) {
    ShiftOp fi = tilde([&](int j) {
      return j < static_cast<int>(c.fam[i].size()) ? c.fam[i][j] : ShiftOp(ring, dim);
    });
    total += (one - ShiftOp::shift(ring, dim, i + 1)) * fi;
  }
  return total;
}

SharedNumerators apply_to_term_shared(const HypTerm& t, const std::vector<ShiftOp>& ops) {
  VarList ring = t.ring();
  std::size_t nd = t.denoms.size();
  // bring every shifted ratio over the denominator prod (x;x)_{L - dmin}/(x;x)_L
  std::vector<long> dmin(nd, 0);
  for (auto& op : ops)
    for (auto& [s, c] : op.terms())
      for (std::size_t i = 0; i < nd; ++i) dmin[i] = std::min(dmin[i], shift_delta(t.denoms[i], s));
  SharedNumerators out;
  out.den = LaurentPoly::constant(ring, 1);
  for (std::size_t i = 0; i < nd; ++i)
    for (long m = 1; m <= -dmin[i]; ++m) out.den *= one_minus(ring, pochhammer_power(t.denoms[i], m));
  std::map<std::pair<std::size_t, long>, LaurentPoly> factor_cache;
  auto factor = [&](std::size_t i, long m) -> const LaurentPoly& {
    auto key = std::make_pair(i, m);
    auto it = factor_cache.find(key);
    if (it == factor_cache.end())
      it = factor_cache.emplace(key, one_minus(ring, pochhammer_power(t.denoms[i], m))).first;
    return it->second;
  };
  std::map<ShiftOp::Shift, LaurentPoly> shift_cache;
  auto shifted_factor = [&](const ShiftOp::Shift& s) -> const LaurentPoly& {
    auto it = shift_cache.find(s);
    if (it != shift_cache.end()) return it->second;
    LaurentPoly f = LaurentPoly::monomial(ring, ratio_monomial(t, s));
    for (std::size_t i = 0; i < nd; ++i) {
      long delta = shift_delta(t.denoms[i], s);
      // prod over j = L - delta + 1 .. L - dmin of (1 - x^j)
      for (long m = 1 - delta; m <= -dmin[i]; ++m) f *= factor(i, m);
    }
    return shift_cache.emplace(s, std::move(f)).first->second;
  };
  for (auto& op : ops) {
    LaurentPoly sum(ring);
    for (auto& [s, c] : op.terms()) sum += c.embed(ring) * shifted_factor(s);
    out.nums.push_back(std::move(sum));
  }
  return out;
}

RationalFunction apply_to_term(const HypTerm& t, const ShiftOp& op) {
  auto sh = apply_to_term_shared(t, {op});
  return RationalFunction(sh.nums[0], sh.den);
}

VerifyResult verify_certificate(const HypTerm& t, const CertificateSet& c) {
  if (c.fam.size() + 1 != t.dim()) throw StructuralError("certificate does not match the term");
  VerifyResult r;
  r.residual = apply_to_term(t, certificate_operator(t, c));
  r.ok = r.residual.is_zero();
  return r;
}

std::vector<LaurentPoly> recurrence_from_certificate(const CertificateSet& c) {
  std::vector<LaurentPoly> p = c.p;
  for (auto& x : p)
    for (auto& [m, v] : x.terms())
      for (std::size_t i = 2; i < kMaxVars; ++i)
        if (m[i]) throw StructuralError("p family depends on summation variables");
  return p;
}

std::vector<Rational> sum_sequence(const HypTerm& t, int nmax, long q) {
  std::size_t r = t.dim() - 1;
  std::vector<Rational> out;
  for (int n = 0; n <= nmax; ++n) {
    Rational s = 0;
    Point z(t.dim(), 0);
    z[0] = n;
    long bound = n + 2;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i > r) {
        if (t.supported(z)) s += t.eval(z, q);
        return;
      }
      for (long k = 0; k <= bound; ++k) {
        z[i] = k;
        rec(i + 1);
      }
      z[i] = 0;
    };
    rec(1);
    out.push_back(s);
  }
  return out;
}

std::vector<Rational> recurrence_residuals(const std::vector<LaurentPoly>& p,
                                           const std::vector<Rational>& f, long q) {
  std::vector<Rational> out;
  for (std::size_t n = 0; n < f.size(); ++n) {
    std::vector<Rational> at(kMaxVars, Rational(1));
    at[0] = q;
    at[1] = rational_pow(q, static_cast<long>(n));
    Rational s = 0;
    for (std::size_t j = 0; j < p.size() && j <= n; ++j) s += eval_exact(p[j], at) * f[n - j];
    out.push_back(s);
  }
  return out;
}

// ---- certificate source files

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  if (s.size() == 1) return true;
  if (s[1] != '_' || s.size() < 3) return false;
  std::string sub = s.substr(2);
  if (sub.front() == '{' && sub.back() == '}') sub = sub.substr(1, sub.size() - 2);
  return !sub.empty() && std::all_of(sub.begin(), sub.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string canonical_name(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), '{'), s.end());
  s.erase(std::remove(s.begin(), s.end(), '}'), s.end());
  return s;
}

std::vector<std::string> quoted_strings(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while ((i = s.find('"', i)) != std::string::npos) {
    auto j = s.find('"', i + 1);
    if (j == std::string::npos) throw StructuralError("unterminated quote: " + s);
    out.push_back(s.substr(i + 1, j - i - 1));
    i = j + 1;
  }
  return out;
}

std::string apply_emendations(std::string text, const std::string& target,
                              const std::vector<Emendation>& ems) {
  for (auto& e : ems) {
    if (e.target != target) continue;
    auto pos = text.find(e.from);
    if (pos == std::string::npos)
      throw StructuralError("emendation text not found in " + target + ": " + e.from);
    text.replace(pos, e.from.size(), e.to);
  }
  return text;
}

}  // namespace

CertificateSource parse_certificate_source(const std::string& text, const std::string& name) {
  CertificateSource src;
  src.name = name;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest = trim(line.substr(key.size()));
    if (key == "name") {
      src.name = rest;
    } else if (key == "vars") {
      std::string v;
      while (ls >> v) src.vars.push_back(v);
    } else if (key == "exponent") {
      src.exponent = rest;
    } else if (key == "denominator") {
      int base;
      ls >> base;
      std::string arg;
      std::getline(ls, arg);
      src.denoms.emplace_back(base, trim(arg));
    } else if (key == "xexp") {
      src.xexp = rest;
    } else if (key == "order") {
      src.order = std::stoi(rest);
    } else if (key == "emend") {
      std::string target;
      ls >> target;
      auto q = quoted_strings(rest);
      if (q.size() != 2) throw StructuralError("emend needs two quoted strings: " + line);
      src.emendations.push_back({target, q[0], q[1]});
    } else {
      // a = b = expression: every name before the last segment takes its value
      std::vector<std::string> seg;
      std::size_t st = 0, eq;
      while ((eq = line.find('=', st)) != std::string::npos) {
        seg.push_back(trim(line.substr(st, eq - st)));
        st = eq + 1;
      }
      seg.push_back(trim(line.substr(st)));
      if (seg.size() < 2) throw StructuralError("unrecognized line: " + line);
      const std::string& value = seg.back();
      for (std::size_t i = 0; i + 1 < seg.size(); ++i) {
        std::string s = seg[i];
        bool neg = !s.empty() && s[0] == '-';
        if (neg) s = trim(s.substr(1));
        if (!is_name(s)) throw StructuralError("bad definition target: " + seg[i]);
        src.defs.emplace_back(canonical_name(s), neg ? "-(" + value + ")" : value);
      }
    }
  }
  if (src.vars.empty()) throw StructuralError("certificate source has no vars line");
  return src;
}

CertificateSource load_certificate_source(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  return parse_certificate_source(ss.str(), base.substr(0, base.find('.')));
}

HypTerm CertificateSource::term(bool emended) const {
  std::string e = emended ? apply_emendations(exponent, "exponent", emendations) : exponent;
  return HypTerm::from_text(vars, e, denoms, xexp);
}

CertificateSet CertificateSource::certificate(bool emended) const {
  VarList ring = term(false).ring();
  std::size_t dim = vars.size();
  CertificateParser parser(vars, ring);
  std::map<std::string, std::vector<std::string>> texts;
  for (auto& [n, t] : defs) texts[n].push_back(emended ? apply_emendations(t, n, emendations) : t);
  for (auto& e : emendations)
    if (emended && e.target != "exponent" && !texts.count(e.target))
      throw StructuralError("emendation for unknown name " + e.target);
  std::map<std::string, ShiftOp> done;
  std::set<std::string> active;
  std::function<ShiftOp(const std::string&)> lookup = [&](const std::string& raw) -> ShiftOp {
    std::string n = canonical_name(raw);
    if (auto it = done.find(n); it != done.end()) return it->second;
    auto it = texts.find(n);
    if (it == texts.end()) throw StructuralError("undefined symbol '" + n + "'");
    if (active.count(n)) throw StructuralError("circular definition of " + n);
    active.insert(n);
    ShiftOp v = parser.parse(it->second.front(), lookup);
    for (std::size_t k = 1; k < it->second.size(); ++k)
      if (!(parser.parse(it->second[k], lookup) == v))
        throw StructuralError("inconsistent definitions of " + n);
    active.erase(n);
    done.emplace(n, v);
    return v;
  };
  auto get = [&](const std::string& n) {
    return texts.count(n) ? lookup(n) : ShiftOp(ring, dim);
  };
  CertificateSet c;
  c.order = order;
  for (int j = 0; j <= order; ++j) {
    ShiftOp p = get("p_" + std::to_string(j));
    if (!p.is_coefficient()) throw StructuralError("p_" + std::to_string(j) + " contains a shift");
    LaurentPoly pc = p.coeff(ShiftOp::Shift(dim, 0));
    if (pc.is_zero()) pc = LaurentPoly(ring);
    c.p.push_back(pc);
  }
  c.fam.resize(dim - 1);
  for (std::size_t i = 0; i + 1 < dim; ++i)
    for (int j = 0; j <= order; ++j)
      c.fam[i].push_back(get(std::string(1, family_letters[i]) + "_" + std::to_string(j)));
  return c;
}

CertificateReport check_certificate_source(const CertificateSource& src, bool regenerate) {
  CertificateReport rep;
  auto attempt = [&](bool emended, bool& ok, std::string& err, RationalFunction& res) {
    try {
      HypTerm t = src.term(emended);
      auto v = verify_certificate(t, src.certificate(emended));
      ok = v.ok;
      res = v.residual;
    } catch (const StructuralError& e) {
      ok = false;
      err = e.what();
    }
  };
  attempt(false, rep.verbatim_ok, rep.verbatim_error, rep.verbatim_residual);
  if (!src.emendations.empty())
    attempt(true, rep.emended_ok, rep.emended_error, rep.emended_residual);
  if (rep.ok() || !regenerate) return rep;
  CertificateSet printed;
  HypTerm t;
  try {
    t = src.term(true);
    printed = src.certificate(true);
  } catch (const StructuralError&) {
    return rep;
  }
  CelineBounds b;
  b.support = printed;
  rep.regenerated = celine_solve(t, b);
  if (rep.regenerated) {
    auto& p = rep.regenerated->p;
    for (std::size_t j = 0; j < p.size() && j < printed.p.size(); ++j)
      if (!(p[j] * printed.p[0] == printed.p[j] * p[0])) rep.p_differences.push_back("p_" + std::to_string(j));
  }
  return rep;
}

}  // namespace a2rr
