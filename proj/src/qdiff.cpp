#include <functional>

#include "a2rr/holonomic.hpp"

namespace a2rr {

// ---- Andrews-Gordon type sums

AGSumSpec AGSumSpec::from_text(const std::vector<std::string>& vars, const std::string& exponent,
                               const std::string& xexp, const std::vector<int>& bases) {
  if (bases.size() != vars.size()) throw StructuralError("one base per summation variable");
  HypTerm t = HypTerm::from_text(vars, exponent, {}, xexp);
  AGSumSpec s;
  s.vars = vars;
  s.M = t.M;
  s.l = t.l;
  s.c = t.c;
  s.xexp = t.xexp.coef;
  if (t.xexp.constant) throw StructuralError("x exponent must be homogeneous");
  s.bases = bases;
  return s;
}

long AGSumSpec::exponent(const Point& z) const {
  long s = c;
  for (std::size_t i = 0; i < z.size(); ++i) {
    s += l[i] * z[i] + M[i][i] / 2 * z[i] * z[i];
    for (std::size_t j = i + 1; j < z.size(); ++j) s += M[i][j] * z[i] * z[j];
  }
  return s;
}

namespace {

const std::vector<std::string> kABCD{"a", "b", "c", "d"};
const char* kBirExp = "a^2+b^2+3c^2+3d^2+2ab+3ac+3ad+3bc+3bd+6cd";
const char* kBirpExp = "a(a+1)+b(b+2)+3c(c+1)+3d(d+1)+2ab+3ac+3ad+3bc+3bd+6cd";

}  // namespace

AGSumSpec ag_spec_bir() { return AGSumSpec::from_text(kABCD, kBirExp, "a+b+2c+2d", {1, 1, 3, 3}); }
AGSumSpec ag_spec_birp() { return AGSumSpec::from_text(kABCD, kBirpExp, "a+b+2c+2d", {1, 1, 3, 3}); }
AGSumSpec ag_spec_g111() { return AGSumSpec::from_text(kABCD, kBirExp, "a+b+c+2d", {1, 1, 3, 3}); }
AGSumSpec ag_spec_g300() { return AGSumSpec::from_text(kABCD, kBirpExp, "a+b+c+2d", {1, 1, 3, 3}); }
AGSumSpec ag_spec_aux() {
  return AGSumSpec::from_text(kABCD, "a^2+b(b+1)+3c^2+c+3d^2+2d+2ab+3ac+3ad+3bc+3bd+6cd", "0",
                              {1, 1, 3, 3});
}

BiSeries evaluate_ag_sum(const AGSumSpec& spec, int N, long max_points) {
  if (N < 1) throw DomainError("order must be positive");
  std::size_t r = spec.vars.size();
  // every step in a variable must not lower the exponent, and must eventually raise it
  for (std::size_t i = 0; i < r; ++i) {
    if (spec.M[i][i] <= 0 || spec.M[i][i] / 2 + spec.l[i] < 0)
      throw ConfigError("exponent is not increasing in " + spec.vars[i]);
    for (std::size_t j = 0; j < r; ++j)
      if (spec.M[i][j] < 0) throw ConfigError("negative cross term in exponent");
    if (spec.bases[i] < 1) throw ConfigError("bad pochhammer base");
  }
  // 1/(q^b;q^b)_m mod q^N
  std::map<int, std::vector<QSeries>> inv;
  auto inverse = [&](int b, long m) -> const QSeries& {
    auto& v = inv[b];
    if (v.empty()) v.push_back(QSeries::one(N));
    while (static_cast<long>(v.size()) <= m) {
      long k = static_cast<long>(v.size());
      QSeries f = QSeries::one(N);
      if (b * k < N) f[static_cast<int>(b * k)] -= 1;
      v.push_back(v.back() * qseries_invert(f));
    }
    return v[m];
  };
  BiSeries out(N);
  std::map<long, QSeries> acc;
  Point z(r, 0);
  long points = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) {
      long e = spec.exponent(z);
      if (e >= N) return;
      if (++points > max_points) throw ConfigError("lattice enumeration bound exceeded");
      QSeries t = QSeries::one(N - static_cast<int>(e));
      for (std::size_t k = 0; k < r; ++k)
        if (z[k]) t = t * inverse(spec.bases[k], z[k]).truncated(t.order());
      long xe = 0;
      for (std::size_t k = 0; k < r; ++k) xe += spec.xexp[k] * z[k];
      auto it = acc.find(xe);
      if (it == acc.end()) it = acc.emplace(xe, QSeries(N)).first;
      for (int k = 0; k < t.order(); ++k) it->second[k + static_cast<int>(e)] += t[k];
      return;
    }
    for (long v = 0;; ++v) {
      z[i] = v;
      if (spec.exponent(z) >= N) break;
      rec(i + 1);
    }
    z[i] = 0;
  };
  if (spec.exponent(z) < 0) throw ConfigError("negative exponent at the origin");
  rec(0);
  for (auto& [xe, s] : acc) {
    if (xe < 0) throw ConfigError("negative x exponent");
    out.set_slice(static_cast<int>(xe), s);
  }
  return out;
}

// ---- q-difference operators

namespace {

const VarList& xq_ring() {
  static const VarList v{"x", "q"};
  return v;
}

}  // namespace

QDiffOperator QDiffOperator::from_text(const std::vector<std::pair<std::string, int>>& terms,
                                       int unit) {
  QDiffOperator op;
  op.unit = unit;
  for (auto& [txt, s] : terms) {
    if (s < 0) throw StructuralError("negative shift in operator");
    op.terms.emplace_back(parse_poly(xq_ring(), txt), s);
  }
  return op;
}

std::string QDiffOperator::to_string() const {
  std::string out;
  for (auto& [c, s] : terms) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*f(x";
    if (s) out += "*q^" + std::to_string(unit * s);
    out += ")";
  }
  return out.empty() ? "0" : out;
}

Json to_json(const QDiffOperator& op) {
  Json t = Json::array();
  for (auto& [c, s] : op.terms) t.push_back(Json::array({to_json(c), s}));
  return Json{{"unit", op.unit}, {"terms", t}};
}

QDiffOperator qdiff_from_json(const Json& j) {
  QDiffOperator op;
  op.unit = j.value("unit", 3);
  for (auto& e : j.at("terms")) {
    LaurentPoly c = e.at(0).is_string() ? parse_poly(xq_ring(), e.at(0).get<std::string>())
                                        : poly_from_json(e.at(0)).embed(xq_ring());
    int s = e.at(1).get<int>();
    if (s < 0) throw StructuralError("negative shift in operator");
    op.terms.emplace_back(c, s);
  }
  return op;
}

BiSeries apply_qdiff(const QDiffOperator& op, const BiSeries& s) {
  int N = s.qorder();
  BiSeries out(N);
  for (auto& [c, k] : op.terms) {
    LaurentPoly ce = c.embed(xq_ring());
    if (ce.is_zero()) continue;
    if (ce.min_degree(0) < 0 || ce.min_degree(1) < 0)
      throw StructuralError("operator coefficient has negative powers");
    out += BiSeries::from_poly(ce, N) * s.xshift(op.unit * k);
  }
  return out;
}

QDiffOperator qdiff_bir() {
  return QDiffOperator::from_text({
      {"2+3xq^4+xq^6", 0},
      {"-(2+4xq+4xq^2+4xq^3+3xq^4+xq^6+4x^2q^3+6x^2q^4+6x^2q^5+8x^2q^6+2x^2q^7+2x^2q^8+2x^2q^9"
       "+6x^3q^7+2x^3q^9+3x^3q^10+x^3q^12)", 1},
      {"x^2q^7(2+2q+3xq+4xq^2+xq^3+4xq^4-xq^5+4xq^6+xq^7+2x^2q^5+6x^2q^7+6x^2q^8+2x^2q^9+2x^2q^10"
       "+4x^2q^11+3x^3q^9+x^3q^11+6x^3q^12+2x^3q^14)", 2},
      {"-x^4q^21(1-xq^6)^2(2+3xq+xq^3)", 3},
  });
}

// printed with "+" after the first term; read as "=" it is moved across
QDiffOperator qdiff_birp(bool printed_plus) {
  std::string second =
      "(1+xq^2+2xq^3+2xq^4+2xq^5+xq^7+3x^2q^6+2x^2q^7+3x^2q^8+3x^2q^9+2x^2q^10+x^2q^11+x^2q^12"
      "+2x^3q^11+2x^3q^13+x^3q^14+x^3q^16)";
  std::string third =
      "x^2q^10(1+q+xq^2+xq^3+2xq^4+2xq^6+xq^7+xq^8-x^2q^7+2x^2q^8+x^2q^9+2x^2q^10+3x^2q^11+x^2q^12"
      "+x^2q^13+2x^2q^14+x^3q^13+x^3q^15+2x^3q^16+2x^3q^18)";
  std::string fourth = "x^4q^27(1-xq^6)(1-xq^9)(1+xq^2+xq^4)";
  if (printed_plus)
    return QDiffOperator::from_text(
        {{"1+xq^5+xq^7", 0}, {second, 1}, {"-" + third, 2}, {fourth, 3}});
  return QDiffOperator::from_text(
      {{"1+xq^5+xq^7", 0}, {"-" + second, 1}, {third, 2}, {"-" + fourth, 3}});
}

QDiffOperator qdiff_g300() {
  return QDiffOperator::from_text({
      {"1+xq^5", 0},
      {"-(1+xq^2+2xq^3+2xq^4+2xq^5+2x^2q^6+2x^2q^7+2x^2q^8+x^2q^9+x^3q^11)", 1},
      {"-xq^6(1+xq^2)(1-xq^4)(1-xq^5)", 2},
  });
}

QDiffOperator qdiff_g111() {
  return QDiffOperator::from_text({
      {"1+xq^4", 0},
      {"-(1+2xq+2xq^2+2xq^3+xq^4+x^2q^3+2x^2q^4+2x^2q^5+2x^2q^6+x^3q^7)", 1},
      {"-xq^3(1+xq)(1-xq^4)(1-xq^5)", 2},
  });
}

}  // namespace a2rr
