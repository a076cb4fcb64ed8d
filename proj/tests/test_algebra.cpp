#include <doctest.h>

#include "a2rr/json_io.hpp"
#include "a2rr/laurent_poly.hpp"
#include "a2rr/rational_function.hpp"
#include "a2rr/series.hpp"

using namespace a2rr;

namespace {

// number of partitions of n, by the plain recursion on largest part
long partitions_upto(int n, int maxpart) {
  if (n == 0) return 1;
  long s = 0;
  for (int k = std::min(n, maxpart); k >= 1; --k) s += partitions_upto(n - k, k);
  return s;
}

// number of multisets from `parts` (with repetition, parts given with
// multiplicity as distinct labels) summing to n
long multisets(int n, const std::vector<int>& parts, std::size_t from) {
  if (n == 0) return 1;
  long s = 0;
  for (std::size_t i = from; i < parts.size(); ++i)
    if (parts[i] <= n) s += multisets(n - parts[i], parts, i);
  return s;
}

}  // namespace

TEST_CASE("poly arithmetic examples") {
  VarList v{"q", "u", "x"};
  auto p = [&](const char* s) { return parse_poly(v, s); };
  CHECK(p("(1+q)") * p("(1-q)") == p("1-q^2"));
  CHECK(p("u") * p("u^-1") == p("1"));
  CHECK((p("2+3*x*q^4+x*q^6") - p("2+3*x*q^4+x*q^6")).is_zero());
  CHECK(p("q^2 - 1").exact_div(p("q-1")) == p("q+1"));
  CHECK(p("x q^-3 + 2").to_string() == "2 + q^-3*x");
}

TEST_CASE("ring mismatch is a structural error") {
  VarList a{"q"}, b{"q", "u"};
  auto x = LaurentPoly::variable(a, "q");
  auto y = LaurentPoly::variable(b, "u");
  CHECK_THROWS_AS(x + y, StructuralError);
  CHECK_THROWS_AS(x * y, StructuralError);
}

TEST_CASE("ring axioms on small polynomials") {
  VarList v{"q", "u"};
  std::vector<LaurentPoly> ps;
  for (const char* s : {"0", "1", "-2", "q", "u^-1", "1-q", "q^2+3*u", "u*q^-1 - 2*q",
                        "(1+q)^3", "q u - u^2 + 5"})
    ps.push_back(parse_poly(v, s));
  for (auto& a : ps)
    for (auto& b : ps)
      for (auto& c : ps) {
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
      }
}

TEST_CASE("exact division and gcd") {
  VarList v{"q", "u", "v"};
  auto p = [&](const char* s) { return parse_poly(v, s); };
  LaurentPoly a = p("(u-v)*(u+v)"), b = p("(u-v)*q");
  CHECK(poly_gcd(a, b) == p("u-v"));
  LaurentPoly f = p("(1-q*u)*(1+q^2*v-u)^2*(3+u)");
  LaurentPoly g = p("(1-q*u)*(1+q^2*v-u)*(q-v)");
  CHECK(poly_gcd(f, g) == -p("(1-q*u)*(1+q^2*v-u)"));
  CHECK(poly_gcd(p("6*q^2"), p("4*q")) == p("2"));
  LaurentPoly qq;
  CHECK_FALSE(p("1+q").try_exact_div(p("1-q"), qq));
  CHECK(p("q^-3 - q^-1").exact_div(p("1 - q^2")) == p("q^-3"));
}

TEST_CASE("rational function normalization") {
  VarList v{"q", "u", "v"};
  auto p = [&](const char* s) { return parse_poly(v, s); };
  auto r = ratfun_normalize(RationalFunction(p("q^2-1"), p("q-1")));
  CHECK(r.num() == p("q+1"));
  CHECK(r.den() == p("1"));
  auto z = ratfun_normalize(RationalFunction(p("0"), p("q^3")));
  CHECK(z.is_zero());
  CHECK(z.den() == p("1"));
  auto c = ratfun_normalize(RationalFunction(p("(u-v)*(u+v)"), p("(u-v)*q")));
  CHECK(c.num() == p("(u+v)*q^-1"));
  CHECK(c.den() == p("1"));
  CHECK_THROWS_AS(RationalFunction(p("1"), p("0")), DomainError);
  CHECK(RationalFunction(p("1"), p("1-q")) + RationalFunction(p("q"), p("q-1")) ==
        RationalFunction(p("1")));
}

TEST_CASE("series inversion") {
  int n = 12;
  QSeries s(n);
  s[0] = 1;
  s[1] = -1;
  QSeries inv = qseries_invert(s);
  for (int i = 0; i < n; ++i) CHECK(inv[i] == 1);
  CHECK(qseries_invert(QSeries::one(5)) == QSeries::one(5));
  QSeries bad(4);
  bad[0] = 2;
  CHECK_THROWS_AS(qseries_invert(bad), DomainError);

  PochhammerSpec euler{{{1, 1, false, 1}}};
  QSeries qq = pochhammer_expand(euler, 25);
  QSeries pn = qseries_invert(qq);
  for (int i = 0; i < 25; ++i) CHECK(pn[i] == partitions_upto(i, i));
  CHECK(qq * pn == QSeries::one(25));
  CHECK(pn * qq == QSeries::one(25));
}

TEST_CASE("pochhammer products") {
  auto birp = PochhammerSpec::ratio({}, {2, 3, 3, 4}, 6);
  QSeries s = pochhammer_expand(birp, 8);
  std::vector<int> expect{1, 0, 1, 2, 2, 2, 5, 4};
  for (int i = 0; i < 8; ++i) CHECK(s[i] == expect[i]);
  // multiset oracle over the parts 2,3,3',4,8,9,9',10,14,... up to 40
  QSeries big = pochhammer_expand(birp, 40);
  std::vector<int> parts;
  for (int k = 0; k < 7; ++k)
    for (int r : {2, 3, 3, 4}) if (6 * k + r < 40) parts.push_back(6 * k + r);
  for (int i = 0; i < 40; ++i) CHECK(big[i] == multisets(i, parts, 0));

  auto bir = PochhammerSpec::ratio({2, 4}, {1, 1, 3, 3, 5, 5}, 6);
  QSeries b = pochhammer_expand(bir, 4);
  CHECK(b[0] == 1);
  CHECK(b[1] == 2);
  CHECK(b[2] == 2);
  CHECK(b[3] == 4);
  CHECK(pochhammer_expand(PochhammerSpec{}, 5) == QSeries::one(5));
  PochhammerSpec bad{{{0, 2, true, 1}}};
  CHECK_THROWS_AS(pochhammer_expand(bad, 5), DomainError);
}

TEST_CASE("denominator-only products are positive") {
  for (int m = 1; m <= 6; ++m)
    for (int r1 = 1; r1 <= m; ++r1)
      for (int r2 = r1; r2 <= m; ++r2) {
        PochhammerSpec s{{{r1, m, true, 1}, {r2, m, true, 2}}};
        QSeries e = pochhammer_expand(s, 30);
        for (auto& c : e.coeffs()) CHECK(c >= 0);
      }
}

TEST_CASE("x shift") {
  BiSeries s(10);
  s.add_to(1, 1, 1);
  BiSeries t = biseries_apply_xshift(s, 3);
  CHECK(t.coeff(1, 4) == 1);
  CHECK(t.coeff(1, 1) == 0);
  CHECK(biseries_apply_xshift(s, 0) == s);
  BiSeries u(20);
  for (int m = 0; m < 4; ++m)
    for (int e = m; e < 20; e += 3) u.add_to(m, e, m + e);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(biseries_apply_xshift(u, a + b) ==
            biseries_apply_xshift(biseries_apply_xshift(u, a), b));
}

TEST_CASE("bivariate inverse") {
  BiSeries p = xpochhammer(1, 1, -1, 15);
  BiSeries inv = biseries_invert(p);
  CHECK(p * inv == BiSeries::one(15));
  // 1/(xq;q)_inf at x=1 is the partition generating function
  QSeries at1 = inv.at_x1();
  for (int i = 0; i < 15; ++i) CHECK(at1[i] == partitions_upto(i, i));
}

TEST_CASE("json round trips") {
  VarList v{"q", "u"};
  auto p = parse_poly(v, "3*q^-2*u + 12345678901234567890*u^3 - 1");
  CHECK(poly_from_json(to_json(p)) == p);
  QSeries s = pochhammer_expand(PochhammerSpec::ratio({}, {1}, 1), 10);
  CHECK(qseries_from_json(to_json(s)) == s);
  BiSeries b = biseries_invert(xpochhammer(1, 1, -1, 8));
  CHECK(biseries_from_json(to_json(b)) == b);
}
