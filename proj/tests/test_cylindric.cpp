#include <doctest.h>

#include <algorithm>

#include "a2rr/cylindric.hpp"
#include "a2rr/partitions.hpp"

using namespace a2rr;

namespace {

const VarList& xq() {
  static const VarList v{"x", "q"};
  return v;
}

BiSeries poly(const std::string& s, int N) { return BiSeries::from_poly(parse_poly(xq(), s), N); }

const std::map<Profile, BiSeries>& family(int N) {
  static std::map<int, std::map<Profile, BiSeries>> cache;
  auto it = cache.find(N);
  if (it == cache.end()) it = cache.emplace(N, cw_fixed_point_all(3, 3, N)).first;
  return it->second;
}

QSeries qpoch_inf(int N) {
  PochhammerSpec s;
  s.factors.push_back({1, 1, false, 1});
  return pochhammer_expand(s, N);
}

}  // namespace

TEST_CASE("cylindric inequalities") {
  CHECK(is_cylindric({{}, {}, {}}, {1, 1, 1}));
  CHECK(is_cylindric({{}, {}, {}}, {3, 0, 0}));
  CHECK(is_cylindric({{1}, {}, {}}, {1, 1, 1}));
  CHECK_FALSE(is_cylindric({{}, {}, {1}}, {3, 0, 0}));
  CHECK(is_cylindric({{1}, {}, {}}, {3, 0, 0}));
  CHECK_THROWS_AS(is_cylindric({{}, {}}, {3, 0, 0}), StructuralError);
  CHECK(parse_profile("3,0,0") == Profile{3, 0, 0});
  CHECK(profile_string({2, 0, 1}) == "(2,0,1)");
}

TEST_CASE("small enumerations") {
  auto f = enumerate_cylindric({1, 1, 1}, 1);
  CHECK(f.qorder() == 2);
  CHECK(f == poly("1 + 3xq", 2));
  CHECK(enumerate_cylindric({3, 0, 0}, 1) == poly("1 + xq", 2));
  for (auto& c : profiles_of(3, 3)) CHECK(enumerate_cylindric(c, 0) == BiSeries::one(1));
  CHECK(profiles_of(3, 3).size() == 10);
}

TEST_CASE("enumeration against an independent brute force") {
  // rows as zero-padded arrays of fixed length, all rows drawn from one list
  const int N = 8, L = N + 4;
  std::vector<std::vector<int>> parts{{}};
  for (int step = 0; step < N; ++step) {
    std::vector<std::vector<int>> next;
    for (auto& p : parts) {
      int sum = 0;
      for (int v : p) sum += v;
      int cap = p.empty() ? N : p.back();
      for (int v = 1; v <= cap && sum + v <= N; ++v) {
        auto q = p;
        q.push_back(v);
        next.push_back(q);
      }
    }
    for (auto& q : next)
      if (std::find(parts.begin(), parts.end(), q) == parts.end()) parts.push_back(q);
  }
  auto padded = [&](const std::vector<int>& p) {
    std::vector<int> out(L + 4, 0);
    std::copy(p.begin(), p.end(), out.begin());
    return out;
  };
  auto sum = [](const std::vector<int>& p) { int s = 0; for (int v : p) s += v; return s; };
  for (Profile c : {Profile{1, 1, 1}, Profile{3, 0, 0}, Profile{2, 0, 1}}) {
    BiSeries expect(N + 1);
    for (auto& a : parts)
      for (auto& b : parts)
        for (auto& d : parts) {
          int s = sum(a) + sum(b) + sum(d);
          if (s > N) continue;
          std::vector<std::vector<int>> rows{padded(a), padded(b), padded(d)};
          bool ok = true;
          for (int i = 0; i < 3 && ok; ++i)
            for (int j = 0; j < L && ok; ++j)
              ok = rows[i][j] >= rows[(i + 1) % 3][j + c[(i + 1) % 3]];
          if (!ok) continue;
          int mx = std::max({rows[0][0], rows[1][0], rows[2][0]});
          expect.add_to(mx, s, 1);
        }
    CHECK(enumerate_cylindric(c, N) == expect);
  }
}

TEST_CASE("corteel-welsh children") {
  auto k300 = cw_children({3, 0, 0});
  REQUIRE(k300.size() == 1);
  CHECK(k300[0].child == Profile{2, 1, 0});
  CHECK(k300[0].shift == 1);
  CHECK(k300[0].sign == 1);

  auto k111 = cw_children({1, 1, 1});
  CHECK(k111.size() == 7);
  int full = 0;
  for (auto& k : k111) {
    if (k.subset == 7) {
      ++full;
      CHECK(k.child == Profile{1, 1, 1});
      CHECK(k.poch_degree == 2);
      CHECK(k.shift == 3);
      CHECK(k.sign == 1);
    }
    if (__builtin_popcount(k.subset) == 1) CHECK((k.child == Profile{2, 1, 0} || k.child == Profile{0, 2, 1} || k.child == Profile{1, 0, 2}));
  }
  CHECK(full == 1);

  auto k210 = cw_children({2, 1, 0});
  REQUIRE(k210.size() == 3);
  CHECK_THROWS_AS(cw_children({0, 0, 0}), DomainError);
}

TEST_CASE("example recursions and derived relations") {
  const int N = 30;
  auto& G = family(N);
  auto g300 = G.at({3, 0, 0}), g210 = G.at({2, 1, 0}), g201 = G.at({2, 0, 1}), g111 = G.at({1, 1, 1});
  auto one_minus = [&](int k) { return poly("1 - x q^" + std::to_string(k), N); };
  for (auto& [c, g] : G) CHECK(g.slice(0) == QSeries::one(N));

  CHECK(g300 == g210.xshift(1));
  CHECK(g210 == g201.xshift(1) + g201.xshift(1) - one_minus(1) * g111.xshift(2));
  CHECK(g201 == g300.xshift(1) + g111.xshift(1) - one_minus(1) * g210.xshift(2));
  CHECK(g111 == poly("3", N) * g210.xshift(1) - poly("3", N) * one_minus(1) * g201.xshift(2) +
                    one_minus(1) * one_minus(2) * g111.xshift(3));

  CHECK(g201 == g111.xshift(1) + poly("xq", N) * g300.xshift(1));
  CHECK(g210 == poly("1+xq", N) * g111.xshift(2) + poly("2xq^2", N) * g300.xshift(2));
  CHECK(g300 == poly("1+xq^2", N) * g111.xshift(3) + poly("2xq^3", N) * g300.xshift(3));
  CHECK(g111 == poly("3xq^3(1+xq)", N) * g300.xshift(3) + poly("1+2xq+2xq^2+x^2q^3", N) * g111.xshift(3));

  // cyclic rotations of a profile give the same series
  CHECK(G.at({0, 3, 0}) == g300);
  CHECK(G.at({1, 2, 0}) == g201);
  CHECK(G.at({0, 2, 1}) == g210);
}

TEST_CASE("scalar equations") {
  const int N = 30;
  auto& G = family(N);
  auto g300 = G.at({3, 0, 0}), g111 = G.at({1, 1, 1});
  auto lhs300 = poly("1+xq^5", N) * g300;
  auto rhs300 = poly("1+xq^2+2xq^3+2xq^4+2xq^5+2x^2q^6+2x^2q^7+2x^2q^8+x^2q^9+x^3q^11", N) * g300.xshift(3) +
                poly("xq^6(1+xq^2)(1-xq^4)(1-xq^5)", N) * g300.xshift(6);
  CHECK(lhs300 == rhs300);
  auto lhs111 = poly("1+xq^4", N) * g111;
  auto rhs111 = poly("1+2xq+2xq^2+2xq^3+xq^4+x^2q^3+2x^2q^4+2x^2q^5+2x^2q^6+x^3q^7", N) * g111.xshift(3) +
                poly("xq^3(1+xq)(1-xq^4)(1-xq^5)", N) * g111.xshift(6);
  CHECK(lhs111 == rhs111);
}

TEST_CASE("enumeration agrees with the recursion for all level 3 profiles") {
  const int N = 20;
  auto& G = family(N);
  for (auto& c : profiles_of(3, 3)) {
    CAPTURE(profile_string(c));
    CHECK(g_to_f(G.at(c)) == enumerate_cylindric(c, N - 1));
  }
}

TEST_CASE("g and f conversion") {
  const int N = 12;
  auto f = g_to_f(BiSeries::one(N));
  CHECK(f.slice(0) == QSeries::one(N));
  CHECK(f * xpochhammer(1, 1, -1, N) == BiSeries::one(N));
  CHECK(f_to_g(f) == BiSeries::one(N));
  auto g = poly("1 + 5 + x q^2", N);
  CHECK(g_to_f(g).slice(0) == g.slice(0));
}

TEST_CASE("specialization at x = 1 gives the level 3 products") {
  const int N = 30;
  auto& G = family(N);
  auto qq = qpoch_inf(N);
  auto f111 = g_to_f(G.at({1, 1, 1})).at_x1();
  auto f300 = g_to_f(G.at({3, 0, 0})).at_x1();
  auto bir = pochhammer_expand(PochhammerSpec::ratio({2, 4}, {1, 1, 3, 3, 5, 5}, 6), N);
  auto birp = pochhammer_expand(PochhammerSpec::ratio({}, {2, 3, 3, 4}, 6), N);
  CHECK(f111 * qq == bir);
  CHECK(f300 * qq == birp);
  // G at x = 1 is the same thing
  CHECK(G.at({1, 1, 1}).at_x1() == bir);
  CHECK(G.at({3, 0, 0}).at_x1() == birp);
  CHECK(G.at({1, 1, 1}).at_x1() == gen_fun_direct(kBIR, N).at_x1());
  CHECK(G.at({3, 0, 0}).at_x1() == gen_fun_direct(kBIRP, N).at_x1());
}
