#include <doctest.h>

#include "a2rr/verify.hpp"

using namespace a2rr;

TEST_CASE("first difference of two series") {
  VarList v{"x", "q"};
  auto a = BiSeries::from_poly(parse_poly(v, "1 + x q^2 + 3x^2 q^4"), 6);
  auto b = BiSeries::from_poly(parse_poly(v, "1 + x q^2 + 2x^2 q^4"), 6);
  CHECK(first_difference(a, a).empty());
  CHECK(first_difference(a, b) == "x^2 q^4: 3 vs 2");
  CHECK(first_difference(a.at_x1(), b.at_x1()) == "q^4: 3 vs 2");
  CHECK(first_difference(a, a.truncated(5)) == "orders 6 vs 5");
}

TEST_CASE("suite reports") {
  SuiteOptions opt;
  opt.qorder = 12;
  opt.data_dir = A2RR_DATA_DIR;
  opt.only = {1, 10};
  auto r = run_suite(opt);
  REQUIRE(r.size() == 2);
  CHECK(r[0].pass);
  CHECK(r[0].witnesses.empty());
  // a failing report always carries a witness
  CHECK_FALSE(r[1].pass);
  CHECK_FALSE(r[1].witnesses.empty());
  auto j = to_json(r[1]);
  CHECK(j["status"] == "fail");
  CHECK_FALSE(j.contains("seconds"));
  CHECK(to_json(r[0], true).contains("seconds"));
  opt.qorder = 0;
  CHECK_THROWS_AS(run_suite(opt), DomainError);
}
