#include <doctest.h>

#include <set>

#include "a2rr/partitions.hpp"

using namespace a2rr;

namespace {

std::vector<std::string> names_of_size(const std::vector<TwoColoredPartition>& ps, int n) {
  std::vector<std::string> out;
  for (auto& p : ps)
    if (p.size() == n) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// all 2-colored partitions as multisets of ranks, generated by a different
// route than the library: choose multiplicities rank by rank
void all_by_multiplicity(int remaining, int rank, std::vector<ColoredPart>& cur,
                         std::vector<std::vector<ColoredPart>>& out) {
  if (rank < 2) {
    out.push_back(cur);
    return;
  }
  int m = rank / 2;
  ColoredPart part{m, rank % 2 ? Color::plus : Color::minus};
  std::size_t base = cur.size();
  for (int k = 0; k * m <= remaining; ++k) {
    all_by_multiplicity(remaining - k * m, rank - 1, cur, out);
    cur.push_back(part);
  }
  cur.resize(base);
}

}  // namespace

TEST_CASE("conditions on small examples") {
  CHECK(check_condition(parse_partition("2,1b"), D1 | D2 | D3));
  CHECK_FALSE(check_condition(parse_partition("1,1"), D1));
  CHECK_FALSE(check_condition(parse_partition("3b,1"), D2));
  CHECK(check_condition(parse_partition("4,2"), kBIRP));
  CHECK_FALSE(check_condition(parse_partition("3,3b,1b"), D3));
  CHECK_FALSE(check_condition(parse_partition("5,3,3b"), D3));
  CHECK_FALSE(check_condition(parse_partition("8b,7,5,4b"), D3));
  CHECK(check_condition(parse_partition("8b,7,5,4b"), D1 | D2));
  CHECK_FALSE(check_condition(parse_partition("2b"), D4));
}

TEST_CASE("pattern containment") {
  CHECK(contains_pattern(parse_partition("3,3b,1b"), {P(3), Pb(3), Pb(1)}));
  CHECK_FALSE(contains_pattern(parse_partition("5,3,3b"), {P(3), Pb(3), Pb(1)}));
  CHECK_THROWS_AS(contains_pattern(parse_partition("5"), Pattern{}), StructuralError);
  CHECK(violates_theorem36(parse_partition("2,2")));
  CHECK(violates_theorem36(parse_partition("5,3,3b")));
  CHECK_FALSE(violates_theorem36(parse_partition("4,2")));
}

TEST_CASE("brute-force family check for (4,2)") {
  // every window of (4,2) compared against every family member directly
  auto p = parse_partition("4,2");
  int hits = 0;
  for (auto& fam : forbidden_families())
    for (int k = fam.kmin; k < 10; ++k) {
      auto pat = fam.instance(k);
      for (std::size_t i = 0; i + pat.size() <= p.parts().size(); ++i)
        if (std::equal(pat.begin(), pat.end(), p.parts().begin() + i)) ++hits;
    }
  CHECK(hits == 0);
}

TEST_CASE("enumeration matches the listed examples") {
  auto bir = enumerate_2colored(3, kBIR);
  std::vector<int> counts(4);
  for (auto& p : bir) ++counts[p.size()];
  CHECK(counts == std::vector<int>{1, 2, 2, 4});
  CHECK(names_of_size(bir, 3) == sorted({"(3)", "(3b)", "(2,1b)", "(2b,1)"}));

  auto birp = enumerate_2colored(7, kBIRP);
  CHECK(names_of_size(birp, 7) == sorted({"(7)", "(7b)", "(5,2)", "(5b,2)"}));
  CHECK(names_of_size(birp, 6) == sorted({"(6)", "(6b)", "(4,2)", "(4b,2)", "(3,3b)"}));
  auto e = enumerate_2colored(0, kBIR);
  REQUIRE(e.size() == 1);
  CHECK(e[0].length() == 0);
  // the listed size-4 members of BIR are all present
  auto bir4 = names_of_size(enumerate_2colored(4, kBIR), 4);
  for (auto s : {"(4)", "(4b)", "(3,1)", "(3,1b)", "(3b,1b)"})
    CHECK(std::find(bir4.begin(), bir4.end(), s) != bir4.end());
}

TEST_CASE("enumeration order and invariants") {
  auto all = enumerate_2colored(10, kBIR);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(canonical_less(all[i - 1], all[i]));
  auto strict = enumerate_2colored(12, kBIRP);
  auto loose = enumerate_2colored(12, kBIR);
  std::set<std::string> ls;
  for (auto& p : loose) ls.insert(p.to_string());
  for (auto& p : strict) CHECK(ls.count(p.to_string()) == 1);
  for (auto& p : loose)
    for (int i = 1; i < p.length(); ++i) CHECK_FALSE(p.parts()[i - 1] < p.parts()[i]);
}

TEST_CASE("theorem 3.6 list agrees with the conditions") {
  std::vector<ColoredPart> cur;
  std::vector<std::vector<ColoredPart>> all;
  all_by_multiplicity(12, 2 * 12 + 1, cur, all);
  long checked = 0;
  for (auto& v : all) {
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return b < a; });
    TwoColoredPartition p(v);
    if (p.size() > 12) continue;
    CHECK(check_condition(p, kBIR) == !violates_theorem36(p));
    ++checked;
  }
  // number of bipartitions of size <= 12
  CHECK(checked == 1 + 2 + 5 + 10 + 20 + 36 + 65 + 110 + 185 + 300 + 481 + 752 + 1165);
}

TEST_CASE("generating functions") {
  BiSeries g = gen_fun(enumerate_2colored(3, kBIR), 4);
  CHECK(g.coeff(0, 0) == 1);
  CHECK(g.coeff(1, 1) == 2);
  CHECK(g.coeff(1, 2) == 2);
  CHECK(g.coeff(1, 3) == 2);
  CHECK(g.coeff(2, 3) == 2);
  CHECK(gen_fun({}, 5).is_zero());
  BiSeries h = gen_fun(enumerate_2colored(5, kBIRP), 6);
  CHECK_THROWS_AS(gen_fun(enumerate_2colored(6, kBIRP), 6), DomainError);
  BiSeries h7 = gen_fun(enumerate_2colored(6, kBIRP), 7);
  CHECK(h7.coeff(1, 6) == 2);
  CHECK(h7.coeff(2, 6) == 3);
  CHECK(gen_fun_direct(kBIRP, 7) == h7);
  CHECK(h7.truncated(6) == h);
}

TEST_CASE("partition json") {
  auto p = parse_partition("(11b,10,8b,3,3b)");
  CHECK(to_json(p).dump() == R"([["-",11],["+",10],["-",8],["+",3],["-",3]])");
  CHECK(partition_from_json(to_json(p)) == p);
}
