#include <doctest.h>

#include <fstream>
#include <set>

#include "a2rr/automata.hpp"

using namespace a2rr;

namespace {

std::vector<Word> paper_J() { return read_word_list(std::string(A2RR_DATA_DIR) + "/forbidden_words.txt"); }

Json read_json(const std::string& rel) {
  std::ifstream in(std::string(A2RR_DATA_DIR) + "/" + rel);
  return Json::parse(in);
}

// smallest DFA by brute force: states are classes of words up to length L
// under "which extensions of length <= L reach a factor of J"; small J only
int count_states_bruteforce(const std::vector<Word>& J, int alphabet, int L) {
  auto has_factor = [&](const Word& w) {
    for (auto& f : J)
      if (std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end()) return true;
    return false;
  };
  std::vector<Word> words{{}}, layer{{}};
  for (int l = 0; l < L; ++l) {
    std::vector<Word> next;
    for (auto& w : layer)
      for (int c = 0; c < alphabet; ++c) {
        Word v = w;
        v.push_back(c);
        next.push_back(v);
      }
    words.insert(words.end(), next.begin(), next.end());
    layer = next;
  }
  std::set<std::vector<bool>> sigs;
  for (auto& w : words) {
    if (static_cast<int>(w.size()) > L - 2) continue;
    std::vector<bool> sig;
    for (auto& e : words) {
      if (static_cast<int>(e.size()) > 2) continue;
      Word v = w;
      v.insert(v.end(), e.begin(), e.end());
      sig.push_back(has_factor(v));
    }
    sigs.insert(sig);
  }
  return static_cast<int>(sigs.size());
}

}  // namespace

TEST_CASE("encode and decode") {
  CHECK(decode(parse_word("maei")).to_string() == "(11b,10,8b,3,3b)");
  CHECK(decode(parse_word("aaaa")).length() == 0);
  CHECK(encode(parse_partition("4,2")) == parse_word("db"));
  CHECK_THROWS_AS(encode(parse_partition("2,1")), NotEncodable);
  CHECK(encode(parse_partition("(11b,10,8b,3,3b)")) == parse_word("maei"));
}

TEST_CASE("round trip and injectivity up to size 14") {
  std::set<std::string> seen;
  for_each_2colored(14, 0, [&](const std::vector<ColoredPart>& v) {
    TwoColoredPartition p(v);
    try {
      Word w = encode(p);
      CHECK(decode(w) == p);
      CHECK(seen.insert(word_string(w)).second);
    } catch (const NotEncodable&) {
    }
  });
}

TEST_CASE("small avoidance automata") {
  Dfa one = build_avoidance_dfa({parse_word("b")});
  CHECK(one.size() == 2);
  Dfa fb = build_avoidance_dfa({parse_word("fb")});
  CHECK(fb.size() == 3);
  CHECK(fb.accepts(parse_word("afbaa")));
  CHECK_FALSE(fb.accepts(parse_word("fcbf")));
  // brute-force Myhill-Nerode count over a 3-letter sub-alphabet
  std::vector<Word> J3{{0, 1}, {1, 1}, {2, 0, 2}};
  CHECK(build_avoidance_dfa(J3).size() == count_states_bruteforce(J3, 3, 7));
}

TEST_CASE("the paper's word list gives the printed table") {
  auto J = paper_J();
  REQUIRE(J.size() == 48);
  Dfa d = build_avoidance_dfa(J);
  CHECK(d.size() == 6);
  int nacc = 0;
  for (bool a : d.accept) nacc += a;
  CHECK(nacc == 1);
  Dfa golden = dfa_from_json(read_json("golden/dfa_table.json"));
  CHECK(canonical_form(golden) == d);
  CHECK(minimize(d) == d);
  CHECK(minimize(golden) == d);
}

TEST_CASE("transfer system") {
  Dfa golden = dfa_from_json(read_json("golden/dfa_table.json"));
  Dfa d = build_avoidance_dfa(paper_J());
  auto iso = find_isomorphism(golden, d);
  REQUIRE(iso.size() == 6);
  TransferSystem sys = derive_transfer_system(d);
  std::vector<int> order;
  for (int s : {0, 2, 3, 4, 5}) order.push_back(iso[s]);
  TransferSystem ours = reorder(sys, order);
  Json gm = read_json("golden/transfer_matrix.json");
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(ours.M[i][j] == parse_poly(xq_vars(), gm["matrix"][i][j].get<std::string>()));

  // one state, nothing accepting
  Dfa all;
  all.accept = {false};
  all.delta.resize(1);
  all.delta[0].fill(0);
  auto s1 = derive_transfer_system(all);
  // h,i give x^2q^3; j,k,l give x^2q^4; m gives x^2q^6
  CHECK(s1.M[0][0] == parse_poly(xq_vars(),
                                 "1+2xq+2xq^2+2xq^3+2x^2q^3+3x^2q^4+x^2q^6"));
  Dfa acc = all;
  acc.accept = {true};
  CHECK(derive_transfer_system(acc).states.empty());
}

TEST_CASE("language series equal the enumerations") {
  Dfa d = build_avoidance_dfa(paper_J());
  Dfa golden = dfa_from_json(read_json("golden/dfa_table.json"));
  auto iso = find_isomorphism(golden, d);
  auto sys = derive_transfer_system(d);
  int N = 16;
  auto all = language_series_all(sys, N);
  BiSeries f0 = language_series(sys, iso[0], N);
  BiSeries f2 = language_series(sys, iso[2], N);
  CHECK(f0 == gen_fun(enumerate_2colored(N - 1, kBIR), N));
  CHECK(f2 == gen_fun(enumerate_2colored(N - 1, kBIRP), N));
  CHECK(language_series(sys, iso[0], 1) == BiSeries::one(1));
  for (auto& [m, s] : f0.slices())
    for (auto& c : s.coeffs()) CHECK(c >= 0);
  // the matrix identity itself
  for (std::size_t i = 0; i < sys.states.size(); ++i) {
    BiSeries rhs(N);
    for (std::size_t j = 0; j < sys.states.size(); ++j)
      rhs += BiSeries::from_poly(sys.M[i][j], N) * all[j].xshift(3);
    CHECK(rhs == all[i]);
  }
}

TEST_CASE("membership equals avoidance up to size 14") {
  auto J = paper_J();
  Dfa d = build_avoidance_dfa(J);
  for_each_2colored(14, 0, [&](const std::vector<ColoredPart>& v) {
    TwoColoredPartition p(v);
    bool in_bir = check_condition(p, kBIR);
    try {
      Word w = encode(p);
      CHECK(in_bir == !d.accepts(w));
    } catch (const NotEncodable&) {
      CHECK_FALSE(in_bir);
    }
  });
}

TEST_CASE("dfa json and dot") {
  Dfa d = build_avoidance_dfa(paper_J());
  CHECK(dfa_from_json(to_json(d)) == d);
  std::string dot = to_dot(d);
  CHECK(std::count(dot.begin(), dot.end(), '\n') > 6);
}
