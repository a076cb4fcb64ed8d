#ifndef A2RR_AUTOMATA_HPP
#define A2RR_AUTOMATA_HPP

#include <array>
#include <string>
#include <vector>

#include "a2rr/json_io.hpp"
#include "a2rr/laurent_poly.hpp"
#include "a2rr/partitions.hpp"
#include "a2rr/series.hpp"

namespace a2rr {

inline constexpr int kLetters = 13;  // a..m

// block partition of each letter
const std::array<std::vector<ColoredPart>, kLetters>& letter_blocks();
inline char letter_char(int i) { return static_cast<char>('a' + i); }
int letter_index(char c);

using Word = std::vector<int>;
Word parse_word(std::string_view s);
std::string word_string(const Word& w);

class NotEncodable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// block k (1-based) holds the parts of magnitude 3k-2..3k; the word stops at the
// last block that is not the letter a
Word encode(const TwoColoredPartition& p);
TwoColoredPartition decode(const Word& w);

struct Dfa {
  int start = 0;
  std::vector<bool> accept;
  std::vector<std::array<int, kLetters>> delta;

  int size() const { return static_cast<int>(delta.size()); }
  int run(int from, const Word& w) const;
  bool accepts(const Word& w) const { return accept[run(start, w)]; }
  friend bool operator==(const Dfa&, const Dfa&) = default;
};

// minimal complete DFA for words having a factor in J, canonically numbered
Dfa build_avoidance_dfa(const std::vector<Word>& J);
// Aho-Corasick automaton before minimization
Dfa factor_automaton(const std::vector<Word>& J);
// drop unreachable states and merge equivalent ones (Hopcroft)
Dfa minimize(const Dfa& d);
// renumber states in BFS order from the start, letters in order a..m
Dfa canonical_form(const Dfa& d);
// state map a -> b when the reachable parts are isomorphic, else empty
std::vector<int> find_isomorphism(const Dfa& a, const Dfa& b);

Json to_json(const Dfa& d, const std::string& prefix = "q");
Dfa dfa_from_json(const Json& j);
std::string to_dot(const Dfa& d, const std::string& prefix = "q");

std::vector<Word> read_word_list(const std::string& path);

struct TransferSystem {
  std::vector<int> states;                    // non-accepting states
  std::vector<std::vector<LaurentPoly>> M;    // polynomials in x, q
  int shift = 3;                              // F_u(x) = sum M[u][v] F_v(x q^shift)
  VarList vars;
};

VarList xq_vars();
TransferSystem derive_transfer_system(const Dfa& d);
// reorder rows/columns to the given state order
TransferSystem reorder(const TransferSystem& s, const std::vector<int>& order);

// all components of the fixed point, modulo q^N
std::vector<BiSeries> language_series_all(const TransferSystem& sys, int N);
BiSeries language_series(const TransferSystem& sys, int state, int N);

Json to_json(const TransferSystem& s, const std::string& prefix = "q");

}  // namespace a2rr

#endif  // A2RR_AUTOMATA_HPP
