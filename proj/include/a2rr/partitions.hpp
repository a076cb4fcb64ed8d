#ifndef A2RR_PARTITIONS_HPP
#define A2RR_PARTITIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include "a2rr/json_io.hpp"
#include "a2rr/series.hpp"

namespace a2rr {

enum class Color { plus, minus };

struct ColoredPart {
  int magnitude = 1;
  Color color = Color::plus;

  // position in the order ... > 3 > 3b > 2 > 2b > 1 > 1b
  int rank() const { return 2 * magnitude + (color == Color::plus ? 1 : 0); }
  friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
  friend bool operator<(const ColoredPart& a, const ColoredPart& b) {
    return a.rank() < b.rank();
  }
};

inline ColoredPart P(int m) { return {m, Color::plus}; }
inline ColoredPart Pb(int m) { return {m, Color::minus}; }

class TwoColoredPartition {
 public:
  TwoColoredPartition() = default;
  // throws StructuralError unless weakly decreasing with magnitudes >= 1
  explicit TwoColoredPartition(std::vector<ColoredPart> parts);

  const std::vector<ColoredPart>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  std::string to_string() const;

  friend bool operator==(const TwoColoredPartition&, const TwoColoredPartition&) = default;

 private:
  std::vector<ColoredPart> parts_;
};

// "(11b,10,8b,3,3b)" or "11b 10 8b 3 3b"; b marks the minus color
TwoColoredPartition parse_partition(std::string_view text);

// canonical order: size, then length, then lexicographic with larger parts first
bool canonical_less(const TwoColoredPartition& a, const TwoColoredPartition& b);

using Pattern = std::vector<ColoredPart>;

enum Condition : unsigned { D1 = 1, D2 = 2, D3 = 4, D4 = 8 };
inline constexpr unsigned kBIR = D1 | D2 | D3;
inline constexpr unsigned kBIRP = D1 | D2 | D3 | D4;

bool check_condition(const TwoColoredPartition& p, unsigned which);
// same test for a raw sequence, used while enumerating
bool check_condition(const std::vector<ColoredPart>& parts, unsigned which);

bool contains_pattern(const std::vector<ColoredPart>& parts, const Pattern& pat);
inline bool contains_pattern(const TwoColoredPartition& p, const Pattern& pat) {
  return contains_pattern(p.parts(), pat);
}

// one of the families (1)-(7), each member a pattern depending on k
struct PatternFamily {
  int id;
  std::function<Pattern(int)> instance;
  int kmin;  // least k keeping every magnitude >= 1
};

const std::vector<PatternFamily>& forbidden_families();
bool violates_theorem36(const TwoColoredPartition& p);

std::vector<TwoColoredPartition> enumerate_2colored(int max_size, unsigned cond);

// Calls f on each partition of size <= max_size satisfying cond, in depth-first
// order (not canonical).
void for_each_2colored(int max_size, unsigned cond,
                       const std::function<void(const std::vector<ColoredPart>&)>& f);

// sum x^len q^size; throws DomainError when a partition has size >= N
BiSeries gen_fun(const std::vector<TwoColoredPartition>& parts, int N);
// counts directly from the generator, for larger N
BiSeries gen_fun_direct(unsigned cond, int N);

Json to_json(const TwoColoredPartition& p);
TwoColoredPartition partition_from_json(const Json& j);

}  // namespace a2rr

#endif  // A2RR_PARTITIONS_HPP
