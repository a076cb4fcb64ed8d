#include "a2rr/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace a2rr {

TwoColoredPartition::TwoColoredPartition(std::vector<ColoredPart> parts)
    : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].magnitude < 1) throw StructuralError("part magnitude must be >= 1");
    if (i && parts_[i - 1] < parts_[i]) throw StructuralError("parts must be weakly decreasing");
  }
}

int TwoColoredPartition::size() const {
  int s = 0;
  for (auto& p : parts_) s += p.magnitude;
  return s;
}

std::string TwoColoredPartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i].magnitude);
    if (parts_[i].color == Color::minus) s += "b";
  }
  return s + ")";
}

TwoColoredPartition parse_partition(std::string_view text) {
  std::vector<ColoredPart> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int m = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        m = 10 * m + (text[i++] - '0');
      Color col = Color::plus;
      if (i < text.size() && (text[i] == 'b' || text[i] == '\'')) {
        col = Color::minus;
        ++i;
      }
      parts.push_back({m, col});
    } else if (c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      throw StructuralError("bad partition text: " + std::string(text));
    }
  }
  return TwoColoredPartition(std::move(parts));
}

bool canonical_less(const TwoColoredPartition& a, const TwoColoredPartition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.length() != b.length()) return a.length() < b.length();
  for (int i = 0; i < a.length(); ++i) {
    int ra = a.parts()[i].rank(), rb = b.parts()[i].rank();
    if (ra != rb) return ra > rb;
  }
  return false;
}

namespace {

bool pair_ok(const ColoredPart& a, const ColoredPart& b, unsigned which) {
  int diff = a.magnitude - b.magnitude, sum = a.magnitude + b.magnitude;
  if ((which & D1) && diff <= 1) {
    if (sum % 3 != 0 || a.color == b.color) return false;
  }
  if ((which & D2) && diff == 2 && sum % 3 != 0) {
    if (a.color == Color::minus && b.color == Color::plus) return false;
  }
  return true;
}

// D3 patterns ending at position i (checked on the trailing window)
bool d3_ok_at(const std::vector<ColoredPart>& p, std::size_t end) {
  // triples (3k,3kb,(3k-2)b) and (3k+2,3k,3kb)
  if (end >= 2) {
    const auto &x = p[end - 2], &y = p[end - 1], &z = p[end];
    if (x.magnitude % 3 == 0 && x.magnitude >= 3 && x == P(x.magnitude) &&
        y == Pb(x.magnitude) && z == Pb(x.magnitude - 2))
      return false;
    if (y.magnitude % 3 == 0 && y.magnitude >= 3 && x == P(y.magnitude + 2) &&
        y == P(y.magnitude) && z == Pb(y.magnitude))
      return false;
  }
  // ((3k+2)b,3k+1,3k-1,(3k-2)b)
  if (end >= 3) {
    const auto &w = p[end - 3], &x = p[end - 2], &y = p[end - 1], &z = p[end];
    int m = w.magnitude;
    if (m % 3 == 2 && m >= 5 && w == Pb(m) && x == P(m - 1) && y == P(m - 3) &&
        z == Pb(m - 4))
      return false;
  }
  return true;
}

bool part_ok_d4(const ColoredPart& a) {
  return !(a.magnitude == 1 || (a.magnitude == 2 && a.color == Color::minus));
}

// condition test for the last appended part only
bool tail_ok(const std::vector<ColoredPart>& p, unsigned which) {
  std::size_t e = p.size() - 1;
  if ((which & D4) && !part_ok_d4(p[e])) return false;
  if (e >= 1 && (which & (D1 | D2)) && !pair_ok(p[e - 1], p[e], which)) return false;
  if ((which & D3) && !d3_ok_at(p, e)) return false;
  return true;
}

}  // namespace

bool check_condition(const std::vector<ColoredPart>& parts, unsigned which) {
  std::vector<ColoredPart> prefix;
  prefix.reserve(parts.size());
  for (auto& x : parts) {
    prefix.push_back(x);
    if (!tail_ok(prefix, which)) return false;
  }
  return true;
}

bool check_condition(const TwoColoredPartition& p, unsigned which) {
  return check_condition(p.parts(), which);
}

bool contains_pattern(const std::vector<ColoredPart>& parts, const Pattern& pat) {
  if (pat.empty()) throw StructuralError("empty pattern");
  if (pat.size() > parts.size()) return false;
  return std::search(parts.begin(), parts.end(), pat.begin(), pat.end()) != parts.end();
}

const std::vector<PatternFamily>& forbidden_families() {
  // positive mirror of the list over negative integers
  static const std::vector<PatternFamily> fams = [] {
    std::vector<PatternFamily> f;
    f.push_back({1, [](int k) { return Pattern{P(k), P(k)}; }, 1});
    f.push_back({1, [](int k) { return Pattern{Pb(k), Pb(k)}; }, 1});
    f.push_back({1, [](int k) { return Pattern{P(k + 1), P(k)}; }, 1});
    f.push_back({1, [](int k) { return Pattern{Pb(k + 1), Pb(k)}; }, 1});
    f.push_back({2, [](int k) { return Pattern{Pb(3 * k + 1), P(3 * k)}; }, 1});
    f.push_back({2, [](int k) { return Pattern{P(3 * k + 1), Pb(3 * k)}; }, 1});
    f.push_back({3, [](int k) { return Pattern{P(3 * k + 1), Pb(3 * k + 1)}; }, 0});
    f.push_back({3, [](int k) { return Pattern{Pb(3 * k + 2), P(3 * k)}; }, 1});
    f.push_back({4, [](int k) { return Pattern{P(3 * k + 2), Pb(3 * k + 2)}; }, 0});
    f.push_back({4, [](int k) { return Pattern{Pb(3 * k + 3), P(3 * k + 1)}; }, 0});
    f.push_back({5, [](int k) { return Pattern{Pb(3 * k + 3), P(3 * k + 2)}; }, 0});
    f.push_back({5, [](int k) { return Pattern{P(3 * k + 3), Pb(3 * k + 2)}; }, 0});
    f.push_back({6, [](int k) { return Pattern{P(3 * k + 3), Pb(3 * k + 3), Pb(3 * k + 1)}; }, 0});
    f.push_back({6, [](int k) { return Pattern{P(3 * k + 5), P(3 * k + 3), Pb(3 * k + 3)}; }, 0});
    f.push_back({7, [](int k) {
                   return Pattern{Pb(3 * k + 5), P(3 * k + 4), P(3 * k + 2), Pb(3 * k + 1)};
                 }, 0});
    return f;
  }();
  return fams;
}

bool violates_theorem36(const TwoColoredPartition& p) {
  if (p.length() == 0) return false;
  int top = p.parts().front().magnitude;
  for (auto& fam : forbidden_families()) {
    for (int k = fam.kmin;; ++k) {
      Pattern pat = fam.instance(k);
      if (pat.back().magnitude > top) break;
      if (contains_pattern(p, pat)) return true;
    }
  }
  return false;
}

namespace {

void dfs(std::vector<ColoredPart>& cur, int remaining, int max_rank, unsigned cond,
         const std::function<void(const std::vector<ColoredPart>&)>& f) {
  f(cur);
  for (int r = std::min(max_rank, 2 * remaining + 1); r >= 2; --r) {
    ColoredPart part{r / 2, (r % 2) ? Color::plus : Color::minus};
    cur.push_back(part);
    if (!cond || tail_ok(cur, cond)) dfs(cur, remaining - part.magnitude, r, cond, f);
    cur.pop_back();
  }
}

}  // namespace

void for_each_2colored(int max_size, unsigned cond,
                       const std::function<void(const std::vector<ColoredPart>&)>& f) {
  if (max_size < 0) return;
  std::vector<ColoredPart> cur;
  dfs(cur, max_size, 2 * max_size + 1, cond, f);
}

std::vector<TwoColoredPartition> enumerate_2colored(int max_size, unsigned cond) {
  std::vector<TwoColoredPartition> out;
  for_each_2colored(max_size, cond, [&](const std::vector<ColoredPart>& p) {
    out.emplace_back(p);
  });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

BiSeries gen_fun(const std::vector<TwoColoredPartition>& parts, int N) {
  BiSeries b(N);
  for (auto& p : parts) {
    if (p.size() >= N)
      throw DomainError("partition " + p.to_string() + " exceeds truncation order");
    b.add_to(p.length(), p.size(), 1);
  }
  return b;
}

BiSeries gen_fun_direct(unsigned cond, int N) {
  std::vector<std::vector<long>> counts;
  for_each_2colored(N - 1, cond, [&](const std::vector<ColoredPart>& p) {
    int s = 0;
    for (auto& x : p) s += x.magnitude;
    if (counts.size() <= p.size()) counts.resize(p.size() + 1, std::vector<long>(N));
    ++counts[p.size()][s];
  });
  BiSeries b(N);
  for (std::size_t m = 0; m < counts.size(); ++m)
    for (int e = 0; e < N; ++e)
      if (counts[m][e]) b.add_to(static_cast<int>(m), e, counts[m][e]);
  return b;
}

Json to_json(const TwoColoredPartition& p) {
  Json j = Json::array();
  for (auto& x : p.parts())
    j.push_back(Json::array({x.color == Color::plus ? "+" : "-", x.magnitude}));
  return j;
}

TwoColoredPartition partition_from_json(const Json& j) {
  std::vector<ColoredPart> parts;
  for (auto& x : j) {
    auto c = x.at(0).get<std::string>();
    if (c != "+" && c != "-") throw StructuralError("color must be + or -");
    parts.push_back({x.at(1).get<int>(), c == "+" ? Color::plus : Color::minus});
  }
  return TwoColoredPartition(std::move(parts));
}

}  // namespace a2rr
