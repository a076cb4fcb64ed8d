#include "a2rr/cylindric.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace a2rr {

Profile parse_profile(std::string_view s) {
  Profile c;
  int cur = -1;
  for (char ch : s) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur = (cur < 0 ? 0 : 10 * cur) + (ch - '0');
    } else if (ch == ',' || ch == ' ' || ch == '(' || ch == ')') {
      if (cur >= 0) c.push_back(cur);
      cur = -1;
    } else {
      throw StructuralError("bad profile: " + std::string(s));
    }
  }
  if (cur >= 0) c.push_back(cur);
  if (c.empty()) throw StructuralError("empty profile");
  return c;
}

std::string profile_string(const Profile& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

namespace {

int part(const Partition& p, int j) {  // 1-based, zero beyond the length
  return j <= static_cast<int>(p.size()) ? p[j - 1] : 0;
}

// lambda^{(i)}_j >= lambda^{(i+1)}_{j + c_{i+1}}
bool pair_ok(const Partition& a, const Partition& b, int cb) {
  for (int j = 1; j + cb <= static_cast<int>(b.size()); ++j)
    if (part(a, j) < part(b, j + cb)) return false;
  return true;
}

void partitions_of(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    partitions_of(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool is_cylindric(const std::vector<Partition>& rows, const Profile& c) {
  if (rows.size() != c.size()) throw StructuralError("row count differs from profile length");
  std::size_t r = c.size();
  for (std::size_t i = 0; i < r; ++i)
    if (!pair_ok(rows[i], rows[(i + 1) % r], c[(i + 1) % r])) return false;
  return true;
}

BiSeries enumerate_cylindric(const Profile& c, int N) {
  std::size_t r = c.size();
  if (r == 0) throw StructuralError("empty profile");
  std::vector<std::vector<Partition>> by_size(N + 1);
  for (int n = 0; n <= N; ++n) {
    Partition cur;
    partitions_of(n, n, cur, by_size[n]);
  }
  BiSeries out(N + 1);
  std::vector<long> counts;  // index max*(N+1)+size
  counts.assign(static_cast<std::size_t>(N + 1) * (N + 1), 0);
  std::vector<const Partition*> rows(r);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == r) {
      if (!pair_ok(*rows[r - 1], *rows[0], c[0])) return;
      int mx = 0, sz = N - left;
      for (auto* p : rows)
        if (!p->empty()) mx = std::max(mx, p->front());
      ++counts[static_cast<std::size_t>(mx) * (N + 1) + sz];
      return;
    }
    for (int n = 0; n <= left; ++n)
      for (auto& p : by_size[n]) {
        if (i > 0 && !pair_ok(*rows[i - 1], p, c[i])) continue;
        rows[i] = &p;
        rec(i + 1, left - n);
      }
  };
  rec(0, N);
  for (int m = 0; m <= N; ++m)
    for (int s = 0; s <= N; ++s)
      if (auto v = counts[static_cast<std::size_t>(m) * (N + 1) + s]) out.add_to(m, s, v);
  return out;
}

std::vector<CwChild> cw_children(const Profile& c) {
  int r = static_cast<int>(c.size());
  if (r == 0 || r > 20) throw StructuralError("bad profile length");
  unsigned support = 0;
  for (int i = 0; i < r; ++i)
    if (c[i] > 0) support |= 1u << i;
  if (!support) throw DomainError("profile of level zero has no recursion");
  std::vector<CwChild> out;
  for (unsigned J = 1; J < (1u << r); ++J) {
    if ((J & ~support) != 0) continue;
    int size = __builtin_popcount(J);
    Profile child = c;
    for (int i = 0; i < r; ++i) {
      bool in = J >> i & 1, prev_in = J >> ((i - 1 + r) % r) & 1;
      if (in && !prev_in) child[i] -= 1;
      else if (!in && prev_in) child[i] += 1;
    }
    out.push_back({J, size % 2 ? 1 : -1, size - 1, size, child});
  }
  return out;
}

std::vector<Profile> profiles_of(int r, int level) {
  std::vector<Profile> out;
  Profile cur(r);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == r - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (r >= 1) rec(0, level);
  return out;
}

std::map<Profile, BiSeries> cw_fixed_point_all(int r, int level, int N) {
  if (N < 1) throw DomainError("order must be positive");
  if (level < 1) throw DomainError("profile of level zero has no recursion");
  auto profs = profiles_of(r, level);
  std::map<Profile, std::vector<CwChild>> kids;
  for (auto& c : profs) kids[c] = cw_children(c);
  std::vector<BiSeries> poch;
  for (int k = 0; k <= r; ++k) poch.push_back(xpochhammer(1, 1, k, N));
  std::map<Profile, BiSeries> G;
  for (auto& c : profs) G[c] = BiSeries::one(N);
  for (int iter = 0;; ++iter) {
    std::map<Profile, BiSeries> H;
    for (auto& c : profs) {
      BiSeries acc(N);
      for (auto& k : kids[c]) {
        BiSeries term = poch[k.poch_degree] * G.at(k.child).xshift(k.shift);
        if (k.sign > 0) acc += term;
        else acc -= term;
      }
      H[c] = std::move(acc);
    }
    if (H == G) break;
    G = std::move(H);
    if (iter > 4 * N + 16) throw DomainError("recursion did not converge");
  }
  return G;
}

BiSeries cw_fixed_point(const Profile& c, int N) {
  int level = 0;
  for (int v : c) level += v;
  return cw_fixed_point_all(static_cast<int>(c.size()), level, N).at(c);
}

BiSeries g_to_f(const BiSeries& G) {
  return G * biseries_invert(xpochhammer(1, 1, -1, G.qorder()));
}

BiSeries f_to_g(const BiSeries& F) { return F * xpochhammer(1, 1, -1, F.qorder()); }

}  // namespace a2rr
