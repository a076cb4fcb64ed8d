#include "a2rr/automata.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace a2rr {

const std::array<std::vector<ColoredPart>, kLetters>& letter_blocks() {
  static const std::array<std::vector<ColoredPart>, kLetters> blocks = {{
      {},                 // a
      {P(1)},             // b
      {Pb(1)},            // c
      {P(2)},             // d
      {Pb(2)},            // e
      {P(3)},             // f
      {Pb(3)},            // g
      {P(2), Pb(1)},      // h
      {Pb(2), P(1)},      // i
      {P(3), P(1)},       // j
      {P(3), Pb(1)},      // k
      {Pb(3), Pb(1)},     // l
      {P(3), Pb(3)},      // m
  }};
  return blocks;
}

int letter_index(char c) {
  if (c < 'a' || c > 'm') throw StructuralError(std::string("not a letter of the alphabet: ") + c);
  return c - 'a';
}

Word parse_word(std::string_view s) {
  Word w;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) w.push_back(letter_index(c));
  return w;
}

std::string word_string(const Word& w) {
  std::string s;
  for (int x : w) s += letter_char(x);
  return s;
}

Word encode(const TwoColoredPartition& p) {
  std::map<int, std::vector<ColoredPart>> blocks;
  for (auto& x : p.parts()) {
    int k = (x.magnitude + 2) / 3;
    blocks[k].push_back({x.magnitude - 3 * (k - 1), x.color});
  }
  Word w;
  if (blocks.empty()) return w;
  int last = blocks.rbegin()->first;
  w.assign(last, 0);
  const auto& lb = letter_blocks();
  for (auto& [k, content] : blocks) {
    auto it = std::find(lb.begin(), lb.end(), content);
    if (it == lb.end())
      throw NotEncodable("block " + std::to_string(k) + " of " + p.to_string() +
                         " is not the image of a letter");
    w[k - 1] = static_cast<int>(it - lb.begin());
  }
  return w;
}

TwoColoredPartition decode(const Word& w) {
  std::vector<ColoredPart> parts;
  for (std::size_t k = 0; k < w.size(); ++k)
    for (auto& x : letter_blocks()[w[k]])
      parts.push_back({x.magnitude + 3 * static_cast<int>(k), x.color});
  std::sort(parts.begin(), parts.end(), [](auto& a, auto& b) { return b < a; });
  return TwoColoredPartition(std::move(parts));
}

int Dfa::run(int from, const Word& w) const {
  int s = from;
  for (int c : w) s = delta[s][c];
  return s;
}

Dfa factor_automaton(const std::vector<Word>& J) {
  if (J.empty()) throw StructuralError("empty forbidden word set");
  Dfa d;
  std::vector<std::array<int, kLetters>> trie(1);
  trie[0].fill(-1);
  std::vector<bool> out(1, false);
  for (auto& w : J) {
    if (w.empty()) throw StructuralError("empty forbidden word");
    int s = 0;
    for (int c : w) {
      if (trie[s][c] < 0) {
        trie[s][c] = static_cast<int>(trie.size());
        trie.emplace_back();
        trie.back().fill(-1);
        out.push_back(false);
      }
      s = trie[s][c];
    }
    out[s] = true;
  }
  // failure links, breadth first
  std::vector<int> fail(trie.size(), 0);
  d.delta.assign(trie.size(), {});
  std::deque<int> queue;
  for (int c = 0; c < kLetters; ++c) {
    int t = trie[0][c];
    if (t >= 0) {
      fail[t] = 0;
      d.delta[0][c] = t;
      queue.push_back(t);
    } else {
      d.delta[0][c] = 0;
    }
  }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    out[s] = out[s] || out[fail[s]];
    for (int c = 0; c < kLetters; ++c) {
      int t = trie[s][c];
      if (t >= 0) {
        fail[t] = d.delta[fail[s]][c];
        d.delta[s][c] = t;
        queue.push_back(t);
      } else {
        d.delta[s][c] = d.delta[fail[s]][c];
      }
    }
  }
  // once a factor has been seen the word stays accepted
  d.accept = out;
  for (std::size_t s = 0; s < trie.size(); ++s)
    if (out[s]) d.delta[s].fill(static_cast<int>(s));
  d.start = 0;
  return d;
}

Dfa minimize(const Dfa& in) {
  // reachable states
  std::vector<int> idx(in.size(), -1), order;
  std::deque<int> queue{in.start};
  idx[in.start] = 0;
  order.push_back(in.start);
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int c = 0; c < kLetters; ++c) {
      int t = in.delta[s][c];
      if (idx[t] < 0) {
        idx[t] = static_cast<int>(order.size());
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }
  int n = static_cast<int>(order.size());
  std::vector<std::array<int, kLetters>> delta(n);
  std::vector<bool> acc(n);
  for (int i = 0; i < n; ++i) {
    acc[i] = in.accept[order[i]];
    for (int c = 0; c < kLetters; ++c) delta[i][c] = idx[in.delta[order[i]][c]];
  }
  std::vector<std::vector<std::vector<int>>> inv(kLetters, std::vector<std::vector<int>>(n));
  for (int s = 0; s < n; ++s)
    for (int c = 0; c < kLetters; ++c) inv[c][delta[s][c]].push_back(s);

  // Hopcroft partition refinement
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(n);
  {
    std::vector<int> f, nf;
    for (int s = 0; s < n; ++s) (acc[s] ? f : nf).push_back(s);
    for (auto* b : {&nf, &f})
      if (!b->empty()) {
        for (int s : *b) block_of[s] = static_cast<int>(blocks.size());
        blocks.push_back(*b);
      }
  }
  std::set<int> work;
  for (std::size_t b = 0; b < blocks.size(); ++b) work.insert(static_cast<int>(b));
  while (!work.empty()) {
    int a = *work.begin();
    work.erase(work.begin());
    std::vector<int> splitter = blocks[a];
    for (int c = 0; c < kLetters; ++c) {
      std::map<int, std::vector<int>> hit;  // block -> members with move into splitter
      for (int t : splitter)
        for (int s : inv[c][t]) hit[block_of[s]].push_back(s);
      for (auto& [b, xs] : hit) {
        if (xs.size() == blocks[b].size()) continue;
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        if (xs.size() == blocks[b].size()) continue;
        std::vector<int> rest;
        std::set_difference(blocks[b].begin(), blocks[b].end(), xs.begin(), xs.end(),
                            std::back_inserter(rest));
        int nb = static_cast<int>(blocks.size());
        blocks[b] = rest;
        blocks.push_back(xs);
        for (int s : xs) block_of[s] = nb;
        if (work.count(b)) work.insert(nb);
        else work.insert(blocks[b].size() <= blocks[nb].size() ? b : nb);
      }
    }
    for (auto& b : blocks) std::sort(b.begin(), b.end());
  }
  Dfa out;
  int m = static_cast<int>(blocks.size());
  out.delta.resize(m);
  out.accept.resize(m);
  for (int b = 0; b < m; ++b) {
    int r = blocks[b].front();
    out.accept[b] = acc[r];
    for (int c = 0; c < kLetters; ++c) out.delta[b][c] = block_of[delta[r][c]];
  }
  out.start = block_of[0];
  return canonical_form(out);
}

Dfa canonical_form(const Dfa& d) {
  std::vector<int> idx(d.size(), -1), order{d.start};
  idx[d.start] = 0;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (int c = 0; c < kLetters; ++c) {
      int t = d.delta[order[h]][c];
      if (idx[t] < 0) {
        idx[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  Dfa out;
  int n = static_cast<int>(order.size());
  out.delta.resize(n);
  out.accept.resize(n);
  for (int i = 0; i < n; ++i) {
    out.accept[i] = d.accept[order[i]];
    for (int c = 0; c < kLetters; ++c) out.delta[i][c] = idx[d.delta[order[i]][c]];
  }
  out.start = 0;
  return out;
}

std::vector<int> find_isomorphism(const Dfa& a, const Dfa& b) {
  std::vector<int> map(a.size(), -1), back(b.size(), -1);
  std::deque<std::pair<int, int>> queue{{a.start, b.start}};
  map[a.start] = b.start;
  back[b.start] = a.start;
  while (!queue.empty()) {
    auto [s, t] = queue.front();
    queue.pop_front();
    if (a.accept[s] != b.accept[t]) return {};
    for (int c = 0; c < kLetters; ++c) {
      int s2 = a.delta[s][c], t2 = b.delta[t][c];
      if (map[s2] < 0 && back[t2] < 0) {
        map[s2] = t2;
        back[t2] = s2;
        queue.emplace_back(s2, t2);
      } else if (map[s2] != t2 || back[t2] != s2) {
        return {};
      }
    }
  }
  return map;
}

Dfa build_avoidance_dfa(const std::vector<Word>& J) { return minimize(factor_automaton(J)); }

Json to_json(const Dfa& d, const std::string& prefix) {
  auto name = [&](int s) { return prefix + std::to_string(s); };
  Json j;
  Json states = Json::array(), accepts = Json::array();
  for (int s = 0; s < d.size(); ++s) {
    states.push_back(name(s));
    if (d.accept[s]) accepts.push_back(name(s));
  }
  j["states"] = states;
  j["start"] = name(d.start);
  j["accepts"] = accepts;
  Json delta = Json::object();
  for (int s = 0; s < d.size(); ++s) {
    Json row = Json::object();
    for (int c = 0; c < kLetters; ++c) row[std::string(1, letter_char(c))] = name(d.delta[s][c]);
    delta[name(s)] = row;
  }
  j["delta"] = delta;
  return j;
}

Dfa dfa_from_json(const Json& j) {
  std::map<std::string, int> id;
  for (auto& s : j.at("states")) {
    auto nm = s.get<std::string>();
    int k = static_cast<int>(id.size());
    id.emplace(nm, k);
  }
  auto lookup = [&](const std::string& s) {
    auto it = id.find(s);
    if (it == id.end()) throw StructuralError("unknown state " + s);
    return it->second;
  };
  Dfa d;
  int n = static_cast<int>(id.size());
  d.delta.resize(n);
  d.accept.assign(n, false);
  d.start = lookup(j.at("start").get<std::string>());
  for (auto& s : j.at("accepts")) d.accept[lookup(s.get<std::string>())] = true;
  for (auto& [s, row] : j.at("delta").items()) {
    int u = lookup(s);
    if (row.size() != static_cast<std::size_t>(kLetters))
      throw StructuralError("transition row must cover all 13 letters");
    for (auto& [c, t] : row.items()) {
      if (c.size() != 1) throw StructuralError("bad letter " + c);
      d.delta[u][letter_index(c[0])] = lookup(t.get<std::string>());
    }
  }
  return d;
}

std::string to_dot(const Dfa& d, const std::string& prefix) {
  std::ostringstream os;
  os << "digraph dfa {\n  rankdir=LR;\n";
  for (int s = 0; s < d.size(); ++s)
    os << "  " << prefix << s << " [shape=" << (d.accept[s] ? "doublecircle" : "circle")
       << "];\n";
  os << "  start [shape=point];\n  start -> " << prefix << d.start << ";\n";
  for (int s = 0; s < d.size(); ++s) {
    std::map<int, std::string> labels;
    for (int c = 0; c < kLetters; ++c) {
      auto& l = labels[d.delta[s][c]];
      if (!l.empty()) l += ",";
      l += letter_char(c);
    }
    for (auto& [t, l] : labels)
      os << "  " << prefix << s << " -> " << prefix << t << " [label=\"" << l << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<Word> read_word_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  std::vector<Word> out;
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string w;
    while (ls >> w) out.push_back(parse_word(w));
  }
  return out;
}

VarList xq_vars() {
  static const VarList v{"q", "x"};
  return v;
}

TransferSystem derive_transfer_system(const Dfa& d) {
  TransferSystem sys;
  sys.vars = xq_vars();
  if (d.accept[d.start]) return sys;
  for (int s = 0; s < d.size(); ++s)
    if (!d.accept[s]) sys.states.push_back(s);
  std::map<int, int> pos;
  for (std::size_t i = 0; i < sys.states.size(); ++i) pos[sys.states[i]] = static_cast<int>(i);
  std::size_t n = sys.states.size();
  sys.M.assign(n, std::vector<LaurentPoly>(n, LaurentPoly(sys.vars)));
  for (std::size_t i = 0; i < n; ++i) {
    int u = sys.states[i];
    for (int c = 0; c < kLetters; ++c) {
      int v = d.delta[u][c];
      if (d.accept[v]) continue;
      int len = 0, size = 0;
      for (auto& x : letter_blocks()[c]) {
        ++len;
        size += x.magnitude;
      }
      Monomial m;
      m[0] = size;
      m[1] = len;
      sys.M[i][pos[v]] += LaurentPoly::monomial(sys.vars, m);
    }
  }
  return sys;
}

TransferSystem reorder(const TransferSystem& s, const std::vector<int>& order) {
  std::vector<int> idx;
  for (int st : order) {
    auto it = std::find(s.states.begin(), s.states.end(), st);
    if (it == s.states.end()) throw StructuralError("state not in system");
    idx.push_back(static_cast<int>(it - s.states.begin()));
  }
  TransferSystem r;
  r.vars = s.vars;
  r.shift = s.shift;
  r.states = order;
  r.M.assign(order.size(), std::vector<LaurentPoly>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j) r.M[i][j] = s.M[idx[i]][idx[j]];
  return r;
}

std::vector<BiSeries> language_series_all(const TransferSystem& sys, int N) {
  if (N < 1) throw DomainError("order must be positive");
  std::size_t n = sys.states.size();
  std::vector<std::vector<BiSeries>> W(n, std::vector<BiSeries>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      W[i][j] = BiSeries::from_poly(sys.M[i][j], N);
      // a letter of weight q^0 other than the empty block would stall the iteration
      for (auto& [m, s] : W[i][j].slices())
        if (m > 0 && s[0] != 0) throw DomainError("transfer weight without positive q power");
    }
  std::vector<BiSeries> F(n, BiSeries::one(N));
  for (int iter = 0;; ++iter) {
    std::vector<BiSeries> G(n, BiSeries(N));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!W[i][j].is_zero()) G[i] += W[i][j] * F[j].xshift(sys.shift);
    if (G == F) break;
    F = std::move(G);
    if (iter > 4 * N + 16) throw DomainError("transfer system iteration did not converge");
  }
  return F;
}

BiSeries language_series(const TransferSystem& sys, int state, int N) {
  auto it = std::find(sys.states.begin(), sys.states.end(), state);
  if (it == sys.states.end()) throw StructuralError("state is accepting or unknown");
  return language_series_all(sys, N)[it - sys.states.begin()];
}

Json to_json(const TransferSystem& s, const std::string& prefix) {
  Json j;
  Json st = Json::array();
  for (int x : s.states) st.push_back(prefix + std::to_string(x));
  j["states"] = st;
  j["shift"] = s.shift;
  Json rows = Json::array();
  for (auto& row : s.M) {
    Json r = Json::array();
    for (auto& p : row) r.push_back(p.to_string());
    rows.push_back(r);
  }
  j["matrix"] = rows;
  return j;
}

}  // namespace a2rr
