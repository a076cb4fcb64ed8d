#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "a2rr/automata.hpp"
#include "a2rr/cylindric.hpp"
#include "a2rr/holonomic.hpp"
#include "a2rr/partitions.hpp"
#include "a2rr/verify.hpp"

using namespace a2rr;

namespace {

struct Globals {
  int qorder = 30;
  int max_size = 10;
  std::string profile = "3,0,0";
  bool seed_free = false;  // accepted for compatibility, nothing here is random
  bool timing = false;
  std::string data = A2RR_DATA_DIR;
  std::string out;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  return Json::parse(in);
}

// writes to --out when given, stdout otherwise
void emit_text(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw StructuralError("cannot write " + g.out);
  f << text;
}

std::string json_text(const Json& j) { return j.dump(1) + "\n"; }

unsigned parse_cond(const std::string& s) {
  std::string u = s;
  std::transform(u.begin(), u.end(), u.begin(), ::toupper);
  if (u == "BIR") return kBIR;
  if (u == "BIRP") return kBIRP;
  unsigned c = 0;
  std::stringstream ss(u);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "D1") c |= D1;
    else if (tok == "D2") c |= D2;
    else if (tok == "D3") c |= D3;
    else if (tok == "D4") c |= D4;
    else throw ConfigError("unknown condition " + tok);
  }
  return c;
}

std::string csv(const BiSeries& s) {
  std::string out = "x_exp,q_exp,coeff\n";
  for (auto& [m, sl] : s.slices())
    for (int k = 0; k < sl.order(); ++k)
      if (sl[k] != 0) out += std::to_string(m) + "," + std::to_string(k) + "," + sl[k].get_str() + "\n";
  return out;
}

std::string csv(const QSeries& s) {
  std::string out = "q_exp,coeff\n";
  for (int k = 0; k < s.order(); ++k)
    if (s[k] != 0) out += std::to_string(k) + "," + s[k].get_str() + "\n";
  return out;
}

BiSeries named_series(const std::string& name, int N) {
  if (name == "bir" || name == "bir-series") return gen_fun_direct(kBIR, N);
  if (name == "birp" || name == "birp-series") return gen_fun_direct(kBIRP, N);
  if (name == "bir-sum") return evaluate_ag_sum(ag_spec_bir(), N);
  if (name == "birp-sum") return evaluate_ag_sum(ag_spec_birp(), N);
  if (name == "g111-sum") return evaluate_ag_sum(ag_spec_g111(), N);
  if (name == "g300-sum") return evaluate_ag_sum(ag_spec_g300(), N);
  if (name == "aux-sum") return evaluate_ag_sum(ag_spec_aux(), N);
  if (name == "bir-product")
    return BiSeries::from_qseries(pochhammer_expand(PochhammerSpec::ratio({2, 4}, {1, 1, 3, 3, 5, 5}, 6), N));
  if (name == "birp-product")
    return BiSeries::from_qseries(pochhammer_expand(PochhammerSpec::ratio({}, {2, 3, 3, 4}, 6), N));
  if (name == "aux-product") return BiSeries::from_qseries(pochhammer_expand(PochhammerSpec::ratio({}, {1, 2}, 3), N));
  throw ConfigError("unknown series " + name);
}

std::string series_text(const BiSeries& s, const std::string& format, bool at_x1) {
  if (format == "csv") return at_x1 ? csv(s.at_x1()) : csv(s);
  if (format == "json") return json_text(at_x1 ? to_json(s.at_x1()) : to_json(s));
  throw ConfigError("unknown format " + format + " for a series");
}

Dfa the_dfa(const Globals& g, const std::string& words) {
  return build_avoidance_dfa(read_word_list(words.empty() ? g.data + "/forbidden_words.txt" : words));
}

std::vector<int> printed_names(const Globals& g, const Dfa& d, Dfa* golden_out = nullptr) {
  Dfa golden = dfa_from_json(read_json(g.data + "/golden/dfa_table.json"));
  auto iso = find_isomorphism(golden, d);
  if (iso.empty()) throw DomainError("automaton is not isomorphic to the printed table");
  if (golden_out) *golden_out = golden;
  return iso;
}

// the automaton with the state numbering of the printed table
Dfa printed_dfa(const Globals& g, const Dfa& d) {
  Dfa golden;
  auto iso = printed_names(g, d, &golden);
  std::vector<int> back(d.size());
  for (int s = 0; s < d.size(); ++s) back[iso[s]] = s;
  Dfa r = d;
  r.start = back[d.start];
  for (int s = 0; s < d.size(); ++s) {
    r.accept[s] = d.accept[iso[s]];
    for (int a = 0; a < kLetters; ++a) r.delta[s][a] = back[d.delta[iso[s]][a]];
  }
  return r;
}

// x, q polynomial in the printed style, "1+2xq+x^2q^3"
std::string compact(const LaurentPoly& p) {
  auto v = p.vars();
  auto terms = p.terms();
  std::size_t ix = 0, iq = 1;
  if (v.size() == 2 && v.names()[0] == "q") std::swap(ix, iq);
  std::sort(terms.begin(), terms.end(), [&](auto& a, auto& b) {
    return std::pair(a.first[ix], a.first[iq]) < std::pair(b.first[ix], b.first[iq]);
  });
  if (terms.empty()) return "0";
  auto power = [](const char* name, int e) {
    if (e == 0) return std::string();
    return std::string(name) + (e == 1 ? "" : "^" + std::to_string(e));
  };
  std::string out;
  for (auto& [m, c] : terms) {
    std::string mono = power("x", m[ix]) + power("q", m[iq]);
    Integer a = abs(c);
    if (!out.empty() || c < 0) out += c < 0 ? "-" : "+";
    if (a != 1 || mono.empty()) out += a.get_str();
    out += mono;
  }
  return out;
}

Json printed_json(const TransferSystem& s) {
  Json j = to_json(s);
  for (std::size_t i = 0; i < s.M.size(); ++i)
    for (std::size_t k = 0; k < s.M[i].size(); ++k) j["matrix"][i][k] = compact(s.M[i][k]);
  return j;
}

// the transfer system in the state names and order of the printed matrix
TransferSystem printed_order_system(const Globals& g, const Dfa& d) {
  Dfa golden;
  auto iso = printed_names(g, d, &golden);
  TransferSystem sys = derive_transfer_system(d);
  std::vector<int> order, names;
  for (int s = 0; s < golden.size(); ++s)
    if (!golden.accept[s]) {
      order.push_back(iso[s]);
      names.push_back(s);
    }
  TransferSystem r = reorder(sys, order);
  r.states = names;
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

int run_verify(const Globals& g, const std::string& only, bool as_json, const std::string& self) {
  if (g.qorder < 10) throw DomainError("verify-all needs --qorder of at least 10, got " + std::to_string(g.qorder));
  SuiteOptions opt;
  opt.qorder = g.qorder;
  opt.data_dir = g.data;
  opt.cli_path = self;
  for (auto& t : split(only, ',')) opt.only.push_back(std::stoi(t));
  auto reports = run_suite(opt);
  int failed = 0;
  std::string text;
  Json all = Json::array();
  for (auto& r : reports) {
    failed += !r.pass;
    all.push_back(to_json(r, g.timing));
    text += "criterion " + r.id + ": " + (r.pass ? "pass" : "FAIL") + "  " + r.title + "\n";
    for (auto& w : r.witnesses) text += "  witness: " + w + "\n";
    for (auto& n : r.notes) text += "  note: " + n + "\n";
    if (g.timing) text += "  seconds: " + std::to_string(r.seconds) + "\n";
  }
  emit_text(g, as_json ? json_text(all) : text);
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of two-colored partition identities"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--qorder", g.qorder, "truncation order in q")->check(CLI::NonNegativeNumber);
  app.add_option("--max-size", g.max_size, "largest partition size")->check(CLI::NonNegativeNumber);
  app.add_option("--profile", g.profile, "cylindric profile, comma separated");
  app.add_flag("--seed-free", g.seed_free, "no effect; every computation is deterministic");
  app.add_flag("--timing", g.timing, "include wall time in reports");
  app.add_option("--data", g.data, "data directory");
  app.add_option("--out", g.out, "output file");

  std::string cond = "BIR", format, target, words, term_file, cert_file, source, system_file, only, stat = "G",
              xmode = "keep";
  bool as_json = false, count_only = false, by_enumeration = false;
  int order = 1, deg = 2, component = 0, unit = 3;
  std::vector<int> kdeg, kshift;

  auto* enumerate = app.add_subcommand("enumerate", "list 2-colored partitions as JSON lines");
  enumerate->add_option("--cond", cond, "BIR, BIRP or a list such as D1,D2");
  enumerate->add_flag("--count", count_only, "counts by size only");

  auto* series = app.add_subcommand("series", "generating functions, sums and products");
  series->add_option("--cond", cond, "bir, birp, bir-sum, birp-sum, g111-sum, g300-sum, aux-sum, *-product");
  series->add_option("--format", format, "csv (default) or json");
  series->add_option("--x", xmode, "eval or keep")->default_val("keep");

  auto* dfa = app.add_subcommand("dfa", "minimal automaton avoiding the forbidden words");
  dfa->add_option("--words", words, "word list file");
  dfa->add_option("--format", format, "json (default) or dot");

  auto* system = app.add_subcommand("system", "transfer matrix of the automaton");
  system->add_option("--words", words, "word list file");

  auto* cyl = app.add_subcommand("cylindric", "cylindric partition series");
  cyl->add_option("--stat", stat, "F or G")->default_val("G");
  cyl->add_option("--x", xmode, "eval or keep")->default_val("keep");
  cyl->add_flag("--enumerate", by_enumeration, "by enumeration instead of the recursion");
  cyl->add_flag("--json", as_json, "json instead of csv");

  auto* certify = app.add_subcommand("certify", "check a certificate");
  certify->add_option("--term", term_file, "term JSON");
  certify->add_option("--cert", cert_file, "certificate JSON");
  certify->add_option("--source", source, "certificate text file");

  auto* celine = app.add_subcommand("celine", "search for a certificate");
  celine->add_option("--term", term_file, "term JSON");
  celine->add_option("--source", source, "certificate text file, its support is reused");
  celine->add_option("--order", order, "order of the recurrence");
  celine->add_option("--deg", deg, "degree in q^n");
  celine->add_option("--kdeg", kdeg, "degree in each q^k");
  celine->add_option("--kshift", kshift, "largest shift in each summation variable");

  auto* uncouple = app.add_subcommand("uncouple", "scalar equation from a first order system");
  uncouple->add_option("--system", system_file, "matrix JSON")->required();
  uncouple->add_option("--component", component, "component index");
  uncouple->add_option("--unit", unit, "shift unit")->default_val(3);

  auto* verify = app.add_subcommand("verify-all", "run every acceptance check");
  verify->add_option("--only", only, "criterion numbers, comma separated");
  verify->add_flag("--json", as_json, "reports as JSON");

  auto* emit = app.add_subcommand("emit", "write a series or table");
  emit->add_option("--target", target, "bir-series, birp-series, dfa, transfer-matrix, ...")->required();
  emit->add_option("--format", format, "json, csv or dot")->required();

  // global flags may also follow the subcommand
  for (auto* s : app.get_subcommands({})) s->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    if (format.empty()) format = *dfa ? "json" : "csv";
    if (*enumerate) {
      unsigned c = parse_cond(cond);
      if (count_only) {
        std::vector<long> counts(g.max_size + 1, 0);
        for_each_2colored(g.max_size, c, [&](const std::vector<ColoredPart>& v) {
          counts[TwoColoredPartition(v).size()]++;
        });
        std::string text = "size,count\n";
        for (int n = 0; n <= g.max_size; ++n) text += std::to_string(n) + "," + std::to_string(counts[n]) + "\n";
        emit_text(g, text);
      } else {
        std::string text;
        for (auto& p : enumerate_2colored(g.max_size, c)) text += to_json(p).dump() + "\n";
        emit_text(g, text);
      }
    } else if (*series) {
      std::string name = cond;
      std::transform(name.begin(), name.end(), name.begin(), ::tolower);
      emit_text(g, series_text(named_series(name, g.qorder), format, xmode == "eval"));
    } else if (*dfa) {
      Dfa d = the_dfa(g, words);
      if (words.empty()) d = printed_dfa(g, d);
      if (format == "dot") emit_text(g, to_dot(d));
      else if (format == "json") emit_text(g, json_text(to_json(d)));
      else throw ConfigError("unknown format " + format + " for an automaton");
    } else if (*system) {
      Dfa d = the_dfa(g, words);
      emit_text(g, json_text(printed_json(words.empty() ? printed_order_system(g, d) : derive_transfer_system(d))));
    } else if (*cyl) {
      Profile p = parse_profile(g.profile);
      BiSeries s = by_enumeration ? enumerate_cylindric(p, g.qorder - 1) : cw_fixed_point(p, g.qorder);
      if (stat == "F" && !by_enumeration) s = g_to_f(s);
      else if (stat == "G" && by_enumeration) s = f_to_g(s);
      else if (stat != "F" && stat != "G") throw ConfigError("unknown statistic " + stat);
      emit_text(g, series_text(s, as_json ? "json" : "csv", xmode == "eval"));
    } else if (*certify) {
      Json out;
      if (!source.empty()) {
        auto src = load_certificate_source(source);
        auto rep = check_certificate_source(src);
        out["name"] = src.name;
        out["verbatim"] = rep.verbatim_ok;
        if (!rep.verbatim_error.empty()) out["verbatim_error"] = rep.verbatim_error;
        out["emended"] = rep.emended_ok;
        if (!rep.emended_error.empty()) out["emended_error"] = rep.emended_error;
        if (rep.regenerated) {
          out["regenerated"] = to_json(*rep.regenerated);
          out["p_differences"] = rep.p_differences;
        }
        out["ok"] = rep.ok() || rep.regenerated.has_value();
      } else {
        if (term_file.empty() || cert_file.empty()) throw ConfigError("certify needs --term and --cert, or --source");
        HypTerm t = hypterm_from_json(read_json(term_file));
        auto r = verify_certificate(t, certificate_from_json(read_json(cert_file), t));
        out["ok"] = r.ok;
        if (!r.ok) out["residual"] = r.residual.to_string();
      }
      emit_text(g, json_text(out));
      return out["ok"].get<bool>() ? 0 : 1;
    } else if (*celine) {
      HypTerm t;
      CelineBounds b;
      if (!source.empty()) {
        auto src = load_certificate_source(source);
        t = src.term(true);
        b.support = src.certificate(true);
      } else {
        if (term_file.empty()) throw ConfigError("celine needs --term or --source");
        t = hypterm_from_json(read_json(term_file));
        b.order = order;
        b.udeg = deg;
        b.kdeg = kdeg.empty() ? std::vector<int>(t.dim() - 1, deg) : kdeg;
        b.kshift = kshift.empty() ? std::vector<int>(t.dim() - 1, 1) : kshift;
      }
      auto c = celine_solve(t, b);
      Json out;
      out["found"] = c.has_value();
      if (c) out["certificate"] = to_json(*c);
      emit_text(g, json_text(out));
      return c ? 0 : 1;
    } else if (*uncouple) {
      auto A = poly_matrix_from_json(read_json(system_file), VarList{"x", "q"});
      auto op = uncouple_system(A, static_cast<std::size_t>(component), unit);
      Json out;
      out["operator"] = to_json(op);
      out["text"] = op.to_string();
      emit_text(g, json_text(out));
    } else if (*verify) {
      return run_verify(g, only, as_json, argv[0]);
    } else if (*emit) {
      if (target == "dfa") {
        Dfa d = printed_dfa(g, the_dfa(g, ""));
        if (format == "dot") emit_text(g, to_dot(d));
        else if (format == "json") emit_text(g, json_text(to_json(d)));
        else throw ConfigError("unknown format " + format + " for an automaton");
      } else if (target == "transfer-matrix") {
        if (format != "json") throw ConfigError("the transfer matrix is emitted as json only");
        emit_text(g, json_text(printed_json(printed_order_system(g, the_dfa(g, "")))));
      } else {
        emit_text(g, series_text(named_series(target, g.qorder), format, false));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
