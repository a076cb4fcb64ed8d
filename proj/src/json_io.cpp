#include "a2rr/json_io.hpp"

namespace a2rr {

Json to_json(const LaurentPoly& p) {
  Json j;
  j["vars"] = p.vars().names();
  Json terms = Json::array();
  // descending grlex, the order a reader expects
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json e = Json::array();
    for (std::size_t i = 0; i < p.vars().size(); ++i) e.push_back(it->first[i]);
    terms.push_back(Json::array({e, it->second.get_str()}));
  }
  j["terms"] = terms;
  return j;
}

LaurentPoly poly_from_json(const Json& j) {
  VarList vars(j.at("vars").get<std::vector<std::string>>());
  std::vector<LaurentPoly::Term> terms;
  for (auto& t : j.at("terms")) {
    auto& e = t.at(0);
    if (e.size() != vars.size()) throw StructuralError("exponent vector length mismatch");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = e[i].get<std::int32_t>();
    terms.emplace_back(m, Integer(t.at(1).get<std::string>()));
  }
  return LaurentPoly::from_terms(vars, std::move(terms));
}

Json to_json(const QSeries& s) {
  Json j;
  j["order"] = s.order();
  Json c = Json::array();
  for (auto& x : s.coeffs()) c.push_back(x.get_str());
  j["coeffs"] = c;
  return j;
}

QSeries qseries_from_json(const Json& j) {
  int n = j.at("order").get<int>();
  std::vector<Integer> c;
  for (auto& x : j.at("coeffs")) c.emplace_back(x.get<std::string>());
  if (static_cast<int>(c.size()) != n) throw StructuralError("coeffs length != order");
  return QSeries(n, std::move(c));
}

Json to_json(const BiSeries& s) {
  Json j;
  j["qorder"] = s.qorder();
  Json sl = Json::object();
  for (auto& [m, q] : s.slices()) sl[std::to_string(m)] = to_json(q);
  j["slices"] = sl;
  return j;
}

BiSeries biseries_from_json(const Json& j) {
  BiSeries b(j.at("qorder").get<int>());
  for (auto& [k, v] : j.at("slices").items()) b.set_slice(std::stoi(k), qseries_from_json(v));
  return b;
}

}  // namespace a2rr
