#include "pfac/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pfac {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a \"num/den\" string or an integer");
}

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v.entries()) a.push_back(to_json(x));
  return a;
}

RatVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  std::vector<Rational> xs;
  for (const auto& x : j) xs.push_back(rational_from_json(x));
  return RatVector(std::move(xs));
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  const std::size_t r = j.size(), c = j[0].size();
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) throw std::invalid_argument("matrix rows differ in length");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const Pfa& p) {
  Json j;
  j["alphabet"] = p.alphabet;
  Json ms = Json::object();
  for (std::size_t s = 0; s < p.alphabet.size(); ++s) ms[p.alphabet[s]] = to_json(p.matrices[s]);
  j["matrices"] = ms;
  j["pi"] = to_json(p.pi);
  j["out"] = to_json(p.out);
  j["cutpoint"] = to_json(p.cutpoint);
  j["mode"] = p.mode == Mode::strict ? "strict" : "weak";
  if (!p.state_names.empty()) j["states"] = p.state_names;
  return j;
}

Pfa pfa_from_json(const Json& j) {
  Pfa p;
  p.alphabet = j.at("alphabet").get<std::vector<std::string>>();
  for (const auto& s : p.alphabet) p.matrices.push_back(matrix_from_json(j.at("matrices").at(s)));
  p.pi = vector_from_json(j.at("pi"));
  p.out = vector_from_json(j.at("out"));
  p.cutpoint = rational_from_json(j.at("cutpoint"));
  const std::string mode = j.value("mode", "strict");
  if (mode != "strict" && mode != "weak") throw std::invalid_argument("mode must be strict or weak");
  p.mode = mode == "strict" ? Mode::strict : Mode::weak;
  if (j.contains("states")) p.state_names = j["states"].get<std::vector<std::string>>();
  p.validate();
  return p;
}

Json to_json(const PcpInstance& inst) {
  Json pairs = Json::array();
  for (const auto& [v, w] : inst.pairs) pairs.push_back({v, w});
  return {{"variant", variant_name(inst.variant)}, {"pairs", pairs}};
}

PcpInstance pcp_from_json(const Json& j) {
  PcpInstance inst;
  inst.variant = parse_variant(j.value("variant", "plain"));
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("pair must be [v, w]");
    inst.pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  if (inst.pairs.empty()) throw std::invalid_argument("instance has no pairs");
  return inst;
}

Json to_json(const SymPcp& inst) {
  Json pairs = Json::array();
  // explicit arrays: a brace list of two-element string lists would become an object
  for (const auto& [v, w] : inst.pairs) pairs.push_back(Json::array({Json(v), Json(w)}));
  return {{"variant", variant_name(inst.variant)}, {"pairs", pairs}};
}

SymPcp sym_pcp_from_json(const Json& j) {
  SymPcp inst;
  inst.variant = parse_variant(j.value("variant", "plain"));
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("pair must be [v, w]");
    inst.pairs.emplace_back(p[0].get<SymWord>(), p[1].get<SymWord>());
  }
  return inst;
}

Json to_json(const PcpSolution& sol) { return Json(std::vector<std::size_t>(sol.begin(), sol.end())); }

Json to_json(const TuringMachine& tm) {
  Json rules = Json::array();
  for (const auto& r : tm.rules) {
    if (r.halt)
      rules.push_back({{"q", r.q}, {"s", r.s}, {"halt", true}});
    else
      rules.push_back({{"q", r.q}, {"s", r.s}, {"write", r.write}, {"move", r.move == Move::left ? "L" : "R"},
                       {"next", r.next}});
  }
  return {{"states", tm.states},  {"alphabet", tm.alphabet},
          {"blank", tm.blank},    {"start", tm.start},
          {"head", tm.head == HeadStart::left ? "left" : "right"}, {"rules", rules}};
}

TuringMachine tm_from_json(const Json& j) {
  TuringMachine tm;
  tm.states = j.at("states").get<std::vector<std::string>>();
  tm.alphabet = j.at("alphabet").get<std::vector<std::string>>();
  tm.blank = j.at("blank").get<std::string>();
  tm.start = j.at("start").get<std::string>();
  const std::string head = j.value("head", "left");
  if (head != "left" && head != "right") throw std::invalid_argument("head must be left or right");
  tm.head = head == "left" ? HeadStart::left : HeadStart::right;
  for (const auto& r : j.at("rules")) {
    TmRule rule;
    rule.q = r.at("q").get<std::string>();
    rule.s = r.at("s").get<std::string>();
    rule.halt = r.value("halt", false);
    if (!rule.halt) {
      rule.write = r.at("write").get<std::string>();
      const std::string m = r.at("move").get<std::string>();
      if (m != "L" && m != "R") throw std::invalid_argument("move must be L or R");
      rule.move = m == "L" ? Move::left : Move::right;
      rule.next = r.at("next").get<std::string>();
    }
    tm.rules.push_back(rule);
  }
  tm.validate();
  return tm;
}

Json to_json(const TwoCounterMachine& m) {
  Json rules = Json::array();
  for (const auto& [key, a] : m.rules) {
    const auto& [q, lz, rz] = key;
    rules.push_back({{"state", q}, {"lz", lz}, {"rz", rz}, {"dl", a.dl}, {"dr", a.dr}, {"next", a.next}});
  }
  return {{"states", m.states}, {"start", m.start}, {"halt", m.halt}, {"rules", rules}};
}

TwoCounterMachine cm_from_json(const Json& j) {
  TwoCounterMachine m;
  m.states = j.at("states").get<std::vector<std::string>>();
  m.start = j.at("start").get<std::string>();
  m.halt = j.at("halt").get<std::string>();
  for (const auto& r : j.at("rules")) {
    auto key = std::make_tuple(r.at("state").get<std::string>(), r.at("lz").get<bool>(), r.at("rz").get<bool>());
    if (m.rules.count(key)) throw std::invalid_argument("duplicate 2CM rule");
    m.rules[key] = {r.value("dl", 0), r.value("dr", 0), r.at("next").get<std::string>()};
  }
  m.validate();
  return m;
}

Json to_json(const PrefixCode& code) {
  Json j = Json::object();
  for (const auto& [s, bits] : code) j[s] = bits;
  return j;
}

PrefixCode code_from_json(const Json& j) {
  PrefixCode code;
  for (auto it = j.begin(); it != j.end(); ++it) code[it.key()] = it.value().get<std::string>();
  validate_code(code);
  return code;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump(j);
}

}  // namespace pfac
