#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfac/cl2cm.hpp"
#include "pfac/intmat.hpp"
#include "pfac/io.hpp"
#include "pfac/pcp2pfa.hpp"
#include "pfac/tm2mpcp.hpp"

namespace py = pybind11;
using namespace pfac;

namespace {

std::string compile_pcp(const std::string& construction, const std::string& instance, bool antizero_first) {
  PcpInstance inst = pcp_from_json(Json::parse(instance));
  if (antizero_first) inst = antizero(inst);
  return dump(to_json(pcp_construction(construction, inst)));
}

std::string compile_integer(const std::string& construction, const std::string& instance) {
  PcpInstance inst = pcp_from_json(Json::parse(instance));
  if (construction == "claus9") return dump(to_json(claus9_pipeline(inst)));
  if (construction == "hirvensalo20") return dump(to_json(hirvensalo20_pipeline(inst)));
  throw std::invalid_argument("unknown construction " + construction);
}

std::string accept(const std::string& pfa, const std::vector<std::string>& word) {
  return to_string(accept_prob(pfa_from_json(Json::parse(pfa)), word));
}

std::string search(const std::string& pfa, std::size_t max_len, const std::string& mode, const std::string& value) {
  Pfa p = pfa_from_json(Json::parse(pfa));
  Want want;
  if (mode == "strict")
    want = Want::above_cutpoint();
  else if (mode == "weak")
    want = Want::at_least_cutpoint();
  else if (mode == "exact")
    want = Want::equal_to(parse_rational(value));
  else
    throw std::invalid_argument("mode must be strict, weak or exact");
  SearchReport r = bounded_search(p, max_len, want);
  Json body{{"words", r.words}, {"max_seen", to_json(r.max_seen)}, {"argmax", word_names(p, r.argmax)}};
  body["witness"] = r.witness ? Json{{"word", word_names(p, r.witness->word)},
                                     {"probability", to_json(r.witness->probability)}}
                              : Json();
  return dump(body);
}

std::string solve_pcp(const std::string& instance, std::size_t max_len, bool all) {
  Json sols = Json::array();
  for (const auto& s : all_solutions(pcp_from_json(Json::parse(instance)), max_len, all ? 0 : 1))
    sols.push_back(to_json(s));
  return dump(sols);
}

std::string encode_tm(const std::string& tm, const std::vector<std::string>& input, bool unique) {
  return dump(to_json(tm_to_mpcp(tm_from_json(Json::parse(tm)), input, {unique, false})));
}

std::string checker_outcomes(int G, long i, long j) {
  OutcomeProbs o = outcome_probs(equality_checker_pfa({G, 1}), checker_word(i, j));
  return dump(Json{{"same", to_json(o.same)},
                   {"different", to_json(o.different)},
                   {"undecided", to_json(o.undecided)},
                   {"rejected", to_json(o.rejected)}});
}

}  // namespace

PYBIND11_MODULE(_pfac, m) {
  m.doc() = "Exact reductions to probabilistic finite automata; JSON strings in and out.";
  py::register_exception<std::invalid_argument>(m, "InvalidInput", PyExc_ValueError);
  m.def("compile_pcp", &compile_pcp, py::arg("construction"), py::arg("instance"), py::arg("antizero") = false);
  m.def("compile_integer", &compile_integer, py::arg("construction"), py::arg("instance"));
  m.def("accept_prob", &accept, py::arg("pfa"), py::arg("word"));
  m.def("search", &search, py::arg("pfa"), py::arg("max_len"), py::arg("mode") = "strict", py::arg("value") = "0");
  m.def("solve_pcp", &solve_pcp, py::arg("instance"), py::arg("max_len"), py::arg("all") = false);
  m.def("encode_tm", &encode_tm, py::arg("tm"), py::arg("input"), py::arg("unique") = false);
  m.def("checker_outcomes", &checker_outcomes, py::arg("G"), py::arg("i"), py::arg("j"));
}
