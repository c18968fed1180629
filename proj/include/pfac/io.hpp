#pragma once

#include <string>

#include "json.hpp"
#include "pfac/cl2cm.hpp"
#include "pfac/pcp.hpp"
#include "pfac/pfa.hpp"
#include "pfac/tm2mpcp.hpp"

namespace pfac {

using Json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings; plain integers are accepted on input.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const RatVector& v);
RatVector vector_from_json(const Json& j);
Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

// {alphabet, matrices: {symbol: rows}, pi, out, cutpoint, mode[, states]}
Json to_json(const Pfa& p);
Pfa pfa_from_json(const Json& j);

// {variant, pairs: [[v, w], ...]}; words are 0/1 strings, or symbol lists for SymPcp.
Json to_json(const PcpInstance& inst);
PcpInstance pcp_from_json(const Json& j);
Json to_json(const SymPcp& inst);
SymPcp sym_pcp_from_json(const Json& j);
Json to_json(const PcpSolution& sol);

// {states, alphabet, blank, start, head, rules: [{q, s, write, move, next} | {q, s, halt: true}]}
Json to_json(const TuringMachine& tm);
TuringMachine tm_from_json(const Json& j);

// {states, start, halt, rules: [{state, lz, rz, dl, dr, next}]}
Json to_json(const TwoCounterMachine& m);
TwoCounterMachine cm_from_json(const Json& j);

Json to_json(const PrefixCode& code);
PrefixCode code_from_json(const Json& j);

Json read_json_file(const std::string& path);
// Two-space indentation and a trailing newline, so reruns are byte-identical.
void write_json_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

}  // namespace pfac
