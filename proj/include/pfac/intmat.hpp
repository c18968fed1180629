#pragma once

#include <string>
#include <vector>

#include "pfac/pcp.hpp"
#include "pfac/pfa.hpp"

namespace pfac {

// (u)_3 for u over the digits 1 and 2.
Integer tern_value(const std::string& u);

// Forward law A(v1,w1)A(v2,w2) = A(v1v2,w1w2); e_1^T A f = 1 - ((v)_3-(w)_3)^2 with f = claus_f(false).
RatMatrix claus_A(const std::string& v, const std::string& w);
// (1,0,0,-1,-1,-1); the weak variant (0,0,0,-1,-1,-1) gives -((v)_3-(w)_3)^2.
RatVector claus_f(bool weak = false);

// Reversed law A~(v1,w1)A~(v2,w2) = A~(v2v1,w2w1); last row is a unit row.
RatMatrix hirvensalo_A(const std::string& v, const std::string& w);
RatVector hirvensalo_pi();   // (-2,-2,-2,0,0,1)
RatVector hirvensalo_eta();  // e_6

// D = [[B, Bf],[0,0]]: one new final state.
std::vector<RatMatrix> extend_final(const std::vector<RatMatrix>& bs, const RatVector& f);
// New start state and new final state: [[0, pi^T M, pi^T M f],[0, M, M f],[0,0,0]].
std::vector<RatMatrix> extend_start_final(const std::vector<RatMatrix>& ms, const RatVector& pi, const RatVector& f);
// Two more states so that every row and column sums to zero.
std::vector<RatMatrix> zero_sums(const std::vector<RatMatrix>& ds);
// Largest power of 1/2 with J + alpha E > 0 for every E.
Rational turakainen_alpha(const std::vector<RatMatrix>& es);
std::vector<RatMatrix> turakainen(const std::vector<RatMatrix>& es, const Rational& alpha);

struct ClausOptions {
  bool merge_last = false;  // the last pair is an ending pair used nowhere else; fold it into f
  bool weak = false;        // f = (0,0,0,-1,-1,-1), cutpoint reached with equality
};

struct IntegerStages {
  std::vector<RatMatrix> integer;  // B_i or C_i
  RatVector pi, f;                 // boundary vectors of the integer automaton
  std::vector<RatMatrix> coded;    // two-symbol block matrices (binary route only)
  RatVector coded_pi, coded_f;
  std::vector<RatMatrix> extended;  // D_i
  std::vector<RatMatrix> padded;    // E_i
  Rational alpha;
};

// Plain PCP over {1,2}: e_1, e_7, cutpoint 1/9 with 9 states.
Pfa claus9_pipeline(const PcpInstance& inst, const ClausOptions& opts = {}, IntegerStages* stages = nullptr);

struct HirvensaloOptions {
  bool start_in_middle = false;  // the start pair may also occur inside a solution
};

// 2MPCP over {1,2}; input a_{m-1}...a_2 coded over {a,b}; cutpoint 1/dim, dim = (n-1)*5+1+4.
Pfa hirvensalo20_pipeline(const PcpInstance& inst, const HirvensaloOptions& opts = {},
                          IntegerStages* stages = nullptr);

// Value of the integer automaton pi^T M_{w1}...M_{wk} f.
Rational integer_value(const RatVector& pi, const std::vector<RatMatrix>& ms, const Word& w, const RatVector& f);

// Codeword concatenation a^{i}b (i < n-1) or a^{n-1} for each 0-based symbol.
Word code_word(const Word& w, std::size_t n);
// Index sequence of the 2MPCP spelled by a two-symbol word; a trailing partial codeword is dropped.
PcpSolution hirvensalo_decode(const Word& w, std::size_t pairs, const HirvensaloOptions& opts = {});

}  // namespace pfac
