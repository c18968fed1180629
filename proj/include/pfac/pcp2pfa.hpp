#pragma once

#include <optional>
#include <string>
#include <utility>

#include "pfac/pcp.hpp"
#include "pfac/pfa.hpp"

namespace pfac {

struct GadgetParams {
  Rational gamma;                  // common unit of the box transitions
  std::optional<Rational> gamma1;  // used on the first transition only; defaults to gamma
  Rational cutpoint{1, 4};
};

// 4^{-max |v_i|,|w_i|} over pairs first..k (1-based).
Rational unit_gamma(const PcpInstance& inst, std::size_t first = 1);

// Alphabet "1".."k"; matrices B(v_i) resp. B(w_i); start Phi0, accept Phi1.
std::pair<Pfa, Pfa> phi_psi_automata(const PcpInstance& inst);

// Two indistinguishable copies of a 2-state automaton, merged to 3 states (0, 1 or 2 copies in state 1).
Pfa merged_square(const Pfa& p);

// 1/2 phi psi + 1/4 (1-phi^2) + 1/4 (1-psi^2) behind a fresh start state; empty word gives 0.
Pfa equality_pfa_13(const PcpInstance& inst);
Pfa equality_pfa_11(const PcpInstance& inst);

// p must carry its own start state at index 0 that is never re-entered.
Pfa strict_gadget(const Pfa& p, const GadgetParams& params);
Pfa strict_15(const PcpInstance& inst);
Pfa strict_13(const PcpInstance& inst);

// Building blocks shared with the machine pipelines.
RatMatrix box12(const std::string& v, const std::string& w, const Rational& gamma);
RatMatrix nine(const std::string& v, const std::string& w);
RatMatrix eleven(const std::string& v, const std::string& w, const Rational& gamma);
RatVector fhat9();
RatVector fhat11();

// Distribution after the first pair, 12 states in box order then q_A, q_R.
RatVector starting_distribution(const std::string& v1, const std::string& w1, const Rational& gamma1);

// rmpcp instance; pair 1 is folded into pi and removed from the alphabet.
Pfa rmpcp_compile(const PcpInstance& inst, std::optional<Rational> gamma = std::nullopt,
                  std::optional<Rational> gamma1 = std::nullopt);

// 9 states, out = fhat9, weak cutpoint 1/2, pi = e_1.
Pfa nine_state_pfa(const PcpInstance& inst);

// 2d states q+ then q-; out becomes 0-1.
Pfa eliminate_output_vector(const Pfa& p);

// Matrix sending each state q to q_A with probability f_q and to q_R otherwise.
RatMatrix m_infinity(const RatVector& f, std::size_t qa, std::size_t qr);
// Replaces the matrix of `finish` by M_finish * M_inf (or appends symbol "inf" when finish is empty);
// out becomes e_{q_A}, cutpoint 1/4 strict.
Pfa m_infinity_closure(const Pfa& p, std::size_t qa, std::size_t qr, const std::string& finish);

// twormpcp instance: pi from pair 1, matrices eleven(v_i, w_i) for pairs 3..k, and symbol "2" carrying
// eleven(v_2, w_2) M_inf; out e_{q_A}, cutpoint 1/4 strict. Units are 16^-max.
Pfa minf_11(const PcpInstance& inst);

// Binary alphabet {a,b}; symbol i (0-based) is coded a^i b, the last one a^{k-1}.
std::vector<std::string> binary_codewords(std::size_t k);
Pfa code_binary(const Pfa& p);

// By name: eq13, eq11, strict15, strict13, rmpcp12, nine9, out18, minf11, bin2.
Pfa pcp_construction(const std::string& name, const PcpInstance& inst);

}  // namespace pfac
