#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfac/pfa.hpp"

namespace pfac {

inline const std::string kEnd = "end";
inline const std::string kCheck = "check";
inline const std::string kSim = "sim";

// States q0, +, -, top, bot over {sim, check}; start q0, accepting top.
Pfa expanding_automaton(const Rational& x);

// Algorithm F: the base gets a fresh start state s (d' states), then q0, A+ (d'), A- (d'), top, bot.
Pfa amplify_F(const Pfa& a);
// Algorithm NC: q0, A1, A+, A- (d' each), top, bot; an empty round rejects.
Pfa amplify_NC(const Pfa& a);
// Mass in the absorbing states top and bot after reading w.
std::pair<Rational, Rational> decided_mass(const Pfa& b, const std::vector<std::string>& w);

// check ((u end)^n check)^t
std::vector<std::string> rounds_word(const std::vector<std::string>& u, std::size_t n, std::size_t t);
// check (sim^n check)^t
std::vector<std::string> sim_word(std::size_t n, std::size_t t);

// Algorithm GO abstraction: coin thrown once, pi = 1/2 on P and on N; states P, Pf, N, Nf, top, bot over {sim, check}.
Pfa go_automaton(const Rational& x);
// (sim^n check)^t
std::vector<std::string> go_word(std::size_t n, std::size_t t);
// Rejection probabilities given the branch (+) and (-).
std::pair<Rational, Rational> go_reject(const Rational& x, std::size_t n, std::size_t t);

// Bracket [lo, hi] around ln y (y > 1) with hi - lo <= tol.
std::pair<Rational, Rational> ln_bracket(const Rational& y, const Rational& tol);

struct RoundPlan {
  std::size_t n = 0, t = 0;
};
// g = eps / ln(2/eps); smallest n with (1-x)^n/x^n <= g and x^n <= 1/2; t = floor(ln(2/eps) / x^n).
RoundPlan go_input_builder(const Rational& x, const Rational& eps);
// Smallest n with ((1-x)/x)^n <= eps/2, then smallest t with (1 - x^n/2 - (1-x)^n/2)^t <= eps/2.
RoundPlan f_input_builder(const Rational& x, const Rational& eps);

}  // namespace pfac
