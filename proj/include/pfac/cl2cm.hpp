#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pfac/pfa.hpp"

namespace pfac {

struct CmAction {
  int dl = 0, dr = 0;  // -1, 0 or +1
  std::string next;
};

// Transition keyed by (state, l == 0, r == 0).
struct TwoCounterMachine {
  std::vector<std::string> states;
  std::string start, halt;
  std::map<std::tuple<std::string, bool, bool>, CmAction> rules;

  void validate() const;  // throws std::invalid_argument
};

struct CmStep {
  long l = 0, r = 0;
  std::string q;
};

// Configurations after 0..steps steps; stops early at the halting state or a missing rule.
std::vector<CmStep> run_cm(const TwoCounterMachine& m, std::size_t steps);
// 0^{l_0} 1^{r_0} q_0 ... 0^{l_k} 1^{r_k} q_k #
std::vector<std::string> encode_computation(const std::vector<CmStep>& run);
std::vector<std::string> encode_computation(const TwoCounterMachine& m, std::size_t steps);
// Format, rule following (with the written counters), l_0 = r_0 = 0, start and halting state.
// Counter consistency is not checked.
std::optional<std::vector<CmStep>> formal_check(const TwoCounterMachine& m, const std::vector<std::string>& word);

struct CheckerParams {
  int G = 12;
  int K = 10;
  void validate() const;
};

enum class Outcome { same = 0, different = 1, undecided = 2, rejected = 3 };

struct EqualityChecker {
  Pfa pfa;                       // alphabet {a, b, #}; out marks Same
  std::vector<Outcome> classes;  // per state; reading states count as Rejected
  std::size_t naive_states = 0;  // 2^5 G + 4
  std::size_t reachable_states = 0;
};

struct OutcomeProbs {
  Rational same, different, undecided, rejected;
};

// lumped = false keeps all reachable states.
EqualityChecker equality_checker_pfa(const CheckerParams& params, bool lumped = true);
OutcomeProbs outcome_probs(const EqualityChecker& ec, const std::vector<std::string>& word);
std::vector<std::string> checker_word(long i, long j);  // a^i b^j #

// Each a or b is followed by three z symbols and every symbol flips at most one coin.
EqualityChecker unit_coin_checker(const CheckerParams& params);
std::vector<std::string> pad_word(const std::vector<std::string>& word);

struct RoundProbs {
  Rational correct, incorrect, null;
};

// Checker k compares block i + delta + 1 with block i+1 + 1 for both counters; a word failing the formal
// checks gives null = 1 (rejected). Without any checker the round is CORRECT.
RoundProbs correctness_test_probs(const TwoCounterMachine& m, const std::vector<std::string>& word,
                                  const CheckerParams& params);
// Pairs (i', j') that the checkers of a parsed computation compare.
std::vector<std::pair<long, long>> checker_pairs(const TwoCounterMachine& m, const std::vector<CmStep>& run);

// Accept when a CORRECT round comes before K INCORRECT ones within t rounds.
Rational aggregate_accept_prob(const RoundProbs& round, std::size_t t, int K);
// Limit t -> infinity: 1 - (p_I / (p_C + p_I))^K (0 when no round is decisive).
Rational aggregate_limit(const RoundProbs& round, int K);
// Rational lower bound on the acceptance after t rounds: limit - 1/(1 + p_C t).
Rational aggregate_lower_bound(const RoundProbs& round, const Integer& t, int K);

// Equality test by coins on a^i b^j #: 1/4 red unlucky, 1/4 orange unlucky, 1/2 blue lucky;
// accepts with 1/2 - 1/4 (2^-i - 2^-j)^2.
Pfa coin_equality_pfa();

// Majority of n independent copies, n odd.
Rational majority_vote(const Rational& p, std::size_t n);

}  // namespace pfac
