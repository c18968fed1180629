#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pfac/exact.hpp"

namespace pfac {

enum class Mode { strict, weak };

struct Pfa {
  std::vector<std::string> alphabet;
  std::vector<RatMatrix> matrices;  // one per alphabet symbol, same order
  RatVector pi;
  RatVector out;
  Rational cutpoint = 0;
  Mode mode = Mode::strict;
  std::vector<std::string> state_names;  // optional, for reports

  std::size_t dim() const { return pi.dim(); }
  std::size_t symbol(const std::string& name) const;
  void validate() const;  // throws std::invalid_argument
};

using Word = std::vector<std::size_t>;  // symbol indices

Word parse_word(const Pfa& p, const std::vector<std::string>& symbols);
std::vector<std::string> word_names(const Pfa& p, const Word& w);

Rational accept_prob(const Pfa& p, const Word& w);
Rational accept_prob(const Pfa& p, const std::vector<std::string>& w);
bool accepted(const Pfa& p, const Rational& prob);

Pfa product_pfa(const Pfa& p, const Pfa& q);
Pfa complement(const Pfa& p);
Pfa mixture(const std::vector<Rational>& weights, const std::vector<Pfa>& ps);

// New start state 0 whose row for each symbol is pi^T M; nothing re-enters it.
// Its output value is start_out (pi^T out keeps every probability unchanged).
Pfa with_fresh_start(const Pfa& p, std::optional<Rational> start_out = std::nullopt);

struct Want {
  enum Kind { above, at_least, exactly } kind = above;
  Rational value = 0;  // used by exactly only
  static Want above_cutpoint() { return {above, 0}; }
  static Want at_least_cutpoint() { return {at_least, 0}; }
  static Want equal_to(const Rational& v) { return {exactly, v}; }
};

struct Witness {
  Word word;
  Rational probability;
};

struct SearchReport {
  std::optional<Witness> witness;  // shortest, then lexicographically first
  Rational max_seen = 0;
  Word argmax;
  std::size_t words = 0;
};

// Depth-first over the prefix tree, reusing pi^T M_{w1}...M_{wk}; callback gets every word of length <= max_len.
void for_each_word(const Pfa& p, std::size_t max_len, const std::function<void(const Word&, const Rational&)>& fn);
SearchReport bounded_search(const Pfa& p, std::size_t max_len, Want want);

}  // namespace pfac
