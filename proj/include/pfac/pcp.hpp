#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pfac {

// mpcp: first pair fixed. rmpcp: first pair fixed, concatenation read right to left.
// twompcp: first and last pair fixed (pairs 1 and 2), neither used elsewhere.
enum class Variant { plain, mpcp, rmpcp, twompcp, twormpcp };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);
bool is_reversed(Variant v);

template <class W>
struct BasicPcp {
  Variant variant = Variant::plain;
  std::vector<std::pair<W, W>> pairs;
  std::size_t size() const { return pairs.size(); }
};

using SymWord = std::vector<std::string>;
using PcpInstance = BasicPcp<std::string>;  // words over single characters, usually 0/1
using SymPcp = BasicPcp<SymWord>;
using PcpSolution = std::vector<std::size_t>;  // 1-based pair indices

using PrefixCode = std::map<std::string, std::string>;

// Throws std::invalid_argument when the index sequence violates the variant.
template <class W>
void check_variant(const BasicPcp<W>& inst, const PcpSolution& sol) {
  const std::size_t k = inst.size();
  if (sol.empty()) throw std::invalid_argument("empty index sequence");
  for (auto a : sol)
    if (a < 1 || a > k) throw std::invalid_argument("pair index out of range");
  switch (inst.variant) {
    case Variant::plain: break;
    case Variant::mpcp:
    case Variant::rmpcp:
      if (sol[0] != 1) throw std::invalid_argument("sequence must start with pair 1");
      for (std::size_t i = 1; i < sol.size(); ++i)
        if (sol[i] == 1) throw std::invalid_argument("pair 1 may only be used first");
      break;
    case Variant::twompcp:
    case Variant::twormpcp:
      if (sol.size() < 2 || sol.front() != 1 || sol.back() != 2)
        throw std::invalid_argument("sequence must start with pair 1 and end with pair 2");
      for (std::size_t i = 1; i + 1 < sol.size(); ++i)
        if (sol[i] == 1 || sol[i] == 2) throw std::invalid_argument("pairs 1 and 2 may only be used at the ends");
      break;
  }
}

template <class W>
std::pair<W, W> concatenate(const BasicPcp<W>& inst, const PcpSolution& sol) {
  W top, bottom;
  auto add = [&](std::size_t a) {
    const auto& [v, w] = inst.pairs.at(a - 1);
    top.insert(top.end(), v.begin(), v.end());
    bottom.insert(bottom.end(), w.begin(), w.end());
  };
  if (is_reversed(inst.variant))
    for (auto it = sol.rbegin(); it != sol.rend(); ++it) add(*it);
  else
    for (auto a : sol) add(a);
  return {top, bottom};
}

template <class W>
bool check_solution(const BasicPcp<W>& inst, const PcpSolution& sol) {
  check_variant(inst, sol);
  auto [top, bottom] = concatenate(inst, sol);
  return top == bottom;
}

template <class W>
W reversed(const W& w) {
  return W(w.rbegin(), w.rend());
}

// Reverses every word at the symbol level; the variant is left alone.
template <class W>
BasicPcp<W> reverse_words(const BasicPcp<W>& inst) {
  BasicPcp<W> r = inst;
  for (auto& [v, w] : r.pairs) {
    v = reversed(v);
    w = reversed(w);
  }
  return r;
}

namespace detail {

template <class W>
struct Node {
  PcpSolution seq;
  W rest;        // unmatched suffix of the longer side
  bool top_ahead;
};

template <class W>
bool is_prefix(const W& a, const W& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

template <class W>
std::optional<Node<W>> extend(const Node<W>& n, const std::pair<W, W>& p, std::size_t idx) {
  const W& ahead_add = n.top_ahead ? p.first : p.second;
  const W& behind_add = n.top_ahead ? p.second : p.first;
  W s = n.rest;
  s.insert(s.end(), ahead_add.begin(), ahead_add.end());
  Node<W> m;
  m.seq = n.seq;
  m.seq.push_back(idx);
  if (is_prefix(behind_add, s)) {
    m.rest = W(s.begin() + behind_add.size(), s.end());
    m.top_ahead = n.top_ahead;
  } else if (is_prefix(s, behind_add)) {
    m.rest = W(behind_add.begin() + s.size(), behind_add.end());
    m.top_ahead = !n.top_ahead;
  } else {
    return std::nullopt;
  }
  return m;
}

}  // namespace detail

// All solutions of length <= max_len, shortest first and lexicographic within a length.
template <class W>
std::vector<PcpSolution> all_solutions(const BasicPcp<W>& input, std::size_t max_len, std::size_t limit = 0) {
  const BasicPcp<W> inst = is_reversed(input.variant) ? reverse_words(input) : input;
  const std::size_t k = inst.size();
  const bool fixed_start = inst.variant != Variant::plain;
  const bool two = inst.variant == Variant::twompcp || inst.variant == Variant::twormpcp;
  std::vector<PcpSolution> sols;
  std::vector<detail::Node<W>> level;
  detail::Node<W> root{{}, W{}, true};
  for (std::size_t a = 1; a <= k; ++a) {
    if (fixed_start && a != 1) continue;
    if (auto n = detail::extend(root, inst.pairs[a - 1], a)) level.push_back(*n);
  }
  for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
    std::vector<detail::Node<W>> next;
    for (const auto& n : level) {
      const bool finished = two ? n.seq.back() == 2 && n.seq.size() >= 2 : n.rest.empty();
      if (finished) {
        sols.push_back(n.seq);
        if (limit && sols.size() >= limit) return sols;
        if (two) continue;
      }
      if (len == max_len) continue;
      for (std::size_t a = 1; a <= k; ++a) {
        if (fixed_start && a == 1) continue;
        auto m = detail::extend(n, inst.pairs[a - 1], a);
        if (!m) continue;
        if (two && a == 2 && !m->rest.empty()) continue;
        next.push_back(std::move(*m));
      }
    }
    level = std::move(next);
  }
  return sols;
}

template <class W>
std::optional<PcpSolution> brute_solve(const BasicPcp<W>& inst, std::size_t max_len) {
  if (max_len < 1) throw std::invalid_argument("brute_solve: max_len must be >= 1");
  auto s = all_solutions(inst, max_len, 1);
  if (s.empty()) return std::nullopt;
  return s.front();
}

// Interleaves a 1 after every letter so trailing zeros cannot hide a difference.
PcpInstance antizero(const PcpInstance& inst);

bool uniquely_decodable(const PrefixCode& code);
void validate_code(const PrefixCode& code);
std::string encode(const SymWord& w, const PrefixCode& code);
PcpInstance binarize(const SymPcp& inst, const PrefixCode& code);
std::optional<SymWord> decode(const std::string& bits, const PrefixCode& code);

// Checks the "ends with 1" side condition on pairs 1 (and 2 for the doubly fixed variants).
void require_end_with_one(const PcpInstance& inst);

// (0,100), (01,00), (110,11); solution 3,2,3,1.
PcpInstance classic_instance();

}  // namespace pfac
