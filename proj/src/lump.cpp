#include "pfac/lump.hpp"

#include <map>
#include <stdexcept>

namespace pfac {

Pfa restrict_reachable(const Pfa& p, std::vector<std::size_t>* kept) {
  const std::size_t d = p.dim();
  std::vector<bool> seen(d, false);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < d; ++i)
    if (p.pi[i] != 0) {
      seen[i] = true;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (const auto& m : p.matrices)
      for (std::size_t j = 0; j < d; ++j)
        if (m(i, j) != 0 && !seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
  }
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < d; ++i)
    if (seen[i]) idx.push_back(i);
  Pfa r;
  r.alphabet = p.alphabet;
  r.cutpoint = p.cutpoint;
  r.mode = p.mode;
  r.pi = RatVector(idx.size());
  r.out = RatVector(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    r.pi[a] = p.pi[idx[a]];
    r.out[a] = p.out[idx[a]];
    if (!p.state_names.empty()) r.state_names.push_back(p.state_names[idx[a]]);
  }
  for (const auto& m : p.matrices) {
    RatMatrix n(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) n(a, b) = m(idx[a], idx[b]);
    r.matrices.push_back(n);
  }
  if (kept) *kept = idx;
  return r;
}

Pfa lump(const Pfa& p, const std::vector<int>& labels, std::vector<std::size_t>* block_of) {
  const std::size_t d = p.dim();
  if (labels.size() != d) throw std::invalid_argument("lump: one label per state required");
  std::vector<std::size_t> block(d);
  {
    std::map<std::pair<int, std::string>, std::size_t> ids;
    for (std::size_t i = 0; i < d; ++i)
      block[i] = ids.emplace(std::make_pair(labels[i], to_string(p.out[i])), ids.size()).first->second;
  }
  std::size_t count = 0;
  for (auto b : block) count = std::max(count, b + 1);
  for (;;) {
    using Signature = std::pair<std::size_t, std::vector<std::vector<std::pair<std::size_t, std::string>>>>;
    std::map<Signature, std::size_t> ids;
    std::vector<std::size_t> next(d);
    for (std::size_t i = 0; i < d; ++i) {
      Signature sig;
      sig.first = block[i];
      for (const auto& m : p.matrices) {
        std::map<std::size_t, Rational> mass;
        for (std::size_t j = 0; j < d; ++j)
          if (m(i, j) != 0) mass[block[j]] += m(i, j);
        std::vector<std::pair<std::size_t, std::string>> row;
        for (const auto& [b, v] : mass)
          if (v != 0) row.emplace_back(b, to_string(v));
        sig.second.push_back(std::move(row));
      }
      next[i] = ids.emplace(std::move(sig), ids.size()).first->second;
    }
    block = next;
    if (ids.size() == count) break;
    count = ids.size();
  }
  std::vector<std::size_t> rep(count, d);
  for (std::size_t i = 0; i < d; ++i)
    if (rep[block[i]] == d) rep[block[i]] = i;
  Pfa r;
  r.alphabet = p.alphabet;
  r.cutpoint = p.cutpoint;
  r.mode = p.mode;
  r.pi = RatVector(count);
  r.out = RatVector(count);
  for (std::size_t i = 0; i < d; ++i) r.pi[block[i]] += p.pi[i];
  for (std::size_t b = 0; b < count; ++b) {
    r.out[b] = p.out[rep[b]];
    if (!p.state_names.empty()) r.state_names.push_back(p.state_names[rep[b]]);
  }
  for (const auto& m : p.matrices) {
    RatMatrix n(count, count);
    for (std::size_t b = 0; b < count; ++b)
      for (std::size_t j = 0; j < d; ++j) n(b, block[j]) += m(rep[b], j);
    r.matrices.push_back(n);
  }
  if (block_of) *block_of = block;
  return r;
}

}  // namespace pfac
