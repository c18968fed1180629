#pragma once

#include <vector>

#include "pfac/pfa.hpp"

namespace pfac {

// States reachable from the support of pi; returns the restricted automaton and the kept indices.
Pfa restrict_reachable(const Pfa& p, std::vector<std::size_t>* kept = nullptr);

// Coarsest exact lumping that refines the given labels: states in one block move with equal
// probability into every block under every symbol. Returns the quotient and each state's block.
Pfa lump(const Pfa& p, const std::vector<int>& labels, std::vector<std::size_t>* block_of = nullptr);

}  // namespace pfac
