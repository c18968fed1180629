#pragma once

#include <map>
#include <string>

#include "pfac/exact.hpp"
#include "pfac/tm2mpcp.hpp"

namespace pfac {

// Printed example matrices, transcribed block by block.
// Keys: copy_blank, erase_blank_sep, left_rule (12x12) and erase_sep_blank_11 (11x11).
std::map<std::string, RatMatrix> golden_matrices();

// Tape {_, b}, states q0..q14, one left rule (q9,_,_,L,q1); its default code is the one the examples use.
TuringMachine example_machine();

// The same four matrices computed from the code of example_machine().
std::map<std::string, RatMatrix> regenerate_golden();

}  // namespace pfac
