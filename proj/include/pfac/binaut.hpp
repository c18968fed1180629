#pragma once

#include <string>

#include "pfac/exact.hpp"

namespace pfac {

// Binary words are plain strings over '0'/'1'.
void require_binary(const std::string& u);

Integer bin_value(const std::string& u);      // (u)_2
Rational bin_fraction(const std::string& u);  // 0.u = (u)_2 / 2^|u|

// B(u)B(u') = B(u'u).  B("") is the identity.
RatMatrix B(const std::string& u);

// States q0, accept sink, reject sink.
RatMatrix fijalkow_automaton(const std::string& u);

// 3x3 matrix of two indistinguishable copies of a 2-state chain:
// states {both 0}, {one of each}, {both 1}.
RatMatrix merged3(const RatMatrix& p);

}  // namespace pfac
