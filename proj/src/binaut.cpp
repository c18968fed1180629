#include "pfac/binaut.hpp"

#include <cassert>
#include <stdexcept>

namespace pfac {

void require_binary(const std::string& u) {
  for (char c : u)
    if (c != '0' && c != '1') throw std::invalid_argument("not a binary word: '" + u + "'");
}

Integer bin_value(const std::string& u) {
  require_binary(u);
  if (u.empty()) return 0;
  return Integer(u, 2);
}

Rational bin_fraction(const std::string& u) {
  return Rational(bin_value(u)) / pow2(static_cast<long>(u.size()));
}

RatMatrix B(const std::string& u) {
  if (u.empty()) return RatMatrix::identity(2);
  Rational x = bin_fraction(u);
  Rational y = x + pow2(-static_cast<long>(u.size()));
  return RatMatrix{{1 - x, x}, {1 - y, y}};
}

RatMatrix fijalkow_automaton(const std::string& u) {
  if (u.empty()) throw std::invalid_argument("fijalkow_automaton: empty word");
  Rational stay = pow2(-static_cast<long>(u.size()));
  Rational acc = bin_fraction(u);
  Rational rej = 1 - acc - stay;
  assert(rej >= 0);
  return RatMatrix{{stay, acc, rej}, {0, 1, 0}, {0, 0, 1}};
}

RatMatrix merged3(const RatMatrix& p) {
  if (p.rows() != 2 || p.cols() != 2) throw std::invalid_argument("merged3: 2x2 matrix expected");
  const Rational &a = p(0, 0), &b = p(0, 1), &c = p(1, 0), &d = p(1, 1);
  return RatMatrix{{a * a, 2 * a * b, b * b}, {a * c, b * c + a * d, b * d}, {c * c, 2 * c * d, d * d}};
}

}  // namespace pfac
