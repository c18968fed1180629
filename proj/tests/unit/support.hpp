#pragma once

#include <random>
#include <string>

#include "pfac/pfa.hpp"

namespace support {

using pfac::Rational;

// Canonical rational from "n/d".
inline Rational q(const char* s) { return pfac::parse_rational(s); }

inline Rational random_rational(std::mt19937_64& rng, long max_den = 1000) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(0, d);
  Rational q(num(rng), d);
  q.canonicalize();
  return q;
}

inline std::string random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len,
                               const std::string& letters = "01") {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len), pick(0, letters.size() - 1);
  std::string u(len(rng), letters[0]);
  for (auto& c : u) c = letters[pick(rng)];
  return u;
}

// Row-stochastic with denominators up to 8.
inline pfac::RatMatrix random_stochastic(std::mt19937_64& rng, std::size_t n) {
  pfac::RatMatrix m(n, n);
  std::uniform_int_distribution<std::size_t> col(0, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (int k = 0; k < 8; ++k) m(i, col(rng)) += Rational(1, 8);
  return m;
}

inline pfac::RatVector random_distribution(std::mt19937_64& rng, std::size_t n) {
  return random_stochastic(rng, n).row(0);
}

inline pfac::Pfa random_pfa(std::mt19937_64& rng, std::size_t n, std::size_t symbols) {
  pfac::Pfa p;
  for (std::size_t s = 0; s < symbols; ++s) {
    p.alphabet.push_back(std::string(1, static_cast<char>('a' + s)));
    p.matrices.push_back(random_stochastic(rng, n));
  }
  p.pi = random_distribution(rng, n);
  p.out = pfac::RatVector(n);
  for (std::size_t i = 0; i < n; ++i) p.out[i] = random_rational(rng, 8);
  p.cutpoint = Rational(1, 2);
  return p;
}

inline pfac::Word random_index_word(std::mt19937_64& rng, std::size_t symbols, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, symbols - 1);
  pfac::Word w(len(rng));
  for (auto& s : w) s = pick(rng);
  return w;
}

}  // namespace support
