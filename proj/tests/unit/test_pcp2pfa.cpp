#include <random>

#include "doctest.h"
#include "pfac/binaut.hpp"
#include "pfac/pcp2pfa.hpp"
#include "support.hpp"

using namespace pfac;

namespace {

// 0.v_{a_m} ... v_{a_1} for the PFA word a (0-based symbols).
Rational value_of(const PcpInstance& inst, const Word& a, bool top) {
  std::string s;
  for (auto it = a.rbegin(); it != a.rend(); ++it) s += top ? inst.pairs[*it].first : inst.pairs[*it].second;
  return bin_fraction(s);
}

Rational weak_closed_form(const PcpInstance& inst, const Word& a) {
  if (a.empty()) return 0;
  const Rational d = value_of(inst, a, true) - value_of(inst, a, false);
  return Rational(1, 2) - d * d / 4;
}

// PFA words of the solutions are the reversed index sequences.
bool is_solution_word(const PcpInstance& inst, const Word& a) {
  if (a.empty()) return false;
  PcpSolution s;
  for (auto it = a.rbegin(); it != a.rend(); ++it) s.push_back(*it + 1);
  return check_solution(inst, s);
}

}  // namespace

TEST_CASE("phi and psi automata") {
  PcpInstance same{Variant::plain, {{"1", "1"}}};
  auto [p, q] = phi_psi_automata(same);
  for_each_word(p, 5, [&](const Word& w, const Rational& x) { CHECK(accept_prob(q, w) == x); });
  PcpInstance ex{Variant::plain, {{"00110", "1"}}};
  CHECK(accept_prob(phi_psi_automata(ex).first, Word{0}) == support::q("6/32"));
  std::mt19937_64 rng(51);
  PcpInstance c = classic_instance();
  auto [phi, psi] = phi_psi_automata(c);
  for (int i = 0; i < 50; ++i) {
    Word a = support::random_index_word(rng, 3, 8);
    CHECK(accept_prob(phi, a) == value_of(c, a, true));
    CHECK(accept_prob(psi, a) == value_of(c, a, false));
  }
}

TEST_CASE("weak equality automata on the classic instance") {
  PcpInstance c = antizero(classic_instance());
  Pfa p13 = equality_pfa_13(c), p11 = equality_pfa_11(c);
  CHECK(p13.dim() == 13);
  CHECK(p11.dim() == 11);
  std::size_t acc13 = 0, acc11 = 0;
  for (std::size_t i = 0; i < 13; ++i) acc13 += p13.out[i] == 1;
  for (std::size_t i = 0; i < 11; ++i) acc11 += p11.out[i] == 1;
  CHECK(acc13 == 7);
  CHECK(acc11 == 5);
  CHECK(accept_prob(p13, Word{0, 2, 1, 2}) == Rational(1, 2));
  std::size_t hits = 0;
  for_each_word(p13, 6, [&](const Word& w, const Rational& x) {
    CHECK(x == weak_closed_form(c, w));
    CHECK(accept_prob(p11, w) == x);
    CHECK((x == Rational(1, 2)) == is_solution_word(c, w));
    hits += x == Rational(1, 2);
  });
  CHECK(hits == 1);
}

TEST_CASE("strict gadget separates solutions") {
  PcpInstance c = antizero(classic_instance());
  Pfa s15 = strict_15(c), s13 = strict_13(c), weak = equality_pfa_13(c);
  CHECK(s15.dim() == 15);
  CHECK(s13.dim() == 13);
  const Rational g = unit_gamma(c);
  CHECK(accept_prob(s15, Word{}) == Rational(1, 8));
  for_each_word(s15, 5, [&](const Word& w, const Rational& x) {
    if (!w.empty()) {
      const Rational y = weak_closed_form(c, w);
      CHECK(x == y / 2 + rpow(g, w.size()) / 8);
    }
    CHECK((x > Rational(1, 4)) == (accept_prob(weak, w) == Rational(1, 2)));
    CHECK(accept_prob(s13, w) == x);
  });
  CHECK_THROWS_AS(strict_gadget(weak, {Rational(1, 3), std::nullopt, Rational(1, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(strict_gadget(weak, {g, std::nullopt, Rational(1, 2)}), std::invalid_argument);
}

TEST_CASE("equality trick identity on random rationals") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 200; ++i) {
    const Rational f = support::random_rational(rng), g = support::random_rational(rng);
    CHECK(f * g / 2 + (1 - f * f) / 4 + (1 - g * g) / 4 == Rational(1, 2) - (f - g) * (f - g) / 4);
  }
}

TEST_CASE("nine-state automaton") {
  RatVector f = fhat9();
  CHECK(f[4] == Rational(5, 8));
  CHECK(f == RatVector{Rational(1, 2), Rational(1, 2), Rational(1, 4), Rational(1, 2), Rational(5, 8), Rational(1, 2),
                       Rational(1, 4), Rational(1, 2), Rational(1, 2)});
  PcpInstance c = antizero(classic_instance());
  Pfa n9 = nine_state_pfa(c), p13 = equality_pfa_13(c);
  for_each_word(n9, 5, [&](const Word& w, const Rational& x) {
    if (!w.empty()) CHECK(x == accept_prob(p13, w));
  });
  CHECK(accept_prob(n9, Word{}) == Rational(1, 2));  // pi^T fhat, see the empty-word caveat
  // positive when no codeword is constant
  PcpInstance pos{Variant::plain, {{"01", "10"}, {"0011", "011"}}};
  for (const auto& m : nine_state_pfa(pos).matrices) CHECK(is_positive(m));
}

TEST_CASE("output vector elimination") {
  PcpInstance c = antizero(classic_instance());
  Pfa n9 = nine_state_pfa(c);
  Pfa e18 = eliminate_output_vector(n9);
  CHECK(e18.dim() == 18);
  for_each_word(n9, 5, [&](const Word& w, const Rational& x) { CHECK(accept_prob(e18, w) == x); });
  for (std::size_t s = 0; s < n9.matrices.size(); ++s) {
    // denominators grow by at most 8
    CHECK(common_denominator(e18.matrices[s]) <= 8 * common_denominator(n9.matrices[s]));
  }
  Pfa ones = n9;
  ones.out = RatVector::ones(9);
  Pfa e = eliminate_output_vector(ones);
  for (const auto& m : e.matrices)
    for (std::size_t i = 0; i < 18; ++i)
      for (std::size_t j = 9; j < 18; ++j) CHECK(m(i, j) == 0);
}

TEST_CASE("M_inf identity and closure") {
  RatVector f = fhat11();
  CHECK(m_infinity(f, 9, 10).col(9) == f);
  PcpInstance two{Variant::twormpcp, {{"01", "1"}, {"", "0"}, {"0", "0"}, {"1", "11"}}};
  Pfa m = minf_11(two);
  CHECK(m.dim() == 11);
  CHECK(m.alphabet.back() == "2");
  std::size_t found = 0;
  for_each_word(m, 4, [&](const Word& w, const Rational& x) {
    // the word is the solution after pair 1, which sits in pi
    PcpSolution s{1};
    for (auto a : w) s.push_back(static_cast<std::size_t>(std::stoul(m.alphabet[a])));
    bool solves = false;
    try {
      solves = check_solution(two, s);
    } catch (const std::invalid_argument&) {
    }
    CHECK((x > Rational(1, 4)) == solves);
    if (!solves) return;
    ++found;
    CHECK(w.back() == m.alphabet.size() - 1);
    Word twice = w;
    twice.push_back(m.alphabet.size() - 1);
    CHECK(accept_prob(m, twice) <= x / 8);
  });
  CHECK(found > 0);
}

TEST_CASE("block coding over two letters") {
  CHECK(binary_codewords(3) == std::vector<std::string>{"b", "ab", "aa"});
  std::mt19937_64 rng(53);
  Pfa p = support::random_pfa(rng, 2, 3);
  Pfa c = code_binary(p);
  CHECK(c.dim() == 4);
  // block cycle: M'_a moves block 0 to block 1 by the identity and block 1 back by M_3
  CHECK(submatrix(c.matrices[0], 0, 2, 2, 2) == RatMatrix::identity(2));
  CHECK(submatrix(c.matrices[0], 2, 0, 2, 2) == p.matrices[2]);
  CHECK(submatrix(c.matrices[1], 0, 0, 2, 2) == p.matrices[0]);
  CHECK(submatrix(c.matrices[1], 2, 0, 2, 2) == p.matrices[1]);
  CHECK(accept_prob(c, std::vector<std::string>{"b", "b", "a"}) == 0);
  CHECK_THROWS_AS(code_binary(support::random_pfa(rng, 2, 2)), std::invalid_argument);
}

TEST_CASE("starting distribution") {
  const Rational g1 = pow2(-6);
  RatVector pi = starting_distribution("1", "1", pow2(-2));
  CHECK(pi.dim() == 12);
  CHECK(pi[0] == Rational(1, 16));
  std::mt19937_64 rng(54);
  for (int i = 0; i < 20; ++i) {
    auto v = support::random_word(rng, 0, 5) + "1", w = support::random_word(rng, 0, 5) + "1";
    const Rational x = bin_fraction(v), y = bin_fraction(w);
    RatVector p = starting_distribution(v, w, g1);
    CHECK(p.sum() == 1);
    RatVector expect{(1 - x) * (1 - y) / 4, (1 - x) * y / 4, x * (1 - y) / 4, x * y / 4,
                     (1 - x) * (1 - x) / 8, (1 - x) * x / 4, x * x / 8, (1 - y) * (1 - y) / 8,
                     (1 - y) * y / 4, y * y / 8, g1 / 8, Rational(1, 2) - g1 / 8};
    CHECK(p == expect);
  }
  CHECK(starting_distribution("101", "111", pow2(-6))[10] == Rational(1, 512));
}

TEST_CASE("reversed MPCP compilation") {
  PcpInstance r{Variant::rmpcp, {{"01", "1"}, {"", "0"}, {"1", "1"}}};
  Pfa p = rmpcp_compile(r);
  CHECK(p.dim() == 12);
  CHECK(p.alphabet.size() == 2);
  CHECK(p.pi == starting_distribution("01", "1", pow2(-4)));
  CHECK_FALSE(all_solutions(r, 4).empty());
  PcpInstance bad = r;
  bad.variant = Variant::plain;
  CHECK_THROWS_AS(rmpcp_compile(bad), std::invalid_argument);
  // solutions 1 a_2 ... a_m are words a_2 ... a_m here
  for_each_word(p, 4, [&](const Word& w, const Rational& x) {
    PcpSolution s{1};
    for (auto a : w) s.push_back(a + 2);
    CHECK((x > Rational(1, 4)) == check_solution(r, s));
  });
}
