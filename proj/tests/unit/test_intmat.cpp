#include <random>

#include "doctest.h"
#include "pfac/intmat.hpp"
#include "support.hpp"

using namespace pfac;

namespace {

long tern(const std::string& u) {
  long r = 0;
  for (char c : u) r = 3 * r + (c - '0');
  return r;
}

std::string random_tern(std::mt19937_64& rng, std::size_t max_len) { return support::random_word(rng, 0, max_len, "12"); }

// D = (v)_3 - (w)_3 of the pairs spelled by sol.
long pair_difference(const PcpInstance& inst, const PcpSolution& sol) {
  auto [v, w] = concatenate(inst, sol);
  return tern(v) - tern(w);
}

RatMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> e(-5, 5);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
  return m;
}

PcpSolution as_solution(const Word& w) {
  PcpSolution s;
  for (auto a : w) s.push_back(a + 1);
  return s;
}

}  // namespace

TEST_CASE("forward and reversed laws") {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 200; ++k) {
    const std::string v1 = random_tern(rng, 4), w1 = random_tern(rng, 4), v2 = random_tern(rng, 4),
                      w2 = random_tern(rng, 4);
    CHECK(claus_A(v1, w1) * claus_A(v2, w2) == claus_A(v1 + v2, w1 + w2));
    CHECK(hirvensalo_A(v1, w1) * hirvensalo_A(v2, w2) == hirvensalo_A(v2 + v1, w2 + w1));
  }
}

TEST_CASE("boundary vectors give the squared difference") {
  std::mt19937_64 rng(72);
  for (int k = 0; k < 200; ++k) {
    const std::string v = random_tern(rng, 6), w = random_tern(rng, 6);
    const long d = tern(v) - tern(w);
    const RatVector e0 = RatVector::unit(6, 0);
    CHECK(dot(e0 * claus_A(v, w), claus_f()) == 1 - d * d);
    CHECK(dot(e0 * claus_A(v, w), claus_f(true)) == -d * d);
    const Rational h = dot(hirvensalo_pi() * hirvensalo_A(v, w), hirvensalo_eta());
    CHECK(h == 1 - 2 * d * d);
    CHECK(h != 0);
  }
}

TEST_CASE("unit last row of the reversed matrices") {
  RatMatrix a = hirvensalo_A("121", "2");
  for (std::size_t j = 0; j < 6; ++j) CHECK(a(5, j) == (j == 5 ? 1 : 0));
}

TEST_CASE("new final state carries the value") {
  std::mt19937_64 rng(73);
  std::vector<RatMatrix> bs;
  for (int i = 0; i < 3; ++i) bs.push_back(random_int_matrix(rng, 4));
  RatVector f{1, -2, 0, 3};
  auto ds = extend_final(bs, f);
  const RatVector pi = RatVector::unit(4, 0);
  for (int k = 0; k < 50; ++k) {
    Word w = support::random_index_word(rng, 3, 5);
    std::vector<RatMatrix> chain;
    for (auto a : w) chain.push_back(ds[a]);
    const Rational last = chain_product(chain, 5)(0, 4);
    // the empty product reaches no final state
    CHECK(last == (w.empty() ? Rational(0) : integer_value(pi, bs, w, f)));
  }
}

TEST_CASE("start and final extension") {
  std::mt19937_64 rng(74);
  std::vector<RatMatrix> ms{random_int_matrix(rng, 3), random_int_matrix(rng, 3)};
  RatVector pi{1, 2, -1}, f{0, 1, 1};
  auto ds = extend_start_final(ms, pi, f);
  for (int k = 0; k < 50; ++k) {
    Word w = support::random_index_word(rng, 2, 5);
    if (w.empty()) continue;
    std::vector<RatMatrix> chain;
    for (auto a : w) chain.push_back(ds[a]);
    CHECK(chain_product(chain, 5)(0, 4) == integer_value(pi, ms, w, f));
  }
}

TEST_CASE("zero sums and the shift to stochastic matrices") {
  std::mt19937_64 rng(75);
  std::vector<RatMatrix> ds;
  for (int i = 0; i < 3; ++i) ds.push_back(random_int_matrix(rng, 7));
  auto es = zero_sums(ds);
  for (const auto& e : es) {
    REQUIRE(e.rows() == 9);
    for (std::size_t i = 0; i < 9; ++i) {
      Rational row = 0, col = 0;
      for (std::size_t j = 0; j < 9; ++j) {
        row += e(i, j);
        col += e(j, i);
      }
      CHECK(row == 0);
      CHECK(col == 0);
    }
  }
  const Rational alpha = turakainen_alpha(es);
  auto fs = turakainen(es, alpha);
  for (const auto& f : fs) {
    CHECK(is_positive(f));
    CHECK(is_row_stochastic(f));
  }
  RatMatrix j(9, 9);
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t c = 0; c < 9; ++c) j(r, c) = Rational(1, 9);
  CHECK(j(0, 6) == Rational(1, 9));
  for (std::size_t len = 1; len <= 5; ++len)
    for (int k = 0; k < 10; ++k) {
      Word w = support::random_index_word(rng, 3, len);
      w.resize(len, 0);
      std::vector<RatMatrix> fchain, echain;
      for (auto a : w) {
        fchain.push_back(fs[a]);
        echain.push_back(es[a]);
      }
      CHECK(chain_product(fchain, 9) == j + rpow(alpha, len) * chain_product(echain, 9));
    }
}

TEST_CASE("nine-state route on the classic instance") {
  PcpInstance inst{Variant::plain, {{"1", "211"}, {"12", "11"}, {"221", "22"}}};
  IntegerStages st;
  Pfa p = claus9_pipeline(inst, {}, &st);
  CHECK(p.pi.dim() == 9);
  CHECK(p.cutpoint == Rational(1, 9));
  SearchReport r = bounded_search(p, 4, Want::above_cutpoint());
  REQUIRE(r.witness);
  CHECK(check_solution(inst, as_solution(r.witness->word)));
  CHECK(as_solution(r.witness->word) == PcpSolution{3, 2, 3, 1});
  // above 1/9 exactly on solutions; value 1/9 + alpha^k (1 - D^2)
  for_each_word(p, 5, [&](const Word& w, const Rational& x) {
    if (w.empty()) return;
    const long d = pair_difference(inst, as_solution(w));
    CHECK(x == Rational(1, 9) + rpow(st.alpha, w.size()) * (1 - d * d));
    CHECK((x > Rational(1, 9)) == check_solution(inst, as_solution(w)));
  });
}

TEST_CASE("nine-state route, weak and with a merged ending pair") {
  PcpInstance inst{Variant::plain, {{"1", "211"}, {"12", "11"}, {"221", "22"}}};
  Pfa weak = claus9_pipeline(inst, {false, true});
  CHECK(weak.mode == Mode::weak);
  for_each_word(weak, 4, [&](const Word& w, const Rational& x) {
    if (w.empty()) return;
    CHECK((x >= Rational(1, 9)) == check_solution(inst, as_solution(w)));
  });
  // the last pair only ends a solution
  PcpInstance ended{Variant::plain, {{"12", "11"}, {"221", "22"}, {"1", "211"}}};
  IntegerStages st;
  Pfa merged = claus9_pipeline(ended, {true, false}, &st);
  CHECK(merged.alphabet.size() == 2);
  for_each_word(merged, 4, [&](const Word& w, const Rational& x) {
    if (w.empty()) return;
    PcpSolution s = as_solution(w);
    s.push_back(3);
    const long d = pair_difference(ended, s);
    CHECK(x == Rational(1, 9) + rpow(st.alpha, w.size()) * (1 - d * d));
  });
}

TEST_CASE("nine-state route without a solution stays below") {
  Pfa p = claus9_pipeline(PcpInstance{Variant::plain, {{"1", "2"}}});
  SearchReport r = bounded_search(p, 8, Want::above_cutpoint());
  CHECK_FALSE(r.witness);
  // |D| = 1 lands exactly on the cutpoint
  CHECK(r.max_seen == Rational(1, 9));
  CHECK(accept_prob(p, Word{0}) == Rational(1, 9));
  for_each_word(p, 6, [&](const Word& w, const Rational& x) {
    if (w.size() > 1) CHECK(x < Rational(1, 9));
  });
}

TEST_CASE("binary route on a small two-ended instance") {
  PcpInstance inst{Variant::twompcp, {{"1", "12"}, {"21", "1"}, {"2", "2"}, {"11", "1"}, {"1", "11"}, {"12", "21"}}};
  IntegerStages st;
  Pfa p = hirvensalo20_pipeline(inst, {}, &st);
  CHECK(p.pi.dim() == 20);
  CHECK(p.cutpoint == Rational(1, 20));
  CHECK(p.alphabet == std::vector<std::string>{"a", "b"});
  for (const auto& m : p.matrices) {
    CHECK(is_positive(m));
    CHECK(is_row_stochastic(m));
  }
  const std::size_t n = st.integer.size();
  REQUIRE(n == 4);
  std::mt19937_64 rng(76);
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<Word> words{Word(len, 0)};
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<Word> more;
      for (const auto& w : words)
        for (std::size_t a = 1; a < n; ++a) {
          Word x = w;
          x[i] = a;
          more.push_back(x);
        }
      words.insert(words.end(), more.begin(), more.end());
    }
    for (const auto& w : words) {
      const Word c = code_word(w, n);
      const Rational iv = integer_value(st.pi, st.integer, w, st.f);
      CHECK(integer_value(st.coded_pi, st.coded, c, st.coded_f) == iv);
      // a trailing partial codeword leaves the value unchanged
      Word dangling = c;
      dangling.insert(dangling.end(), rng() % (n - 1), 0);
      CHECK(integer_value(st.coded_pi, st.coded, dangling, st.coded_f) == iv);
      CHECK(hirvensalo_decode(dangling, inst.size()) == hirvensalo_decode(c, inst.size()));
      const PcpSolution sol = hirvensalo_decode(c, inst.size());
      const long d = pair_difference(inst, sol);
      CHECK(iv == 1 - 2 * d * d);
      const Rational x = accept_prob(p, c);
      CHECK(x == Rational(1, 20) + rpow(st.alpha, c.size()) * iv);
      CHECK((x > Rational(1, 20)) == check_solution(inst, sol));
    }
  }
  SearchReport r = bounded_search(p, 3, Want::above_cutpoint());
  REQUIRE(r.witness);
  CHECK(check_solution(inst, hirvensalo_decode(r.witness->word, inst.size())));
}

TEST_CASE("binary route with the start pair in the middle") {
  PcpInstance inst{Variant::twompcp, {{"1", "12"}, {"21", "1"}, {"2", "2"}, {"11", "1"}}};
  HirvensaloOptions o{true};
  IntegerStages st;
  Pfa p = hirvensalo20_pipeline(inst, o, &st);
  CHECK(st.integer.size() == 3);
  CHECK(p.pi.dim() == 15);
  for_each_word(p, 5, [&](const Word& w, const Rational& x) {
    if (w.empty()) return;
    PcpSolution s = hirvensalo_decode(w, inst.size(), o);
    const long d = pair_difference(inst, s);
    CHECK(x == Rational(1, 15) + rpow(st.alpha, w.size()) * (1 - 2 * d * d));
  });
}

TEST_CASE("binary route rejects malformed input") {
  CHECK_THROWS(hirvensalo20_pipeline(PcpInstance{Variant::plain, {{"1", "1"}, {"2", "2"}, {"1", "2"}, {"2", "1"}}}));
  CHECK_THROWS(hirvensalo20_pipeline(PcpInstance{Variant::twompcp, {{"1", "1"}, {"2", "2"}, {"1", "2"}}}));
  CHECK_THROWS(claus_A("13", "1"));
}
