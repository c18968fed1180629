#include <random>

#include "doctest.h"
#include "machines.hpp"
#include "pfac/golden.hpp"
#include "pfac/pcp2pfa.hpp"
#include "pfac/tm2mpcp.hpp"
#include "support.hpp"

using namespace pfac;

namespace {

std::size_t formula(std::size_t g, std::size_t left, std::size_t right, std::size_t halts) {
  return 3 * g + 3 + g * left + right + halts + 1;
}

// Each (q, s) gets no rule, a halt, or a move with random write and target.
TuringMachine random_tm(std::mt19937_64& rng, std::size_t nq, std::size_t ns) {
  TuringMachine tm;
  for (std::size_t i = 0; i < nq; ++i) tm.states.push_back("q" + std::to_string(i));
  tm.alphabet.push_back("_");
  for (std::size_t i = 1; i < ns; ++i) tm.alphabet.push_back("s" + std::to_string(i));
  tm.blank = "_";
  tm.start = "q0";
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<std::size_t> pq(0, nq - 1), ps(0, ns - 1);
  for (const auto& q : tm.states)
    for (const auto& s : tm.alphabet) {
      const int k = kind(rng);
      if (k == 0) continue;
      if (k == 1)
        tm.rules.push_back(fixtures::stop(q, s));
      else
        tm.rules.push_back(fixtures::step(q, s, tm.alphabet[ps(rng)], k == 2 ? Move::left : Move::right,
                                          tm.states[pq(rng)]));
    }
  return tm;
}

void check_decodes(const TuringMachine& tm, const SymWord& input, std::size_t bound, const MpcpOptions& opts = {}) {
  SymPcp inst = tm_to_mpcp(tm, input, opts);
  auto sols = all_solutions(inst, bound);
  REQUIRE_FALSE(sols.empty());
  TmRun run = run_tm(tm, input, 100);
  REQUIRE(run.halted);
  for (const auto& s : sols) CHECK(decode_trace(tm, inst, s, opts) == run_trace(tm, run));
  // solution count where the finish pair closes the word
  if (opts.unique) CHECK(all_solutions(as_twompcp(inst), bound).size() == 1);
}

}  // namespace

TEST_CASE("pair count formula on random rule tables") {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 100; ++k) {
    TuringMachine tm = random_tm(rng, 1 + k % 5, 1 + k % 4);
    const std::size_t g = tm.alphabet.size(), l = tm.count_moves(Move::left), r = tm.count_moves(Move::right),
                      h = tm.count_halts();
    CHECK(tm_to_mpcp(tm, {}).size() == formula(g, l, r, h));
    CHECK(pair_count(tm) == formula(g, l, r, h));
    CHECK(tm_to_mpcp(tm, {}, {true, false}).size() == formula(g, l, r, h) - 1 + tm.states.size() + l);
    CHECK(pair_count(tm, {true, false}) == tm_to_mpcp(tm, {}, {true, false}).size());
  }
}

TEST_CASE("two-letter machine with 14 left and 16 other rules") {
  TuringMachine tm;
  for (int i = 0; i < 15; ++i) tm.states.push_back("q" + std::to_string(i));
  tm.alphabet = {"_", "b"};
  tm.blank = "_";
  tm.start = "q0";
  for (int i = 0; i < 15; ++i)
    for (const char* s : {"_", "b"}) {
      const int n = static_cast<int>(tm.rules.size());
      if (n < 14)
        tm.rules.push_back(fixtures::step(tm.states[i], s, "b", Move::left, "q1"));
      else if (n < 28)
        tm.rules.push_back(fixtures::step(tm.states[i], s, "_", Move::right, "q2"));
      else
        tm.rules.push_back(fixtures::stop(tm.states[i], s));
    }
  CHECK(tm.count_moves(Move::left) == 14);
  CHECK(tm.count_moves(Move::right) + tm.count_halts() == 16);
  // 53 pairs besides the start pair
  CHECK(tm_to_mpcp(tm, {"b"}).size() == 54);
  CHECK(pair_count(tm) == 54);
}

TEST_CASE("word pairs of a machine that halts at once") {
  TuringMachine tm = fixtures::halt_now();
  SymPcp inst = tm_to_mpcp(tm, {});
  CHECK(inst.pairs[0].first == SymWord{"#"});
  CHECK(inst.pairs[0].second == SymWord{"#", "_", "q0", "_", "#"});
  CHECK(inst.pairs[1].first == SymWord{"H", "#", "#"});
  auto s = brute_solve(inst, 8);
  REQUIRE(s);
  auto [top, bottom] = concatenate(inst, *s);
  CHECK(top == bottom);
  // the start configuration, then erasure of H's neighbours
  CHECK(std::vector<std::string>(top.begin(), top.begin() + 5) == SymWord{"#", "_", "q0", "_", "#"});
  CHECK(decode_trace(tm, inst, *s) == std::vector<SymWord>{{"q0"}});
}

TEST_CASE("solutions decode to the run") {
  check_decodes(fixtures::halt_now(), {}, 8);
  check_decodes(fixtures::write_right(), {}, 24);
  check_decodes(fixtures::write_left(), {}, 12);
  check_decodes(fixtures::scan_right(), {"1"}, 16);
  check_decodes(fixtures::erase_left(), {"1"}, 16);
}

TEST_CASE("unique mode leaves one solution") {
  check_decodes(fixtures::halt_now(), {}, 10, {true, false});
  check_decodes(fixtures::write_left(), {}, 14, {true, false});
  check_decodes(fixtures::scan_right(), {"1"}, 18, {true, false});
  // without the transform the padding pair gives a second way to finish
  CHECK(all_solutions(as_twompcp(tm_to_mpcp(fixtures::write_left(), {})), 14).size() > 1);
}

TEST_CASE("copy shortcut") {
  TuringMachine tm = fixtures::halt_now();
  MpcpOptions o{false, true};
  SymPcp inst = tm_to_mpcp(tm, {}, o);
  CHECK(inst.size() == pair_count(tm, o));
  auto s = brute_solve(inst, 14);
  REQUIRE(s);
  CHECK(decode_trace(tm, inst, *s, o) == std::vector<SymWord>{{"q0"}});
}

TEST_CASE("looping machine has no solution up to 12") {
  CHECK_FALSE(brute_solve(tm_to_mpcp(fixtures::loop_right(), {}), 12));
}

TEST_CASE("nondeterministic machines are rejected") {
  TuringMachine tm = fixtures::halt_now();
  tm.rules.push_back(fixtures::step("q0", "_", "_", Move::right, "q0"));
  CHECK_THROWS_AS(tm_to_mpcp(tm, {}), std::invalid_argument);
}

TEST_CASE("default code of the example machine") {
  PrefixCode c = default_code(example_machine());
  CHECK(c.at("#") == "101");
  CHECK(c.at("_") == "100");
  CHECK(c.at("b") == "110");
  CHECK(c.at("q1") == "00001");
  CHECK(c.at("q9") == "01001");
  CHECK(c.at("H") == "01111");
}

TEST_CASE("printed example matrices are regenerated exactly") {
  auto g = golden_matrices();
  auto r = regenerate_golden();
  REQUIRE(g.size() == 4);
  for (const auto& [name, m] : g) {
    INFO(name);
    CHECK(r.at(name) == m);
    CHECK(is_row_stochastic(m));
  }
  CHECK(g.at("copy_blank")(11, 11) == 1);
  CHECK(g.at("copy_blank")(10, 10) == pow2(-22));
}

TEST_CASE("fixed pipelines: denominators and positivity") {
  TuringMachine tm = example_machine();
  PrefixCode code = default_code(tm);
  auto check_unit = [](const FixedPipeline& p, long e) {
    for (const auto& m : p.matrices())
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) REQUIRE(is_multiple_of(m(i, j), pow2(-e)));
  };
  FixedPipeline p12(tm, code, {Target::p12, {}, std::nullopt, false});
  check_unit(p12, 22);
  CHECK(p12.matrices().size() + 1 == pair_count(tm));
  FixedPipeline t9(tm, code, {Target::t9, {}, std::nullopt, false});
  check_unit(t9, 44);
  for (const auto& m : t9.matrices()) CHECK(is_positive(m));
  FixedPipeline t18(tm, code, {Target::t18, {}, std::nullopt, true});
  check_unit(t18, 47);
  CHECK(t18.matrices().size() + 1 == pair_count(tm));
  FixedPipeline t18f(tm, code, {Target::t18, {}, std::nullopt, false});
  CHECK(t18f.matrices().size() + 2 == pair_count(tm));
}

TEST_CASE("fixed pipelines find solutions of a halting machine") {
  TuringMachine tm = fixtures::halt_now();
  PrefixCode code = default_code(tm);
  SymPcp inst = tm_to_mpcp(tm, {});
  for (Target t : {Target::p12, Target::t9, Target::t11pi, Target::t11, Target::t18}) {
    INFO(target_name(t));
    FixedPipeline pipe(tm, code, {t, {}, std::nullopt, false});
    Pfa p = pipe.instantiate({});
    SearchReport r = bounded_search(p, 6, p.mode == Mode::strict ? Want::above_cutpoint() : Want::at_least_cutpoint());
    REQUIRE(r.witness);
    PcpSolution s = pipe.to_mpcp(r.witness->word);
    CHECK(check_solution(as_twompcp(inst), s));
    CHECK(decode_trace(tm, inst, s) == std::vector<SymWord>{{"q0"}});
  }
}

TEST_CASE("tape flip mirrors the run") {
  TuringMachine tm = fixtures::scan_right();
  TuringMachine f = flip_tape(tm);
  CHECK(f.head == HeadStart::right);
  TmRun a = run_tm(tm, {"1", "1"}, 20), b = run_tm(f, {"1", "1"}, 20);
  REQUIRE(a.halted);
  REQUIRE(b.halted);
  CHECK(a.configs.size() == b.configs.size());
  for (std::size_t i = 0; i < a.configs.size(); ++i) CHECK(a.configs[i].head == 1 - b.configs[i].head);
}
