// Command-line front end: compile, search, verify, solve-pcp, encode-tm.
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "pfac/amplify.hpp"
#include "pfac/binaut.hpp"
#include "pfac/cl2cm.hpp"
#include "pfac/golden.hpp"
#include "pfac/intmat.hpp"
#include "pfac/io.hpp"
#include "pfac/pcp2pfa.hpp"

using namespace pfac;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& out, const Json& j) {
  if (out.empty() || out == "-")
    std::cout << dump(j);
  else
    write_json_file(out, j);
}

Json with_manifest(Json body, const std::string& construction, Json params, const std::string& anchor) {
  body["manifest"] = {{"construction", construction}, {"params", std::move(params)}, {"anchor", anchor}};
  return body;
}

SymWord split_input(const std::string& s) {
  std::istringstream in(s);
  SymWord w;
  for (std::string t; in >> t;) w.push_back(t);
  return w;
}

Json word_json(const Pfa& p, const Word& w) { return word_names(p, w); }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(1, 1000);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(0, d);
  Rational q(num(rng), d);
  q.canonicalize();
  return q;
}

std::string random_bits(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len, const char* digits = "01") {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  std::string u(len(rng), '0');
  for (auto& c : u) c = digits[bit(rng)];
  return u;
}

// Each check prints one line and counts failures.
struct Checker {
  int failed = 0;
  void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "ok    " : "FAIL  ") << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failed;
  }
};

int verify_laws(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  Checker c;
  bool ok = true;
  for (int i = 0; i < samples && ok; ++i) {
    auto u = random_bits(rng, 1, 12), v = random_bits(rng, 1, 12);
    ok = B(u) * B(v) == B(v + u);
  }
  c.report("B(u)B(u') = B(u'u)", ok, std::to_string(samples) + " random pairs");
  ok = true;
  for (int i = 0; i < samples && ok; ++i) {
    auto v1 = random_bits(rng, 0, 5, "12"), w1 = random_bits(rng, 0, 5, "12");
    auto v2 = random_bits(rng, 0, 5, "12"), w2 = random_bits(rng, 0, 5, "12");
    ok = claus_A(v1, w1) * claus_A(v2, w2) == claus_A(v1 + v2, w1 + w2) &&
         hirvensalo_A(v1, w1) * hirvensalo_A(v2, w2) == hirvensalo_A(v2 + v1, w2 + w1);
  }
  c.report("forward and reversed laws of the 6x6 integer matrices", ok, std::to_string(samples) + " random pairs");
  ok = true;
  for (int i = 0; i < samples / 10 && ok; ++i) {
    RatMatrix a = B(random_bits(rng, 1, 6)), b = B(random_bits(rng, 1, 6));
    RatMatrix x = merged3(B(random_bits(rng, 1, 6))), y = merged3(B(random_bits(rng, 1, 6)));
    ok = kronecker(a, x) * kronecker(b, y) == kronecker(a * b, x * y) && (a * b) * a == a * (b * a);
  }
  c.report("mixed product rule of the Kronecker product", ok);
  return c.failed;
}

int verify_example_matrices() {
  Checker c;
  auto golden = golden_matrices();
  auto fresh = regenerate_golden();
  for (const auto& [name, m] : golden) {
    auto it = fresh.find(name);
    if (it == fresh.end()) {
      c.report(name, false, "not regenerated");
      continue;
    }
    std::size_t diff = 0;
    if (it->second.rows() != m.rows() || it->second.cols() != m.cols()) {
      c.report(name, false, "dimension mismatch");
      continue;
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) diff += it->second(i, j) != m(i, j);
    c.report(name, diff == 0,
             std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", " + std::to_string(diff) + " entries differ");
  }
  return c.failed;
}

int verify_identities(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  Checker c;
  bool ok = true;
  for (int i = 0; i < samples && ok; ++i) {
    Rational f = random_rational(rng), g = random_rational(rng);
    const Rational lhs = f * g / 2 + (1 - f * f) / 4 + (1 - g * g) / 4;
    const Rational rhs = Rational(1, 2) - (f - g) * (f - g) / 4;
    ok = lhs == rhs;
  }
  c.report("equality trick", ok, std::to_string(samples) + " random pairs");
  const Pfa coins = coin_equality_pfa();
  ok = true;
  for (long i = 0; i <= 10; ++i)
    for (long j = 0; j <= 10; ++j) {
      const Rational d = pow2(-i) - pow2(-j);
      ok = ok && accept_prob(coins, checker_word(i, j)) == Rational(1, 2) - d * d / 4;
    }
  c.report("equality by coins, i,j <= 10", ok);
  ok = true;
  for (int i = 0; i < samples && ok; ++i) {
    auto v = random_bits(rng, 0, 6, "12"), w = random_bits(rng, 0, 6, "12");
    Integer d = tern_value(v) - tern_value(w);
    ok = dot(RatVector::unit(6, 0) * claus_A(v, w), claus_f()) == Rational(1 - d * d) &&
         dot(hirvensalo_pi() * hirvensalo_A(v, w), hirvensalo_eta()) == Rational(1 - 2 * d * d);
  }
  c.report("integer equality tests 1 - D^2 and 1 - 2 D^2", ok, std::to_string(samples) + " random pairs");
  // Turakainen chain identity on the classic instance, all nonempty products of length <= 4
  IntegerStages st;
  PcpInstance inst = classic_instance();
  for (auto& [v, w] : inst.pairs) {
    for (auto& ch : v) ch = ch == '0' ? '1' : '2';
    for (auto& ch : w) ch = ch == '0' ? '1' : '2';
  }
  Pfa p = claus9_pipeline(inst, {}, &st);
  const Rational base = Rational(1, static_cast<long>(p.dim()));
  ok = true;
  std::size_t count = 0;
  for_each_word(p, 4, [&](const Word& w, const Rational& prob) {
    if (w.empty()) return;
    RatVector x = RatVector::unit(st.padded[0].rows(), 0);
    for (auto s : w) x = x * st.padded[s];
    ok = ok && prob == base + rpow(st.alpha, w.size()) * x[p.dim() - 3];
    ++count;
  });
  c.report("stochastic chain = 1/d + alpha^m E-chain", ok, std::to_string(count) + " products");
  return c.failed;
}

std::string pcp_anchor(const std::string& name) {
  if (name == "eq13" || name == "eq11") return "weak equality automaton, cutpoint 1/2";
  if (name == "strict15" || name == "strict13") return "strict gadget, cutpoint 1/4";
  if (name == "rmpcp12") return "reversed MPCP, start pair folded into pi";
  if (name == "nine9") return "Kronecker square of merged chains with output vector";
  if (name == "out18") return "output vector split into q+ and q- copies";
  if (name == "minf11") return "finishing pair merged with M_inf";
  return "binary alphabet by block coding";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pfac: reductions to probabilistic finite automata, checked exactly"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for randomized checks");

  auto* compile = app.add_subcommand("compile", "Build an automaton from a problem instance");
  compile->require_subcommand(1);

  // compile pcp2pfa
  std::string construction, in, out;
  bool antizero_first = false;
  auto* c_pcp = compile->add_subcommand("pcp2pfa", "PCP instance to PFA");
  c_pcp->add_option("--construction", construction, "eq13|eq11|strict15|strict13|rmpcp12|nine9|out18|minf11|bin2")
      ->required();
  c_pcp->add_option("--in", in, "PCP JSON")->required();
  c_pcp->add_option("--out", out, "Output file (stdout if omitted)");
  c_pcp->add_flag("--antizero", antizero_first, "Interleave a 1 after every letter first");

  // compile tm2mpcp
  std::string tm_path, input, target = "mpcp", code_path;
  bool unique = false, shortcut = false, keep_finish = false;
  auto* c_tm = compile->add_subcommand("tm2mpcp", "Turing machine to MPCP pairs or a fixed-matrix PFA");
  c_tm->add_option("--tm", tm_path, "TM JSON")->required();
  c_tm->add_option("--input", input, "Input tape, symbols separated by spaces");
  c_tm->add_option("--target", target, "mpcp|p12|t9|t11pi|t11|t18");
  c_tm->add_option("--code", code_path, "Code JSON (default code if omitted)");
  c_tm->add_flag("--unique", unique, "No padding pair; solutions become unique");
  c_tm->add_flag("--shortcut", shortcut, "Two copying pairs over a, b");
  c_tm->add_flag("--keep-finish", keep_finish, "t18: keep the finishing matrix in the set");
  c_tm->add_option("--out", out, "Output file");

  // compile int2pfa
  bool merge_last = false, weak = false, start_in_middle = false;
  auto* c_int = compile->add_subcommand("int2pfa", "PCP over {1,2} via integer matrices");
  c_int->add_option("--construction", construction, "claus9|hirvensalo20")->required();
  c_int->add_option("--in", in, "PCP JSON over digits 1 and 2")->required();
  c_int->add_flag("--merge-last", merge_last, "claus9: fold the last pair into f");
  c_int->add_flag("--weak", weak, "claus9: weak variant of f");
  c_int->add_flag("--start-in-middle", start_in_middle, "hirvensalo20: start pair may recur");
  c_int->add_option("--out", out, "Output file");

  // compile cl2cm-checker
  CheckerParams params;
  bool full = false, unit_coin = false;
  auto* c_ec = compile->add_subcommand("cl2cm-checker", "Equality Checker over {a,b,#}");
  c_ec->add_option("--G", params.G, "Modulus");
  c_ec->add_option("--K", params.K, "INCORRECT answers before rejection");
  c_ec->add_flag("--full", full, "Keep all reachable states instead of lumping");
  c_ec->add_flag("--unit-coin", unit_coin, "Pad so that each symbol flips at most one coin");
  c_ec->add_option("--out", out, "Output file");

  // compile amplify-*
  std::string x_str, eps_str;
  auto* c_af = compile->add_subcommand("amplify-f", "Rounds with a coin per round");
  auto* c_anc = compile->add_subcommand("amplify-nc", "Rounds without coins");
  for (auto* c : {c_af, c_anc}) {
    c->add_option("--in", in, "Base PFA JSON")->required();
    c->add_option("--x", x_str, "Acceptance of the base word, for the (n,t) plan");
    c->add_option("--eps", eps_str, "Target error, for the (n,t) plan");
    c->add_option("--out", out, "Output file");
  }
  auto* c_go = compile->add_subcommand("amplify-go", "Single-coin amplification on the abstract automaton");
  c_go->add_option("--x", x_str, "Acceptance probability x > 1/2")->required();
  c_go->add_option("--eps", eps_str, "Target error")->required();
  c_go->add_option("--out", out, "Output file");

  // search
  std::string pfa_path, mode = "strict", value;
  std::size_t max_len = 6;
  auto* search = app.add_subcommand("search", "Bounded search for a word over the cutpoint");
  search->add_option("--pfa", pfa_path, "PFA JSON")->required();
  search->add_option("--max-len", max_len, "Longest word");
  search->add_option("--mode", mode, "strict (> cutpoint) | weak (>= cutpoint) | exact (== --value)");
  search->add_option("--value", value, "Target for --mode exact");
  search->add_option("--out", out, "Output file");

  // verify
  int samples = 1000;
  auto* verify = app.add_subcommand("verify", "Exact checks of laws, printed matrices and identities");
  verify->add_option("what", construction, "laws|example-matrices|identities")->required();
  verify->add_option("--samples", samples, "Random samples per law");

  // solve-pcp
  bool all = false;
  auto* solve = app.add_subcommand("solve-pcp", "Brute-force PCP solutions");
  solve->add_option("--in", in, "PCP JSON")->required();
  solve->add_option("--max-len", max_len, "Longest index sequence");
  solve->add_flag("--all", all, "All solutions up to the bound");
  solve->add_option("--out", out, "Output file");

  // encode-tm
  auto* enc = app.add_subcommand("encode-tm", "Binary 2MPCP of a Turing machine and input");
  enc->add_option("--tm", tm_path, "TM JSON")->required();
  enc->add_option("--input", input, "Input tape, symbols separated by spaces");
  enc->add_option("--code", code_path, "Code JSON (default code if omitted)");
  enc->add_flag("--unique", unique, "No padding pair");
  enc->add_flag("--shortcut", shortcut, "Two copying pairs over a, b");
  bool reversed_words = false;
  enc->add_flag("--reversed", reversed_words, "Reverse every pair and tag the instance twormpcp");
  enc->add_option("--out", out, "Output file");

  // analyze-2cm
  std::string cm_path;
  std::size_t steps = 100, rounds = 0;
  auto* cm = app.add_subcommand("analyze-2cm", "Round and aggregate probabilities for a 2-counter machine");
  cm->add_option("--cm", cm_path, "2CM JSON")->required();
  cm->add_option("--steps", steps, "Step bound for the run");
  cm->add_option("--G", params.G, "Modulus");
  cm->add_option("--K", params.K, "INCORRECT answers before rejection");
  cm->add_option("--rounds", rounds, "Also evaluate the acceptance after this many rounds");
  cm->add_option("--out", out, "Output file");

  CLI11_PARSE(app, argc, argv);

  std::string op = "pfac";
  try {
    if (c_pcp->parsed()) {
      op = "compile pcp2pfa";
      PcpInstance inst = pcp_from_json(read_json_file(in));
      if (antizero_first) inst = antizero(inst);
      Pfa p = pcp_construction(construction, inst);
      emit(out, with_manifest(to_json(p), construction, {{"in", in}, {"antizero", antizero_first}},
                              pcp_anchor(construction)));
    } else if (c_tm->parsed()) {
      op = "compile tm2mpcp";
      TuringMachine tm = tm_from_json(read_json_file(tm_path));
      MpcpOptions mo{unique, shortcut};
      PrefixCode code = code_path.empty() ? default_code(tm, mo) : code_from_json(read_json_file(code_path));
      const SymWord tape = split_input(input);
      Json params_json{{"tm", tm_path}, {"input", tape}, {"unique", unique}, {"shortcut", shortcut}};
      if (target == "mpcp") {
        SymPcp inst = tm_to_mpcp(tm, tape, mo);
        Json body{{"pairs", to_json(inst)}, {"pair_count", inst.size()}, {"code", to_json(code)},
                  {"binary", to_json(binarize(inst, code))}};
        emit(out, with_manifest(body, "tm2mpcp", params_json, "word pairs of a Turing machine run"));
      } else {
        PipelineOptions po{parse_target(target), mo, std::nullopt, keep_finish};
        FixedPipeline pipe(tm, code, po);
        params_json["keep_finish"] = keep_finish;
        emit(out, with_manifest(to_json(pipe.instantiate(tape)), target, params_json,
                                "rule matrices fixed, input in the boundary vectors"));
      }
    } else if (c_int->parsed()) {
      op = "compile int2pfa";
      PcpInstance inst = pcp_from_json(read_json_file(in));
      Pfa p;
      if (construction == "claus9")
        p = claus9_pipeline(inst, {merge_last, weak});
      else if (construction == "hirvensalo20")
        p = hirvensalo20_pipeline(inst, {start_in_middle});
      else
        throw Failure("unknown construction " + construction);
      emit(out, with_manifest(to_json(p), construction,
                              {{"in", in}, {"merge_last", merge_last}, {"weak", weak}, {"start_in_middle", start_in_middle}},
                              "integer matrices made stochastic, cutpoint 1/d"));
    } else if (c_ec->parsed()) {
      op = "compile cl2cm-checker";
      params.validate();
      EqualityChecker ec = unit_coin ? unit_coin_checker(params) : equality_checker_pfa(params, !full);
      Json body = to_json(ec.pfa);
      Json classes = Json::array();
      for (auto c : ec.classes)
        classes.push_back(c == Outcome::same ? "same" : c == Outcome::different ? "different"
                                                    : c == Outcome::undecided ? "undecided" : "rejected");
      body["classes"] = classes;
      body["naive_states"] = ec.naive_states;
      body["reachable_states"] = ec.reachable_states;
      emit(out, with_manifest(body, "cl2cm-checker",
                              {{"G", params.G}, {"K", params.K}, {"full", full}, {"unit_coin", unit_coin}},
                              "lucky-coin comparison of a^i b^j"));
    } else if (c_af->parsed() || c_anc->parsed()) {
      const bool f = c_af->parsed();
      op = f ? "compile amplify-f" : "compile amplify-nc";
      Pfa base = pfa_from_json(read_json_file(in));
      Pfa p = f ? amplify_F(base) : amplify_NC(base);
      Json params_json{{"in", in}};
      if (!x_str.empty() && !eps_str.empty()) {
        RoundPlan plan = f_input_builder(parse_rational(x_str), parse_rational(eps_str));
        params_json["x"] = x_str;
        params_json["eps"] = eps_str;
        params_json["n"] = plan.n;
        params_json["t"] = plan.t;
      }
      emit(out, with_manifest(to_json(p), f ? "amplify-f" : "amplify-nc", params_json,
                              f ? "rounds (u end)^n check, coin per round" : "rounds without coins"));
    } else if (c_go->parsed()) {
      op = "compile amplify-go";
      const Rational x = parse_rational(x_str), eps = parse_rational(eps_str);
      RoundPlan plan = go_input_builder(x, eps);
      auto [rp, rm] = go_reject(x, plan.n, plan.t);
      Json body = to_json(go_automaton(x));
      body["n"] = plan.n;
      body["t"] = plan.t;
      body["reject_given_plus"] = to_json(rp);
      body["reject_given_minus"] = to_json(rm);
      body["sound"] = rp <= eps && rm <= eps;
      emit(out, with_manifest(body, "amplify-go", {{"x", x_str}, {"eps", eps_str}}, "single coin, t rounds of n"));
    } else if (search->parsed()) {
      op = "search";
      Pfa p = pfa_from_json(read_json_file(pfa_path));
      Want want;
      if (mode == "strict")
        want = Want::above_cutpoint();
      else if (mode == "weak")
        want = Want::at_least_cutpoint();
      else if (mode == "exact")
        want = Want::equal_to(parse_rational(value));
      else
        throw Failure("mode must be strict, weak or exact");
      SearchReport r = bounded_search(p, max_len, want);
      Json body{{"max_len", max_len}, {"mode", mode}, {"words", r.words}, {"max_seen", to_json(r.max_seen)},
                {"argmax", word_json(p, r.argmax)}};
      body["witness"] = r.witness ? Json{{"word", word_json(p, r.witness->word)},
                                         {"probability", to_json(r.witness->probability)}}
                                  : Json();
      emit(out, body);
    } else if (verify->parsed()) {
      op = "verify " + construction;
      int failed;
      if (construction == "laws")
        failed = verify_laws(seed, samples);
      else if (construction == "example-matrices")
        failed = verify_example_matrices();
      else if (construction == "identities")
        failed = verify_identities(seed, samples);
      else
        throw Failure("unknown check " + construction);
      return failed == 0 ? 0 : 1;
    } else if (solve->parsed()) {
      op = "solve-pcp";
      PcpInstance inst = pcp_from_json(read_json_file(in));
      Json sols = Json::array();
      for (const auto& s : all_solutions(inst, max_len, all ? 0 : 1)) sols.push_back(to_json(s));
      emit(out, {{"max_len", max_len}, {"solutions", sols}});
    } else if (enc->parsed()) {
      op = "encode-tm";
      TuringMachine tm = tm_from_json(read_json_file(tm_path));
      MpcpOptions mo{unique, shortcut};
      PrefixCode code = code_path.empty() ? default_code(tm, mo) : code_from_json(read_json_file(code_path));
      SymPcp sym = as_twompcp(tm_to_mpcp(tm, split_input(input), mo));
      if (reversed_words) {
        sym = reverse_words(sym);
        sym.variant = Variant::twormpcp;
      }
      PcpInstance bin = binarize(sym, code);
      emit(out, with_manifest({{"instance", to_json(bin)}, {"code", to_json(code)}}, "encode-tm",
                              {{"tm", tm_path}, {"input", input}, {"unique", unique}, {"shortcut", shortcut},
                               {"reversed", reversed_words}},
                              "binary 2MPCP of the machine and its input"));
    } else if (cm->parsed()) {
      op = "analyze-2cm";
      params.validate();
      TwoCounterMachine m = cm_from_json(read_json_file(cm_path));
      auto word = encode_computation(m, steps);
      RoundProbs r = correctness_test_probs(m, word, params);
      Json body{{"word", word},
                {"correct", to_json(r.correct)},
                {"incorrect", to_json(r.incorrect)},
                {"null", to_json(r.null)},
                {"limit", to_json(aggregate_limit(r, params.K))}};
      if (rounds) body["accept_after_rounds"] = to_json(aggregate_accept_prob(r, rounds, params.K));
      emit(out, body);
    }
  } catch (const std::exception& e) {
    std::cerr << "pfac " << op << ": error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
