#include "pfac/tm2mpcp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pfac/binaut.hpp"
#include "pfac/pcp2pfa.hpp"

namespace pfac {

namespace {

const std::string kLetterA = "a", kLetterB = "b";

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

SymWord cat(std::initializer_list<SymWord> parts) {
  SymWord r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

// Separator first, then the tape alphabet.
std::vector<std::string> tape_letters(const TuringMachine& tm) {
  std::vector<std::string> r{kSep};
  r.insert(r.end(), tm.alphabet.begin(), tm.alphabet.end());
  return r;
}

// Tape symbol or separator as a word of the instance.
SymWord letter(const TuringMachine& tm, const std::string& s, const MpcpOptions& opts) {
  if (!opts.copy_shortcut) return {s};
  auto ls = tape_letters(tm);
  auto it = std::find(ls.begin(), ls.end(), s);
  if (it == ls.end()) throw std::invalid_argument("unknown tape symbol " + s);
  SymWord w{kLetterB};
  w.insert(w.end(), static_cast<std::size_t>(it - ls.begin()), kLetterA);
  w.push_back(kLetterB);
  return w;
}

SymWord trim_blanks(SymWord w, const std::string& blank) {
  while (!w.empty() && w.back() == blank) w.pop_back();
  std::size_t i = 0;
  while (i < w.size() && w[i] == blank) ++i;
  return SymWord(w.begin() + static_cast<long>(i), w.end());
}

std::string bits_of(std::size_t value, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i)
    if (value >> (width - 1 - i) & 1) s[i] = '1';
  return s;
}

std::size_t width_for(std::size_t n) {
  std::size_t w = 0;
  while ((std::size_t{1} << w) < n) ++w;
  return w;
}

}  // namespace

void TuringMachine::validate() const {
  if (states.empty()) throw std::invalid_argument("machine has no states");
  if (!contains(alphabet, blank)) throw std::invalid_argument("blank missing from the tape alphabet");
  if (!contains(states, start)) throw std::invalid_argument("start state missing");
  std::set<std::string> seen;
  for (const auto& s : states) {
    if (s == kSep || s == kHalt) throw std::invalid_argument("reserved symbol used as state: " + s);
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate symbol " + s);
  }
  for (const auto& s : alphabet) {
    if (s == kSep || s == kHalt) throw std::invalid_argument("reserved symbol used on the tape: " + s);
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate symbol " + s);
  }
  std::set<std::pair<std::string, std::string>> keys;
  for (const auto& r : rules) {
    if (!contains(states, r.q) || !contains(alphabet, r.s)) throw std::invalid_argument("rule on unknown state or symbol");
    if (!keys.insert({r.q, r.s}).second)
      throw std::invalid_argument("nondeterministic machine: two rules for (" + r.q + "," + r.s + ")");
    if (r.halt) continue;
    if (!contains(alphabet, r.write) || !contains(states, r.next))
      throw std::invalid_argument("rule writes an unknown symbol or enters an unknown state");
  }
}

const TmRule* TuringMachine::find(const std::string& q, const std::string& s) const {
  for (const auto& r : rules)
    if (r.q == q && r.s == s) return &r;
  return nullptr;
}

std::size_t TuringMachine::count_moves(Move m) const {
  return static_cast<std::size_t>(
      std::count_if(rules.begin(), rules.end(), [&](const TmRule& r) { return !r.halt && r.move == m; }));
}

std::size_t TuringMachine::count_halts() const {
  return static_cast<std::size_t>(std::count_if(rules.begin(), rules.end(), [](const TmRule& r) { return r.halt; }));
}

TmRun run_tm(const TuringMachine& tm, const SymWord& input, std::size_t max_steps) {
  tm.validate();
  TmConfig c;
  c.state = tm.start;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (!contains(tm.alphabet, input[i])) throw std::invalid_argument("input symbol not on the tape alphabet");
    if (input[i] != tm.blank) c.cells[static_cast<long>(i)] = input[i];
  }
  c.head = tm.head == HeadStart::right && !input.empty() ? static_cast<long>(input.size()) - 1 : 0;
  TmRun run;
  run.configs.push_back(c);
  for (std::size_t step = 0; step < max_steps; ++step) {
    auto it = c.cells.find(c.head);
    const std::string s = it == c.cells.end() ? tm.blank : it->second;
    const TmRule* r = tm.find(c.state, s);
    if (!r) return run;
    if (r->halt) {
      run.halted = true;
      return run;
    }
    if (r->write == tm.blank)
      c.cells.erase(c.head);
    else
      c.cells[c.head] = r->write;
    c.head += r->move == Move::right ? 1 : -1;
    c.state = r->next;
    run.configs.push_back(c);
  }
  return run;
}

SymWord config_symbols(const TuringMachine& tm, const TmConfig& c) {
  long lo = c.head, hi = c.head;
  if (!c.cells.empty()) {
    lo = std::min(lo, c.cells.begin()->first);
    hi = std::max(hi, c.cells.rbegin()->first);
  }
  SymWord w;
  for (long p = lo; p <= hi; ++p) {
    if (p == c.head) w.push_back(c.state);
    auto it = c.cells.find(p);
    w.push_back(it == c.cells.end() ? tm.blank : it->second);
  }
  return w;
}

TuringMachine flip_tape(const TuringMachine& tm) {
  TuringMachine r = tm;
  for (auto& rule : r.rules)
    if (!rule.halt) rule.move = rule.move == Move::left ? Move::right : Move::left;
  r.head = tm.head == HeadStart::left ? HeadStart::right : HeadStart::left;
  return r;
}

std::pair<SymWord, SymWord> start_pair(const TuringMachine& tm, const SymWord& input, const MpcpOptions& opts) {
  auto L = [&](const std::string& s) { return letter(tm, s, opts); };
  const std::size_t p = tm.head == HeadStart::right && !input.empty() ? input.size() - 1 : 0;
  SymWord w = cat({L(kSep), L(tm.blank)});
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (!contains(tm.alphabet, input[i])) throw std::invalid_argument("input symbol not on the tape alphabet");
    if (i == p) w.push_back(tm.start);
    w = cat({w, L(input[i])});
  }
  if (input.empty()) w.push_back(tm.start);  // scans the trailing blank
  w = cat({w, L(tm.blank), L(kSep)});
  return {L(kSep), w};
}

SymPcp tm_to_mpcp(const TuringMachine& tm, const SymWord& input, const MpcpOptions& opts) {
  tm.validate();
  if (opts.copy_shortcut)
    for (const auto& s : {kLetterA, kLetterB})
      if (contains(tm.states, s) || contains(tm.alphabet, s))
        throw std::invalid_argument("copy shortcut reserves the symbols a and b");
  auto L = [&](const std::string& s) { return letter(tm, s, opts); };
  const SymWord sep = L(kSep), blank = L(tm.blank), halt{kHalt};
  SymPcp r;
  r.variant = Variant::mpcp;
  r.pairs.push_back(start_pair(tm, input, opts));
  r.pairs.push_back({cat({halt, sep, sep}), sep});
  if (opts.copy_shortcut) {
    r.pairs.push_back({{kLetterA}, {kLetterA}});
    r.pairs.push_back({{kLetterB}, {kLetterB}});
  } else {
    for (const auto& s : tape_letters(tm)) r.pairs.push_back({{s}, {s}});
  }
  if (!opts.unique) r.pairs.push_back({sep, cat({blank, sep, blank})});
  for (const auto& rule : tm.rules) {
    const SymWord q{rule.q}, s = L(rule.s);
    if (rule.halt) {
      r.pairs.push_back({cat({q, s}), halt});
    } else if (rule.move == Move::right) {
      r.pairs.push_back({cat({q, s}), cat({L(rule.write), {rule.next}})});
    } else {
      for (const auto& t : tm.alphabet)
        r.pairs.push_back({cat({L(t), q, s}), cat({{rule.next}, L(t), L(rule.write)})});
    }
  }
  if (opts.unique) {
    for (const auto& q : tm.states) r.pairs.push_back({cat({{q}, sep}), cat({{q}, blank, sep})});
    for (const auto& rule : tm.rules)
      if (!rule.halt && rule.move == Move::left)
        r.pairs.push_back({cat({sep, {rule.q}, L(rule.s)}), cat({sep, {rule.next}, blank, L(rule.write)})});
  }
  for (const auto& s : tm.alphabet) {
    if (opts.unique)
      r.pairs.push_back({cat({sep, halt, L(s)}), cat({sep, halt})});
    else
      r.pairs.push_back({cat({halt, L(s)}), halt});
    r.pairs.push_back({cat({L(s), halt}), halt});
  }
  return r;
}

std::size_t pair_count(const TuringMachine& tm, const MpcpOptions& opts) {
  const std::size_t g = tm.alphabet.size(), l = tm.count_moves(Move::left);
  std::size_t n = 3 * g + 3 + g * l + tm.count_moves(Move::right) + tm.count_halts() + 1;
  if (opts.unique) n = n - 1 + tm.states.size() + l;
  if (opts.copy_shortcut) n = n - (g + 1) + 2;
  return n;
}

SymPcp as_twompcp(const SymPcp& inst) {
  SymPcp r = inst;
  r.variant = Variant::twompcp;
  return r;
}

std::vector<SymWord> decode_trace(const TuringMachine& tm, const SymPcp& inst, const PcpSolution& sol,
                                  const MpcpOptions& opts) {
  SymWord top = concatenate(inst, sol).first;
  if (opts.copy_shortcut) {
    const auto ls = tape_letters(tm);
    SymWord plain;
    for (std::size_t i = 0; i < top.size();) {
      if (top[i] != kLetterB) {
        plain.push_back(top[i++]);
        continue;
      }
      std::size_t j = i + 1;
      while (j < top.size() && top[j] == kLetterA) ++j;
      if (j >= top.size() || top[j] != kLetterB || j - i - 1 >= ls.size())
        throw std::invalid_argument("decode_trace: broken codeword");
      plain.push_back(ls[j - i - 1]);
      i = j + 1;
    }
    top = plain;
  }
  std::vector<SymWord> configs;
  SymWord cur;
  for (const auto& s : top) {
    if (s == kHalt) break;
    if (s != kSep) {
      cur.push_back(s);
      continue;
    }
    if (!cur.empty()) {
      SymWord c = trim_blanks(cur, tm.blank);
      if (configs.empty() || configs.back() != c) configs.push_back(c);
    }
    cur.clear();
  }
  return configs;
}

std::vector<SymWord> run_trace(const TuringMachine& tm, const TmRun& run) {
  std::vector<SymWord> r;
  for (const auto& c : run.configs) {
    SymWord w = trim_blanks(config_symbols(tm, c), tm.blank);
    if (r.empty() || r.back() != w) r.push_back(w);
  }
  return r;
}

PrefixCode default_code(const TuringMachine& tm, const MpcpOptions& opts) {
  tm.validate();
  std::vector<std::string> letters = opts.copy_shortcut ? std::vector<std::string>{kLetterB, kLetterA}
                                                        : tape_letters(tm);
  if (!opts.copy_shortcut) std::swap(letters[0], letters[1]);  // blank first so that # gets the value 1
  std::size_t b = 1;
  while ((std::size_t{1} << b) - 1 < letters.size()) ++b;
  PrefixCode code;
  if (opts.copy_shortcut) {
    code[kLetterA] = "1" + bits_of(0, b);
    code[kLetterB] = "1" + bits_of(1, b);
  } else {
    code[tm.blank] = "1" + bits_of(0, b);
    code[kSep] = "1" + bits_of(1, b);
    std::size_t v = 2;
    for (const auto& s : tm.alphabet) {
      if (s == tm.blank) continue;
      code[s] = "1" + bits_of(v++, b);
    }
  }
  const std::size_t c = std::max<std::size_t>(1, width_for(tm.states.size() + 1));
  for (std::size_t i = 0; i < tm.states.size(); ++i) code[tm.states[i]] = "0" + bits_of(i, c);
  code[kHalt] = "0" + bits_of(tm.states.size(), c);
  validate_code(code);
  return code;
}

std::string target_name(Target t) {
  switch (t) {
    case Target::p12: return "p12";
    case Target::t9: return "t9";
    case Target::t11pi: return "t11pi";
    case Target::t11: return "t11";
    case Target::t18: return "t18";
  }
  return "?";
}

Target parse_target(const std::string& s) {
  for (Target t : {Target::p12, Target::t9, Target::t11pi, Target::t11, Target::t18})
    if (target_name(t) == s) return t;
  throw std::invalid_argument("unknown target " + s);
}

namespace {

bool reversed_target(Target t) { return t == Target::p12 || t == Target::t11 || t == Target::t18; }

Rational unit_of(std::size_t len, Target t) {
  const long per = t == Target::p12 ? 2 : 4;  // 4^-L for the 12-state boxes, 16^-L with the 11-state ones
  return pow2(-per * static_cast<long>(len));
}

RatVector pi0_11() {
  RatVector p(11);
  p[0] = Rational(1, 2);
  p[9] = Rational(1, 2);
  return p;
}

}  // namespace

FixedPipeline::FixedPipeline(TuringMachine tm, PrefixCode code, PipelineOptions opts)
    : tm_(std::move(tm)), code_(std::move(code)), opts_(std::move(opts)) {
  validate_code(code_);
  pairs_ = tm_to_mpcp(tm_, {}, opts_.mpcp);
  for (const auto& [v, w] : pairs_.pairs)
    for (const auto* word : {&v, &w})
      for (const auto& s : *word)
        if (!code_.count(s)) throw std::invalid_argument("code too short: no codeword for " + s);
  const std::size_t k = pairs_.size();
  const Target t = opts_.target;
  std::size_t longest = 0;
  for (std::size_t i = 2; i <= k; ++i) {
    auto [v, w] = bits(pairs_.pairs[i - 1].first, pairs_.pairs[i - 1].second);
    longest = std::max({longest, v.size(), w.size()});
  }
  gamma_ = opts_.gamma ? *opts_.gamma : unit_of(longest, t);
  auto add = [&](std::size_t i, RatMatrix m) {
    pair_of_symbol_.push_back(i);
    alphabet_.push_back("p" + std::to_string(i));
    matrices_.push_back(std::move(m));
  };
  auto words = [&](std::size_t i) { return bits(pairs_.pairs[i - 1].first, pairs_.pairs[i - 1].second); };
  auto [v2, w2] = words(2);
  switch (t) {
    case Target::p12: {
      for (std::size_t i = 2; i <= k; ++i) {
        auto [v, w] = words(i);
        add(i, box12(v, w, gamma_));
      }
      fixed_out_ = RatVector{0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 1, 0};
      break;
    }
    case Target::t9: {
      for (std::size_t i = 3; i <= k; ++i) {
        auto [v, w] = words(i);
        add(i, nine(v, w));
      }
      fixed_pi_ = RatVector::unit(9, 0) * nine(v2, w2);
      break;
    }
    case Target::t11pi: {
      for (std::size_t i = 3; i <= k; ++i) {
        auto [v, w] = words(i);
        add(i, eleven(v, w, gamma_));
      }
      fixed_pi_ = pi0_11() * eleven(v2, w2, gamma_);
      break;
    }
    case Target::t11: {
      for (std::size_t i = 3; i <= k; ++i) {
        auto [v, w] = words(i);
        add(i, eleven(v, w, gamma_));
      }
      add(2, eleven(v2, w2, gamma_) * m_infinity(fhat11(), 9, 10));
      fixed_out_ = RatVector::unit(11, 9);
      break;
    }
    case Target::t18: {
      const std::size_t first = opts_.keep_finish ? 2 : 3;
      RatVector f = opts_.keep_finish ? fhat9() : nine(v2, w2) * fhat9();
      Pfa tmp;
      for (std::size_t i = first; i <= k; ++i) {
        auto [v, w] = words(i);
        tmp.matrices.push_back(nine(v, w));
        tmp.alphabet.push_back("p" + std::to_string(i));
      }
      // the finishing pair comes last in reading order, so put it at the end of the alphabet
      if (opts_.keep_finish) {
        std::rotate(tmp.matrices.begin(), tmp.matrices.begin() + 1, tmp.matrices.end());
        std::rotate(tmp.alphabet.begin(), tmp.alphabet.begin() + 1, tmp.alphabet.end());
      }
      tmp.pi = RatVector::unit(9, 0);
      tmp.out = f;
      Pfa split = eliminate_output_vector(tmp);
      for (std::size_t j = 0; j < split.matrices.size(); ++j)
        add(static_cast<std::size_t>(std::stoul(tmp.alphabet[j].substr(1))), split.matrices[j]);
      fixed_out_ = split.out;
      break;
    }
  }
}

std::pair<std::string, std::string> FixedPipeline::bits(const SymWord& v, const SymWord& w) const {
  if (reversed_target(opts_.target)) return {encode(reversed(v), code_), encode(reversed(w), code_)};
  return {encode(v, code_), encode(w, code_)};
}

Pfa FixedPipeline::instantiate(const SymWord& input) const {
  auto [sv, sw] = start_pair(tm_, input, opts_.mpcp);
  auto [v1, w1] = bits(sv, sw);
  if (v1.back() != '1' || w1.back() != '1') throw std::invalid_argument("start pair codes must end with 1");
  Pfa r;
  r.alphabet = alphabet_;
  r.matrices = matrices_;
  const long len1 = static_cast<long>(std::max(v1.size(), w1.size()));
  switch (opts_.target) {
    case Target::p12:
      r.pi = starting_distribution(v1, w1, pow2(-2 * len1));
      r.out = *fixed_out_;
      r.cutpoint = Rational(1, 4);
      r.mode = Mode::strict;
      break;
    case Target::t9:
      r.pi = *fixed_pi_;
      r.out = nine(v1, w1) * fhat9();
      r.cutpoint = Rational(1, 2);
      r.mode = Mode::weak;
      break;
    case Target::t11pi:
      r.pi = *fixed_pi_;
      r.out = eleven(v1, w1, pow2(-4 * len1)) * fhat11();
      r.cutpoint = Rational(1, 4);
      r.mode = Mode::strict;
      break;
    case Target::t11:
      r.pi = pi0_11() * eleven(v1, w1, pow2(-4 * len1));
      r.out = *fixed_out_;
      r.cutpoint = Rational(1, 4);
      r.mode = Mode::strict;
      break;
    case Target::t18: {
      RatVector p = RatVector::unit(9, 0) * nine(v1, w1);
      auto [v2, w2] = bits(pairs_.pairs[1].first, pairs_.pairs[1].second);
      RatVector f = opts_.keep_finish ? fhat9() : nine(v2, w2) * fhat9();
      r.pi = RatVector(18);
      for (std::size_t j = 0; j < 9; ++j) {
        r.pi[j] = f[j] * p[j];
        r.pi[9 + j] = (1 - f[j]) * p[j];
      }
      r.out = *fixed_out_;
      r.cutpoint = Rational(1, 2);
      r.mode = Mode::weak;
      break;
    }
  }
  r.validate();
  return r;
}

PcpSolution FixedPipeline::to_mpcp(const Word& w) const {
  PcpSolution mid;
  for (auto a : w) mid.push_back(pair_of_symbol_.at(a));
  PcpSolution s{1};
  switch (opts_.target) {
    case Target::p12:
    case Target::t11:
      s.insert(s.end(), mid.begin(), mid.end());
      break;
    case Target::t18:
      s.insert(s.end(), mid.begin(), mid.end());
      if (!opts_.keep_finish) s.push_back(2);
      break;
    case Target::t9:
    case Target::t11pi:
      s.insert(s.end(), mid.rbegin(), mid.rend());
      s.push_back(2);
      break;
  }
  return s;
}

}  // namespace pfac
