#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfac/pcp.hpp"
#include "pfac/pfa.hpp"

namespace pfac {

enum class Move { left, right };
enum class HeadStart { left, right };  // head on the first or on the last input cell

struct TmRule {
  std::string q, s;
  bool halt = false;
  std::string write;
  Move move = Move::right;
  std::string next;
};

struct TuringMachine {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;  // includes the blank
  std::string blank;
  std::string start;
  std::vector<TmRule> rules;
  HeadStart head = HeadStart::left;

  void validate() const;  // throws std::invalid_argument
  const TmRule* find(const std::string& q, const std::string& s) const;
  std::size_t count_moves(Move m) const;
  std::size_t count_halts() const;
};

// Separator and halting symbols of the word pairs.
inline const std::string kSep = "#";
inline const std::string kHalt = "H";

struct TmConfig {
  std::string state;
  long head = 0;
  std::map<long, std::string> cells;  // non-blank cells only
};

struct TmRun {
  std::vector<TmConfig> configs;  // configs[0] is the initial one
  bool halted = false;
};

TmRun run_tm(const TuringMachine& tm, const SymWord& input, std::size_t max_steps);
// Symbols between the outermost non-blank cells (and the head), state written left of the head cell.
SymWord config_symbols(const TuringMachine& tm, const TmConfig& c);
// Left and right moves exchanged; the head convention is toggled so the reversed input gives the mirrored run.
TuringMachine flip_tape(const TuringMachine& tm);

struct MpcpOptions {
  bool unique = false;         // no padding pair; blanks inserted at the borders instead
  bool copy_shortcut = false;  // tape symbols coded as b a^i b, copying pairs reduced to (a,a),(b,b)
};

// Pair 1 is the start pair, pair 2 the finishing pair (H##, #).
SymPcp tm_to_mpcp(const TuringMachine& tm, const SymWord& input, const MpcpOptions& opts = {});
std::pair<SymWord, SymWord> start_pair(const TuringMachine& tm, const SymWord& input, const MpcpOptions& opts = {});
std::size_t pair_count(const TuringMachine& tm, const MpcpOptions& opts = {});
// Same pairs, variant twompcp.
SymPcp as_twompcp(const SymPcp& inst);

// Configurations spelled by a solution, blanks trimmed at both ends, repeats collapsed, halting phase dropped.
std::vector<SymWord> decode_trace(const TuringMachine& tm, const SymPcp& inst, const PcpSolution& sol,
                                  const MpcpOptions& opts = {});
// The run in the same normal form.
std::vector<SymWord> run_trace(const TuringMachine& tm, const TmRun& run);

// Tape symbols and # get 1 followed by b bits (# = 1..01, blank = 1..00, never all ones);
// states and H get 0 followed by c bits, H last.
PrefixCode default_code(const TuringMachine& tm, const MpcpOptions& opts = {});

enum class Target { p12, t9, t11pi, t11, t18 };
std::string target_name(Target t);
Target parse_target(const std::string& s);

struct PipelineOptions {
  Target target = Target::p12;
  MpcpOptions mpcp;
  std::optional<Rational> gamma;  // override of the unit used by the boxes
  bool keep_finish = false;       // t18: keep the finishing matrix in the set instead of folding it into f
};

// Rule-derived matrices built once; the input tape only enters pi (or f).
class FixedPipeline {
 public:
  FixedPipeline(TuringMachine tm, PrefixCode code, PipelineOptions opts);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<RatMatrix>& matrices() const { return matrices_; }
  const std::optional<RatVector>& fixed_pi() const { return fixed_pi_; }
  const std::optional<RatVector>& fixed_out() const { return fixed_out_; }
  const Rational& gamma() const { return gamma_; }
  const SymPcp& middle() const { return pairs_; }  // pairs with an empty placeholder start pair

  Pfa instantiate(const SymWord& input) const;
  // Index sequence of the underlying MPCP spelled by a PFA word.
  PcpSolution to_mpcp(const Word& w) const;

 private:
  std::pair<std::string, std::string> bits(const SymWord& v, const SymWord& w) const;

  TuringMachine tm_;
  PrefixCode code_;
  PipelineOptions opts_;
  SymPcp pairs_;
  std::vector<std::size_t> pair_of_symbol_;  // 1-based pair index for each alphabet symbol
  std::vector<std::string> alphabet_;
  std::vector<RatMatrix> matrices_;
  std::optional<RatVector> fixed_pi_, fixed_out_;
  Rational gamma_;
};

}  // namespace pfac
