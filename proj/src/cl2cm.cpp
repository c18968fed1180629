#include "pfac/cl2cm.hpp"

#include <algorithm>
#include <stdexcept>

#include "pfac/lump.hpp"

namespace pfac {

void TwoCounterMachine::validate() const {
  auto known = [&](const std::string& s) { return std::find(states.begin(), states.end(), s) != states.end(); };
  if (!known(start) || !known(halt)) throw std::invalid_argument("start or halting state missing");
  for (const auto& [key, act] : rules) {
    const auto& [q, lz, rz] = key;
    if (!known(q) || !known(act.next)) throw std::invalid_argument("rule on an unknown state");
    if (q == halt) throw std::invalid_argument("the halting state has no rules");
    if (act.dl < -1 || act.dl > 1 || act.dr < -1 || act.dr > 1) throw std::invalid_argument("counter change out of range");
    if ((lz && act.dl < 0) || (rz && act.dr < 0)) throw std::invalid_argument("decrement of a zero counter");
  }
}

std::vector<CmStep> run_cm(const TwoCounterMachine& m, std::size_t steps) {
  m.validate();
  std::vector<CmStep> run{{0, 0, m.start}};
  for (std::size_t s = 0; s < steps; ++s) {
    const CmStep& c = run.back();
    if (c.q == m.halt) break;
    auto it = m.rules.find({c.q, c.l == 0, c.r == 0});
    if (it == m.rules.end()) break;
    run.push_back({c.l + it->second.dl, c.r + it->second.dr, it->second.next});
  }
  return run;
}

std::vector<std::string> encode_computation(const std::vector<CmStep>& run) {
  std::vector<std::string> w;
  for (const auto& c : run) {
    w.insert(w.end(), static_cast<std::size_t>(c.l), "0");
    w.insert(w.end(), static_cast<std::size_t>(c.r), "1");
    w.push_back(c.q);
  }
  w.push_back("#");
  return w;
}

std::vector<std::string> encode_computation(const TwoCounterMachine& m, std::size_t steps) {
  return encode_computation(run_cm(m, steps));
}

std::optional<std::vector<CmStep>> formal_check(const TwoCounterMachine& m, const std::vector<std::string>& word) {
  m.validate();
  std::vector<CmStep> run;
  std::size_t i = 0;
  while (i < word.size() && word[i] != "#") {
    CmStep c;
    while (i < word.size() && word[i] == "0") ++c.l, ++i;
    while (i < word.size() && word[i] == "1") ++c.r, ++i;
    if (i >= word.size() || std::find(m.states.begin(), m.states.end(), word[i]) == m.states.end()) return std::nullopt;
    c.q = word[i++];
    run.push_back(c);
  }
  if (i + 1 != word.size() || run.empty()) return std::nullopt;
  if (run.front().l != 0 || run.front().r != 0 || run.front().q != m.start || run.back().q != m.halt) return std::nullopt;
  for (std::size_t k = 0; k + 1 < run.size(); ++k) {
    auto it = m.rules.find({run[k].q, run[k].l == 0, run[k].r == 0});
    if (it == m.rules.end() || it->second.next != run[k + 1].q) return std::nullopt;
  }
  return run;
}

void CheckerParams::validate() const {
  if (G < 2) throw std::invalid_argument("modulus G must be at least 2");
  if (K < 1) throw std::invalid_argument("K must be at least 1");
}

namespace {

// Luck flags: bit 0 red, 1 orange, 2 blue, 3 green.
enum Coin { red = 0, orange = 1, blue = 2, green = 3 };

struct Layout {
  int G;
  int pendings;  // 1 without padding, 7 with
  std::size_t reading(int phase, int flags, int diff, int pending = 0) const {
    return static_cast<std::size_t>((((phase * 16 + flags) * G + diff) * pendings) + pending);
  }
  std::size_t readers() const { return static_cast<std::size_t>(32 * G * pendings); }
  std::size_t sink(Outcome o) const { return readers() + static_cast<std::size_t>(o); }
  std::size_t size() const { return readers() + 4; }
};

// Distribution over flags after flipping each listed coin once.
std::vector<std::pair<int, Rational>> flip(int flags, std::initializer_list<Coin> coins) {
  std::vector<std::pair<int, Rational>> dist{{flags, Rational(1)}};
  for (Coin c : coins) {
    std::vector<std::pair<int, Rational>> next;
    for (const auto& [f, p] : dist) {
      if (f >> c & 1) {
        next.emplace_back(f, p / 2);
        next.emplace_back(f & ~(1 << c), p / 2);
      } else {
        next.emplace_back(f, p);
      }
    }
    dist = std::move(next);
  }
  return dist;
}

Outcome classify(int flags, int diff) {
  if (diff != 0) return Outcome::different;
  const bool d = (flags >> red & 1) || (flags >> orange & 1);
  const bool s = (flags >> blue & 1) || (flags >> green & 1);
  if (d && !s) return Outcome::different;
  if (s && !d) return Outcome::same;
  return Outcome::undecided;
}

int mod(int x, int g) { return ((x % g) + g) % g; }

EqualityChecker finish(Pfa p, const Layout& lay, const CheckerParams& params, bool lumped) {
  std::vector<Outcome> cls(lay.size(), Outcome::rejected);
  for (int o = 0; o < 4; ++o) cls[lay.sink(static_cast<Outcome>(o))] = static_cast<Outcome>(o);
  p.out = RatVector(lay.size());
  p.out[lay.sink(Outcome::same)] = 1;
  p.pi = RatVector::unit(lay.size(), lay.reading(0, 15, 0));
  p.cutpoint = 0;
  p.mode = Mode::strict;
  EqualityChecker ec;
  ec.naive_states = static_cast<std::size_t>(32 * params.G + 4);
  std::vector<std::size_t> kept;
  Pfa r = restrict_reachable(p, &kept);
  ec.reachable_states = r.dim();
  std::vector<Outcome> rc;
  for (auto k : kept) rc.push_back(cls[k]);
  if (!lumped) {
    ec.pfa = std::move(r);
    ec.classes = std::move(rc);
    return ec;
  }
  std::vector<int> labels;
  for (auto c : rc) labels.push_back(static_cast<int>(c));
  std::vector<std::size_t> block;
  ec.pfa = lump(r, labels, &block);
  ec.classes.assign(ec.pfa.dim(), Outcome::rejected);
  for (std::size_t i = 0; i < block.size(); ++i) ec.classes[block[i]] = rc[i];
  return ec;
}

}  // namespace

EqualityChecker equality_checker_pfa(const CheckerParams& params, bool lumped) {
  params.validate();
  const Layout lay{params.G, 1};
  const std::size_t n = lay.size();
  RatMatrix ma(n, n), mb(n, n), mh(n, n);
  for (int ph = 0; ph < 2; ++ph)
    for (int f = 0; f < 16; ++f)
      for (int d = 0; d < params.G; ++d) {
        const std::size_t s = lay.reading(ph, f, d);
        if (ph == 0) {
          for (const auto& [g, p] : flip(f, {red, red, blue, green})) ma(s, lay.reading(0, g, mod(d + 1, params.G))) += p;
        } else {
          ma(s, lay.sink(Outcome::rejected)) = 1;
        }
        for (const auto& [g, p] : flip(f, {orange, orange, blue, green}))
          mb(s, lay.reading(1, g, mod(d - 1, params.G))) += p;
        mh(s, lay.sink(classify(f, d))) = 1;
      }
  for (int o = 0; o < 4; ++o)
    for (auto* m : {&ma, &mb, &mh}) (*m)(lay.sink(static_cast<Outcome>(o)), lay.sink(Outcome::rejected)) = 1;
  Pfa p;
  p.alphabet = {"a", "b", "#"};
  p.matrices = {ma, mb, mh};
  return finish(std::move(p), lay, params, lumped);
}

EqualityChecker unit_coin_checker(const CheckerParams& params) {
  params.validate();
  const Layout lay{params.G, 7};
  const std::size_t n = lay.size();
  RatMatrix ma(n, n), mb(n, n), mh(n, n), mz(n, n);
  const std::size_t rej = lay.sink(Outcome::rejected);
  // pending 1..3: flips left after an a (red, blue, green); 4..6 after a b (orange, blue, green)
  const Coin after_a[4] = {red, red, blue, green}, after_b[4] = {orange, orange, blue, green};
  for (int ph = 0; ph < 2; ++ph)
    for (int f = 0; f < 16; ++f)
      for (int d = 0; d < params.G; ++d)
        for (int pend = 0; pend < 7; ++pend) {
          const std::size_t s = lay.reading(ph, f, d, pend);
          if (pend != 0) {
            ma(s, rej) = 1;
            mb(s, rej) = 1;
            mh(s, rej) = 1;
            const bool is_a = pend <= 3;
            const int left = is_a ? pend : pend - 3;  // flips still owed
            const Coin c = (is_a ? after_a : after_b)[4 - left];
            const int np = left == 1 ? 0 : pend - 1;
            for (const auto& [g, p] : flip(f, {c})) mz(s, lay.reading(ph, g, d, np)) += p;
            continue;
          }
          mz(s, rej) = 1;
          if (ph == 0) {
            for (const auto& [g, p] : flip(f, {red})) ma(s, lay.reading(0, g, mod(d + 1, params.G), 3)) += p;
          } else {
            ma(s, rej) = 1;
          }
          for (const auto& [g, p] : flip(f, {orange})) mb(s, lay.reading(1, g, mod(d - 1, params.G), 6)) += p;
          mh(s, lay.sink(classify(f, d))) = 1;
        }
  for (int o = 0; o < 4; ++o)
    for (auto* m : {&ma, &mb, &mh, &mz}) (*m)(lay.sink(static_cast<Outcome>(o)), rej) = 1;
  Pfa p;
  p.alphabet = {"a", "b", "#", "z"};
  p.matrices = {ma, mb, mh, mz};
  return finish(std::move(p), lay, params, true);
}

std::vector<std::string> pad_word(const std::vector<std::string>& word) {
  std::vector<std::string> r;
  for (const auto& s : word) {
    r.push_back(s);
    if (s == "a" || s == "b") r.insert(r.end(), 3, "z");
  }
  return r;
}

OutcomeProbs outcome_probs(const EqualityChecker& ec, const std::vector<std::string>& word) {
  RatVector x = ec.pfa.pi;
  for (auto a : parse_word(ec.pfa, word)) x = x * ec.pfa.matrices[a];
  OutcomeProbs r;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    switch (ec.classes[i]) {
      case Outcome::same: r.same += x[i]; break;
      case Outcome::different: r.different += x[i]; break;
      case Outcome::undecided: r.undecided += x[i]; break;
      case Outcome::rejected: r.rejected += x[i]; break;
    }
  }
  return r;
}

std::vector<std::string> checker_word(long i, long j) {
  std::vector<std::string> w(static_cast<std::size_t>(i), "a");
  w.insert(w.end(), static_cast<std::size_t>(j), "b");
  w.push_back("#");
  return w;
}

std::vector<std::pair<long, long>> checker_pairs(const TwoCounterMachine& m, const std::vector<CmStep>& run) {
  std::vector<std::pair<long, long>> r;
  for (std::size_t k = 0; k + 1 < run.size(); ++k) {
    const CmAction& act = m.rules.at({run[k].q, run[k].l == 0, run[k].r == 0});
    r.emplace_back(run[k].l + act.dl + 1, run[k + 1].l + 1);
    r.emplace_back(run[k].r + act.dr + 1, run[k + 1].r + 1);
  }
  return r;
}

RoundProbs correctness_test_probs(const TwoCounterMachine& m, const std::vector<std::string>& word,
                                  const CheckerParams& params) {
  auto run = formal_check(m, word);
  if (!run) return {0, 0, 1};
  const EqualityChecker ec = equality_checker_pfa(params);
  RoundProbs r{1, 1, 0};
  auto pairs = checker_pairs(m, *run);
  if (pairs.empty()) return {1, 0, 0};
  for (const auto& [i, j] : pairs) {
    OutcomeProbs o = outcome_probs(ec, checker_word(i, j));
    r.correct *= o.same;
    r.incorrect *= o.different;
  }
  r.null = 1 - r.correct - r.incorrect;
  return r;
}

Rational aggregate_accept_prob(const RoundProbs& round, std::size_t t, int K) {
  if (K < 1) throw std::invalid_argument("K must be at least 1");
  std::vector<Rational> mass(static_cast<std::size_t>(K));
  mass[0] = 1;
  Rational accept = 0;
  for (std::size_t r = 0; r < t; ++r) {
    Rational alive = 0;
    for (const auto& x : mass) alive += x;
    accept += alive * round.correct;
    for (std::size_t k = mass.size(); k-- > 0;) mass[k] = mass[k] * round.null + (k ? mass[k - 1] * round.incorrect : Rational(0));
  }
  return accept;
}

Rational aggregate_limit(const RoundProbs& round, int K) {
  const Rational d = round.correct + round.incorrect;
  if (d == 0) return 0;
  return 1 - rpow(round.incorrect / d, static_cast<unsigned long>(K));
}

Rational aggregate_lower_bound(const RoundProbs& round, const Integer& t, int K) {
  return aggregate_limit(round, K) - Rational(1) / (1 + round.correct * Rational(t));
}

Pfa coin_equality_pfa() {
  // One coin per letter of the given kind; state 0 while all flips came up heads.
  auto coin = [](int kind) {
    Pfa p;
    p.alphabet = {"a", "b", "#"};
    const RatMatrix flip{{Rational(1, 2), Rational(1, 2)}, {0, 1}};
    for (int s = 0; s < 3; ++s) p.matrices.push_back(s == kind ? flip : RatMatrix::identity(2));
    p.pi = RatVector::unit(2, 0);
    p.out = RatVector::unit(2, 0);
    return p;
  };
  const Pfa a = coin(0), b = coin(1);
  Pfa p = mixture({Rational(1, 4), Rational(1, 4), Rational(1, 2)},
                  {complement(product_pfa(a, a)), complement(product_pfa(b, b)), product_pfa(a, b)});
  p.cutpoint = Rational(1, 2);
  p.mode = Mode::weak;
  return p;
}

Rational majority_vote(const Rational& p, std::size_t n) {
  if (n % 2 == 0) throw std::invalid_argument("majority_vote: odd number of copies required");
  Rational r = 0;
  Integer binom = 1;  // C(n, k), built from k = 0 upward
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * static_cast<unsigned long>(n - k + 1) / static_cast<unsigned long>(k);
    if (2 * k > n) r += Rational(binom) * rpow(p, k) * rpow(1 - p, n - k);
  }
  return r;
}

}  // namespace pfac
