#include "pfac/amplify.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfac {

namespace {

void require_probability(const Rational& x) {
  if (x < 0 || x > 1) throw std::invalid_argument("x must lie in [0,1]");
}

void require_free_symbols(const Pfa& a) {
  for (const auto& s : a.alphabet)
    if (s == kEnd || s == kCheck) throw std::invalid_argument("base alphabet already uses end or check");
}

// Fresh start state s at index 0; out[s] is the probability for the empty word.
Pfa patched(const Pfa& a) {
  a.validate();
  require_free_symbols(a);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.out[i] < 0 || a.out[i] > 1) throw std::invalid_argument("output values must lie in [0,1]");
  return with_fresh_start(a);
}

// Copies of the base occupy [offset, offset + d); symbol columns of the base are shared.
struct Builder {
  std::size_t n;
  std::vector<RatMatrix> ms;  // base symbols, then end, then check
  Builder(std::size_t dim, std::size_t symbols) : n(dim), ms(symbols + 2, RatMatrix(dim, dim)) {}
  RatMatrix& end() { return ms[ms.size() - 2]; }
  RatMatrix& check() { return ms.back(); }
  void copy(const Pfa& a, std::size_t off) {
    for (std::size_t s = 0; s < a.alphabet.size(); ++s) set_block(ms[s], off, off, a.matrices[s]);
  }
  // every symbol, or every symbol but check
  void to(std::size_t from, std::size_t dest, bool all_symbols) {
    for (std::size_t s = 0; s < ms.size(); ++s)
      if (all_symbols || s + 1 < ms.size()) ms[s](from, dest) = 1;
  }
};

}  // namespace

Pfa expanding_automaton(const Rational& x) {
  require_probability(x);
  enum { q0, plus, minus, top, bot };
  RatMatrix sim(5, 5), check(5, 5);
  sim(q0, q0) = 1;
  sim(plus, plus) = x;
  sim(plus, q0) = 1 - x;
  sim(minus, minus) = 1 - x;
  sim(minus, q0) = x;
  check(q0, plus) = Rational(1, 2);
  check(q0, minus) = Rational(1, 2);
  check(plus, top) = 1;
  check(minus, bot) = 1;
  for (auto* m : {&sim, &check}) {
    (*m)(top, top) = 1;
    (*m)(bot, bot) = 1;
  }
  Pfa p;
  p.alphabet = {kSim, kCheck};
  p.matrices = {sim, check};
  p.pi = RatVector::unit(5, q0);
  p.out = RatVector::unit(5, top);
  p.cutpoint = Rational(1, 2);
  p.mode = Mode::strict;
  p.state_names = {"q0", "+", "-", "top", "bot"};
  return p;
}

Pfa amplify_F(const Pfa& base) {
  const Pfa a = patched(base);
  const std::size_t d = a.dim(), k = a.alphabet.size();
  const std::size_t q0 = 0, plus = 1, minus = 1 + d, top = 1 + 2 * d, bot = top + 1, n = bot + 1;
  Builder b(n, k);
  b.to(q0, q0, false);  // waits for check
  b.check()(q0, plus) = Rational(1, 2);
  b.check()(q0, minus) = Rational(1, 2);
  b.copy(a, plus);
  b.copy(a, minus);
  for (std::size_t q = 0; q < d; ++q) {
    b.end()(plus + q, plus) += a.out[q];
    b.end()(plus + q, q0) += 1 - a.out[q];
    b.end()(minus + q, minus) += 1 - a.out[q];
    b.end()(minus + q, q0) += a.out[q];
    b.check()(plus + q, q == 0 ? top : bot) = 1;
    b.check()(minus + q, bot) = 1;
  }
  b.to(top, top, true);
  b.to(bot, bot, true);
  Pfa p;
  p.alphabet = a.alphabet;
  p.alphabet.push_back(kEnd);
  p.alphabet.push_back(kCheck);
  p.matrices = std::move(b.ms);
  p.pi = RatVector::unit(n, q0);
  p.out = RatVector::unit(n, top);
  p.cutpoint = Rational(1, 2);
  p.mode = Mode::strict;
  p.state_names.push_back("q0");
  for (const char* c : {"+", "-"})
    for (std::size_t q = 0; q < d; ++q) p.state_names.push_back(std::string(c) + std::to_string(q));
  p.state_names.push_back("top");
  p.state_names.push_back("bot");
  p.validate();
  return p;
}

Pfa amplify_NC(const Pfa& base) {
  const Pfa a = patched(base);
  const std::size_t d = a.dim(), k = a.alphabet.size();
  const std::size_t q0 = 0, first = 1, plus = 1 + d, minus = 1 + 2 * d, top = 1 + 3 * d, bot = top + 1, n = bot + 1;
  Builder b(n, k);
  b.to(q0, q0, false);
  b.check()(q0, first) = 1;
  b.copy(a, first);
  b.copy(a, plus);
  b.copy(a, minus);
  for (std::size_t q = 0; q < d; ++q) {
    b.end()(first + q, plus) += a.out[q];
    b.end()(first + q, minus) += 1 - a.out[q];
    b.end()(plus + q, plus) += a.out[q];
    b.end()(plus + q, q0) += 1 - a.out[q];
    b.end()(minus + q, minus) += 1 - a.out[q];
    b.end()(minus + q, q0) += a.out[q];
    b.check()(first + q, bot) = 1;  // empty or ill-formed round
    b.check()(plus + q, q == 0 ? top : bot) = 1;
    b.check()(minus + q, bot) = 1;
  }
  b.to(top, top, true);
  b.to(bot, bot, true);
  Pfa p;
  p.alphabet = a.alphabet;
  p.alphabet.push_back(kEnd);
  p.alphabet.push_back(kCheck);
  p.matrices = std::move(b.ms);
  p.pi = RatVector::unit(n, q0);
  p.out = RatVector::unit(n, top);
  p.cutpoint = Rational(1, 2);
  p.mode = Mode::strict;
  p.state_names.push_back("q0");
  for (const char* c : {"1.", "+", "-"})
    for (std::size_t q = 0; q < d; ++q) p.state_names.push_back(std::string(c) + std::to_string(q));
  p.state_names.push_back("top");
  p.state_names.push_back("bot");
  p.validate();
  return p;
}

std::pair<Rational, Rational> decided_mass(const Pfa& b, const std::vector<std::string>& w) {
  RatVector x = b.pi;
  for (auto s : parse_word(b, w)) x = x * b.matrices[s];
  const std::size_t n = b.dim();
  return {x[n - 2], x[n - 1]};
}

std::vector<std::string> rounds_word(const std::vector<std::string>& u, std::size_t n, std::size_t t) {
  std::vector<std::string> w{kCheck};
  for (std::size_t r = 0; r < t; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      w.insert(w.end(), u.begin(), u.end());
      w.push_back(kEnd);
    }
    w.push_back(kCheck);
  }
  return w;
}

std::vector<std::string> sim_word(std::size_t n, std::size_t t) {
  std::vector<std::string> w{kCheck};
  for (std::size_t r = 0; r < t; ++r) {
    w.insert(w.end(), n, kSim);
    w.push_back(kCheck);
  }
  return w;
}

Pfa go_automaton(const Rational& x) {
  require_probability(x);
  enum { P, Pf, N, Nf, top, bot };
  RatMatrix sim(6, 6), check(6, 6);
  sim(P, P) = x;
  sim(P, Pf) = 1 - x;
  sim(Pf, Pf) = 1;
  sim(N, N) = 1 - x;
  sim(N, Nf) = x;
  sim(Nf, Nf) = 1;
  check(P, top) = 1;
  check(Pf, P) = 1;
  check(N, bot) = 1;
  check(Nf, N) = 1;
  for (auto* m : {&sim, &check}) {
    (*m)(top, top) = 1;
    (*m)(bot, bot) = 1;
  }
  Pfa p;
  p.alphabet = {kSim, kCheck};
  p.matrices = {sim, check};
  p.pi = RatVector(6);
  p.pi[P] = Rational(1, 2);
  p.pi[N] = Rational(1, 2);
  p.out = RatVector{0, 0, 1, 1, 1, 0};  // the (-) branch accepts unless a round was all Minus
  p.cutpoint = Rational(1, 2);
  p.mode = Mode::strict;
  p.state_names = {"P", "Pf", "N", "Nf", "top", "bot"};
  return p;
}

std::vector<std::string> go_word(std::size_t n, std::size_t t) {
  std::vector<std::string> w;
  for (std::size_t r = 0; r < t; ++r) {
    w.insert(w.end(), n, kSim);
    w.push_back(kCheck);
  }
  return w;
}

std::pair<Rational, Rational> go_reject(const Rational& x, std::size_t n, std::size_t t) {
  Pfa p = go_automaton(x);
  const Word w = parse_word(p, go_word(n, t));
  Pfa plus = p, minus = p;
  plus.pi = RatVector::unit(6, 0);
  minus.pi = RatVector::unit(6, 2);
  return {1 - accept_prob(plus, w), 1 - accept_prob(minus, w)};
}

std::pair<Rational, Rational> ln_bracket(const Rational& y, const Rational& tol) {
  if (y <= 1) throw std::invalid_argument("ln_bracket: y > 1 required");
  // ln y = 2 atanh z, z = (y-1)/(y+1); the tail after the k-th term is at most 2 z^{2k+3} / ((2k+3)(1 - z^2))
  const Rational z = (y - 1) / (y + 1), z2 = z * z;
  Rational sum = 0, power = z;
  for (unsigned long k = 0;; ++k) {
    sum += 2 * power / Rational(static_cast<long>(2 * k + 1));
    power *= z2;
    Rational tail = 2 * power / (Rational(static_cast<long>(2 * k + 3)) * (1 - z2));
    if (tail <= tol) return {sum, sum + tail};
  }
}

RoundPlan go_input_builder(const Rational& x, const Rational& eps) {
  if (x <= Rational(1, 2) || x > 1) throw std::invalid_argument("go_input_builder: 1/2 < x <= 1 required");
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("go_input_builder: 0 < eps < 1 required");
  auto [lo, hi] = ln_bracket(2 / eps, Rational(1, 1024));
  const Rational rho = (1 - x) / x;
  RoundPlan plan;
  Rational xn = 1, rn = 1;
  for (plan.n = 1;; ++plan.n) {
    xn *= x;
    rn *= rho;
    if (rn * hi <= eps && xn <= Rational(1, 2)) break;  // rho^n <= eps / hi <= g
  }
  // t = floor(ln(2/eps) / x^n); tighten the bracket until both ends give the same floor
  Rational tol(1, 1024);
  for (;;) {
    Integer a = Rational(lo / xn).get_num() / Rational(lo / xn).get_den();
    Integer b = Rational(hi / xn).get_num() / Rational(hi / xn).get_den();
    if (a == b) {
      plan.t = a.get_ui();
      break;
    }
    tol /= 1024;
    std::tie(lo, hi) = ln_bracket(2 / eps, tol);
    if (tol < pow2(-200)) {  // ln(2/eps)/x^n is irrational, so this only guards a runaway loop
      plan.t = a.get_ui();
      break;
    }
  }
  return plan;
}

RoundPlan f_input_builder(const Rational& x, const Rational& eps) {
  if (x <= Rational(1, 2) || x > 1) throw std::invalid_argument("f_input_builder: 1/2 < x <= 1 required");
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("f_input_builder: 0 < eps < 1 required");
  const Rational rho = (1 - x) / x, half = eps / 2;
  RoundPlan plan;
  Rational rn = 1;
  for (plan.n = 1;; ++plan.n) {
    rn *= rho;
    if (rn <= half) break;
  }
  const Rational q = 1 - rpow(x, plan.n) / 2 - rpow(1 - x, plan.n) / 2;
  Rational qt = 1;
  for (plan.t = 1;; ++plan.t) {
    qt *= q;
    if (qt <= half) break;
  }
  return plan;
}

}  // namespace pfac
