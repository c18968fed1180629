#include "pfac/intmat.hpp"

#include <stdexcept>

namespace pfac {

namespace {

void require_ternary(const std::string& u) {
  for (char c : u)
    if (c != '1' && c != '2') throw std::invalid_argument("word over {1,2} expected: " + u);
}

Rational p3(std::size_t e) { return Rational(ipow(3, e)); }

std::vector<std::string> index_alphabet(std::size_t n) {
  std::vector<std::string> r;
  for (std::size_t i = 1; i <= n; ++i) r.push_back(std::to_string(i));
  return r;
}

}  // namespace

Integer tern_value(const std::string& u) {
  require_ternary(u);
  Integer r = 0;
  for (char c : u) r = 3 * r + (c - '0');
  return r;
}

RatMatrix claus_A(const std::string& v, const std::string& w) {
  const Rational V(tern_value(v)), W(tern_value(w));
  const Rational lv = p3(v.size()), lw = p3(w.size());
  return RatMatrix{{1, -2 * V, 2 * W, V * V, W * W, -2 * V * W},
                   {0, lv, 0, -V * lv, 0, W * lv},
                   {0, 0, lw, 0, W * lw, -V * lw},
                   {0, 0, 0, lv * lv, 0, 0},
                   {0, 0, 0, 0, lw * lw, 0},
                   {0, 0, 0, 0, 0, lv * lw}};
}

RatVector claus_f(bool weak) { return RatVector{weak ? 0 : 1, 0, 0, -1, -1, -1}; }

RatMatrix hirvensalo_A(const std::string& v, const std::string& w) {
  const Rational V(tern_value(v)), W(tern_value(w));
  const Rational lv = p3(v.size()), lw = p3(w.size());
  return RatMatrix{{lv * lw, 0, 0, -V * lw, W * lv, -2 * V * W},
                   {0, lw * lw, 0, W * lw, 0, W * W},
                   {0, 0, lv * lv, 0, -V * lv, V * V},
                   {0, 0, 0, lw, 0, 2 * W},
                   {0, 0, 0, 0, lv, -2 * V},
                   {0, 0, 0, 0, 0, 1}};
}

RatVector hirvensalo_pi() { return RatVector{-2, -2, -2, 0, 0, 1}; }
RatVector hirvensalo_eta() { return RatVector::unit(6, 5); }

std::vector<RatMatrix> extend_final(const std::vector<RatMatrix>& bs, const RatVector& f) {
  std::vector<RatMatrix> r;
  for (const auto& b : bs) {
    const std::size_t n = b.rows();
    if (b.cols() != n || f.dim() != n) throw std::invalid_argument("extend_final: dimension mismatch");
    RatMatrix d(n + 1, n + 1);
    set_block(d, 0, 0, b);
    RatVector bf = b * f;
    for (std::size_t i = 0; i < n; ++i) d(i, n) = bf[i];
    r.push_back(d);
  }
  return r;
}

std::vector<RatMatrix> extend_start_final(const std::vector<RatMatrix>& ms, const RatVector& pi, const RatVector& f) {
  std::vector<RatMatrix> r;
  for (const auto& m : ms) {
    const std::size_t n = m.rows();
    if (m.cols() != n || f.dim() != n || pi.dim() != n)
      throw std::invalid_argument("extend_start_final: dimension mismatch");
    RatMatrix d(n + 2, n + 2);
    RatVector top = pi * m, mf = m * f;
    for (std::size_t j = 0; j < n; ++j) d(0, 1 + j) = top[j];
    d(0, n + 1) = dot(top, f);
    set_block(d, 1, 1, m);
    for (std::size_t i = 0; i < n; ++i) d(1 + i, n + 1) = mf[i];
    r.push_back(d);
  }
  return r;
}

std::vector<RatMatrix> zero_sums(const std::vector<RatMatrix>& ds) {
  std::vector<RatMatrix> r;
  for (const auto& d : ds) {
    const std::size_t n = d.rows();
    RatMatrix e(n + 2, n + 2);
    set_block(e, 0, 0, d);
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        e(i, n + 1) -= d(i, j);
        e(n, j) -= d(i, j);
        total += d(i, j);
      }
    e(n, n + 1) = total;
    r.push_back(e);
  }
  return r;
}

Rational turakainen_alpha(const std::vector<RatMatrix>& es) {
  if (es.empty()) throw std::invalid_argument("turakainen_alpha: no matrices");
  const Rational d(static_cast<long>(es.front().rows()));
  Rational worst = 0;  // largest d * |e| over negative entries
  for (const auto& e : es)
    for (std::size_t i = 0; i < e.rows(); ++i)
      for (std::size_t j = 0; j < e.cols(); ++j)
        if (e(i, j) < 0) {
          Rational x = -e(i, j) * d;
          if (x > worst) worst = x;
        }
  Rational alpha = 1;
  while (alpha * worst >= 1) alpha /= 2;
  return alpha;
}

std::vector<RatMatrix> turakainen(const std::vector<RatMatrix>& es, const Rational& alpha) {
  std::vector<RatMatrix> r;
  for (const auto& e : es) {
    const std::size_t d = e.rows();
    RatMatrix f(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) f(i, j) = Rational(1, static_cast<long>(d)) + alpha * e(i, j);
    if (!is_positive(f) || !is_row_stochastic(f)) throw std::logic_error("turakainen: alpha too large");
    r.push_back(f);
  }
  return r;
}

Pfa claus9_pipeline(const PcpInstance& inst, const ClausOptions& opts, IntegerStages* stages) {
  if (inst.size() < (opts.merge_last ? 2u : 1u)) throw std::invalid_argument("claus9_pipeline: too few pairs");
  IntegerStages s;
  for (const auto& [v, w] : inst.pairs) s.integer.push_back(claus_A(v, w));
  s.f = claus_f(opts.weak);
  if (opts.merge_last) {
    s.f = s.integer.back() * s.f;
    s.integer.pop_back();
  }
  s.pi = RatVector::unit(6, 0);
  s.extended = extend_final(s.integer, s.f);
  s.padded = zero_sums(s.extended);
  s.alpha = turakainen_alpha(s.padded);
  Pfa p;
  p.alphabet = index_alphabet(s.integer.size());
  p.matrices = turakainen(s.padded, s.alpha);
  p.pi = RatVector::unit(9, 0);
  p.out = RatVector::unit(9, 6);
  p.cutpoint = Rational(1, 9);
  p.mode = opts.weak ? Mode::weak : Mode::strict;
  if (stages) *stages = std::move(s);
  return p;
}

Pfa hirvensalo20_pipeline(const PcpInstance& inst, const HirvensaloOptions& opts, IntegerStages* stages) {
  if (inst.variant != Variant::twompcp) throw std::invalid_argument("hirvensalo20_pipeline: variant mismatch (2mpcp required)");
  const std::size_t k = inst.size();
  IntegerStages s;
  std::vector<RatMatrix> b;
  for (const auto& [v, w] : inst.pairs) b.push_back(hirvensalo_A(v, w));
  s.pi = hirvensalo_pi() * b[1];
  s.f = b[0] * hirvensalo_eta();
  if (opts.start_in_middle) s.integer.push_back(b[0]);
  for (std::size_t i = 2; i < k; ++i) s.integer.push_back(b[i]);
  const std::size_t n = s.integer.size();
  if (n < 2) throw std::invalid_argument("hirvensalo20_pipeline: at least two middle matrices needed");
  for (const auto& c : s.integer)
    for (std::size_t j = 0; j < 6; ++j)
      if (c(5, j) != (j == 5 ? 1 : 0)) throw std::logic_error("hirvensalo20_pipeline: last row is not a unit row");
  const std::size_t blocks = n - 1, dim = 5 * blocks + 1, last = dim - 1;
  auto hat = [](const RatMatrix& c) { return submatrix(c, 0, 0, 5, 5); };
  RatMatrix ma(dim, dim), mb(dim, dim);
  for (std::size_t i = 0; i + 1 < blocks; ++i) set_block(ma, 5 * i, 5 * (i + 1), RatMatrix::identity(5));
  set_block(ma, 5 * (blocks - 1), 0, hat(s.integer[n - 1]));
  for (std::size_t r = 0; r < 5; ++r) ma(5 * (blocks - 1) + r, last) = s.integer[n - 1](r, 5);
  for (std::size_t i = 0; i < blocks; ++i) {
    set_block(mb, 5 * i, 0, hat(s.integer[i]));
    for (std::size_t r = 0; r < 5; ++r) mb(5 * i + r, last) = s.integer[i](r, 5);
  }
  ma(last, last) = 1;
  mb(last, last) = 1;
  s.coded = {ma, mb};
  s.coded_pi = RatVector(dim);
  s.coded_f = RatVector(dim);
  for (std::size_t r = 0; r < 5; ++r) {
    s.coded_pi[r] = s.pi[r];
    for (std::size_t i = 0; i < blocks; ++i) s.coded_f[5 * i + r] = s.f[r];  // every counter value
  }
  s.coded_pi[last] = s.pi[5];
  s.coded_f[last] = s.f[5];
  s.extended = extend_start_final(s.coded, s.coded_pi, s.coded_f);
  s.padded = zero_sums(s.extended);
  s.alpha = turakainen_alpha(s.padded);
  const std::size_t d = dim + 4;
  Pfa p;
  p.alphabet = {"a", "b"};
  p.matrices = turakainen(s.padded, s.alpha);
  p.pi = RatVector::unit(d, 0);
  p.out = RatVector::unit(d, dim + 1);
  p.cutpoint = Rational(1, static_cast<long>(d));
  p.mode = Mode::strict;
  if (stages) *stages = std::move(s);
  return p;
}

Rational integer_value(const RatVector& pi, const std::vector<RatMatrix>& ms, const Word& w, const RatVector& f) {
  RatVector x = pi;
  for (auto a : w) x = x * ms.at(a);
  return dot(x, f);
}

Word code_word(const Word& w, std::size_t n) {
  if (n < 2) throw std::invalid_argument("code_word: at least two symbols needed");
  Word r;
  for (auto s : w) {
    if (s >= n) throw std::invalid_argument("code_word: symbol out of range");
    r.insert(r.end(), s, 0);
    if (s + 1 < n) r.push_back(1);
  }
  return r;
}

PcpSolution hirvensalo_decode(const Word& w, std::size_t pairs, const HirvensaloOptions& opts) {
  const std::size_t n = pairs - 2 + (opts.start_in_middle ? 1 : 0);
  PcpSolution mid;
  std::size_t as = 0;
  auto emit = [&](std::size_t s) {
    std::size_t idx = opts.start_in_middle ? (s == 0 ? 1 : s + 2) : s + 3;
    mid.push_back(idx);
  };
  for (auto c : w) {
    if (c == 1) {
      emit(as);
      as = 0;
    } else if (++as == n - 1) {
      emit(n - 1);
      as = 0;
    }
  }
  PcpSolution sol{1};
  sol.insert(sol.end(), mid.rbegin(), mid.rend());
  sol.push_back(2);
  return sol;
}

}  // namespace pfac
