#include "pfac/pfa.hpp"

#include <stdexcept>

namespace pfac {

std::size_t Pfa::symbol(const std::string& name) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == name) return i;
  throw std::invalid_argument("unknown symbol '" + name + "'");
}

void Pfa::validate() const {
  const std::size_t d = pi.dim();
  if (d == 0) throw std::invalid_argument("pfa: no states");
  if (matrices.size() != alphabet.size()) throw std::invalid_argument("pfa: one matrix per symbol required");
  for (std::size_t s = 0; s < matrices.size(); ++s) {
    const auto& m = matrices[s];
    if (m.rows() != d || m.cols() != d) throw std::invalid_argument("pfa: matrix '" + alphabet[s] + "' has wrong size");
    if (!is_row_stochastic(m)) throw std::invalid_argument("pfa: matrix '" + alphabet[s] + "' is not row-stochastic");
  }
  if (!is_distribution(pi)) throw std::invalid_argument("pfa: pi is not a distribution");
  if (out.dim() != d) throw std::invalid_argument("pfa: out has wrong size");
  for (std::size_t i = 0; i < d; ++i)
    if (out[i] < 0 || out[i] > 1) throw std::invalid_argument("pfa: out entries must lie in [0,1]");
  if (cutpoint < 0 || cutpoint > 1) throw std::invalid_argument("pfa: cutpoint outside [0,1]");
  if (!state_names.empty() && state_names.size() != d) throw std::invalid_argument("pfa: state_names size mismatch");
}

Word parse_word(const Pfa& p, const std::vector<std::string>& symbols) {
  Word w;
  w.reserve(symbols.size());
  for (const auto& s : symbols) w.push_back(p.symbol(s));
  return w;
}

std::vector<std::string> word_names(const Pfa& p, const Word& w) {
  std::vector<std::string> r;
  for (auto i : w) r.push_back(p.alphabet.at(i));
  return r;
}

Rational accept_prob(const Pfa& p, const Word& w) {
  RatVector x = p.pi;
  for (auto s : w) {
    if (s >= p.matrices.size()) throw std::invalid_argument("unknown symbol index");
    x = x * p.matrices[s];
  }
  return dot(x, p.out);
}

Rational accept_prob(const Pfa& p, const std::vector<std::string>& w) { return accept_prob(p, parse_word(p, w)); }

bool accepted(const Pfa& p, const Rational& prob) {
  return p.mode == Mode::strict ? prob > p.cutpoint : prob >= p.cutpoint;
}

static void same_alphabet(const Pfa& p, const Pfa& q) {
  if (p.alphabet != q.alphabet) throw std::invalid_argument("alphabet mismatch");
}

Pfa product_pfa(const Pfa& p, const Pfa& q) {
  same_alphabet(p, q);
  Pfa r;
  r.alphabet = p.alphabet;
  for (std::size_t s = 0; s < p.matrices.size(); ++s) r.matrices.push_back(kronecker(p.matrices[s], q.matrices[s]));
  RatVector pi(p.dim() * q.dim()), out(p.dim() * q.dim());
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < q.dim(); ++j) {
      pi[i * q.dim() + j] = p.pi[i] * q.pi[j];
      out[i * q.dim() + j] = p.out[i] * q.out[j];
    }
  r.pi = pi;
  r.out = out;
  r.cutpoint = p.cutpoint;
  r.mode = p.mode;
  if (!p.state_names.empty() && !q.state_names.empty())
    for (const auto& a : p.state_names)
      for (const auto& b : q.state_names) r.state_names.push_back("(" + a + "," + b + ")");
  return r;
}

Pfa complement(const Pfa& p) {
  Pfa r = p;
  for (std::size_t i = 0; i < r.out.dim(); ++i) r.out[i] = 1 - p.out[i];
  r.cutpoint = 1 - p.cutpoint;
  return r;
}

Pfa mixture(const std::vector<Rational>& weights, const std::vector<Pfa>& ps) {
  if (weights.size() != ps.size() || ps.empty()) throw std::invalid_argument("mixture: one weight per automaton");
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0) throw std::invalid_argument("mixture: negative weight");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("mixture: weights must sum to 1");
  for (const auto& q : ps) same_alphabet(ps[0], q);

  Pfa r;
  r.alphabet = ps[0].alphabet;
  for (std::size_t s = 0; s < r.alphabet.size(); ++s) {
    std::vector<RatMatrix> blocks;
    for (const auto& q : ps) blocks.push_back(q.matrices[s]);
    r.matrices.push_back(block_diag(blocks));
  }
  std::vector<Rational> pi, out;
  std::vector<std::string> names;
  bool named = true;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    for (std::size_t i = 0; i < ps[k].dim(); ++i) {
      pi.push_back(weights[k] * ps[k].pi[i]);
      out.push_back(ps[k].out[i]);
    }
    if (ps[k].state_names.empty()) named = false;
    for (const auto& n : ps[k].state_names) names.push_back(n);
  }
  r.pi = RatVector(pi);
  r.out = RatVector(out);
  r.cutpoint = ps[0].cutpoint;
  r.mode = ps[0].mode;
  if (named) r.state_names = names;
  return r;
}

Pfa with_fresh_start(const Pfa& p, std::optional<Rational> start_out) {
  const std::size_t d = p.dim();
  Pfa r;
  r.alphabet = p.alphabet;
  for (const auto& m : p.matrices) {
    RatMatrix n(d + 1, d + 1);
    RatVector first = p.pi * m;
    for (std::size_t j = 0; j < d; ++j) n(0, j + 1) = first[j];
    set_block(n, 1, 1, m);
    r.matrices.push_back(n);
  }
  r.pi = RatVector::unit(d + 1, 0);
  r.out = RatVector(d + 1);
  r.out[0] = start_out ? *start_out : dot(p.pi, p.out);
  for (std::size_t i = 0; i < d; ++i) r.out[i + 1] = p.out[i];
  r.cutpoint = p.cutpoint;
  r.mode = p.mode;
  if (!p.state_names.empty()) {
    r.state_names.push_back("start");
    for (const auto& n : p.state_names) r.state_names.push_back(n);
  }
  return r;
}

namespace {

struct Walker {
  const Pfa& p;
  std::size_t max_len;
  const std::function<void(const Word&, const Rational&)>& fn;
  Word word;

  void go(const RatVector& x) {
    fn(word, dot(x, p.out));
    if (word.size() == max_len) return;
    for (std::size_t s = 0; s < p.matrices.size(); ++s) {
      word.push_back(s);
      go(x * p.matrices[s]);
      word.pop_back();
    }
  }
};

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

void for_each_word(const Pfa& p, std::size_t max_len, const std::function<void(const Word&, const Rational&)>& fn) {
  Walker w{p, max_len, fn, {}};
  w.go(p.pi);
}

SearchReport bounded_search(const Pfa& p, std::size_t max_len, Want want) {
  SearchReport rep;
  bool first = true;
  for_each_word(p, max_len, [&](const Word& w, const Rational& prob) {
    ++rep.words;
    if (first || prob > rep.max_seen || (prob == rep.max_seen && shortlex_less(w, rep.argmax))) {
      rep.max_seen = prob;
      rep.argmax = w;
      first = false;
    }
    bool hit = false;
    switch (want.kind) {
      case Want::above: hit = prob > p.cutpoint; break;
      case Want::at_least: hit = prob >= p.cutpoint; break;
      case Want::exactly: hit = prob == want.value; break;
    }
    if (hit && (!rep.witness || shortlex_less(w, rep.witness->word))) rep.witness = Witness{w, prob};
  });
  return rep;
}

}  // namespace pfac
