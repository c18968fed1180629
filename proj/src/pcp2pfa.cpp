#include "pfac/pcp2pfa.hpp"

#include <algorithm>
#include <stdexcept>

#include "pfac/binaut.hpp"

namespace pfac {

namespace {

std::vector<std::string> index_alphabet(std::size_t first, std::size_t k) {
  std::vector<std::string> a;
  for (std::size_t i = first; i <= k; ++i) a.push_back(std::to_string(i));
  return a;
}

Pfa two_state(const PcpInstance& inst, bool top, const std::string& name) {
  Pfa p;
  p.alphabet = index_alphabet(1, inst.size());
  for (const auto& [v, w] : inst.pairs) p.matrices.push_back(B(top ? v : w));
  p.pi = RatVector::unit(2, 0);
  p.out = RatVector::unit(2, 1);
  p.state_names = {name + "0", name + "1"};
  return p;
}

RatMatrix absorbing_pair(const Rational& gamma) { return RatMatrix{{gamma, 1 - gamma}, {0, 1}}; }

Pfa finish_equality(Pfa p) {
  p.cutpoint = Rational(1, 2);
  p.mode = Mode::weak;
  return p;
}

}  // namespace

Rational unit_gamma(const PcpInstance& inst, std::size_t first) {
  std::size_t m = 0;
  for (std::size_t i = first; i <= inst.size(); ++i)
    m = std::max({m, inst.pairs[i - 1].first.size(), inst.pairs[i - 1].second.size()});
  return pow2(-2 * static_cast<long>(m));
}

std::pair<Pfa, Pfa> phi_psi_automata(const PcpInstance& inst) {
  for (const auto& [v, w] : inst.pairs) {
    require_binary(v);
    require_binary(w);
  }
  return {two_state(inst, true, "Phi"), two_state(inst, false, "Psi")};
}

Pfa merged_square(const Pfa& p) {
  if (p.dim() != 2) throw std::invalid_argument("merged_square: 2-state automaton expected");
  Pfa r;
  r.alphabet = p.alphabet;
  for (const auto& m : p.matrices) r.matrices.push_back(merged3(m));
  r.pi = RatVector{p.pi[0] * p.pi[0], 2 * p.pi[0] * p.pi[1], p.pi[1] * p.pi[1]};
  if (p.out[0] != 0 || p.out[1] != 1)
    throw std::invalid_argument("merged_square: out must be the indicator of the second state");
  r.out = RatVector{0, 0, 1};
  if (p.state_names.size() == 2) {
    const auto& a = p.state_names[0];
    const auto& b = p.state_names[1];
    r.state_names = {"(" + a + "," + a + ")", "{" + a + "," + b + "}", "(" + b + "," + b + ")"};
  }
  return r;
}

Pfa equality_pfa_13(const PcpInstance& inst) {
  auto [phi, psi] = phi_psi_automata(inst);
  Pfa mix = mixture({Rational(1, 2), Rational(1, 4), Rational(1, 4)},
                    {product_pfa(phi, psi), complement(product_pfa(phi, phi)), complement(product_pfa(psi, psi))});
  return finish_equality(with_fresh_start(mix, Rational(0)));
}

Pfa equality_pfa_11(const PcpInstance& inst) {
  auto [phi, psi] = phi_psi_automata(inst);
  Pfa mix = mixture({Rational(1, 2), Rational(1, 4), Rational(1, 4)},
                    {product_pfa(phi, psi), complement(merged_square(phi)), complement(merged_square(psi))});
  return finish_equality(with_fresh_start(mix, Rational(0)));
}

Pfa strict_gadget(const Pfa& p, const GadgetParams& params) {
  const Rational& lambda = params.cutpoint;
  if (lambda <= 0 || lambda >= Rational(1, 2)) throw std::invalid_argument("strict_gadget: cutpoint must lie in (0,1/2)");
  const Rational gamma = params.gamma;
  const Rational gamma1 = params.gamma1 ? *params.gamma1 : gamma;
  if (gamma <= 0 || gamma > Rational(1, 4) || gamma1 <= 0 || gamma1 > Rational(1, 4))
    throw std::invalid_argument("strict_gadget: gamma must lie in (0,1/4]");
  const std::size_t d = p.dim();
  if (p.pi != RatVector::unit(d, 0)) throw std::invalid_argument("strict_gadget: automaton must start in state 0");
  for (std::size_t s = 0; s < p.matrices.size(); ++s) {
    const auto& m = p.matrices[s];
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(m(i, 0)) != 0) throw std::invalid_argument("strict_gadget: start state must not be re-entered");
      const Rational unit = i == 0 ? gamma1 / 4 : gamma;
      for (std::size_t j = 0; j < d; ++j)
        if (!is_multiple_of(m(i, j), unit)) throw std::invalid_argument("strict_gadget: gamma-divisibility violated");
    }
  }
  for (std::size_t i = 1; i < d; ++i)
    if (p.out[i] != 0 && p.out[i] != 1) throw std::invalid_argument("strict_gadget: out must be 0-1");

  const Rational wp = 2 * lambda;
  Rational wa = lambda / 2;
  while (wp + wa > 1) wa /= 2;
  const Rational wr = 1 - wp - wa;
  const std::size_t qa = d, qr = d + 1;

  Pfa r;
  r.alphabet = p.alphabet;
  for (const auto& m : p.matrices) {
    RatMatrix n(d + 2, d + 2);
    set_block(n, 0, 0, m);
    for (std::size_t j = 0; j < d; ++j) n(0, j) = wp * m(0, j);
    n(0, qa) = wa * gamma1;
    n(0, qr) = wa * (1 - gamma1) + wr;
    n(qa, qa) = gamma;
    n(qa, qr) = 1 - gamma;
    n(qr, qr) = 1;
    r.matrices.push_back(n);
  }
  r.pi = RatVector::unit(d + 2, 0);
  r.out = RatVector(d + 2);
  for (std::size_t i = 1; i < d; ++i) r.out[i] = p.out[i];
  r.out[0] = wp * p.out[0] + wa;
  r.out[qa] = 1;
  r.cutpoint = lambda;
  r.mode = Mode::strict;
  if (!p.state_names.empty()) {
    r.state_names = p.state_names;
    r.state_names.push_back("qA");
    r.state_names.push_back("qR");
  }
  return r;
}

Pfa strict_15(const PcpInstance& inst) { return strict_gadget(equality_pfa_13(inst), {unit_gamma(inst), std::nullopt, {1, 4}}); }
Pfa strict_13(const PcpInstance& inst) { return strict_gadget(equality_pfa_11(inst), {unit_gamma(inst), std::nullopt, {1, 4}}); }

RatMatrix box12(const std::string& v, const std::string& w, const Rational& gamma) {
  RatMatrix bv = B(v), bw = B(w);
  return block_diag({kronecker(bv, bw), merged3(bv), merged3(bw), absorbing_pair(gamma)});
}

RatMatrix nine(const std::string& v, const std::string& w) { return kronecker(merged3(B(v)), merged3(B(w))); }

RatMatrix eleven(const std::string& v, const std::string& w, const Rational& gamma) {
  return block_diag({nine(v, w), absorbing_pair(gamma)});
}

RatVector fhat9() {
  RatVector f(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      f[3 * a + b] = Rational(1, 8) * (a * b) + Rational(1, 4) * (a == 2 ? 0 : 1) + Rational(1, 4) * (b == 2 ? 0 : 1);
  return f;
}

RatVector fhat11() {
  RatVector f9 = fhat9();
  RatVector f(11);
  for (std::size_t i = 0; i < 9; ++i) f[i] = f9[i];
  f[9] = Rational(1, 8);
  return f;
}

RatVector starting_distribution(const std::string& v1, const std::string& w1, const Rational& gamma1) {
  RatMatrix m = box12(v1, w1, gamma1);
  RatVector pi0(12);
  pi0[0] = Rational(1, 2) * Rational(1, 2);
  pi0[4] = Rational(1, 2) * Rational(1, 4);
  pi0[7] = Rational(1, 2) * Rational(1, 4);
  pi0[10] = Rational(1, 8);
  pi0[11] = Rational(3, 8);
  return pi0 * m;
}

Pfa minf_11(const PcpInstance& inst) {
  if (inst.variant != Variant::twormpcp) throw std::invalid_argument("minf_11: variant mismatch (twormpcp required)");
  if (inst.size() < 2) throw std::invalid_argument("minf_11: at least two pairs required");
  require_end_with_one(inst);
  for (const auto& [v, w] : inst.pairs) {
    require_binary(v);
    require_binary(w);
  }
  std::size_t longest = 0;
  for (std::size_t i = 2; i <= inst.size(); ++i)
    longest = std::max({longest, inst.pairs[i - 1].first.size(), inst.pairs[i - 1].second.size()});
  const Rational g = pow2(-4 * static_cast<long>(longest));
  const auto& [v1, w1] = inst.pairs[0];
  RatVector pi0(11);
  pi0[0] = Rational(1, 2);
  pi0[9] = Rational(1, 2);
  Pfa r;
  for (std::size_t i = 3; i <= inst.size(); ++i) {
    r.alphabet.push_back(std::to_string(i));
    r.matrices.push_back(eleven(inst.pairs[i - 1].first, inst.pairs[i - 1].second, g));
  }
  r.alphabet.push_back("2");
  r.matrices.push_back(eleven(inst.pairs[1].first, inst.pairs[1].second, g));
  r.pi = pi0 * eleven(v1, w1, pow2(-4 * static_cast<long>(std::max(v1.size(), w1.size()))));
  r.out = fhat11();
  r = m_infinity_closure(r, 9, 10, "2");
  r.validate();
  return r;
}

Pfa rmpcp_compile(const PcpInstance& inst, std::optional<Rational> gamma, std::optional<Rational> gamma1) {
  if (inst.variant != Variant::rmpcp) throw std::invalid_argument("rmpcp_compile: variant mismatch (rmpcp required)");
  if (inst.size() < 2) throw std::invalid_argument("rmpcp_compile: at least two pairs required");
  require_end_with_one(inst);
  for (const auto& [v, w] : inst.pairs) {
    require_binary(v);
    require_binary(w);
  }
  const Rational g = gamma ? *gamma : unit_gamma(inst, 2);
  const auto& [v1, w1] = inst.pairs[0];
  const Rational g1 = gamma1 ? *gamma1 : pow2(-2 * static_cast<long>(std::max(v1.size(), w1.size())));
  Pfa r;
  for (std::size_t i = 2; i <= inst.size(); ++i) {
    r.alphabet.push_back(std::to_string(i));
    r.matrices.push_back(box12(inst.pairs[i - 1].first, inst.pairs[i - 1].second, g));
  }
  r.pi = starting_distribution(v1, w1, g1);
  r.out = RatVector{0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 1, 0};
  r.cutpoint = Rational(1, 4);
  r.mode = Mode::strict;
  r.state_names = {"(Phi0,Psi0)", "(Phi0,Psi1)", "(Phi1,Psi0)", "(Phi1,Psi1)", "(Phi0,Phi0)", "{Phi0,Phi1}",
                   "(Phi1,Phi1)", "(Psi0,Psi0)", "{Psi0,Psi1}", "(Psi1,Psi1)", "qA", "qR"};
  return r;
}

Pfa nine_state_pfa(const PcpInstance& inst) {
  Pfa r;
  r.alphabet = index_alphabet(1, inst.size());
  for (const auto& [v, w] : inst.pairs) r.matrices.push_back(nine(v, w));
  r.pi = RatVector::unit(9, 0);
  r.out = fhat9();
  r.cutpoint = Rational(1, 2);
  r.mode = Mode::weak;
  const char* cls[3] = {"0", "01", "1"};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) r.state_names.push_back(std::string("Phi") + cls[a] + ",Psi" + cls[b]);
  return r;
}

Pfa eliminate_output_vector(const Pfa& p) {
  const std::size_t d = p.dim();
  const RatVector& f = p.out;
  Pfa r;
  r.alphabet = p.alphabet;
  for (const auto& m : p.matrices) {
    RatMatrix n(2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Rational plus = f[j] * m(i, j), minus = (1 - f[j]) * m(i, j);
        n(i, j) = plus;
        n(d + i, j) = plus;
        n(i, d + j) = minus;
        n(d + i, d + j) = minus;
      }
    r.matrices.push_back(n);
  }
  r.pi = RatVector(2 * d);
  r.out = RatVector(2 * d);
  for (std::size_t j = 0; j < d; ++j) {
    r.pi[j] = f[j] * p.pi[j];
    r.pi[d + j] = (1 - f[j]) * p.pi[j];
    r.out[j] = 1;
  }
  r.cutpoint = p.cutpoint;
  r.mode = p.mode;
  if (!p.state_names.empty()) {
    for (const auto& s : p.state_names) r.state_names.push_back(s + "+");
    for (const auto& s : p.state_names) r.state_names.push_back(s + "-");
  }
  return r;
}

RatMatrix m_infinity(const RatVector& f, std::size_t qa, std::size_t qr) {
  const std::size_t d = f.dim();
  RatMatrix m(d, d);
  for (std::size_t q = 0; q < d; ++q) {
    m(q, qa) += f[q];
    m(q, qr) += 1 - f[q];
  }
  return m;
}

Pfa m_infinity_closure(const Pfa& p, std::size_t qa, std::size_t qr, const std::string& finish) {
  const std::size_t d = p.dim();
  if (qa >= d || qr >= d || qa == qr) throw std::invalid_argument("m_infinity_closure: missing q_A/q_R");
  if (p.out[qa] != Rational(1, 8) || p.out[qr] != 0)
    throw std::invalid_argument("m_infinity_closure: q_A must have output 1/8 and q_R output 0");
  for (const auto& m : p.matrices)
    if (m(qr, qr) != 1) throw std::invalid_argument("m_infinity_closure: q_R must be absorbing");
  RatMatrix minf = m_infinity(p.out, qa, qr);
  Pfa r = p;
  if (finish.empty()) {
    r.alphabet.push_back("inf");
    r.matrices.push_back(minf);
  } else {
    std::size_t s = p.symbol(finish);
    r.matrices[s] = p.matrices[s] * minf;
  }
  r.out = RatVector::unit(d, qa);
  r.cutpoint = Rational(1, 4);
  r.mode = Mode::strict;
  return r;
}

std::vector<std::string> binary_codewords(std::size_t k) {
  std::vector<std::string> c;
  for (std::size_t i = 0; i + 1 < k; ++i) c.push_back(std::string(i, 'a') + "b");
  c.push_back(std::string(k - 1, 'a'));
  return c;
}

Pfa code_binary(const Pfa& p) {
  const std::size_t k = p.alphabet.size(), d = p.dim();
  if (k <= 2) throw std::invalid_argument("code_binary: alphabet must have more than two symbols");
  const std::size_t n = (k - 1) * d;
  RatMatrix ma(n, n), mb(n, n);
  for (std::size_t i = 0; i + 2 < k; ++i) set_block(ma, i * d, (i + 1) * d, RatMatrix::identity(d));
  set_block(ma, (k - 2) * d, 0, p.matrices[k - 1]);
  for (std::size_t i = 0; i + 1 < k; ++i) set_block(mb, i * d, 0, p.matrices[i]);
  Pfa r;
  r.alphabet = {"a", "b"};
  r.matrices = {ma, mb};
  r.pi = RatVector(n);
  r.out = RatVector(n);
  for (std::size_t j = 0; j < d; ++j) {
    r.pi[j] = p.pi[j];
    r.out[j] = p.out[j];
  }
  r.cutpoint = p.cutpoint;
  r.mode = p.mode;
  if (!p.state_names.empty())
    for (std::size_t i = 0; i + 1 < k; ++i)
      for (const auto& s : p.state_names) r.state_names.push_back(s + "@" + std::to_string(i));
  return r;
}

Pfa pcp_construction(const std::string& name, const PcpInstance& inst) {
  if (name == "eq13") return equality_pfa_13(inst);
  if (name == "eq11") return equality_pfa_11(inst);
  if (name == "strict15") return strict_15(inst);
  if (name == "strict13") return strict_13(inst);
  if (name == "rmpcp12") return rmpcp_compile(inst);
  if (name == "nine9") return nine_state_pfa(inst);
  if (name == "out18") return eliminate_output_vector(nine_state_pfa(inst));
  if (name == "minf11") return minf_11(inst);
  if (name == "bin2") return code_binary(strict_15(inst));
  throw std::invalid_argument("unknown construction " + name);
}

}  // namespace pfac
