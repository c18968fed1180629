#include "pfac/pcp.hpp"

#include <set>

#include "pfac/binaut.hpp"

namespace pfac {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::plain: return "plain";
    case Variant::mpcp: return "mpcp";
    case Variant::rmpcp: return "rmpcp";
    case Variant::twompcp: return "2mpcp";
    case Variant::twormpcp: return "2rmpcp";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  for (auto v : {Variant::plain, Variant::mpcp, Variant::rmpcp, Variant::twompcp, Variant::twormpcp})
    if (variant_name(v) == s) return v;
  throw std::invalid_argument("unknown pcp variant '" + s + "'");
}

bool is_reversed(Variant v) { return v == Variant::rmpcp || v == Variant::twormpcp; }

PcpInstance antizero(const PcpInstance& inst) {
  auto f = [](const std::string& u) {
    std::string r;
    for (char c : u) {
      r += c;
      r += '1';
    }
    return r;
  };
  PcpInstance r = inst;
  for (auto& [v, w] : r.pairs) {
    v = f(v);
    w = f(w);
  }
  return r;
}

namespace {

// Dangling suffixes of a word that has b as a prefix.
void dangling(const std::set<std::string>& a, const std::set<std::string>& b, std::set<std::string>& out) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (x.size() < y.size() && y.compare(0, x.size(), x) == 0) out.insert(y.substr(x.size()));
}

}  // namespace

bool uniquely_decodable(const PrefixCode& code) {
  std::set<std::string> c;
  for (const auto& [sym, w] : code) {
    if (w.empty()) return false;
    if (!c.insert(w).second) return false;
  }
  // Sardinas-Patterson.
  std::set<std::string> s;
  dangling(c, c, s);
  std::set<std::set<std::string>> seen;
  while (!s.empty()) {
    for (const auto& x : s)
      if (c.count(x)) return false;
    if (!seen.insert(s).second) return true;
    std::set<std::string> n;
    dangling(c, s, n);
    dangling(s, c, n);
    s = n;
  }
  return true;
}

void validate_code(const PrefixCode& code) {
  for (const auto& [sym, w] : code) require_binary(w);
  if (!uniquely_decodable(code)) throw std::invalid_argument("code collision: code is not uniquely decodable");
}

std::string encode(const SymWord& w, const PrefixCode& code) {
  std::string r;
  for (const auto& s : w) {
    auto it = code.find(s);
    if (it == code.end()) throw std::invalid_argument("code has no codeword for symbol '" + s + "'");
    r += it->second;
  }
  return r;
}

PcpInstance binarize(const SymPcp& inst, const PrefixCode& code) {
  validate_code(code);
  PcpInstance r;
  r.variant = inst.variant;
  for (const auto& [v, w] : inst.pairs) r.pairs.emplace_back(encode(v, code), encode(w, code));
  return r;
}

std::optional<SymWord> decode(const std::string& bits, const PrefixCode& code) {
  // Greedy works for prefix codes; fall back to a search for general uniquely decodable codes.
  std::vector<std::optional<SymWord>> best(bits.size() + 1);
  best[0] = SymWord{};
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (!best[i]) continue;
    for (const auto& [sym, w] : code)
      if (bits.compare(i, w.size(), w) == 0 && i + w.size() <= bits.size() && !best[i + w.size()]) {
        SymWord n = *best[i];
        n.push_back(sym);
        best[i + w.size()] = n;
      }
  }
  return best[bits.size()];
}

void require_end_with_one(const PcpInstance& inst) {
  auto check = [&](std::size_t i) {
    if (inst.pairs.size() < i) throw std::invalid_argument("instance too small for its variant");
    const auto& [v, w] = inst.pairs[i - 1];
    if (v.empty() || w.empty() || v.back() != '1' || w.back() != '1')
      throw std::invalid_argument("pair " + std::to_string(i) + " must end with 1 on both sides");
  };
  switch (inst.variant) {
    case Variant::rmpcp: check(1); break;
    case Variant::twompcp: check(2); break;
    case Variant::twormpcp: check(1); break;
    default: break;
  }
}

PcpInstance classic_instance() {
  PcpInstance p;
  p.variant = Variant::plain;
  p.pairs = {{"0", "100"}, {"01", "00"}, {"110", "11"}};
  return p;
}

}  // namespace pfac
