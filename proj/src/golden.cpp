#include "pfac/golden.hpp"

#include "json.hpp"

#include "pfac/pcp2pfa.hpp"

namespace pfac {

namespace {

// Each matrix is block diagonal: a list of {scale, rows} blocks followed by the absorbing corner [[g, 1-g],[0,1]].
constexpr const char* kGolden = R"json({
  "copy_blank": {
    "blocks": [
      {"scale": "1/64", "rows": [[16,16,16,16],[12,20,12,20],[12,12,20,20],[9,15,15,25]]},
      {"scale": "1/64", "rows": [[16,32,16],[12,32,20],[9,30,25]]},
      {"scale": "1/64", "rows": [[16,32,16],[12,32,20],[9,30,25]]}
    ],
    "corner": "1/4194304"
  },
  "erase_blank_sep": {
    "blocks": [
      {"scale": "1/512", "rows": [[81,135,111,185],[54,162,74,222],[78,130,114,190],[52,156,76,228]]},
      {"scale": "1/4096", "rows": [[729,1998,1369],[702,1988,1406],[676,1976,1444]]},
      {"scale": "1/64", "rows": [[9,30,25],[6,28,30],[4,24,36]]}
    ],
    "corner": "1/4194304"
  },
  "left_rule": {
    "blocks": [
      {"scale": "1/4194304", "rows": [[786126,1151282,915762,1341134],[785180,1152228,914660,1342236],
                                      [785295,1150065,916593,1342351],[784350,1151010,915490,1343454]]},
      {"scale": "1/4194304", "rows": [[894916,2084984,1214404],[893970,2084828,1215506],[893025,2084670,1216609]]},
      {"scale": "1/4194304", "rows": [[690561,2022654,1481089],[689730,2022268,1482306],[688900,2021880,1483524]]}
    ],
    "corner": "1/4194304"
  },
  "erase_sep_blank_11": {
    "blocks": [
      {"scale": "1/262144", "rows": [
        [3600,12000,10000,15840,52800,44000,17424,58080,48400],
        [2400,11200,12000,10560,49280,52800,11616,54208,58080],
        [1600,9600,14400,7040,42240,63360,7744,46464,69696],
        [3420,11400,9500,15624,52080,43400,17820,59400,49500],
        [2280,10640,11400,10416,48608,52080,11880,55440,59400],
        [1520,9120,13680,6944,41664,62496,7920,47520,71280],
        [3249,10830,9025,15390,51300,42750,18225,60750,50625],
        [2166,10108,10830,10260,47880,51300,12150,56700,60750],
        [1444,8664,12996,6840,41040,61560,8100,48600,72900]]}
    ],
    "corner": "1/17592186044416"
  }
})json";

RatMatrix from_blocks(const nlohmann::json& j) {
  std::vector<RatMatrix> blocks;
  for (const auto& b : j.at("blocks")) {
    const Rational scale = parse_rational(b.at("scale").get<std::string>());
    const auto& rows = b.at("rows");
    RatMatrix m(rows.size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = scale * Rational(rows[r][c].get<long>());
    blocks.push_back(m);
  }
  const Rational g = parse_rational(j.at("corner").get<std::string>());
  blocks.push_back(RatMatrix{{g, 1 - g}, {0, 1}});
  return block_diag(blocks);
}

}  // namespace

std::map<std::string, RatMatrix> golden_matrices() {
  std::map<std::string, RatMatrix> r;
  const auto doc = nlohmann::json::parse(kGolden);
  for (auto it = doc.begin(); it != doc.end(); ++it) r.emplace(it.key(), from_blocks(it.value()));
  return r;
}

TuringMachine example_machine() {
  TuringMachine tm;
  for (int i = 0; i < 15; ++i) tm.states.push_back("q" + std::to_string(i));
  tm.alphabet = {"_", "b"};
  tm.blank = "_";
  tm.start = "q0";
  tm.rules.push_back({"q9", "_", false, "_", Move::left, "q1"});
  return tm;
}

std::map<std::string, RatMatrix> regenerate_golden() {
  const TuringMachine tm = example_machine();
  const PrefixCode code = default_code(tm);
  auto enc = [&](const SymWord& w) { return encode(w, code); };
  const Rational g22 = pow2(-22), g44 = pow2(-44);
  // the 12-state matrices belong to the reversed instance, so the words are read backwards
  std::map<std::string, RatMatrix> r;
  r.emplace("copy_blank", box12(enc({"_"}), enc({"_"}), g22));
  r.emplace("erase_blank_sep", box12(enc({"_", "#"}), enc({"#"}), g22));
  r.emplace("left_rule", box12(enc({"_", "q9", "b"}), enc({"_", "b", "q1"}), g22));
  r.emplace("erase_sep_blank_11", eleven(enc({"#", "_"}), enc({"#"}), g44));
  return r;
}

}  // namespace pfac
