#include "numsgp/serialize.hpp"

namespace numsgp {

namespace {
constexpr Int kExactDoubleLimit = Int{1} << 53;
}

Json int_json(Int v) {
  if (v > kExactDoubleLimit || v < -kExactDoubleLimit) return std::to_string(v);
  return v;
}

Json ints_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (Int x : v) out.push_back(int_json(x));
  return out;
}

Json to_json(const NumericalSemigroup& sg) {
  return {{"generators", ints_json(sg.generators())}};
}

Json to_json(const PFData& pf) {
  return {{"frobenius", int_json(pf.frobenius)},
          {"genus", int_json(pf.genus)},
          {"pf", ints_json(pf.pf)},
          {"pf_prime", ints_json(pf.pf_prime)},
          {"type", int_json(pf.type)},
          {"classification", to_string(pf.classification)}};
}

Json to_json(const AlphaTable& al) {
  Json w = Json::array();
  for (const auto& row : al.witnesses) w.push_back(ints_json(row));
  return {{"alpha", ints_json(al.alpha)}, {"witnesses", w}};
}

Json to_json(const RFMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(ints_json(m.row(i)));
  return {{"f", int_json(m.f())}, {"rows", rows}};
}

Json to_json(const Binomial& b) {
  return {{"plus", ints_json(b.plus)},
          {"minus", ints_json(b.minus)},
          {"degree", int_json(b.degree)},
          {"text", b.to_string()}};
}

Json to_json(const SpecialRow& s) {
  return {{"row", s.source + 1}, {"column", s.carrier + 1}, {"value", int_json(s.value)}};
}

Json to_json(const BettiTable& t) {
  Json graded = Json::array();
  for (const auto& level : t.graded) {
    Json entries = Json::array();
    for (const auto& [d, b] : level)
      entries.push_back({{"degree", int_json(d)}, {"beta", int_json(b)}});
    graded.push_back(entries);
  }
  Json totals = Json::array();
  for (std::size_t i = 0; i < t.graded.size(); ++i) totals.push_back(int_json(t.total(i)));
  return {{"graded", graded},
          {"totals", totals},
          {"mu", int_json(t.mu)},
          {"a_degrees", ints_json(t.a_degrees)},
          {"b_degrees", ints_json(t.b_degrees)},
          {"last_degrees", ints_json(t.last_degrees)},
          {"m0", int_json(t.m0)},
          {"surplus", int_json(t.surplus)}};
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks())
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json witnesses = Json::array();
  for (const auto& [k, v] : r.witnesses()) witnesses.push_back({{"key", k}, {"value", v}});
  return {{"name", r.name()},
          {"subject", r.subject()},
          {"verdict", to_string(r.verdict())},
          {"checks", checks},
          {"witnesses", witnesses},
          {"notes", r.notes()}};
}

Json to_json(const KomedaForm& k) {
  Json perm = Json::array();
  for (std::size_t p : k.perm) perm.push_back(p + 1);
  return {{"permutation", perm},
          {"alphas", ints_json(k.alphas)},
          {"alpha42", int_json(k.alpha42)},
          {"matrix", to_json(k.matrix)}};
}

Json to_json(const ShiftScanRecord& r) {
  Json j = {{"m", int_json(r.m)},
            {"valid", r.valid},
            {"minimal", r.minimal},
            {"generators", ints_json(r.generators)},
            {"classification", to_string(r.classification)},
            {"type", int_json(r.type)},
            {"frobenius", int_json(r.frobenius)},
            {"pf", ints_json(r.pf)},
            {"alphas", ints_json(r.alphas)},
            {"f", nullptr},
            {"f_prime", nullptr}};
  if (r.f) j["f"] = int_json(*r.f);
  if (r.f_prime) j["f_prime"] = int_json(*r.f_prime);
  return j;
}

Json to_json(const OddSearchHit& h) {
  return {{"generators", ints_json(h.generators)}, {"d", int_json(h.d)}, {"all_odd", h.all_odd}};
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace numsgp
