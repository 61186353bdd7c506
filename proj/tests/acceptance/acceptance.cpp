// End-to-end acceptance run: one PASS/FAIL line per criterion, exit 3 on any
// failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "numsgp/betti.hpp"
#include "numsgp/error.hpp"
#include "numsgp/factorization.hpp"
#include "numsgp/laws.hpp"
#include "numsgp/rf.hpp"
#include "numsgp/semigroup.hpp"
#include "numsgp/shifted.hpp"
#include "numsgp/structure.hpp"
#include "oracle.hpp"

using namespace numsgp;
using V = std::vector<Int>;
using Rows = std::vector<std::vector<Int>>;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> problems;
  std::string summary;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (problems.size() < 8) problems.push_back(what);
    }
  }
};

std::string show(const V& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

std::string show_gens(const V& v) {
  std::string s = show(v);
  s.front() = '<';
  s.back() = '>';
  return s;
}

bool has_matrix(const NumericalSemigroup& h, Int f, const Rows& rows) {
  auto ms = rf_matrices(h, f);
  return std::find(ms.begin(), ms.end(), RFMatrix::from_rows(f, rows)) != ms.end();
}

const std::vector<V>& as_corpus() {
  static const std::vector<V> corpus = oracle::almost_symmetric_corpus(60, 1);
  return corpus;
}

Outcome pf_fixtures() {
  Outcome o;
  struct Case {
    V gens;
    V pf;
    const char* cls;
  };
  const std::vector<Case> cases{
      {{7, 12, 13, 22}, {15, 30}, "pseudo-symmetric"},
      {{22, 28, 47, 53}, {25, 258, 283}, "almost-symmetric"},
      {{33, 56, 61, 84}, {28, 835, 863}, "almost-symmetric"},
      {{9, 22, 46, 57}, {35, 70, 105}, "almost-symmetric"},
      {{5, 6, 8, 9}, {3, 4, 7}, "almost-symmetric"},
      {{18, 21, 23, 26}, {31, 66, 97}, "almost-symmetric"},
      {{10, 11, 15, 16, 28}, {5, 17, 29, 34}, "almost-symmetric"},
  };
  for (const auto& c : cases) {
    PFData pf = NumericalSemigroup(c.gens).pseudo_frobenius();
    std::string tag = show_gens(c.gens);
    o.expect(pf.pf == c.pf, tag + " PF " + show(pf.pf));
    o.expect(std::string(to_string(pf.classification)) == c.cls,
             tag + " classified " + to_string(pf.classification));
    o.expect(pf.type == static_cast<Int>(c.pf.size()), tag + " type");
  }
  o.summary = std::to_string(cases.size()) + " semigroups";
  return o;
}

Outcome alpha_fixtures() {
  Outcome o;
  const std::vector<std::pair<V, V>> fixtures{
      {{9, 22, 46, 57}, {10, 3, 3, 2}},
      {{33, 56, 61, 84}, {28, 3, 2, 2}},
      {{22, 28, 47, 53}, {14, 11, 2, 2}},
  };
  for (const auto& [gens, want] : fixtures) {
    V got = alphas(NumericalSemigroup(gens)).alpha;
    o.expect(got == want, show_gens(gens) + " alphas " + show(got));
    o.expect(oracle::alphas(gens) == want, show_gens(gens) + " brute-force alphas");
  }
  o.summary = "3 semigroups";
  return o;
}

Outcome rf_fixtures() {
  Outcome o;
  NumericalSemigroup a({7, 12, 13, 22}), b({5, 6, 8, 9}), c({9, 22, 46, 57}), d({33, 56, 61, 84});
  o.expect(has_matrix(a, 15, {{-1, 0, 0, 1}, {2, -1, 1, 0}, {4, 0, -1, 0}, {0, 2, 1, -1}}),
           "RF(15) of <7,12,13,22>");
  o.expect(has_matrix(b, 3, {{-1, 0, 1, 0}, {0, -1, 0, 1}, {1, 1, -1, 0}, {0, 2, 0, -1}}),
           "RF(3) of <5,6,8,9>");
  o.expect(has_matrix(b, 4, {{-1, 0, 0, 1}, {2, -1, 0, 0}, {0, 2, -1, 0}, {1, 0, 1, -1}}),
           "RF(4) of <5,6,8,9>");
  o.expect(has_matrix(c, 35, {{-1, 2, 0, 0}, {0, -1, 0, 1}, {9, 0, -1, 0}, {0, 0, 2, -1}}),
           "RF(35) of <9,22,46,57>");
  o.expect(has_matrix(c, 70, {{-1, 1, 0, 1}, {0, -1, 2, 0}, {8, 2, -1, 0}, {9, 0, 1, -1}}),
           "RF(70) of <9,22,46,57>");
  o.expect(has_matrix(d, 28, {{-1, 0, 1, 0}, {0, -1, 0, 1}, {1, 1, -1, 0}, {0, 2, 0, -1}}),
           "RF(28) of <33,56,61,84>");
  o.summary = "6 matrices";
  return o;
}

Outcome rf_relation_fixture() {
  Outcome o;
  NumericalSemigroup h({7, 12, 13, 22});
  auto rel = rf_relations(h, 15, rf_matrices(h, 15));
  V degrees;
  std::size_t minimal = 0;
  for (const auto& b : rel) {
    degrees.push_back(b.degree);
    if (is_minimal_generator(h, b)) ++minimal;
  }
  std::sort(degrees.begin(), degrees.end());
  o.expect(degrees == V{26, 34, 35, 36, 44, 50}, "degrees " + show(degrees));
  o.expect(minimal == 5, std::to_string(minimal) + " minimal");
  o.expect(Binomial::from_pair(h, {0, 1, 0, 1}, {3, 0, 1, 0}).has_value() &&
               std::find(rel.begin(), rel.end(), *Binomial::from_pair(h, {0, 1, 0, 1}, {3, 0, 1, 0})) !=
                   rel.end(),
           "yw - x^3z missing");
  o.summary = std::to_string(rel.size()) + " binomials, " + std::to_string(minimal) + " minimal";
  return o;
}

std::string witness(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.witnesses())
    if (k == key) return v;
  return {};
}

Outcome betti_fixtures() {
  Outcome o;
  NumericalSemigroup h({5, 6, 8, 9});
  auto gens = minimal_generators(h);
  std::vector<Binomial> printed;
  for (const auto& [u, v] : std::vector<std::pair<Exponents, Exponents>>{
           {{3, 0, 0, 0}, {0, 1, 0, 1}},
           {{0, 3, 0, 0}, {2, 0, 1, 0}},
           {{0, 0, 2, 0}, {2, 1, 0, 0}},
           {{0, 0, 0, 2}, {0, 3, 0, 0}},
           {{1, 2, 0, 0}, {0, 0, 1, 1}},
           {{1, 0, 0, 1}, {0, 1, 1, 0}}})
    printed.push_back(*Binomial::from_pair(h, u, v));
  o.expect(gens.size() == 6, "mu(<5,6,8,9>) = " + std::to_string(gens.size()));
  o.expect(generates_check(h, printed) && generates_check(h, gens),
           "printed list and computed generators differ");
  o.expect(minimal_generators(NumericalSemigroup({18, 21, 23, 26})).size() == 7, "mu(<18,21,23,26>)");

  NumericalSemigroup e1({5, 6, 7, 9});
  BettiTable t1 = graded_betti(e1);
  o.expect(t1.a_degrees == V{12, 14, 15, 16, 18}, "a-degrees <5,6,7,9> " + show(t1.a_degrees));
  o.expect(t1.b_degrees == V{21, 22, 23, 24, 25, 26}, "b-degrees <5,6,7,9> " + show(t1.b_degrees));
  Report r1 = verify_comparison(e1, t1);
  o.expect(r1.passed(), "comparison <5,6,7,9> failed");
  o.expect(witness(r1, "F+N") == "35" && witness(r1, "surplus_a") == "{12,14}" &&
               witness(r1, "surplus_b") == "{21,23}",
           "surplus pairing 35-12=23, 35-14=21");

  NumericalSemigroup e2({18, 21, 23, 26});
  BettiTable t2 = graded_betti(e2);
  o.expect(t2.a_degrees == V{44, 72, 75, 78, 105, 110, 115}, "a-degrees <18,21,23,26> " + show(t2.a_degrees));
  o.expect(t2.b_degrees == V{93, 96, 98, 101, 128, 131, 133, 136, 141},
           "b-degrees <18,21,23,26> " + show(t2.b_degrees));
  Report r2 = verify_comparison(e2, t2);
  o.expect(r2.passed(), "comparison <18,21,23,26> failed");
  o.expect(witness(r2, "F+N") == "185" && witness(r2, "surplus_a") == "{44}" &&
               witness(r2, "surplus_b") == "{141}",
           "surplus pairing 141=185-44");
  o.summary = "mu 6 and 7, two degree tables";
  return o;
}

Outcome komeda_suite() {
  Outcome o;
  std::size_t members = 0;
  for (const V& gens : as_corpus()) {
    if (oracle::pseudo_frobenius(gens).pf.size() != 2) continue;
    ++members;
    NumericalSemigroup h(gens);
    std::string tag = show_gens(gens);
    try {
      PFData pf = h.pseudo_frobenius();
      KomedaForm form = komeda_form(h);
      o.expect(rf_matrices(h, pf.frobenius / 2).size() == 1, tag + " RF(F/2) not unique");
      const auto& a = form.alphas;
      o.expect(form.generators(h)[1] == a[0] * a[3] * (a[2] - 1) + 1, tag + " n2 formula");
      o.expect(minimal_generators(h).size() == 5, tag + " mu != 5");
      Report r = verify_type2_structure(h);
      o.expect(r.passed(), tag + " type-2 structure report failed");
    } catch (const Error& e) {
      o.expect(false, tag + " " + e.what());
    }
  }
  o.expect(members > 0, "empty corpus");
  o.summary = std::to_string(members) + " pseudo-symmetric semigroups with n4 <= 60";
  return o;
}

Outcome type_bound_suite() {
  Outcome o;
  std::map<Int, std::size_t> by_type;
  std::size_t mu7 = 0;
  for (const V& gens : as_corpus()) {
    NumericalSemigroup h(gens);
    std::string tag = show_gens(gens);
    try {
      PFData pf = h.pseudo_frobenius();
      ++by_type[pf.type];
      o.expect(pf.type <= 3, tag + " type " + std::to_string(pf.type));
      if (pf.frobenius % 2 == 0) o.expect(pf.type == 2, tag + " F even but type != 2");
      o.expect(verify_type_bound(h).passed(), tag + " type-bound report");
      if (pf.type == 3) {
        std::size_t mu = minimal_generators(h).size();
        o.expect(mu == 6 || mu == 7, tag + " mu " + std::to_string(mu));
        if (mu == 7) {
          ++mu7;
          o.expect(gens[0] + gens[3] == gens[1] + gens[2], tag + " mu 7 but n1+n4 != n2+n3");
        }
        o.expect(verify_seven_gen(h).passed(), tag + " seven-generator report");
      }
      if (pf.type == 2 || pf.type == 3)
        o.expect(verify_rf_generation(h).passed(), tag + " RF-relations do not generate");
    } catch (const Error& e) {
      o.expect(false, tag + " " + e.what());
    }
  }
  o.summary = std::to_string(as_corpus().size()) + " semigroups (type 1: " +
              std::to_string(by_type[1]) + ", type 2: " +
              std::to_string(by_type[2]) + ", type 3: " + std::to_string(by_type[3]) +
              ", mu 7: " + std::to_string(mu7) + ")";
  return o;
}

Outcome periodicity() {
  Outcome o;
  const std::vector<std::pair<V, Int>> families{
      {{10, 11, 13, 14}, 4}, {{10, 13, 15, 18}, 8}, {{14, 19, 21, 26}, 12}, {{18, 25, 27, 34}, 16}};
  for (const auto& [gens, p] : families) {
    V want;
    for (Int k = 0; k <= 5; ++k) want.push_back(k * p);
    V got = type3_shifts(NumericalSemigroup(gens), 5 * p);
    o.expect(got == want, show_gens(gens) + " type-3 shifts " + show(got));
  }
  o.summary = "periods 4, 8, 12, 16 over 5 periods each";
  return o;
}

Outcome family_construction() {
  Outcome o;
  const std::vector<V> members{{10, 11, 13, 14}, {10, 13, 15, 18}, {14, 19, 21, 26}, {18, 25, 27, 34}};
  std::string params;
  for (const V& n : members) {
    std::string tag = show_gens(n);
    Int d = 0;
    for (Int x : n) d = std::gcd(d, x - n[0]);
    const Int a = (n[2] - n[0]) / d;
    const Int b = (n[3] - 2 * a) / (2 * a - 2) + 2;
    NumericalSemigroup h(n);
    AlphaTable al = alphas(h);
    o.expect(al.alpha[1] == a && al.alpha[0] == b, tag + " (a,b) differ from (alpha_2, alpha_1)");
    params += (params.empty() ? "" : " ") + std::string("(") + std::to_string(a) + "," +
              std::to_string(b) + "," + std::to_string(d) + ")";
    try {
      o.expect(construct_family({a, b, d}) == h, tag + " not reproduced");
      Report r = verify_family({a, b, d}, 5);
      if (!r.passed())
        for (const auto& c : r.failures()) o.expect(false, tag + " " + c.name + " " + c.detail);
    } catch (const Error& e) {
      o.expect(false, tag + " " + e.what());
    }
  }
  o.summary = "(a,b,d) = " + params + ", 5 steps each";
  return o;
}

Outcome fuzzer() {
  Outcome o;
  std::mt19937_64 rng(20261018);
  std::vector<V> sample;
  std::uniform_int_distribution<Int> pick(3, 45);
  while (sample.size() < 1000) {
    std::set<Int> s;
    while (s.size() < 4) s.insert(pick(rng));
    V n(s.begin(), s.end());
    if (std::gcd(std::gcd(n[0], n[1]), std::gcd(n[2], n[3])) != 1) continue;
    if (minimalize(n).size() != 4) continue;
    sample.push_back(n);
  }
  // Uniform draws are rarely almost symmetric; add draws from the corpus so
  // the almost-symmetric laws are exercised too.
  std::vector<V> corpus;
  for (const V& gens : as_corpus())
    if (oracle::pseudo_frobenius(gens).pf.size() >= 2) corpus.push_back(gens);
  std::uniform_int_distribution<std::size_t> from_corpus(0, corpus.size() - 1);
  for (int i = 0; i < 300; ++i) sample.push_back(corpus[from_corpus(rng)]);

  std::size_t as_count = 0;
  for (const V& gens : sample) {
    NumericalSemigroup h(gens);
    std::string tag = show_gens(gens);
    try {
      if (h.pseudo_frobenius().almost_symmetric()) ++as_count;
      for (const Report& r : {verify_semigroup_laws(h), verify_rf_laws(h), verify_betti_laws(h)})
        for (const auto& c : r.failures()) o.expect(false, tag + " " + r.name() + ": " + c.name);
    } catch (const Error& e) {
      o.expect(false, tag + " " + e.what());
    }
  }
  o.summary = std::to_string(sample.size()) + " semigroups, " + std::to_string(as_count) +
              " almost symmetric";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"PF and classification fixtures", pf_fixtures},
      {"alpha fixtures", alpha_fixtures},
      {"RF-matrix fixtures", rf_fixtures},
      {"RF-relation fixture", rf_relation_fixture},
      {"toric ideal and Betti fixtures", betti_fixtures},
      {"pseudo-symmetric canonical form suite", komeda_suite},
      {"almost symmetric type-bound suite", type_bound_suite},
      {"shifted-family periodicity", periodicity},
      {"H(a,b;d) family construction", family_construction},
      {"randomized property suites", fuzzer},
  };
  bool all = true;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::printf("criterion %2zu: %s  %s -- %s (%.2fs)\n", i + 1, o.ok ? "PASS" : "FAIL",
                criteria[i].first.c_str(), o.summary.c_str(), secs);
    for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s in %.2fs\n", all ? "all criteria passed" : "some criteria FAILED", total);
  return all ? 0 : 3;
}
