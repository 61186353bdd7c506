#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "numsgp/structure.hpp"
#include "oracle.hpp"

using namespace numsgp;
using V = std::vector<Int>;

namespace {
ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Overflow;
}
}  // namespace

TEST_CASE("canonical form of a pseudo-symmetric semigroup") {
  NumericalSemigroup h({5, 6, 7, 9});
  KomedaForm k = komeda_form(h);
  CHECK(k.matrix == komeda_matrix(4, k.alphas, k.alpha42));
  CHECK(k.matrix == rf_matrices(h, 4).front().relabeled(k.perm));
  CHECK(rf_matrices(h, 4).size() == 1);
  V n = k.generators(h);
  CHECK(n[1] == k.alphas[0] * k.alphas[3] * (k.alphas[2] - 1) + 1);
  // canonical alphas are the brute-force alphas of the relabeled tuple
  CHECK(k.alphas == oracle::alphas(n));
}

TEST_CASE("canonical form preconditions") {
  CHECK(kind_of([] { komeda_form(NumericalSemigroup({5, 6, 8, 9})); }) == ErrorKind::NotPseudoSymmetric);
  CHECK(kind_of([] { komeda_form(NumericalSemigroup({2, 3})); }) == ErrorKind::NotPseudoSymmetric);
  CHECK(kind_of([] { verify_type2_structure(NumericalSemigroup({10, 13, 15, 18})); }) ==
        ErrorKind::NotPseudoSymmetric);
}

TEST_CASE("type-2 structure") {
  for (V gens : {V{5, 6, 7, 9}, V{7, 12, 13, 22}}) {
    Report r = verify_type2_structure(NumericalSemigroup(gens));
    CAPTURE(r.to_text());
    CHECK(r.passed());
  }
}

TEST_CASE("type bound") {
  Report a = verify_type_bound(NumericalSemigroup({22, 28, 47, 53}));
  CHECK(a.passed());
  Report b = verify_type_bound(NumericalSemigroup({5, 6, 7, 9}));
  CHECK(b.passed());
  CHECK(b.checks().size() == 2);
  CHECK(verify_type_bound(NumericalSemigroup({3, 5, 7})).verdict() == Verdict::NotApplicable);
  CHECK(verify_type_bound(NumericalSemigroup({5, 7, 9, 11})).passed());
  CHECK(verify_type_bound(NumericalSemigroup({7, 8, 9, 10})).verdict() == Verdict::NotApplicable);
}

TEST_CASE("six or seven generators") {
  Report a = verify_seven_gen(NumericalSemigroup({18, 21, 23, 26}));
  CAPTURE(a.to_text());
  CHECK(a.passed());
  CHECK(a.checks().size() == 4);
  CHECK(verify_seven_gen(NumericalSemigroup({5, 6, 8, 9})).passed());
  CHECK(verify_seven_gen(NumericalSemigroup({22, 28, 47, 53})).passed());
  CHECK(verify_seven_gen(NumericalSemigroup({5, 6, 7, 9})).verdict() == Verdict::NotApplicable);
}

TEST_CASE("RF-relations generate") {
  CHECK(verify_rf_generation(NumericalSemigroup({5, 6, 8, 9})).passed());
  CHECK(verify_rf_generation(NumericalSemigroup({3, 4, 5})).passed());
  CHECK(verify_rf_generation(NumericalSemigroup({3, 5, 7})).passed());
  CHECK(verify_rf_generation(NumericalSemigroup({4, 5, 6})).passed());  // symmetric, e = 3
  CHECK(verify_rf_generation(NumericalSemigroup({7, 12, 13, 22})).passed());
  CHECK(verify_rf_generation(NumericalSemigroup({5, 7, 9, 11})).verdict() == Verdict::NotApplicable);
  CHECK(verify_rf_generation(NumericalSemigroup({3, 5})).verdict() == Verdict::NotApplicable);
}

TEST_CASE("cyclic RF-matrices") {
  CHECK(kind_of([] { analyze_cyclic_rf(NumericalSemigroup({22, 28, 47, 53})); }) == ErrorKind::PatternNotFound);
  CHECK(kind_of([] { analyze_cyclic_rf(NumericalSemigroup({5, 6, 7, 9})); }) == ErrorKind::PrecondFailed);
  // The all-threes tuple collapses to repeated generators.
  CHECK(cyclic_generators({3, 3, 3, 3}) == V{15, 15, 15, 15});
  auto found = cyclic_family_search(5);
  REQUIRE_FALSE(found.empty());
  for (const auto& w : found) {
    CAPTURE(w.generators);
    CHECK(w.passed);
    Report r = analyze_cyclic_rf(NumericalSemigroup(w.generators));
    CHECK(r.passed());
  }
}
