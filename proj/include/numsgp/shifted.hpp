#pragma once

#include <optional>
#include <vector>

#include "numsgp/binomial.hpp"
#include "numsgp/report.hpp"

namespace numsgp {

struct ShiftInvariants {
  Int s = 0;       // n_e - n_1
  Int d = 0;       // gcd of n_i - n_1
  Int s_prime = 0; // s / d
};

ShiftInvariants shift_invariants(const NumericalSemigroup& sg);

struct ShiftResult {
  NumericalSemigroup semigroup;
  /// False when some n_i + m became redundant.
  bool minimal = true;
};

/// <n_1+m, ..., n_e+m>. Throws GcdNotOne, InvalidInput for m < 0.
ShiftResult shift(const NumericalSemigroup& sg, Int m);

struct ShiftScanRecord {
  Int m = 0;
  bool valid = false;    // gcd of the shifted generators is 1
  bool minimal = false;  // no shifted generator is redundant
  std::vector<Int> generators;
  Classification classification = Classification::None;
  Int type = 0;
  Int frobenius = -1;
  std::vector<Int> pf;
  std::vector<Int> alphas;
  std::optional<Int> f;        // type 3, e = 4: smaller element of PF'
  std::optional<Int> f_prime;  // the larger one
};

ShiftScanRecord scan_one(const NumericalSemigroup& sg, Int m);

/// One record per m in [from_m, m_max], in order. `threads` workers.
std::vector<ShiftScanRecord> scan(const NumericalSemigroup& sg, Int m_max,
                                  Int from_m = 0, unsigned threads = 1);

/// Default scan range 20 n_e^2, capped at 10^6.
Int default_scan_limit(const NumericalSemigroup& sg);

/// Shifts m <= m_max with H+m almost symmetric of type 2; passes when the
/// last one lies in the first half of the window.
Report type2_window(const NumericalSemigroup& sg, Int m_max);

/// alpha_2..alpha_{e-1} constant over [m_lo, m_hi], the lower bounds of
/// alpha_1 and alpha_e against (m+n_1)/s', and alpha_1 - alpha_e = d at
/// almost symmetric shifts of type 3 (e = 4).
Report alpha_growth(const NumericalSemigroup& sg, Int m_lo, Int m_hi);

/// F(H+m) >= m^2 / s from some point on within [0, m_max]; the observed
/// threshold is reported.
Report frobenius_growth(const NumericalSemigroup& sg, Int m_max);

/// Relations of equal total degree in I_H stay relations of every H+m.
Report homogeneous_relations(const NumericalSemigroup& sg, Int m_max);

/// Shifts in [0, m_max] where H+m is almost symmetric of type 3.
std::vector<Int> type3_shifts(const NumericalSemigroup& sg, Int m_max);

struct FamilyParams {
  Int a = 0;
  Int b = 0;
  Int d = 0;
};

/// Throws InvalidParams unless a >= 3 odd, d odd, gcd(a,d) = 1, b >= d+2.
void validate(const FamilyParams& p);

/// <n1, n1+(a-2)d, n1+ad, 2a+(b-2)(2a-2)> with n1 = 2a+(b-d-2)(2a-2).
NumericalSemigroup construct_family(const FamilyParams& p);

/// The seven binomials presenting H(a,b;d), in its sorted labels.
std::vector<Binomial> family_binomials(const NumericalSemigroup& sg,
                                       const FamilyParams& p);

/// For k = 0..steps: H(a,b+k;d) almost symmetric of type 3 with the
/// expected f, f', RF-matrices and seven-binomial presentation, and
/// H(a,b+k+1;d) = H(a,b+k;d) + (2a-2).
Report verify_family(const FamilyParams& p, Int steps);

struct OddSearchHit {
  std::vector<Int> generators;
  Int d = 0;
  bool all_odd = false;
};

/// 4-generated almost symmetric semigroups of type 3 with
/// min_n4 <= n_4 <= bound whose generator differences have gcd d > 1, plus
/// any with all generators odd.
std::vector<OddSearchHit> odd_generator_search(Int bound, Int min_n4 = 0);

}  // namespace numsgp
