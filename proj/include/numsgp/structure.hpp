#pragma once

#include <vector>

#include "numsgp/rf.hpp"

namespace numsgp {

/// Canonical RF(F/2) of a pseudo-symmetric 4-generated semigroup. Canonical
/// index p stands for generator perm[p] of the sorted generating set.
struct KomedaForm {
  std::vector<std::size_t> perm;
  std::vector<Int> alphas;  // alpha of canonical generator p
  Int alpha42 = 0;          // entry (4,2) of the canonical matrix
  RFMatrix matrix{0, 0, {}};

  /// Generators in canonical order.
  std::vector<Int> generators(const NumericalSemigroup& sg) const;
};

/// Rows (-1,a2-1,0,0), (0,-1,a3-1,0), (a1-1,0,-1,a4-1), (a1-1,b,0,-1).
RFMatrix komeda_matrix(Int f, const std::vector<Int>& alphas, Int b);

/// Throws NotPseudoSymmetric unless e = 4 and PF(H) = {F/2, F};
/// NoCanonicalForm when no relabeling fits or some F/2 + n_k lacks UF.
KomedaForm komeda_form(const NumericalSemigroup& sg);

/// The five generators of I_H read off the canonical form, in the sorted
/// generator labels of H.
std::vector<Binomial> komeda_generators(const NumericalSemigroup& sg,
                                        const KomedaForm& form);

/// n_2 = a1 a4 (a3-1) + 1 in canonical labels, F + n_2 has UF, I_H is
/// generated by the five canonical binomials with mu = 5, and H is almost
/// symmetric of type 2. Propagates komeda_form errors.
Report verify_type2_structure(const NumericalSemigroup& sg);

/// Almost symmetric with e = 4: type <= 3, and type 2 when F is even.
Report verify_type_bound(const NumericalSemigroup& sg);

/// Almost symmetric of type 3 with e = 4: mu in {6,7}; mu = 7 forces
/// n1+n4 = n2+n3 with x1x4 - x2x3 a minimal generator and an RF-relation.
Report verify_seven_gen(const NumericalSemigroup& sg);

/// RF-relations generate I_H: e = 3 (all of RF(F) when symmetric), or e = 4
/// almost symmetric of type >= 2.
Report verify_rf_generation(const NumericalSemigroup& sg);

/// 4-cycle matrix (-1,a2-1,0,0), (0,-1,a3-1,0), (0,0,-1,a4-1), (a1-1,0,0,-1).
RFMatrix cyclic_matrix(Int f, const std::vector<Int>& alphas);
/// Its partner for F - f.
RFMatrix cyclic_partner_matrix(Int f, const std::vector<Int>& alphas);
/// Generators determined by alphas when some RF(f) is cyclic.
std::vector<Int> cyclic_generators(const std::vector<Int>& alphas);

/// Structure when some RF(f), f in PF'(H), has one positive entry per row.
/// Throws PrecondFailed unless e = 4, H almost symmetric and F odd; throws
/// PatternNotFound when no such matrix exists.
Report analyze_cyclic_rf(const NumericalSemigroup& sg);

struct CyclicWitness {
  std::vector<Int> alphas;  // the tuple fed to cyclic_generators
  std::vector<Int> generators;
  bool passed = false;
};

/// Alpha tuples in [2, max_alpha]^4 whose cyclic generators form a
/// 4-generated almost symmetric semigroup with a cyclic RF-matrix.
std::vector<CyclicWitness> cyclic_family_search(Int max_alpha);

}  // namespace numsgp
