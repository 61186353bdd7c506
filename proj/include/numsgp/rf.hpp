#pragma once

#include <vector>

#include "numsgp/binomial.hpp"
#include "numsgp/report.hpp"

namespace numsgp {

/// Row-factorization matrix of a pseudo-Frobenius number f: diagonal -1,
/// row i a factorization of f + n_i.
class RFMatrix {
 public:
  RFMatrix(Int f, std::size_t e, std::vector<Int> entries);

  Int f() const noexcept { return f_; }
  std::size_t size() const noexcept { return e_; }
  Int at(std::size_t i, std::size_t j) const { return entries_[i * e_ + j]; }
  Exponents row(std::size_t i) const;
  const std::vector<Int>& entries() const noexcept { return entries_; }

  /// Same matrix with generators relabeled: result(p,q) = at(perm[p], perm[q]).
  RFMatrix relabeled(const std::vector<std::size_t>& perm) const;

  static RFMatrix from_rows(Int f, const std::vector<std::vector<Int>>& rows);
  std::string to_string() const;

  friend bool operator==(const RFMatrix&, const RFMatrix&) = default;

 private:
  Int f_;
  std::size_t e_;
  std::vector<Int> entries_;
};

inline constexpr std::size_t kDefaultMatrixCap = 100'000;

/// Throws PrecondFailed unless f is a pseudo-Frobenius number of H.
void require_pseudo_frobenius(const NumericalSemigroup& sg, Int f);

/// Row i choices: the factorizations of f + n_i written as matrix rows.
std::vector<std::vector<Exponents>> rf_row_choices(const NumericalSemigroup& sg, Int f);

/// Every RF-matrix of f, lexicographically descending row by row. Throws
/// EnumerationOverflow (message carries the per-row counts) above `cap`.
std::vector<RFMatrix> rf_matrices(const NumericalSemigroup& sg, Int f,
                                  std::size_t cap = kDefaultMatrixCap);

/// The binomial of rows i and j, or nullopt when the rows coincide.
std::optional<Binomial> rf_relation(const NumericalSemigroup& sg,
                                    const RFMatrix& m, std::size_t i,
                                    std::size_t j);

/// Union of all row-difference binomials of the given matrices.
std::vector<Binomial> rf_relations(const NumericalSemigroup& sg, Int f,
                                   const std::vector<RFMatrix>& matrices);

/// Row `source` equals (alpha_carrier - 1) e_carrier - e_source.
struct SpecialRow {
  std::size_t source = 0;
  std::size_t carrier = 0;
  Int value = 0;

  friend bool operator==(const SpecialRow&, const SpecialRow&) = default;
};

std::vector<SpecialRow> special_rows(const NumericalSemigroup& sg,
                                     const RFMatrix& m,
                                     const std::vector<Int>& alpha);
std::vector<SpecialRow> special_rows(const NumericalSemigroup& sg,
                                     const RFMatrix& m);

/// For f, f' in PF(H) with f + f' not in H: a_ij = 0 or b_ji = 0 for every
/// pair of matrices A of f, B of f'. Throws PrecondFailed if f + f' is in H.
Report verify_pairwise_zero(const NumericalSemigroup& sg, Int f, Int f2);

/// Every column of every RF-matrix of f has a positive off-diagonal entry.
/// A verdict for e = 4 almost symmetric H; informational otherwise. Throws
/// PrecondFailed unless f is in PF'(H).
Report verify_positive_columns(const NumericalSemigroup& sg, Int f);

/// Whether the binomials generate I_H: for every degree of a minimal
/// generator, the moves given by the binomials connect all factorizations.
/// Throws NotInIdeal for a binomial whose sides differ in degree.
bool generates_check(const NumericalSemigroup& sg,
                     const std::vector<Binomial>& binomials);

/// RF-relations over every matrix of every f in `pfs`.
std::vector<Binomial> all_rf_relations(const NumericalSemigroup& sg,
                                       const std::vector<Int>& pfs);

/// Laws of RF-matrices of an almost symmetric H with e = 4: zeros in every
/// row, a common zero per row across all matrices, the b = alpha_i - 1
/// dichotomy for single-generator rows, collision rules among f + n_k, the
/// special-row counts and the degree bound of RF-relations.
Report verify_rf_laws(const NumericalSemigroup& sg);

}  // namespace numsgp
