#pragma once

#include <functional>
#include <vector>

#include "numsgp/semigroup.hpp"

namespace numsgp {

/// Exponent vector over the minimal generators.
using Exponents = std::vector<Int>;

struct Factorization {
  Exponents coeffs;
  Int degree = 0;

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization& a, const Factorization& b) {
    return a.coeffs <=> b.coeffs;
  }
};

/// Sum of coeffs[i] * n_i.
Int degree_of(const NumericalSemigroup& h, const Exponents& coeffs);

inline constexpr std::size_t kDefaultFactorizationCap = 1'000'000;

enum class EnumerationOrder { LexDescending, LexAscending };

/// Calls `visit` on every factorization of `h` in the requested
/// lexicographic order until it returns false. Branches that cannot be
/// completed are pruned with the suffix membership tables, so the cost is
/// proportional to the output.
void for_each_factorization(const NumericalSemigroup& sg, Int h,
                            const std::function<bool(const Exponents&)>& visit,
                            EnumerationOrder order = EnumerationOrder::LexDescending);

/// All factorizations of h, lexicographically descending. Empty when h is
/// not in H. Throws EnumerationOverflow when more than `cap` exist.
std::vector<Factorization> factorizations(const NumericalSemigroup& sg, Int h,
                                          std::size_t cap = kDefaultFactorizationCap);

/// Number of factorizations, stopping early once `limit` is reached.
std::size_t count_factorizations(const NumericalSemigroup& sg, Int h,
                                 std::size_t limit);

/// Throws NotMember when h is not in H.
bool has_uf(const NumericalSemigroup& sg, Int h);

struct AlphaTable {
  std::vector<Int> alpha;
  /// witnesses[i][j] = alpha_{ij}; witnesses[i][i] = 0. Lexicographically
  /// smallest among all valid witnesses.
  std::vector<Exponents> witnesses;
};

/// Minimal multiples alpha_i with alpha_i n_i expressible without n_i.
/// Requires e >= 2.
AlphaTable alphas(const NumericalSemigroup& sg);

}  // namespace numsgp
