#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numsgp/factorization.hpp"

namespace numsgp {

/// x^plus - x^minus, stored in normal form: the monomial gcd is divided out
/// and `plus` is the lexicographically larger exponent vector.
struct Binomial {
  Exponents plus;
  Exponents minus;
  Int degree = 0;

  /// Normal form of x^u - x^v; nullopt when u == v. Throws NotInIdeal when
  /// the two sides have different degrees.
  static std::optional<Binomial> from_pair(const NumericalSemigroup& sg,
                                           Exponents u, Exponents v);
  /// Binomial of a relation vector (positive part minus negative part).
  static std::optional<Binomial> from_difference(const NumericalSemigroup& sg,
                                                 const Exponents& diff);

  /// plus - minus.
  Exponents difference() const;
  /// Support of `plus` and `minus` as index lists.
  std::vector<std::size_t> plus_support() const;
  std::vector<std::size_t> minus_support() const;

  /// e.g. "x1^3 - x2*x4".
  std::string to_string() const;

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial& a, const Binomial& b) {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    if (auto c = a.plus <=> b.plus; c != 0) return c;
    return a.minus <=> b.minus;
  }
};

/// Sorted, duplicate-free copy.
std::vector<Binomial> canonical_set(std::vector<Binomial> binomials);

}  // namespace numsgp
