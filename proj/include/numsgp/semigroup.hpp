#pragma once

#include <span>
#include <string>
#include <vector>

#include "numsgp/error.hpp"

namespace numsgp {

/// Least element of each residue class modulo `modulus` reachable as a
/// non-negative combination of `weights` (plus multiples of the modulus).
/// Residues that cannot be reached hold kUnreachable. Built with a
/// Dijkstra pass over Z/modulus.
class ResidueTable {
 public:
  static constexpr Int kUnreachable = -1;

  ResidueTable() = default;
  ResidueTable(Int modulus, std::span<const Int> weights);

  Int modulus() const noexcept { return modulus_; }
  /// Least reachable value congruent to r, or kUnreachable.
  Int least(Int r) const { return least_[static_cast<std::size_t>(r)]; }
  const std::vector<Int>& values() const noexcept { return least_; }

  /// Membership of x in the monoid generated by modulus and weights.
  bool contains(Int x) const;

 private:
  Int modulus_ = 1;
  std::vector<Int> least_{0};
};

struct AperyTable {
  Int base = 0;
  /// Sorted ascending.
  std::vector<Int> elements;
};

enum class Classification { Symmetric, PseudoSymmetric, AlmostSymmetric, None };

const char* to_string(Classification c);

struct PFData {
  Int frobenius = -1;
  Int genus = 0;
  std::vector<Int> pf;        // sorted
  std::vector<Int> pf_prime;  // pf without the Frobenius number
  Int type = 0;
  Classification classification = Classification::None;

  bool almost_symmetric() const noexcept {
    return classification != Classification::None;
  }
};

/// A numerical semigroup given by its minimal generating set. Immutable
/// after construction; every query is a pure read of the cached tables.
class NumericalSemigroup {
 public:
  /// Sorts, drops redundant generators and builds the Apéry cache.
  /// Throws EmptyInput, InvalidInput (entry < 1) or GcdNotOne.
  explicit NumericalSemigroup(std::span<const Int> raw_generators);
  NumericalSemigroup(std::initializer_list<Int> raw_generators);

  const std::vector<Int>& generators() const noexcept { return gens_; }
  std::size_t embedding_dimension() const noexcept { return gens_.size(); }
  Int generator(std::size_t i) const { return gens_.at(i); }
  Int multiplicity() const noexcept { return gens_.front(); }
  /// Sum of the minimal generators.
  Int generator_sum() const noexcept { return sum_; }
  bool is_natural_numbers() const noexcept { return gens_.front() == 1; }

  bool contains(Int h) const;
  /// a <=_H b, i.e. b - a lies in H.
  bool leq(Int a, Int b) const { return contains(b - a); }

  /// Ap(n_1, H) indexed by residue modulo n_1.
  const std::vector<Int>& apery_min() const noexcept {
    return suffix_.front().values();
  }
  AperyTable apery(Int a) const;

  Int frobenius() const noexcept { return frobenius_; }
  Int genus() const noexcept { return genus_; }
  /// All gaps, ascending (enumerated up to the Frobenius number).
  std::vector<Int> gaps() const;
  PFData pseudo_frobenius() const;

  /// Membership in the submonoid generated by generators i..e-1.
  bool suffix_contains(std::size_t i, Int x) const;

  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.gens_ == b.gens_;
  }

 private:
  std::vector<Int> gens_;
  Int sum_ = 0;
  Int frobenius_ = -1;
  Int genus_ = 0;
  // suffix_[i] handles generators i..e-1 modulo n_i; suffix_[0] is Ap(n_1,H).
  std::vector<ResidueTable> suffix_;
};

/// Minimal generators of the monoid generated by `values` (gcd not checked).
std::vector<Int> minimalize(std::span<const Int> values);

Int gcd_of(std::span<const Int> values);

}  // namespace numsgp
