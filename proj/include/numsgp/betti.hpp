#pragma once

#include <map>
#include <vector>

#include "numsgp/binomial.hpp"
#include "numsgp/report.hpp"

namespace numsgp {

/// Factorizations of one degree, joined when their supports overlap.
/// Two factorizations are connected by moves of strictly smaller degree
/// exactly when they share a component.
struct FiberGraph {
  Int degree = 0;
  std::vector<Exponents> vertices;           // lexicographically descending
  std::vector<std::size_t> component;        // component id per vertex
  std::size_t components = 0;
  /// Lexicographically smallest vertex of each component, components
  /// ordered by that vertex.
  std::vector<std::size_t> representatives;
};

FiberGraph fiber_graph(const NumericalSemigroup& sg, Int degree,
                       std::size_t cap = kDefaultFactorizationCap);

/// A minimal binomial generating set of I_H, ordered by degree. Every
/// degree in H up to F(H)+N is scanned with its fiber graph; components
/// beyond the first are joined to it through their smallest vertices.
std::vector<Binomial> minimal_generators(const NumericalSemigroup& sg);

/// True when x^plus - x^minus is part of some minimal generating set of
/// I_H: both monomials are factorizations of the degree lying in different
/// components of the fiber graph.
bool is_minimal_generator(const NumericalSemigroup& sg, const Binomial& b);

/// Faces S of the simplex on generator indices with h - sum_{i in S} n_i in
/// H, stored as bitmasks.
struct DivisorComplex {
  Int element = 0;
  std::size_t vertices = 0;
  std::vector<unsigned> faces;
};

DivisorComplex divisor_complex(const NumericalSemigroup& sg, Int h);

/// Reduced rational homology dimensions; index k holds dim H~_{k-1}, so
/// index 0 is H~_{-1}.
std::vector<Int> reduced_homology(const DivisorComplex& complex);

/// Rank over Q of an integer matrix, by fraction-free elimination.
Int exact_rank(std::vector<std::vector<Int>> rows);

struct BettiTable {
  std::size_t e = 0;
  /// graded[i][d] = beta_{i,d}, for 0 <= i <= e-1.
  std::vector<std::map<Int, Int>> graded;
  Int mu = 0;
  std::vector<Int> a_degrees;     // shifts of F_1, sorted, with multiplicity
  std::vector<Int> b_degrees;     // shifts of F_2
  std::vector<Int> last_degrees;  // shifts of F_{e-1}
  Int m0 = 0;       // 3(t-1)
  Int surplus = 0;  // mu - m0

  Int total(std::size_t i) const;
  std::vector<Int> degrees(std::size_t i) const;
};

/// Graded Betti numbers of K[H] as reduced homology of the divisor
/// complexes of the elements of H up to F(H)+N. Requires e <= 6.
BettiTable graded_betti(const NumericalSemigroup& sg);

/// Degree multiset identities of the resolution of a 4-generated almost
/// symmetric semigroup ring, including the surplus pairing (taken against
/// F(H)+N). Throws PrecondFailed otherwise.
Report verify_comparison(const NumericalSemigroup& sg);
Report verify_comparison(const NumericalSemigroup& sg, const BettiTable& table);

/// Structural laws of the resolution: beta_0 = 1, beta_{e-1} = t with
/// shifts f+N, alternating sum zero, agreement of mu between the fiber and
/// homology routes, the 3(t-1) lower bound for e = 4, the bound on minimal
/// generators of the non-UF ideal, and the f+n_i+n_j degree bound of every
/// minimal generator.
Report verify_betti_laws(const NumericalSemigroup& sg);

}  // namespace numsgp
