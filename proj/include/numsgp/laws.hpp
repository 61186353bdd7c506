#pragma once

#include "numsgp/report.hpp"
#include "numsgp/semigroup.hpp"

namespace numsgp {

/// Apéry set size and closure, the almost symmetric Apéry dichotomy, the
/// symmetric and almost symmetric characterizations (2g = F + t against
/// PF pairing), and 2g >= F + t.
Report verify_semigroup_laws(const NumericalSemigroup& sg);

/// alpha bounds and witnesses, (alpha_i - 1) n_i in Ap(n_k), the b >= alpha_i - 1
/// bound for f + n_k = b n_i, and for almost symmetric H the lifting of
/// factorizations of f + n_k to F + n_k, the UF criterion and the counting
/// identity for n_k; for e = 4 the alpha_i n_i bound below non-UF f + n_k.
Report verify_factorization_laws(const NumericalSemigroup& sg);

}  // namespace numsgp
