#pragma once

#include <vector>

#include "numsgp/report.hpp"
#include "numsgp/semigroup.hpp"

namespace numsgp {

/// Every verifier that applies to H, in a fixed order. Verifiers whose
/// preconditions fail are returned as not-applicable reports.
std::vector<Report> verify_all(const NumericalSemigroup& sg);

}  // namespace numsgp
