#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "numsgp/betti.hpp"
#include "numsgp/rf.hpp"
#include "numsgp/shifted.hpp"
#include "numsgp/structure.hpp"

namespace numsgp {

using Json = nlohmann::json;  // object keys sorted, so dumps are canonical

/// Integers beyond 2^53 become decimal strings.
Json int_json(Int v);
Json ints_json(const std::vector<Int>& v);

Json to_json(const NumericalSemigroup& sg);
Json to_json(const PFData& pf);
Json to_json(const AlphaTable& al);
Json to_json(const RFMatrix& m);
Json to_json(const Binomial& b);
Json to_json(const SpecialRow& s);
Json to_json(const BettiTable& t);
Json to_json(const Report& r);
Json to_json(const KomedaForm& k);
Json to_json(const ShiftScanRecord& r);
Json to_json(const OddSearchHit& h);

/// Canonical text: two-space indentation, sorted keys.
std::string dump(const Json& j);

}  // namespace numsgp
