#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "numsgp/serialize.hpp"

using namespace numsgp;

TEST_CASE("large integers become strings") {
  CHECK(int_json(5).is_number_integer());
  CHECK(int_json(Int{1} << 53).is_number_integer());
  CHECK(int_json((Int{1} << 53) + 1) == Json("9007199254740993"));
  CHECK(int_json(-(Int{1} << 60)).is_string());
}

TEST_CASE("reports round-trip byte for byte") {
  NumericalSemigroup h({22, 28, 47, 53});
  Json j = {{"pf", to_json(h.pseudo_frobenius())},
            {"alphas", to_json(alphas(h))},
            {"rf", to_json(rf_matrices(h, 25).front())},
            {"betti", to_json(graded_betti(h))},
            {"report", to_json(verify_rf_laws(h))}};
  std::string text = dump(j);
  CHECK(dump(Json::parse(text)) == text);
  CHECK(text.find("\"classification\": \"almost-symmetric\"") != std::string::npos);
  // keys sorted
  CHECK(text.find("\"alphas\"") < text.find("\"betti\""));
}

TEST_CASE("scan records") {
  auto rec = scan_one(NumericalSemigroup({10, 11, 13, 14}), 4);
  Json j = to_json(rec);
  CHECK(j["m"] == 4);
  CHECK(j["f"] == rec.f.value());
  auto bad = to_json(scan_one(NumericalSemigroup({3, 5}), 1));
  CHECK(bad["valid"] == false);
  CHECK(bad["f"].is_null());
}
