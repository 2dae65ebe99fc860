#include "doctest.h"

#include <limits>
#include <string>

#include "bewit/format.hpp"

using namespace bewit;

TEST_CASE("num17 round-trips doubles") {
  CHECK(num17(0.1) == "0.10000000000000001");
  CHECK(num17(2.0) == "2.0");
  CHECK(num17(-3.0) == "-3.0");
  CHECK(std::stod(num17(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("JSON object writer") {
  JsonObject o;
  o.add("d", 3).add("x", 0.5).add("ok", true).add("kind", "bell").add_null("s");
  o.add("bad", std::numeric_limits<double>::quiet_NaN());
  CHECK(o.str() == R"({"d": 3, "x": 0.5, "ok": true, "kind": "bell", "s": null, "bad": null})");
  CHECK(json_quote("a\"b\\c\n") == R"("a\"b\\c\n")");
}
