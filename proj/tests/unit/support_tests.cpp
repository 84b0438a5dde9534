#include "doctest.h"
#include "riskmat/error.hpp"
#include "riskmat/hash.hpp"
#include "riskmat/rational.hpp"
#include "riskmat/timestamp.hpp"

using riskmat::Rational;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(3) + Rational(4) == Rational(7));
  CHECK(Rational(3, 2) + Rational(1, 6) == Rational(5, 3));
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK(Rational(5, 3) - Rational(2, 3) == Rational(1));
  CHECK(Rational(7, 2) / Rational(7) == Rational(1, 2));
  CHECK(-Rational(1, 3) == Rational(-1, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational exact ordering") {
  CHECK(Rational(1, 3) < Rational(34, 100));
  CHECK(Rational(2, 3) > Rational(66, 100));
  CHECK(Rational(3, 4) >= Rational(75, 100));
  CHECK(Rational(3, 4) <= Rational(75, 100));
  CHECK(Rational(20) < Rational(20001, 1000));
  // values near int64 limits still compare correctly (128-bit cross products)
  const Rational big(INT64_MAX / 2, 3);
  CHECK(big > Rational(INT64_MAX / 4, 3));
}

TEST_CASE("rational formatting") {
  CHECK(Rational(27).str() == "27");
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(Rational(-5, 3).str() == "-5/3");
  CHECK(Rational(75).decimal(2) == "75.00");
  CHECK(Rational(200, 3).decimal(2) == "66.67");
  CHECK(Rational(1, 3).decimal(3) == "0.333");
  CHECK(Rational(-1, 2).decimal(1) == "-0.5");
  CHECK(Rational(405).decimal(2) == "405.00");
  CHECK(Rational(100).decimal(0) == "100");
}

TEST_CASE("rational parse round-trips str") {
  for (const Rational r : {Rational(0), Rational(27), Rational(7, 2), Rational(-5, 3)}) {
    CHECK(Rational::parse(r.str()) == r);
  }
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rfc3339 round-trip") {
  for (const char* text : {"1970-01-01T00:00:00Z", "2007-12-10T00:00:00Z",
                           "2024-02-29T23:59:59Z", "2026-08-10T11:22:33Z"}) {
    CHECK(riskmat::format_rfc3339(riskmat::parse_rfc3339(text)) == text);
  }
  CHECK(riskmat::parse_rfc3339("1970-01-01T00:00:00Z") == 0);
  CHECK(riskmat::parse_rfc3339("1970-01-02T00:00:01Z") == 86401);
}

TEST_CASE("rfc3339 rejects malformed timestamps") {
  for (const char* text :
       {"2026-08-10 11:22:33Z", "2026-08-10T11:22:33", "2026-08-10T11:22:33z",
        "2026-13-01T00:00:00Z", "2026-02-29T00:00:00Z", "2026-00-10T00:00:00Z",
        "2026-08-32T00:00:00Z", "2026-08-10T24:00:00Z", "2026-08-10T11:60:00Z", "garbage", ""}) {
    CHECK_THROWS_AS(riskmat::parse_rfc3339(text), riskmat::Error);
  }
  // 2024 is a leap year, 2026 is not
  CHECK_NOTHROW(riskmat::parse_rfc3339("2024-02-29T00:00:00Z"));
}

TEST_CASE("fnv1a64 known vectors") {
  CHECK(riskmat::fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(riskmat::fnv1a64_hex("a") == "af63dc4c8601ec8c");
  CHECK(riskmat::fnv1a64_hex("hello") == "a430d84680aabd0b");
  CHECK(riskmat::fnv1a64_hex("x") != riskmat::fnv1a64_hex("y"));
}
