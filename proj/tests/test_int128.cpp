#include <doctest.h>

#include <unordered_set>

#include "twinsieve/int128.hpp"

using twinsieve::Int;
using twinsieve::DomainError;
using twinsieve::OverflowError;

TEST_CASE("decimal round trip") {
  CHECK(Int(0).str() == "0");
  CHECK(Int(-1).str() == "-1");
  CHECK(Int(123456789).str() == "123456789");
  CHECK(Int::max().str() == "170141183460469231731687303715884105727");
  CHECK(Int::min().str() == "-170141183460469231731687303715884105728");

  for (const char* text : {"0", "-1", "42", "170141183460469231731687303715884105727",
                           "-170141183460469231731687303715884105728"}) {
    CHECK(Int::parse(text).str() == text);
  }
  CHECK(Int::parse("+17") == 17);
}

TEST_CASE("parse rejects garbage and overflow") {
  CHECK_THROWS_AS(Int::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Int::parse("-"), std::invalid_argument);
  CHECK_THROWS_AS(Int::parse("12x"), std::invalid_argument);
  CHECK_THROWS_AS(Int::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Int::parse("170141183460469231731687303715884105728"), OverflowError);
  CHECK_THROWS_AS(Int::parse("999999999999999999999999999999999999999999"), OverflowError);
}

TEST_CASE("checked arithmetic") {
  CHECK(Int(7) + Int(5) == 12);
  CHECK(Int(7) - Int(5) == 2);
  CHECK(Int(7) * Int(5) == 35);
  CHECK(Int(35) / Int(5) == 7);
  CHECK(Int(37) % Int(5) == 2);
  CHECK(-Int(9) == -9);

  CHECK_THROWS_AS(Int::max() + 1, OverflowError);
  CHECK_THROWS_AS(Int::min() - 1, OverflowError);
  CHECK_THROWS_AS(Int::max() * 2, OverflowError);
  CHECK_THROWS_AS(Int::min() / Int(-1), OverflowError);
  CHECK_THROWS_AS(-Int::min(), OverflowError);
  CHECK_THROWS_AS(Int(1) / Int(0), DomainError);
  CHECK_THROWS_AS(Int(1) % Int(0), DomainError);
}

TEST_CASE("division truncates toward zero") {
  CHECK(Int(7) / Int(2) == 3);
  CHECK(Int(-7) / Int(2) == -3);
  CHECK(Int(7) % Int(-2) == 1);
  CHECK(Int(-7) % Int(2) == -1);
}

TEST_CASE("narrowing conversions are checked") {
  CHECK(Int(17).to_u64() == 17);
  CHECK(Int(-17).to_i64() == -17);
  CHECK_THROWS_AS(Int(-1).to_u64(), OverflowError);
  CHECK_THROWS_AS(Int::max().to_u64(), OverflowError);
  CHECK_THROWS_AS(Int::max().to_i64(), OverflowError);
}

TEST_CASE("hashable for use as a memo key") {
  std::unordered_set<Int> seen;
  for (int i = 0; i < 100; ++i) seen.insert(Int(i) * Int(1) + Int::parse("10000000000000000000000000"));
  CHECK(seen.size() == 100);
}
