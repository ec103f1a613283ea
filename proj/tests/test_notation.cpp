#include "doctest.h"

#include "partbij/enumerate.hpp"
#include "partbij/notation.hpp"

using namespace partbij;

TEST_CASE("parse multiset notation") {
  CHECK(parse_notation("5^3,4,3^2,1^4") == Partition{5, 5, 5, 4, 3, 3, 1, 1, 1, 1});
  CHECK(parse_notation("") == Partition{});
  CHECK(parse_notation("   ") == Partition{});
  CHECK(parse_notation("1,3,1") == Partition{3, 1, 1});
  CHECK(parse_notation(" 13^4 , 11^2 ,9 ") == parse_notation("13^4,11^2,9"));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_notation("5,,3"), NotationError);
  CHECK_THROWS_AS(parse_notation("5^"), NotationError);
  CHECK_THROWS_AS(parse_notation("0"), NotationError);
  CHECK_THROWS_AS(parse_notation("-3"), NotationError);
  CHECK_THROWS_AS(parse_notation("5^0"), NotationError);
  CHECK_THROWS_AS(parse_notation("3 4"), NotationError);
  try {
    parse_notation("5,x");
  } catch (const NotationError& e) {
    CHECK(e.position == 2);
  }
  CHECK_THROWS_AS(parse_notation("1^2000000"), NotationError);  // size guard
}

TEST_CASE("print multiset notation") {
  CHECK(to_notation(Partition{5, 5, 5, 4, 3, 3, 1, 1, 1, 1}) == "5^3,4,3^2,1^4");
  CHECK(to_notation(Partition{28, 22, 20, 16, 13, 7, 6, 4, 3, 2}) ==
        "28,22,20,16,13,7,6,4,3,2");
  CHECK(to_notation(Partition{}) == "");
}

TEST_CASE("print-parse round trip, exhaustive") {
  for (long long n = 0; n <= 30; ++n) {
    for_each_partition(n, [&](std::span<const Part> parts) {
      const Partition p = Partition::from_sorted({parts.begin(), parts.end()});
      const std::string text = to_notation(p);
      CHECK(parse_notation(text) == p);
      CHECK(to_notation(parse_notation(text)) == text);
    });
  }
}
