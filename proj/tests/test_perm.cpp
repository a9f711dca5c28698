#include "doctest.h"
#include "gh/perm.hpp"

using namespace gh;

TEST_SUITE("perm") {
  TEST_CASE("lexicographic enumeration") {
    auto perms = enumerate_permutations(3);
    REQUIRE(perms.size() == 6);
    CHECK(to_string(perms[0]) == "(1,2,3)");
    CHECK(to_string(perms[1]) == "(1,3,2)");
    CHECK(to_string(perms[2]) == "(2,1,3)");
    CHECK(to_string(perms[5]) == "(3,2,1)");
    CHECK(enumerate_permutations(8).size() == 40320);
    CHECK_THROWS_AS(enumerate_permutations(1), UsageError);
    CHECK_THROWS_AS(enumerate_permutations(9), UsageError);
  }

  TEST_CASE("sign is the inversion parity") {
    CHECK(sign(Permutation{{1, 2, 3}}) == 1);
    CHECK(sign(Permutation{{2, 1, 3}}) == -1);
    CHECK(sign(Permutation{{2, 3, 1}}) == 1);
    CHECK(sign(Permutation{{3, 2, 1}}) == -1);
    CHECK_THROWS_AS(sign(Permutation{{1, 1, 2}}), UsageError);
  }

  TEST_CASE("signs split evenly") {
    int plus = 0;
    for (const auto& p : enumerate_permutations(5))
      if (sign(p) > 0) ++plus;
    CHECK(plus == 60);
  }

  TEST_CASE("bijection test") {
    CHECK(is_bijection(Permutation{{2, 1}}));
    CHECK_FALSE(is_bijection(Permutation{{2, 2}}));
    CHECK_FALSE(is_bijection(Permutation{{0, 1}}));
    CHECK(is_bijection(Permutation{{}}));  // vacuously
  }
}
