#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles/markov_oracle.hpp"

#include <set>

TEST_CASE("brute-force oracle reproduces the Markov numbers below 1000")
{
    auto found = oracle::markov_numbers_brute_force(1000);
    std::set<std::uint64_t> expected{1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985};
    CHECK(found == expected);
}

TEST_CASE("oracle triples satisfy the Markov equation near the bound")
{
    auto found = oracle::markov_numbers_brute_force(200);
    CHECK(found.count(194) == 1);
    CHECK(found.count(233) == 0);
    CHECK(found.count(7) == 0);
}
