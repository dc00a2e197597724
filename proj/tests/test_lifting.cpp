#include <doctest.h>

#include "helpers.hpp"
#include "jetcover/jets.hpp"
#include "jetcover/lifting.hpp"

using namespace jetcover;
using namespace jetcover::testing;

namespace {

/// Counts size-k subsets of the jet copies of a j-set whose collapse is
/// the whole j-set, by scanning all masks.
long long bruteForceLiftCount(int s, int j, int k) {
    const int bitsTotal = (s + 1) * j;
    REQUIRE(bitsTotal <= 20);
    long long count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bitsTotal); ++mask) {
        VertexSet v{mask};
        if (v.count() != k) continue;
        VertexSet hit;
        v.forEach([&](int idx) { hit.add(idx / (s + 1)); });
        if (hit == VertexSet::full(j)) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("lifting function fixtures") {
    CHECK(liftingFunction(1, 2, 2) == 4);
    CHECK(liftingFunction(1, 2, 3) == 4);
    CHECK(liftingFunction(1, 2, 4) == 1);
    CHECK(liftingFunction(2, 3, 6) == 81);
    for (int s = 0; s <= 4; ++s) CHECK(liftingFunction(s, 0, 0) == 1);
}

TEST_CASE("first-order lifting matrix matches the 4x7 fixture") {
    auto m = liftingMatrix(1, 3);
    std::vector<std::vector<long long>> expected{{1, 0, 0, 0, 0, 0, 0},
                                                 {0, 2, 1, 0, 0, 0, 0},
                                                 {0, 0, 4, 4, 1, 0, 0},
                                                 {0, 0, 0, 8, 12, 6, 1}};
    CHECK(m.entries == expected);
}

TEST_CASE("second-order lifting matrix matches the 4x10 fixture") {
    auto m = liftingMatrix(2, 3);
    std::vector<std::vector<long long>> expected{
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 3, 3, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 9, 18, 15, 6, 1, 0, 0, 0},
        {0, 0, 0, 27, 81, 108, 81, 36, 9, 1}};
    CHECK(m.entries == expected);
}

TEST_CASE("order-zero lifting matrix is the identity") {
    auto m = liftingMatrix(0, 4);
    for (int j = 0; j <= 4; ++j)
        for (int k = 0; k <= 4; ++k) CHECK(m.entries[j][k] == (j == k ? 1 : 0));
}

TEST_CASE("boundary values") {
    for (int s = 0; s <= 3; ++s) {
        for (int j = 0; j <= 5; ++j) {
            long long power = 1;
            for (int i = 0; i < j; ++i) power *= s + 1;
            CHECK(liftingFunction(s, j, j) == power);
            CHECK(liftingFunction(s, j, (s + 1) * j) == 1);
            if (j > 0) CHECK(liftingFunction(s, j, j - 1) == 0);
            CHECK(liftingFunction(s, j, (s + 1) * j + 1) == 0);
        }
    }
}

TEST_CASE("recursion equals the closed form") {
    for (int s = 0; s <= 3; ++s)
        for (int j = 0; j <= 5; ++j)
            for (int k = 0; k <= 4 * (s + 1); ++k)
                CHECK(liftingFunction(s, j, k) == liftingFunctionClosedForm(s, j, k));
}

TEST_CASE("lifting counts lifts of sets along the collapse map") {
    for (int s = 0; s <= 3; ++s) {
        for (int j = 0; j <= 4; ++j) {
            if ((s + 1) * j > 16) continue;
            for (int k = 0; k <= (s + 1) * j; ++k)
                CHECK(liftingFunction(s, j, k) == bruteForceLiftCount(s, j, k));
        }
    }
}

TEST_CASE("row sums count nonempty fiber selections") {
    for (int s = 0; s <= 3; ++s) {
        for (int j = 0; j <= 5; ++j) {
            long long sum = 0;
            for (int k = 0; k <= (s + 1) * j; ++k) sum += liftingFunction(s, j, k);
            long long expected = 1;
            for (int i = 0; i < j; ++i) expected *= (1LL << (s + 1)) - 1;
            CHECK(sum == expected);
        }
    }
}
