#include <doctest.h>

#include "helpers.hpp"
#include "jetcover/universe.hpp"

using namespace jetcover;
using namespace jetcover::testing;

TEST_CASE("universe interning and lookup") {
    auto u = universe({"x", "y", "z"});
    CHECK(u->size() == 3);
    CHECK(u->indexOf("y") == 1);
    CHECK(!u->find("w"));
    CHECK_THROWS_AS(u->indexOf("w"), DomainError);
    CHECK_THROWS_AS(Universe::make({"x", "x"}), DomainError);
    CHECK_THROWS_AS(Universe::make({""}), DomainError);
}

TEST_CASE("universe capacity bound") {
    std::vector<std::string> labels;
    for (int i = 0; i < 65; ++i) labels.push_back("v" + std::to_string(i));
    CHECK_THROWS_AS(Universe::make(labels), ResourceLimitError);
}

TEST_CASE("vertex set basics") {
    VertexSet s = VertexSet::fromIndices({0, 2, 5});
    CHECK(s.count() == 3);
    CHECK(s.contains(2));
    CHECK(!s.contains(1));
    CHECK(s.indices() == std::vector<int>{0, 2, 5});
    CHECK(s.subsetOf(VertexSet::full(6)));
    CHECK(VertexSet::empty().subsetOf(s));
    CHECK(s.minus(VertexSet::single(2)) == VertexSet::fromIndices({0, 5}));
}

TEST_CASE("sequence order lists shorter prefixes first") {
    auto xz = VertexSet::fromIndices({0, 2});
    auto y = VertexSet::fromIndices({1});
    auto x = VertexSet::fromIndices({0});
    auto xy = VertexSet::fromIndices({0, 1});
    CHECK(sequenceLess(xz, y));   // (0,2) < (1)
    CHECK(!sequenceLess(y, xz));
    CHECK(sequenceLess(x, xy));   // prefix first
    CHECK(sequenceLess(x, xz));
    CHECK(!sequenceLess(x, x));
}

TEST_CASE("sequence order agrees with explicit index-sequence comparison") {
    Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        VertexSet a{rng.next() % 1024}, b{rng.next() % 1024};
        auto ia = a.indices(), ib = b.indices();
        bool expected = std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
        CHECK(sequenceLess(a, b) == expected);
    }
}
