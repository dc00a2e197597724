#include <doctest.h>

#include "helpers.hpp"
#include "jetcover/ideal.hpp"
#include "jetcover/jets.hpp"

using namespace jetcover;
using namespace jetcover::testing;

namespace {

Monomial randomMonomial(Rng& rng, const UniversePtr& u, int maxExp) {
    std::vector<int> exps(u->size(), 0);
    for (auto& e : exps) e = rng.below(maxExp + 1);
    return Monomial::fromExponents(u, std::move(exps));
}

MonomialIdeal randomIdeal(Rng& rng, const UniversePtr& u, int gens, int maxExp) {
    std::vector<Monomial> ms;
    for (int i = 0; i < gens; ++i) {
        Monomial m = randomMonomial(rng, u, maxExp);
        if (!m.isUnit()) ms.push_back(m);
    }
    return MonomialIdeal::make(u, std::move(ms));
}

} // namespace

TEST_CASE("monomial parse and print round trip") {
    auto u = universe({"x", "y", "z"});
    auto m = parseMonomial(u, "x^2*z^2");
    CHECK(m.exponents() == std::vector<int>{2, 0, 2});
    CHECK(to_string(m) == "x^2*z^2");
    CHECK(to_string(parseMonomial(u, "1")) == "1");
    CHECK(parseMonomial(u, "x*x*y").exponents() == std::vector<int>{2, 1, 0});
    CHECK_THROWS_AS(parseMonomial(u, "w"), DomainError);
    CHECK_THROWS_AS(parseMonomial(u, "x^0"), DomainError);
    CHECK_THROWS_AS(parseMonomial(u, "x**y"), DomainError);

    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Monomial m2 = randomMonomial(rng, u, 4);
        CHECK(parseMonomial(u, to_string(m2)) == m2);
    }
}

TEST_CASE("minimalize") {
    auto u = universe({"x", "y", "z"});
    auto i1 = idealOf(u, {"x*y", "x*y*z"});
    CHECK(i1.generators().size() == 1);
    CHECK(to_string(i1.generators()[0]) == "x*y");

    auto i2 = idealOf(u, {"x^2*z^2", "x*y*z", "y^2"});
    CHECK(i2.generators().size() == 3);

    auto zero = MonomialIdeal::zero(u);
    CHECK(zero.isZero());
    CHECK(idealOf(u, {}).isZero());

    auto w = universe({"a"});
    CHECK_THROWS_AS(MonomialIdeal::make(u, {parseMonomial(w, "a")}), DomainError);
}

TEST_CASE("generator lists are divisibility antichains in canonical order") {
    auto u = universe({"x", "y"});
    auto sq = power(idealOf(u, {"x", "y"}), 2);
    REQUIRE(sq.generators().size() == 3);
    CHECK(to_string(sq.generators()[0]) == "x^2");
    CHECK(to_string(sq.generators()[1]) == "x*y");
    CHECK(to_string(sq.generators()[2]) == "y^2");

    Rng rng(17);
    auto u5 = universe(letters(5));
    for (int trial = 0; trial < 100; ++trial) {
        auto ideal = randomIdeal(rng, u5, 1 + rng.below(6), 3);
        const auto& gens = ideal.generators();
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (i != j) CHECK(!gens[i].divides(gens[j]));
    }
}

TEST_CASE("intersection fixtures") {
    auto u = universe({"x", "y", "z"});
    auto left = idealOf(u, {"x", "y"});
    auto right = idealOf(u, {"y", "z"});
    CHECK(intersect(left, right) == idealOf(u, {"x*z", "y"}));

    CHECK(intersect(left, MonomialIdeal::unitIdeal(u)) == left);

    CHECK(intersect(power(left, 2), power(right, 2)) ==
          idealOf(u, {"x^2*z^2", "x*y*z", "y^2"}));
}

TEST_CASE("power fixtures") {
    auto u = universe({"x", "y", "z"});
    CHECK(power(idealOf(u, {"x", "y"}), 2) == idealOf(u, {"x^2", "x*y", "y^2"}));
    CHECK(power(idealOf(u, {"x"}), 5) == idealOf(u, {"x^5"}));

    // Oracle: enumerate all products of two generators and minimalize.
    auto base = idealOf(u, {"x*z", "y"});
    std::vector<Monomial> products;
    for (const auto& a : base.generators())
        for (const auto& b : base.generators()) products.push_back(a * b);
    CHECK(power(base, 2) == MonomialIdeal::make(u, products));
}

TEST_CASE("quotient fixtures") {
    auto u = universe({"x", "y", "z"});
    CHECK(quotient(idealOf(u, {"x*y"}), idealOf(u, {"y"})) == idealOf(u, {"x"}));
    auto a = idealOf(u, {"x*y", "z"});
    CHECK(quotient(a, MonomialIdeal::unitIdeal(u)) == a);
    CHECK(quotient(a, MonomialIdeal::zero(u)).isUnit());

    // A prime stays fixed under colon by an outside monomial.
    auto prime = idealOf(u, {"x", "y"});
    CHECK(quotient(prime, idealOf(u, {"z^3"})) == prime);
}

TEST_CASE("quotient properties on random ideals") {
    Rng rng(29);
    auto u = universe(letters(4));
    for (int trial = 0; trial < 150; ++trial) {
        auto a = randomIdeal(rng, u, 1 + rng.below(4), 3);
        auto b = randomIdeal(rng, u, 1 + rng.below(4), 3);
        auto q = quotient(a, b);
        // a is contained in a : b.
        CHECK(q.containsIdeal(a));
        // (a : b) * b lands back inside a.
        for (const auto& g : q.generators())
            for (const auto& h : b.generators()) CHECK(a.contains(g * h));
        // Maximality: any monomial with m*b inside a lies in a : b.
        for (int probe = 0; probe < 10; ++probe) {
            Monomial m = randomMonomial(rng, u, 3);
            bool sendsIn = !b.isZero();
            for (const auto& h : b.generators())
                if (!a.contains(m * h)) sendsIn = false;
            if (sendsIn) CHECK(q.contains(m));
        }
    }
}

TEST_CASE("intersection is commutative, associative, monotone") {
    Rng rng(41);
    auto u = universe(letters(6));
    for (int trial = 0; trial < 100; ++trial) {
        auto a = randomIdeal(rng, u, 1 + rng.below(4), 2);
        auto b = randomIdeal(rng, u, 1 + rng.below(4), 2);
        auto c = randomIdeal(rng, u, 1 + rng.below(4), 2);
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        CHECK(a.containsIdeal(intersect(a, b)));
        // Membership agrees with joint membership on random probes.
        auto meet = intersect(a, b);
        for (int probe = 0; probe < 10; ++probe) {
            Monomial m = randomMonomial(rng, u, 3);
            CHECK(meet.contains(m) == (a.contains(m) && b.contains(m)));
        }
    }
}

TEST_CASE("squarefree detection") {
    auto u = universe({"x", "y", "z"});
    CHECK(idealOf(u, {"x*y", "y*z"}).isSquarefree());
    CHECK(!idealOf(u, {"x^2*z^2", "x*y*z", "y^2"}).isSquarefree());
    CHECK(MonomialIdeal::zero(u).isSquarefree());
}

TEST_CASE("polarization fixtures") {
    auto u = universe({"x", "y", "z"});
    JetSpace space(u, 1);
    CHECK(to_string(polarize(space, parseMonomial(u, "x^2*z^2"))) == "x_0*x_1*z_0*z_1");
    CHECK(to_string(polarize(space, parseMonomial(u, "y^2"))) == "y_0*y_1");
    CHECK(to_string(polarize(space, parseMonomial(u, "x*y*z"))) == "x_0*y_0*z_0");
    CHECK_THROWS_AS(polarize(space, parseMonomial(u, "x^3")), DomainError);
}

TEST_CASE("depolarization fixtures") {
    auto u = universe({"x", "y", "z"});
    JetSpace deep(u, 2);
    CHECK(to_string(depolarize(deep, parseMonomial(deep.jet(), "x_0*y_2"))) == "x*y");
    CHECK(to_string(depolarize(deep, parseMonomial(deep.jet(), "1"))) == "1");
    JetSpace space(u, 1);
    CHECK(to_string(depolarize(space, parseMonomial(space.jet(), "x_0*x_1*z_0*z_1"))) ==
          "x^2*z^2");
}

TEST_CASE("depolarize inverts polarize") {
    Rng rng(53);
    auto u = universe(letters(4));
    for (int trial = 0; trial < 200; ++trial) {
        int s = rng.below(4);
        JetSpace space(u, s);
        Monomial m = randomMonomial(rng, u, s + 1);
        Monomial lifted = polarize(space, m);
        CHECK(lifted.isSquarefree());
        CHECK(depolarize(space, lifted) == m);
    }
}

TEST_CASE("jet universe naming and collision guard") {
    auto u = universe({"x", "y"});
    JetSpace space(u, 1);
    CHECK(space.jet()->labels() ==
          std::vector<std::string>{"x_0", "x_1", "y_0", "y_1"});
    CHECK_THROWS_AS(JetSpace(universe({"x", "x_1"}), 1), DomainError);
}
