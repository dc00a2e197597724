#include "jetcover/ideal.hpp"

#include <algorithm>

namespace jetcover {

MonomialIdeal::MonomialIdeal(UniversePtr universe, std::vector<Monomial> gens)
    : universe_(std::move(universe)), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::zero(UniversePtr universe) {
    return MonomialIdeal(std::move(universe), {});
}

MonomialIdeal MonomialIdeal::unitIdeal(UniversePtr universe) {
    Monomial one(universe);
    return MonomialIdeal(std::move(universe), {one});
}

MonomialIdeal MonomialIdeal::make(UniversePtr universe, std::vector<Monomial> generators) {
    for (const auto& g : generators)
        requireSameUniverse(*universe, g.universe(), "ideal generators");
    // Scanning in degree order means divisors are always seen first.
    std::sort(generators.begin(), generators.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> minimal;
    for (const auto& g : generators) {
        bool redundant = false;
        for (const auto& kept : minimal) {
            if (kept.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g);
    }
    std::sort(minimal.begin(), minimal.end(), monomialPrecedes);
    return MonomialIdeal(std::move(universe), std::move(minimal));
}

bool MonomialIdeal::isSquarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.isSquarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    requireSameUniverse(*universe_, m.universe(), "ideal membership");
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::containsIdeal(const MonomialIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal minimalize(UniversePtr universe, std::vector<Monomial> generators) {
    return MonomialIdeal::make(std::move(universe), std::move(generators));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    requireSameUniverse(a.universe(), b.universe(), "intersection");
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
    return MonomialIdeal::make(a.universePtr(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
    if (k < 1) throw DomainError("ideal power requires k >= 1");
    MonomialIdeal result = a;
    for (int step = 1; step < k; ++step) {
        std::vector<Monomial> gens;
        gens.reserve(result.generators().size() * a.generators().size());
        for (const auto& g : result.generators())
            for (const auto& h : a.generators()) gens.push_back(g * h);
        result = MonomialIdeal::make(a.universePtr(), std::move(gens));
    }
    return result;
}

MonomialIdeal quotientByMonomial(const MonomialIdeal& a, const Monomial& m) {
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size());
    for (const auto& g : a.generators()) gens.push_back(divideExact(g, gcd(g, m)));
    return MonomialIdeal::make(a.universePtr(), std::move(gens));
}

MonomialIdeal quotient(const MonomialIdeal& a, const MonomialIdeal& b) {
    requireSameUniverse(a.universe(), b.universe(), "quotient");
    if (b.isZero()) return MonomialIdeal::unitIdeal(a.universePtr());
    bool first = true;
    MonomialIdeal result = MonomialIdeal::zero(a.universePtr());
    for (const auto& g : b.generators()) {
        MonomialIdeal part = quotientByMonomial(a, g);
        result = first ? part : intersect(result, part);
        first = false;
    }
    return result;
}

} // namespace jetcover
