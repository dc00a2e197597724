#include "jetcover/simplicial.hpp"

#include <algorithm>

#include "jetcover/covers.hpp"

namespace jetcover {

SimplicialComplex::SimplicialComplex(UniversePtr universe, std::vector<VertexSet> nonFaces)
    : universe_(std::move(universe)), nonFaces_(std::move(nonFaces)) {}

SimplicialComplex SimplicialComplex::make(UniversePtr universe,
                                          std::vector<VertexSet> nonFaces) {
    const VertexSet mask = VertexSet::full(universe->size());
    for (VertexSet nf : nonFaces)
        if (!nf.subsetOf(mask)) throw DomainError("non-face leaves the vertex set");
    // Antichain reduction; the empty set dominates everything (void complex).
    std::vector<VertexSet> keep;
    for (std::size_t i = 0; i < nonFaces.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < nonFaces.size() && !dominated; ++j) {
            if (i == j) continue;
            if (nonFaces[j].properSubsetOf(nonFaces[i])) dominated = true;
            if (nonFaces[j] == nonFaces[i] && j < i) dominated = true;
        }
        if (!dominated) keep.push_back(nonFaces[i]);
    }
    std::sort(keep.begin(), keep.end(), sequenceLess);
    return SimplicialComplex(std::move(universe), std::move(keep));
}

SimplicialComplex SimplicialComplex::fullSimplex(UniversePtr universe) {
    return SimplicialComplex(std::move(universe), {});
}

bool SimplicialComplex::isVoid() const {
    return nonFaces_.size() == 1 && nonFaces_[0].isEmpty();
}

bool SimplicialComplex::isFace(VertexSet s) const {
    if (!s.subsetOf(VertexSet::full(universe_->size()))) return false;
    return std::none_of(nonFaces_.begin(), nonFaces_.end(),
                        [&](VertexSet nf) { return nf.subsetOf(s); });
}

std::vector<VertexSet> SimplicialComplex::facets() const {
    if (isVoid()) return {};
    if (nonFaces_.empty()) return {VertexSet::full(universe_->size())};
    Clutter nonFaceClutter = Clutter::make(universe_, nonFaces_);
    std::vector<VertexSet> out;
    const VertexSet all = VertexSet::full(universe_->size());
    for (VertexSet cover : minimalVertexCovers(nonFaceClutter)) out.push_back(all.minus(cover));
    std::sort(out.begin(), out.end(), sequenceLess);
    return out;
}

int SimplicialComplex::dimension() const {
    if (isVoid()) return -2;
    int best = -1;
    for (VertexSet f : facets()) best = std::max(best, f.count() - 1);
    return best;
}

SimplicialComplex complexFromIdeal(const MonomialIdeal& ideal) {
    if (!ideal.isSquarefree())
        throw DomainError("Stanley-Reisner complex requires a squarefree ideal");
    if (ideal.isUnit()) throw DomainError("Stanley-Reisner complex requires a proper ideal");
    std::vector<VertexSet> nonFaces;
    nonFaces.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) nonFaces.push_back(g.support());
    return SimplicialComplex::make(ideal.universePtr(), std::move(nonFaces));
}

MonomialIdeal stanleyReisnerIdeal(const SimplicialComplex& complex) {
    std::vector<Monomial> gens;
    gens.reserve(complex.minimalNonFaces().size());
    for (VertexSet nf : complex.minimalNonFaces())
        gens.push_back(Monomial::squarefree(complex.universePtr(), nf));
    return MonomialIdeal::make(complex.universePtr(), std::move(gens));
}

SimplicialComplex restrictComplex(const SimplicialComplex& complex, VertexSet vertices) {
    if (!vertices.subsetOf(VertexSet::full(complex.universe().size())))
        throw DomainError("restriction outside the vertex set");
    auto idx = vertices.indices();
    std::vector<int> remap(complex.universe().size(), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        remap[idx[i]] = static_cast<int>(i);
        labels.push_back(complex.universe().label(idx[i]));
    }
    auto universe = Universe::make(std::move(labels));
    std::vector<VertexSet> nonFaces;
    for (VertexSet nf : complex.minimalNonFaces()) {
        if (!nf.subsetOf(vertices)) continue;
        VertexSet mapped;
        nf.forEach([&](int v) { mapped.add(remap[v]); });
        nonFaces.push_back(mapped);
    }
    return SimplicialComplex::make(std::move(universe), std::move(nonFaces));
}

FVector fVector(const SimplicialComplex& complex) {
    if (complex.isVoid()) return FVector{};
    std::vector<long long> counts(complex.universe().size() + 1, 0);
    complex.forEachFace([&](VertexSet f) { ++counts[f.count()]; });
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return FVector{std::move(counts)};
}

} // namespace jetcover
