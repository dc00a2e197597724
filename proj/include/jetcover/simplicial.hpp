#ifndef JETCOVER_SIMPLICIAL_HPP
#define JETCOVER_SIMPLICIAL_HPP

#include <vector>

#include "jetcover/ideal.hpp"
#include "jetcover/universe.hpp"

namespace jetcover {

/// Simplicial complex described by its minimal non-faces (the generator
/// supports of its Stanley-Reisner ideal). A subset is a face iff it
/// contains no minimal non-face.
///
/// The empty set listed as a non-face produces the void complex, which has
/// no faces at all and is distinct from the complex {∅} whose only face is
/// the empty set.
class SimplicialComplex {
public:
    static SimplicialComplex make(UniversePtr universe, std::vector<VertexSet> nonFaces);
    static SimplicialComplex fullSimplex(UniversePtr universe);

    const Universe& universe() const { return *universe_; }
    const UniversePtr& universePtr() const { return universe_; }
    const std::vector<VertexSet>& minimalNonFaces() const { return nonFaces_; }

    bool isVoid() const;
    bool isFace(VertexSet s) const;

    /// Maximal faces, computed as the complements of the minimal vertex
    /// covers of the non-face clutter. The void complex has none.
    std::vector<VertexSet> facets() const;

    /// -1 for {∅}; the void complex has no faces and reports -2.
    int dimension() const;

    /// Visits every face (including the empty face) in depth-first order.
    template <typename F>
    void forEachFace(F&& f) const {
        if (isVoid()) return;
        std::vector<std::vector<VertexSet>> byVertex(universe_->size());
        for (VertexSet nf : nonFaces_) nf.forEach([&](int v) { byVertex[v].push_back(nf); });
        faceWalk(VertexSet::empty(), 0, byVertex, f);
    }

    bool operator==(const SimplicialComplex& o) const {
        return universe_->sameAs(*o.universe_) && nonFaces_ == o.nonFaces_;
    }

private:
    SimplicialComplex(UniversePtr universe, std::vector<VertexSet> nonFaces);

    template <typename F>
    void faceWalk(VertexSet face, int next,
                  const std::vector<std::vector<VertexSet>>& byVertex, F&& f) const {
        f(face);
        for (int v = next; v < universe_->size(); ++v) {
            VertexSet grown = face;
            grown.add(v);
            bool ok = true;
            for (VertexSet nf : byVertex[v]) {
                if (nf.subsetOf(grown)) {
                    ok = false;
                    break;
                }
            }
            if (ok) faceWalk(grown, v + 1, byVertex, f);
        }
    }

    UniversePtr universe_;
    std::vector<VertexSet> nonFaces_;
};

/// Complex whose faces are the supports of squarefree monomials outside
/// the ideal. Requires a squarefree proper ideal.
SimplicialComplex complexFromIdeal(const MonomialIdeal& ideal);

MonomialIdeal stanleyReisnerIdeal(const SimplicialComplex& complex);

/// Restriction to a vertex subset, relabelled onto its own universe.
SimplicialComplex restrictComplex(const SimplicialComplex& complex, VertexSet vertices);

/// Face counts by dimension, starting with f_{-1} = 1 at index 0.
struct FVector {
    std::vector<long long> entries;

    int dimension() const { return static_cast<int>(entries.size()) - 2; }
    bool operator==(const FVector&) const = default;
};

/// The void complex yields an empty f-vector.
FVector fVector(const SimplicialComplex& complex);

} // namespace jetcover

#endif
