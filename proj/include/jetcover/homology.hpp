#ifndef JETCOVER_HOMOLOGY_HPP
#define JETCOVER_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "jetcover/simplicial.hpp"

namespace jetcover {

/// Coefficient field for homology ranks: exact rationals by default, or a
/// prime field GF(p).
struct HomologyField {
    bool rational = true;
    long long p = 0;

    static HomologyField rationals() { return HomologyField{true, 0}; }
    static HomologyField primeField(long long p);

    std::string name() const { return rational ? "Q" : "F" + std::to_string(p); }
    bool operator==(const HomologyField&) const = default;
};

HomologyField parseField(const std::string& text);

/// Reduced homology dimensions of the restriction of the complex to the
/// given vertices, computed from boundary-matrix ranks in exact
/// arithmetic. The entry at index c is dim H~_{c-1}; index 0 reports the
/// homology of the empty-face stratum. A void restriction (possible only
/// for the void complex) yields an empty vector.
std::vector<long long> reducedHomologyDims(const SimplicialComplex& complex,
                                           VertexSet vertices, HomologyField field);

} // namespace jetcover

#endif
