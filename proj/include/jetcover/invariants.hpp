#ifndef JETCOVER_INVARIANTS_HPP
#define JETCOVER_INVARIANTS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jetcover/clutter.hpp"
#include "jetcover/homology.hpp"
#include "jetcover/ideal.hpp"
#include "jetcover/lifting.hpp"
#include "jetcover/simplicial.hpp"

namespace jetcover {

/// Graded Betti numbers of a quotient ring, as a sparse (i,j) -> value map
/// plus the field the ranks were computed over. The matrix view places
/// beta_{j-r,j} at row r, column j, so row index is the regularity stratum.
class BettiTable {
public:
    explicit BettiTable(HomologyField field = HomologyField::rationals()) : field_(field) {}

    void add(int i, int j, long long value);
    long long entry(int i, int j) const;
    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

    const HomologyField& field() const { return field_; }

    int maxDegree() const;       // largest j with a nonzero entry
    int maxHomological() const;  // largest i with a nonzero entry
    int maxRow() const;          // largest j-i with a nonzero entry

    std::vector<std::vector<long long>> matrixView() const;
    static BettiTable fromMatrixView(const std::vector<std::vector<long long>>& m,
                                     HomologyField field);

    /// Column totals of the diagram: totals()[i] = sum_j beta_{i,j}.
    std::vector<long long> totals() const;

    bool sameEntries(const BettiTable& o) const { return entries_ == o.entries_; }

private:
    HomologyField field_;
    std::map<std::pair<int, int>, long long> entries_;
};

/// Betti numbers of the Stanley-Reisner quotient via reduced homology of
/// vertex-set restrictions: beta_{|V|-c,|V|} accumulates dim H~_{c-1} of
/// the restriction to V, over all vertex subsets V. Restrictions with a
/// vertex in no surviving non-face are cones and are skipped. Refuses
/// complexes larger than maxVertices.
BettiTable bettiNumbersHochster(const SimplicialComplex& complex,
                                HomologyField field = HomologyField::rationals(),
                                int maxVertices = 16);

/// Row-vector product with the order-s lifting matrix sized from the
/// operand: the f-vector of the principal-jet complex.
FVector transformFVector(const FVector& f, int s);

/// Matrix-view product with the order-s lifting matrix sized from the
/// operand's column count: the Betti table of the principal-jet quotient.
BettiTable transformBetti(const BettiTable& b, int s);

/// max(j - i) over nonzero entries.
int regularity(const BettiTable& b);

/// Rational form numerator / (1-t)^denomExponent.
struct HilbertSeries {
    std::vector<long long> numerator;  // coefficient of t^i at index i
    int denomExponent = 0;
    bool operator==(const HilbertSeries&) const = default;
};

HilbertSeries hilbertSeries(const FVector& f);

struct DimensionMultiplicity {
    int dimension = 0;
    long long multiplicity = 0;
    bool operator==(const DimensionMultiplicity&) const = default;
};

/// Krull dimension (f-vector length minus one) and multiplicity (the
/// trailing f-vector entry).
DimensionMultiplicity dimensionAndMultiplicity(const FVector& f);

struct LinearResolutionResult {
    bool linear = false;
    int degree = 0;
    std::string note;
};

/// True iff all minimal generators share one degree d and the quotient has
/// regularity d-1. The zero ideal reports false with a note.
LinearResolutionResult checkLinearResolution(const MonomialIdeal& ideal,
                                             HomologyField field = HomologyField::rationals(),
                                             int maxVertices = 16);
inline bool hasLinearResolution(const MonomialIdeal& ideal) {
    return checkLinearResolution(ideal).linear;
}

/// The complement graph is chordal.
bool isCochordal(const Graph& g);

} // namespace jetcover

#endif
