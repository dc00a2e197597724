#ifndef JETCOVER_COVERS_HPP
#define JETCOVER_COVERS_HPP

#include <vector>

#include "jetcover/clutter.hpp"
#include "jetcover/ideal.hpp"
#include "jetcover/jets.hpp"

namespace jetcover {

bool isVertexCover(const Clutter& c, VertexSet w);
bool isMinimalVertexCover(const Clutter& c, VertexSet w);

/// All inclusion-minimal transversals. Edges are incorporated one at a
/// time: partial covers that miss the edge branch over its vertices, and
/// non-minimal sets are dropped after every step. Output is sorted.
std::vector<VertexSet> minimalVertexCovers(const Clutter& c);

/// Squarefree ideal generated by the products over minimal vertex covers.
MonomialIdeal coverIdeal(const Clutter& c);

/// k-th symbolic power of the cover ideal: the intersection of the k-th
/// powers of the edge primes. A monomial lies in it exactly when its
/// exponents sum to at least k over every edge.
MonomialIdeal symbolicPower(const Clutter& c, int k);

struct JetCovers {
    JetSpace space;
    /// Sorted minimal vertex covers of the s-jet clutter, over space.jet().
    std::vector<VertexSet> covers;
};

/// Minimal vertex covers of the s-jet clutter, obtained by polarizing the
/// minimal generators of the (s+1)-st symbolic power of the cover ideal
/// and taking supports.
JetCovers jetCoversViaPolarization(const Clutter& c, int s);

/// Monomials of the irreducible 2-covers of a graph without isolated
/// vertices: the all-vertices product, plus one monomial per qualifying
/// independent set U (squares on the neighbor set, single exponents on the
/// rest). Bipartite graphs have none. Enumerates all vertex subsets, so
/// runtime is exponential in the vertex count.
std::vector<Monomial> irreducibleTwoCovers(const Graph& g);

/// Vertex weighting whose sum over every edge is at least k.
struct KCover {
    int k = 0;
    std::vector<int> weights;

    bool valid(const Clutter& c) const;
};

KCover kCoverFromMonomial(const Clutter& c, int k, const Monomial& m);

struct MatchingWitness {
    /// Pairwise disjoint edges whose union is the whole vertex set.
    std::vector<VertexSet> matching;
    bool propertyP = false;
};

/// All perfect matchings, each annotated with its Favaron property status:
/// for every vertex x, every neighbor of x other than its match M(x) is
/// not adjacent to M(x) and is adjacent to all neighbors of M(x).
/// An odd vertex count yields the empty list.
std::vector<MatchingWitness> perfectMatchings(const Graph& g);

struct VeryWellCoveredResult {
    bool veryWellCovered = false;
    std::vector<VertexSet> minimalCovers;
    std::vector<MatchingWitness> matchings;
};

/// True iff every minimal vertex cover has cardinality |X|/2. Requires a
/// graph without isolated vertices. Both characterizations (cover
/// cardinalities, and perfect matchings with the Favaron property) are
/// always evaluated; disagreement throws InternalCheckError.
VeryWellCoveredResult checkVeryWellCovered(const Graph& g);
bool isVeryWellCovered(const Graph& g);

/// All minimal vertex covers share one cardinality (any value).
bool isWellCovered(const Graph& g);

/// Experimental analogue for d-uniform clutters: all minimal covers of
/// cardinality |X|/d. The notion is not settled for clutters; exposed for
/// exploration only.
bool isVeryWellCoveredClutterExperimental(const Clutter& c, int d);

} // namespace jetcover

#endif
