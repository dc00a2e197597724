#ifndef JETCOVER_JETS_HPP
#define JETCOVER_JETS_HPP

#include <vector>

#include "jetcover/clutter.hpp"
#include "jetcover/ideal.hpp"

namespace jetcover {

/// Order-s jet copies of a base universe: each base variable x gets lifted
/// variables x_0,...,x_s, laid out base-major. Also carries the index maps
/// between the two universes.
class JetSpace {
public:
    JetSpace(UniversePtr base, int s);

    int order() const { return s_; }
    const UniversePtr& base() const { return base_; }
    const UniversePtr& jet() const { return jet_; }

    int jetIndex(int baseIdx, int ord) const { return baseIdx * (s_ + 1) + ord; }
    int baseOf(int jetIdx) const { return jetIdx / (s_ + 1); }
    int orderOf(int jetIdx) const { return jetIdx % (s_ + 1); }

    /// J_s(W): all lifted copies of the vertices of baseSet.
    VertexSet lift(VertexSet baseSet) const;

    /// Image of a jet vertex set under the variable-collapsing map.
    VertexSet collapse(VertexSet jetSet) const;

private:
    UniversePtr base_;
    int s_;
    UniversePtr jet_;
};

/// Squarefree lift: a variable with exponent e becomes the product of its
/// first e jet copies. Every exponent must be at most s+1.
Monomial polarize(const JetSpace& space, const Monomial& m);

/// Ring-homomorphism image collapsing every jet copy onto its base
/// variable; exponents of the same base variable accumulate.
Monomial depolarize(const JetSpace& space, const Monomial& jetMonomial);

MonomialIdeal polarizeIdeal(const JetSpace& space, const MonomialIdeal& ideal);

/// Squarefree monomial whose support is an edge, one per edge.
MonomialIdeal edgeIdeal(const Clutter& c);

/// Clutter whose edges are the generator supports of a squarefree ideal.
Clutter clutterOfIdeal(const MonomialIdeal& ideal);

struct FormalTerm {
    long long coeff;
    Monomial monomial;
    bool operator==(const FormalTerm&) const = default;
};

/// One graded piece of the expansion of a base generator: the coefficient
/// of t^degree after substituting x -> x_0 + x_1 t + ... + x_s t^s.
struct JetGeneratorSum {
    int generatorIndex;
    int degree;
    std::vector<FormalTerm> terms;
};

struct JetIdealPresentation {
    JetSpace space;
    MonomialIdeal base;
    /// Ordered by degree, then by base generator.
    std::vector<JetGeneratorSum> sums;

    /// All terms in listed order (for squarefree bases these are exactly
    /// the minimal generators of the radical of the jet ideal).
    std::vector<Monomial> flattenedTerms() const;
};

/// Graded generator expansion of the order-s jets of a monomial ideal.
/// Non-squarefree bases are supported; repeated variables produce terms
/// with multinomial coefficients.
JetIdealPresentation jetIdealGenerators(const MonomialIdeal& base, int s);

struct JetClutter {
    JetSpace space;
    Clutter base;
    Clutter jets;
};

/// Clutter of s-jets: one edge {x1_i1, ..., xr_ir} per base edge and per
/// choice of indices with i1 + ... + ir <= s.
JetClutter jetClutter(const Clutter& c, int s);

struct PrincipalJets {
    JetSpace space;
    Clutter base;
    /// Generators in enumeration order: by total index weight, then by base
    /// edge, then by index tuple.
    std::vector<Monomial> generatorSequence;
    MonomialIdeal ideal;
    Clutter clutter;
};

/// Principal s-jets of the edge ideal: all lifts of each edge with indices
/// chosen independently in {0,...,s}; (s+1)^r generators per r-vertex edge.
PrincipalJets principalJets(const Clutter& c, int s);

struct PrincipalJetDecomposition {
    JetSpace space;
    /// Lifted covers J_s(W), one per minimal vertex cover W of the base,
    /// in the canonical cover order. These generate the primary components.
    std::vector<VertexSet> components;
};

/// Primary decomposition of the principal jet ideal. The intersection of
/// the component primes is recomputed and compared against the generator
/// construction; a mismatch throws InternalCheckError.
PrincipalJetDecomposition principalJetDecomposition(const Clutter& c, int s);

/// Principal jets through the colon-ideal characterization: the jet edge
/// ideal divided by the intersection of the order-0 pairwise cover unions.
/// Must agree with the generator construction. When the base has fewer
/// than two minimal covers the pair set is empty and the jet edge ideal is
/// returned unchanged (the base locus is smooth, so principal jets and
/// jets coincide).
MonomialIdeal principalJetsViaColon(const Clutter& c, int s);

/// J_s(W) for a base vertex subset. When w is a minimal cover of c, the
/// lift is verified to be a minimal cover of the jet clutter.
VertexSet liftedCover(const Clutter& c, VertexSet w, int s);

} // namespace jetcover

#endif
