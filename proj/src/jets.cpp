#include "jetcover/jets.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "jetcover/covers.hpp"

namespace jetcover {

namespace {

bool allDigits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = checkedMul(r, n - k + i) / i;
    return r;
}

/// Calls f with every tuple in {0..cap}^r summing to weight, in
/// lexicographic order.
template <typename F>
void forEachTuple(int r, int weight, int cap, std::vector<int>& tuple, F&& f) {
    if (r == 0) {
        if (weight == 0) f(tuple);
        return;
    }
    for (int i = 0; i <= std::min(cap, weight); ++i) {
        tuple.push_back(i);
        forEachTuple(r - 1, weight - i, cap, tuple, f);
        tuple.pop_back();
    }
}

MonomialIdeal primeOf(const UniversePtr& universe, VertexSet vars) {
    std::vector<Monomial> gens;
    vars.forEach([&](int v) { gens.push_back(Monomial::variable(universe, v)); });
    return MonomialIdeal::make(universe, std::move(gens));
}

} // namespace

JetSpace::JetSpace(UniversePtr base, int s) : base_(std::move(base)), s_(s) {
    if (s < 0) throw DomainError("jet order must be nonnegative");
    // Reject base labels that read as another base label with an index
    // suffix; they would make jet labels ambiguous.
    for (const auto& label : base_->labels()) {
        auto us = label.rfind('_');
        if (us == std::string::npos) continue;
        if (allDigits(label.substr(us + 1)) && base_->find(label.substr(0, us)))
            throw DomainError("label '" + label + "' collides with jet copies of '" +
                              label.substr(0, us) + "'");
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(base_->size()) * (s + 1));
    for (const auto& label : base_->labels())
        for (int i = 0; i <= s; ++i) labels.push_back(label + "_" + std::to_string(i));
    jet_ = Universe::make(std::move(labels));
}

VertexSet JetSpace::lift(VertexSet baseSet) const {
    VertexSet out;
    baseSet.forEach([&](int v) {
        for (int i = 0; i <= s_; ++i) out.add(jetIndex(v, i));
    });
    return out;
}

VertexSet JetSpace::collapse(VertexSet jetSet) const {
    VertexSet out;
    jetSet.forEach([&](int j) { out.add(baseOf(j)); });
    return out;
}

Monomial polarize(const JetSpace& space, const Monomial& m) {
    requireSameUniverse(*space.base(), m.universe(), "polarize");
    VertexSet bits;
    for (int v = 0; v < m.universe().size(); ++v) {
        int e = m.exponent(v);
        if (e > space.order() + 1)
            throw DomainError("polarize: exponent " + std::to_string(e) + " of " +
                              m.universe().label(v) + " exceeds order+1 = " +
                              std::to_string(space.order() + 1));
        for (int i = 0; i < e; ++i) bits.add(space.jetIndex(v, i));
    }
    return Monomial::squarefree(space.jet(), bits);
}

Monomial depolarize(const JetSpace& space, const Monomial& jetMonomial) {
    requireSameUniverse(*space.jet(), jetMonomial.universe(), "depolarize");
    std::vector<int> exps(space.base()->size(), 0);
    for (int j = 0; j < jetMonomial.universe().size(); ++j) {
        long long sum = static_cast<long long>(exps[space.baseOf(j)]) + jetMonomial.exponent(j);
        if (sum > (1 << 30)) throw OverflowError("depolarize exponent overflow");
        exps[space.baseOf(j)] = static_cast<int>(sum);
    }
    return Monomial::fromExponents(space.base(), std::move(exps));
}

MonomialIdeal polarizeIdeal(const JetSpace& space, const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(polarize(space, g));
    return MonomialIdeal::make(space.jet(), std::move(gens));
}

MonomialIdeal edgeIdeal(const Clutter& c) {
    std::vector<Monomial> gens;
    gens.reserve(c.edges().size());
    for (VertexSet e : c.edges()) gens.push_back(Monomial::squarefree(c.universePtr(), e));
    return MonomialIdeal::make(c.universePtr(), std::move(gens));
}

Clutter clutterOfIdeal(const MonomialIdeal& ideal) {
    if (!ideal.isSquarefree()) throw DomainError("clutter of a non-squarefree ideal");
    if (ideal.isUnit()) throw DomainError("clutter of the unit ideal");
    std::vector<VertexSet> edges;
    edges.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) edges.push_back(g.support());
    return Clutter::make(ideal.universePtr(), std::move(edges));
}

std::vector<Monomial> JetIdealPresentation::flattenedTerms() const {
    std::vector<Monomial> out;
    for (const auto& sum : sums)
        for (const auto& term : sum.terms) out.push_back(term.monomial);
    return out;
}

JetIdealPresentation jetIdealGenerators(const MonomialIdeal& base, int s) {
    JetSpace space(base.universePtr(), s);
    JetIdealPresentation out{space, base, {}};
    const int jetVars = space.jet()->size();

    // sumsByDegree[j][gi] holds the coefficient map for generator gi at t^j.
    using TermMap = std::map<std::vector<int>, long long>;
    std::vector<std::vector<TermMap>> sumsByDegree(
        s + 1, std::vector<TermMap>(base.generators().size()));

    for (std::size_t gi = 0; gi < base.generators().size(); ++gi) {
        const Monomial& g = base.generators()[gi];
        std::vector<TermMap> deg(s + 1);
        deg[0][std::vector<int>(jetVars, 0)] = 1;
        for (int v = 0; v < g.universe().size(); ++v) {
            for (int rep = 0; rep < g.exponent(v); ++rep) {
                std::vector<TermMap> next(s + 1);
                for (int j = 0; j <= s; ++j) {
                    for (const auto& [exps, coeff] : deg[j]) {
                        for (int i = 0; i + j <= s; ++i) {
                            std::vector<int> lifted = exps;
                            ++lifted[space.jetIndex(v, i)];
                            auto& slot = next[j + i][std::move(lifted)];
                            slot = checkedAdd(slot, coeff);
                        }
                    }
                }
                deg = std::move(next);
            }
        }
        for (int j = 0; j <= s; ++j) sumsByDegree[j][gi] = std::move(deg[j]);
    }

    for (int j = 0; j <= s; ++j) {
        for (std::size_t gi = 0; gi < base.generators().size(); ++gi) {
            auto& termMap = sumsByDegree[j][gi];
            if (termMap.empty()) continue;
            JetGeneratorSum sum{static_cast<int>(gi), j, {}};
            for (auto& [exps, coeff] : termMap)
                sum.terms.push_back(
                    FormalTerm{coeff, Monomial::fromExponents(space.jet(), exps)});
            std::sort(sum.terms.begin(), sum.terms.end(),
                      [](const FormalTerm& a, const FormalTerm& b) {
                          return monomialPrecedes(a.monomial, b.monomial);
                      });
            out.sums.push_back(std::move(sum));
        }
    }
    return out;
}

JetClutter jetClutter(const Clutter& c, int s) {
    JetSpace space(c.universePtr(), s);
    std::vector<VertexSet> edges;
    long long expected = 0;
    for (VertexSet e : c.edges()) {
        auto baseIdx = e.indices();
        const int r = static_cast<int>(baseIdx.size());
        std::size_t produced = 0;
        std::vector<int> tuple;
        for (int j = 0; j <= s; ++j) {
            forEachTuple(r, j, j, tuple, [&](const std::vector<int>& t) {
                VertexSet jetEdge;
                for (int pos = 0; pos < r; ++pos) jetEdge.add(space.jetIndex(baseIdx[pos], t[pos]));
                edges.push_back(jetEdge);
                ++produced;
            });
        }
        if (static_cast<long long>(produced) != binomial(s + r, r))
            throw InternalCheckError("jet edge count mismatch");
        expected = checkedAdd(expected, binomial(s + r, r));
    }
    Clutter jets = Clutter::make(space.jet(), std::move(edges));
    // Distinct base vertices make all enumerated lifts distinct and
    // incomparable, so canonicalization must not have dropped anything.
    if (jets.edgeCount() != expected)
        throw InternalCheckError("jet edges were not antichain-distinct");
    return JetClutter{space, c, std::move(jets)};
}

PrincipalJets principalJets(const Clutter& c, int s) {
    JetSpace space(c.universePtr(), s);
    std::vector<Monomial> sequence;
    // Weight-major enumeration; within a weight, base edges in order, then
    // index tuples lexicographically.
    int maxWeight = 0;
    for (VertexSet e : c.edges()) maxWeight = std::max(maxWeight, e.count() * s);
    for (int w = 0; w <= maxWeight; ++w) {
        for (VertexSet e : c.edges()) {
            auto baseIdx = e.indices();
            const int r = static_cast<int>(baseIdx.size());
            if (w > r * s) continue;
            std::vector<int> tuple;
            forEachTuple(r, w, s, tuple, [&](const std::vector<int>& t) {
                VertexSet bits;
                for (int pos = 0; pos < r; ++pos) bits.add(space.jetIndex(baseIdx[pos], t[pos]));
                sequence.push_back(Monomial::squarefree(space.jet(), bits));
            });
        }
    }
    // Per-edge generator count is (s+1)^r.
    long long expected = 0;
    for (VertexSet e : c.edges()) {
        long long n = 1;
        for (int i = 0; i < e.count(); ++i) n = checkedMul(n, s + 1);
        expected = checkedAdd(expected, n);
    }
    if (expected != static_cast<long long>(sequence.size()))
        throw InternalCheckError("principal jet generator count mismatch");

    MonomialIdeal ideal = MonomialIdeal::make(space.jet(), sequence);
    std::vector<VertexSet> supports;
    supports.reserve(sequence.size());
    for (const auto& m : sequence) supports.push_back(m.support());
    Clutter jets = Clutter::make(space.jet(), std::move(supports));
    return PrincipalJets{space, c, std::move(sequence), std::move(ideal), std::move(jets)};
}

PrincipalJetDecomposition principalJetDecomposition(const Clutter& c, int s) {
    PrincipalJets pj = principalJets(c, s);
    auto covers = minimalVertexCovers(c);
    std::vector<VertexSet> components;
    components.reserve(covers.size());
    for (VertexSet w : covers) components.push_back(pj.space.lift(w));

    MonomialIdeal meet = MonomialIdeal::zero(pj.space.jet());
    bool first = true;
    for (VertexSet comp : components) {
        MonomialIdeal prime = primeOf(pj.space.jet(), comp);
        meet = first ? prime : intersect(meet, prime);
        first = false;
    }
    if (!(meet == pj.ideal))
        throw InternalCheckError("principal jet decomposition does not intersect back");
    return PrincipalJetDecomposition{pj.space, std::move(components)};
}

MonomialIdeal principalJetsViaColon(const Clutter& c, int s) {
    PrincipalJets pj = principalJets(c, s);
    auto covers = minimalVertexCovers(c);
    MonomialIdeal result = MonomialIdeal::zero(pj.space.jet());
    if (covers.size() < 2) {
        // A single component means a smooth base locus, where principal
        // jets coincide with the jets themselves.
        result = edgeIdeal(jetClutter(c, s).jets);
    } else {
        MonomialIdeal singular = MonomialIdeal::zero(pj.space.jet());
        bool first = true;
        for (std::size_t i = 0; i < covers.size(); ++i) {
            for (std::size_t j = i + 1; j < covers.size(); ++j) {
                VertexSet unionZero;
                covers[i].unionWith(covers[j]).forEach([&](int v) {
                    unionZero.add(pj.space.jetIndex(v, 0));
                });
                MonomialIdeal prime = primeOf(pj.space.jet(), unionZero);
                singular = first ? prime : intersect(singular, prime);
                first = false;
            }
        }
        result = quotient(edgeIdeal(jetClutter(c, s).jets), singular);
    }
    if (!(result == pj.ideal))
        throw InternalCheckError("colon route disagrees with the generator construction");
    return result;
}

VertexSet liftedCover(const Clutter& c, VertexSet w, int s) {
    if (!w.subsetOf(VertexSet::full(c.universe().size())))
        throw DomainError("lifted cover: vertices outside the clutter");
    JetSpace space(c.universePtr(), s);
    VertexSet lifted = space.lift(w);
    if (isMinimalVertexCover(c, w)) {
        const Clutter jets = jetClutter(c, s).jets;
        if (!isMinimalVertexCover(jets, lifted))
            throw InternalCheckError("lift of a minimal cover is not a minimal jet cover");
    }
    return lifted;
}

} // namespace jetcover
