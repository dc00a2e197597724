#include "jetcover/covers.hpp"

#include <algorithm>

namespace jetcover {

namespace {

/// Keeps only inclusion-minimal sets, deduplicated.
std::vector<VertexSet> minimalSets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(),
              [](VertexSet a, VertexSet b) { return a.count() < b.count(); });
    std::vector<VertexSet> keep;
    for (VertexSet s : sets) {
        bool dominated = false;
        for (VertexSet k : keep) {
            if (k.subsetOf(s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) keep.push_back(s);
    }
    return keep;
}

} // namespace

bool isVertexCover(const Clutter& c, VertexSet w) {
    return std::all_of(c.edges().begin(), c.edges().end(),
                       [&](VertexSet e) { return e.intersects(w); });
}

bool isMinimalVertexCover(const Clutter& c, VertexSet w) {
    if (!isVertexCover(c, w)) return false;
    bool minimal = true;
    w.forEach([&](int v) {
        VertexSet smaller = w;
        smaller.remove(v);
        if (isVertexCover(c, smaller)) minimal = false;
    });
    return minimal;
}

std::vector<VertexSet> minimalVertexCovers(const Clutter& c) {
    std::vector<VertexSet> partial{VertexSet::empty()};
    for (VertexSet e : c.edges()) {
        std::vector<VertexSet> extended;
        for (VertexSet w : partial) {
            if (w.intersects(e)) {
                extended.push_back(w);
                continue;
            }
            e.forEach([&](int v) {
                VertexSet grown = w;
                grown.add(v);
                extended.push_back(grown);
            });
        }
        partial = minimalSets(std::move(extended));
    }
    std::sort(partial.begin(), partial.end(), sequenceLess);
    return partial;
}

MonomialIdeal coverIdeal(const Clutter& c) {
    std::vector<Monomial> gens;
    for (VertexSet w : minimalVertexCovers(c))
        gens.push_back(Monomial::squarefree(c.universePtr(), w));
    return MonomialIdeal::make(c.universePtr(), std::move(gens));
}

MonomialIdeal symbolicPower(const Clutter& c, int k) {
    if (k < 1) throw DomainError("symbolic power requires k >= 1");
    if (c.edges().empty()) return MonomialIdeal::unitIdeal(c.universePtr());
    MonomialIdeal result = MonomialIdeal::zero(c.universePtr());
    bool first = true;
    for (VertexSet e : c.edges()) {
        std::vector<Monomial> vars;
        e.forEach([&](int v) { vars.push_back(Monomial::variable(c.universePtr(), v)); });
        MonomialIdeal prime = MonomialIdeal::make(c.universePtr(), std::move(vars));
        MonomialIdeal primePower = power(prime, k);
        result = first ? primePower : intersect(result, primePower);
        first = false;
    }
    return result;
}

JetCovers jetCoversViaPolarization(const Clutter& c, int s) {
    JetSpace space(c.universePtr(), s);
    MonomialIdeal symb = symbolicPower(c, s + 1);
    std::vector<VertexSet> covers;
    covers.reserve(symb.generators().size());
    for (const auto& g : symb.generators()) {
        Monomial lifted = [&] {
            try {
                return polarize(space, g);
            } catch (const DomainError&) {
                throw InternalCheckError(
                    "symbolic power generator exceeds the polarization bound");
            }
        }();
        covers.push_back(lifted.support());
    }
    std::sort(covers.begin(), covers.end(), sequenceLess);
    return JetCovers{space, std::move(covers)};
}

std::vector<Monomial> irreducibleTwoCovers(const Graph& g) {
    if (g.hasIsolatedVertex()) throw DomainError("irreducible covers: isolated vertex");
    if (g.vertexCount() > 24)
        throw ResourceLimitError("independent-set enumeration needs 2^" +
                                 std::to_string(g.vertexCount()) + " subsets");
    if (checkBipartite(g).bipartite) return {};
    const int n = g.vertexCount();
    const VertexSet all = g.clutter().vertexMask();
    std::vector<Monomial> out{Monomial::squarefree(g.universePtr(), all)};
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet u{bits};
        bool independent = true;
        u.forEach([&](int v) {
            if (g.adjacent(v).intersects(u)) independent = false;
        });
        if (!independent) continue;
        VertexSet nu = neighborSet(g, u);
        if (isVertexCover(g.clutter(), nu)) continue;
        VertexSet rest = all.minus(u.unionWith(nu));
        if (rest.isEmpty()) continue;
        Graph induced = inducedSubgraph(g, rest);
        if (induced.hasIsolatedVertex()) continue;
        if (checkBipartite(induced).bipartite) continue;
        std::vector<int> exps(n, 0);
        nu.forEach([&](int v) { exps[v] = 2; });
        rest.forEach([&](int v) { exps[v] = 1; });
        out.push_back(Monomial::fromExponents(g.universePtr(), std::move(exps)));
    }
    std::sort(out.begin(), out.end(), monomialPrecedes);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool KCover::valid(const Clutter& c) const {
    if (weights.size() != static_cast<std::size_t>(c.vertexCount())) return false;
    for (VertexSet e : c.edges()) {
        long long sum = 0;
        e.forEach([&](int v) { sum += weights[v]; });
        if (sum < k) return false;
    }
    return true;
}

KCover kCoverFromMonomial(const Clutter& c, int k, const Monomial& m) {
    requireSameUniverse(c.universe(), m.universe(), "k-cover");
    KCover cover{k, m.exponents()};
    if (!cover.valid(c)) throw DomainError("exponent vector is not a k-cover");
    return cover;
}

namespace {

bool matchingSatisfiesPropertyP(const Graph& g, const std::vector<int>& partner) {
    for (int x = 0; x < g.vertexCount(); ++x) {
        const int mx = partner[x];
        bool ok = true;
        g.adjacent(x).forEach([&](int y) {
            if (y == mx || !ok) return;
            if (g.adjacent(y).contains(mx)) {
                ok = false;
                return;
            }
            if (!g.adjacent(mx).subsetOf(g.adjacent(y))) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

void enumerateMatchings(const Graph& g, VertexSet unmatched, std::vector<VertexSet>& edges,
                        std::vector<MatchingWitness>& out) {
    if (unmatched.isEmpty()) {
        std::vector<int> partner(g.vertexCount(), -1);
        for (VertexSet e : edges) {
            auto idx = e.indices();
            partner[idx[0]] = idx[1];
            partner[idx[1]] = idx[0];
        }
        std::vector<VertexSet> sorted = edges;
        std::sort(sorted.begin(), sorted.end(), sequenceLess);
        out.push_back(MatchingWitness{std::move(sorted), matchingSatisfiesPropertyP(g, partner)});
        return;
    }
    const int v = unmatched.lowest();
    VertexSet candidates = g.adjacent(v).intersectWith(unmatched);
    candidates.forEach([&](int w) {
        VertexSet e = VertexSet::fromIndices({v, w});
        edges.push_back(e);
        enumerateMatchings(g, unmatched.minus(e), edges, out);
        edges.pop_back();
    });
}

} // namespace

std::vector<MatchingWitness> perfectMatchings(const Graph& g) {
    if (g.vertexCount() % 2 != 0) return {};
    std::vector<MatchingWitness> out;
    std::vector<VertexSet> edges;
    enumerateMatchings(g, g.clutter().vertexMask(), edges, out);
    std::sort(out.begin(), out.end(), [](const MatchingWitness& a, const MatchingWitness& b) {
        return std::lexicographical_compare(a.matching.begin(), a.matching.end(),
                                            b.matching.begin(), b.matching.end(), sequenceLess);
    });
    return out;
}

VeryWellCoveredResult checkVeryWellCovered(const Graph& g) {
    if (g.hasIsolatedVertex())
        throw DomainError("very well-covered check requires no isolated vertices");
    VeryWellCoveredResult result;
    result.minimalCovers = minimalVertexCovers(g.clutter());
    const int n = g.vertexCount();
    bool byCardinality =
        std::all_of(result.minimalCovers.begin(), result.minimalCovers.end(),
                    [&](VertexSet w) { return 2 * w.count() == n; });
    result.matchings = perfectMatchings(g);
    bool byMatchings = !result.matchings.empty() &&
                       std::all_of(result.matchings.begin(), result.matchings.end(),
                                   [](const MatchingWitness& m) { return m.propertyP; });
    if (byCardinality != byMatchings)
        throw InternalCheckError("cover-cardinality and matching oracles disagree");
    result.veryWellCovered = byCardinality;
    return result;
}

bool isVeryWellCovered(const Graph& g) { return checkVeryWellCovered(g).veryWellCovered; }

bool isWellCovered(const Graph& g) {
    auto covers = minimalVertexCovers(g.clutter());
    for (const auto& w : covers)
        if (w.count() != covers.front().count()) return false;
    return true;
}

bool isVeryWellCoveredClutterExperimental(const Clutter& c, int d) {
    if (d < 1) throw DomainError("uniformity must be positive");
    for (VertexSet e : c.edges())
        if (e.count() != d) throw DomainError("clutter is not d-uniform");
    auto covers = minimalVertexCovers(c);
    return std::all_of(covers.begin(), covers.end(),
                       [&](VertexSet w) { return d * w.count() == c.vertexCount(); });
}

} // namespace jetcover
