#include "jetcover/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "jetcover/covers.hpp"
#include "jetcover/invariants.hpp"
#include "jetcover/jets.hpp"
#include "jetcover/simplicial.hpp"

namespace jetcover {

namespace {

std::vector<std::string> letterLabels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

std::vector<std::uint64_t> canonicalEdgeForm(int n, const std::vector<std::uint64_t>& edges) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> best;
    do {
        std::vector<std::uint64_t> mapped;
        mapped.reserve(edges.size());
        for (std::uint64_t e : edges) {
            std::uint64_t m = 0;
            for (int v = 0; v < n; ++v)
                if ((e >> v) & 1) m |= std::uint64_t{1} << perm[v];
            mapped.push_back(m);
        }
        std::sort(mapped.begin(), mapped.end());
        if (best.empty() || mapped < best) best = mapped;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

std::vector<Clutter> exhaustiveClutters(int n, int maxEdges, bool upToIso) {
    auto universe = Universe::make(letterLabels(n));
    std::vector<std::vector<std::uint64_t>> antichains;
    std::vector<std::uint64_t> current;
    auto rec = [&](auto&& self, std::uint64_t nextMask) -> void {
        antichains.push_back(current);
        if (maxEdges >= 0 && static_cast<int>(current.size()) >= maxEdges) return;
        for (std::uint64_t m = nextMask; m < (std::uint64_t{1} << n); ++m) {
            bool comparable = false;
            for (std::uint64_t e : current) {
                if ((e & m) == e || (e & m) == m) {
                    comparable = true;
                    break;
                }
            }
            if (comparable) continue;
            current.push_back(m);
            self(self, m + 1);
            current.pop_back();
        }
    };
    rec(rec, 1);

    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Clutter> out;
    for (const auto& edges : antichains) {
        if (upToIso) {
            auto canon = canonicalEdgeForm(n, edges);
            if (!seen.insert(canon).second) continue;
        }
        std::vector<VertexSet> sets;
        sets.reserve(edges.size());
        for (std::uint64_t e : edges) sets.push_back(VertexSet{e});
        out.push_back(Clutter::make(universe, std::move(sets)));
    }
    return out;
}

std::vector<Clutter> randomClutterCorpus(SeededRng& rng, int count, int maxVertices,
                                         int maxEdges) {
    std::vector<Clutter> out;
    for (int i = 0; i < count; ++i) {
        const int n = 2 + rng.below(std::max(1, maxVertices - 1));
        auto universe = Universe::make(letterLabels(n));
        std::vector<VertexSet> edges;
        const int want = 1 + rng.below(maxEdges);
        for (int t = 0; t < want; ++t) {
            VertexSet e;
            const int size = 1 + rng.below(std::min(n, 3));
            while (e.count() < size) e.add(rng.below(n));
            edges.push_back(e);
        }
        out.push_back(Clutter::make(universe, std::move(edges)));
    }
    return out;
}

Graph randomCorona(SeededRng& rng, int baseVertices) {
    std::vector<std::string> labels;
    for (int i = 0; i < baseVertices; ++i) labels.push_back("v" + std::to_string(i));
    for (int i = 0; i < baseVertices; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<VertexSet> edges;
    for (int i = 0; i < baseVertices; ++i)
        for (int j = i + 1; j < baseVertices; ++j)
            if (rng.below(100) < 50) edges.push_back(VertexSet::fromIndices({i, j}));
    for (int i = 0; i < baseVertices; ++i)
        edges.push_back(VertexSet::fromIndices({i, baseVertices + i}));
    return Graph::make(Universe::make(std::move(labels)), std::move(edges));
}

namespace fixtures {

Graph path3() {
    return Graph::make(canonicalClutter({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}));
}

Graph triangleTail() {
    return Graph::make(canonicalClutter(
        {"u", "v", "w", "x", "y"},
        {{"u", "v"}, {"v", "w"}, {"w", "x"}, {"w", "y"}, {"x", "y"}}));
}

Graph favaron() {
    return Graph::make(canonicalClutter({"a", "b", "c", "d", "e", "f", "g", "h"},
                                        {{"a", "e"},
                                         {"b", "e"},
                                         {"b", "f"},
                                         {"c", "e"},
                                         {"c", "f"},
                                         {"c", "g"},
                                         {"c", "h"},
                                         {"d", "h"},
                                         {"e", "h"},
                                         {"f", "h"}}));
}

Graph completeBipartite(int n) {
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> edges;
    for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
    for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            edges.push_back({"a" + std::to_string(i), "b" + std::to_string(j)});
    return Graph::make(canonicalClutter(std::move(labels), edges));
}

MonomialIdeal mixedDegreeIdeal() {
    auto u = Universe::make({"v", "w", "x", "y", "z"});
    return MonomialIdeal::make(
        u, {parseMonomial(u, "v*w*x"), parseMonomial(u, "x*y"), parseMonomial(u, "y*z")});
}

} // namespace fixtures

namespace {

json clutterWitness(const Clutter& c, int s) {
    return json{{"clutter", clutterToJson(c)}, {"s", s}};
}

void checkJetCoverDuality(const Clutter& c, int s, VerificationReport& r) {
    ++r.instances;
    auto viaPolarization = jetCoversViaPolarization(c, s);
    auto direct = minimalVertexCovers(jetClutter(c, s).jets);
    if (viaPolarization.covers != direct)
        r.failures.push_back(
            {"polarized symbolic generators differ from enumerated jet covers",
             clutterWitness(c, s)});
}

void checkStaircase(const Clutter& c, int s, VerificationReport& r) {
    ++r.instances;
    auto jc = jetClutter(c, s);
    for (VertexSet w : minimalVertexCovers(jc.jets)) {
        bool ok = true;
        w.forEach([&](int v) {
            for (int lower = jc.space.orderOf(v) - 1; lower >= 0; --lower)
                if (!w.contains(jc.space.jetIndex(jc.space.baseOf(v), lower))) ok = false;
        });
        if (!ok) {
            r.failures.push_back({"jet cover misses a lower copy of a member",
                                  clutterWitness(c, s)});
            return;
        }
    }
}

void checkSupportUnion(const Clutter& c, int k, VerificationReport& r) {
    ++r.instances;
    auto covers = minimalVertexCovers(c);
    auto symb = symbolicPower(c, k);
    for (const auto& g : symb.generators()) {
        VertexSet target = g.support();
        VertexSet hull;
        for (VertexSet w : covers)
            if (w.subsetOf(target)) hull = hull.unionWith(w);
        if (!(hull == target)) {
            r.failures.push_back(
                {"generator support is not a union of cover supports",
                 json{{"clutter", clutterToJson(c)}, {"k", k}, {"generator", to_string(g)}}});
            return;
        }
    }
}

void checkJetsVeryWellCovered(const Graph& g, int s, VerificationReport& r) {
    ++r.instances;
    const int half = g.vertexCount() / 2;
    auto jc = jetCoversViaPolarization(g.clutter(), s);
    for (VertexSet w : jc.covers) {
        if (w.count() != half * (s + 1)) {
            r.failures.push_back(
                {"jet cover of unexpected cardinality " + std::to_string(w.count()),
                 clutterWitness(g.clutter(), s)});
            return;
        }
    }
    // Cross-check through direct enumeration while the jet clutter is small.
    if (g.vertexCount() * (s + 1) <= 16) {
        auto direct = minimalVertexCovers(jetClutter(g.clutter(), s).jets);
        if (direct != jc.covers)
            r.failures.push_back({"cover routes disagree", clutterWitness(g.clutter(), s)});
    }
}

void checkPrincipalDecomposition(const Clutter& c, int s, VerificationReport& r) {
    ++r.instances;
    try {
        principalJetDecomposition(c, s);
        principalJetsViaColon(c, s);
    } catch (const InternalCheckError& e) {
        r.failures.push_back({e.what(), clutterWitness(c, s)});
    }
}

void checkFVectorTransform(const Clutter& c, int s, VerificationReport& r) {
    ++r.instances;
    auto base = fVector(complexFromIdeal(edgeIdeal(c)));
    auto transformed = transformFVector(base, s);
    auto direct = fVector(complexFromIdeal(principalJets(c, s).ideal));
    if (!(transformed == direct)) {
        r.failures.push_back({"f-vector transform differs from direct face count",
                              clutterWitness(c, s)});
        return;
    }
    // Dimension scaling: the jet quotient dimension is (s+1) times the base.
    const int baseDim = static_cast<int>(base.entries.size()) - 1;
    const int jetDim = static_cast<int>(direct.entries.size()) - 1;
    if (jetDim != (s + 1) * baseDim)
        r.failures.push_back({"dimension scaling violated", clutterWitness(c, s)});
    else if (baseDim > 0 && direct.entries.back() != base.entries.back())
        r.failures.push_back({"multiplicity not preserved", clutterWitness(c, s)});
}

void checkBettiTransform(const Clutter& c, int s, int hochsterBound,
                         VerificationReport& r) {
    ++r.instances;
    auto base = bettiNumbersHochster(complexFromIdeal(edgeIdeal(c)),
                                     HomologyField::rationals(), hochsterBound);
    auto transformed = transformBetti(base, s);
    auto direct = bettiNumbersHochster(complexFromIdeal(principalJets(c, s).ideal),
                                       HomologyField::rationals(), hochsterBound);
    if (!transformed.sameEntries(direct)) {
        r.failures.push_back({"Betti transform differs from direct computation",
                              clutterWitness(c, s)});
        return;
    }
    if (regularity(transformed) != regularity(base))
        r.failures.push_back({"regularity not preserved", clutterWitness(c, s)});
}

void checkLinearResolutionEquivalence(const Clutter& c, int s, int hochsterBound,
                                      VerificationReport& r) {
    ++r.instances;
    auto baseIdeal = edgeIdeal(c);
    bool baseLinear =
        checkLinearResolution(baseIdeal, HomologyField::rationals(), hochsterBound).linear;
    bool jetLinear = checkLinearResolution(principalJets(c, s).ideal,
                                           HomologyField::rationals(), hochsterBound)
                         .linear;
    if (baseLinear != jetLinear)
        r.failures.push_back({"linear resolution not preserved", clutterWitness(c, s)});
}

void checkFroeberg(const Graph& g, int hochsterBound, VerificationReport& r) {
    ++r.instances;
    if (g.clutter().edgeCount() == 0) return;
    bool cochordal = isCochordal(g);
    bool linear =
        checkLinearResolution(edgeIdeal(g.clutter()), HomologyField::rationals(), hochsterBound)
            .linear;
    if (cochordal != linear)
        r.failures.push_back({"cochordality differs from linear resolution",
                              json{{"clutter", clutterToJson(g.clutter())}}});
}

std::vector<Graph> graphCorpus(SeededRng& rng, int count, int maxVertices) {
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        const int n = 2 + rng.below(std::max(1, maxVertices - 1));
        auto universe = Universe::make(letterLabels(n));
        std::vector<VertexSet> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng.below(100) < 50) edges.push_back(VertexSet::fromIndices({a, b}));
        out.push_back(Graph::make(universe, std::move(edges)));
    }
    return out;
}

void runThm3(const VerifyOptions& opts, VerificationReport& r) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : exhaustiveClutters(n, 4, true))
            for (int s = 0; s <= 2; ++s) checkJetCoverDuality(c, s, r);
    SeededRng rng(opts.seed);
    for (const auto& c : randomClutterCorpus(rng, opts.randomSamples, 5, 4))
        for (int s = 0; s <= 2; ++s) checkJetCoverDuality(c, s, r);
}

void runLemma1(const VerifyOptions& opts, VerificationReport& r) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : exhaustiveClutters(n, 4, true))
            for (int s = 0; s <= 2; ++s) checkStaircase(c, s, r);
    SeededRng rng(opts.seed);
    for (const auto& c : randomClutterCorpus(rng, opts.randomSamples, 5, 4))
        for (int s = 0; s <= 2; ++s) checkStaircase(c, s, r);
}

void runLemma2(const VerifyOptions& opts, VerificationReport& r) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : exhaustiveClutters(n, n < 5 ? -1 : 4, true))
            for (int k = 1; k <= 3; ++k) checkSupportUnion(c, k, r);
    SeededRng rng(opts.seed);
    for (const auto& c : randomClutterCorpus(rng, opts.randomSamples, 6, 5))
        for (int k = 1; k <= 3; ++k) checkSupportUnion(c, k, r);
}

void runThm6(const VerifyOptions& opts, VerificationReport& r) {
    std::vector<Graph> corpus{fixtures::favaron()};
    for (int n = 1; n <= 3; ++n) corpus.push_back(fixtures::completeBipartite(n));
    SeededRng rng(opts.seed);
    for (int i = 0; i < opts.randomSamples; ++i) {
        Graph corona = randomCorona(rng, 2 + rng.below(3));
        if (isVeryWellCovered(corona)) corpus.push_back(corona);
    }
    for (const auto& g : corpus)
        for (int s = 0; s <= 2; ++s) checkJetsVeryWellCovered(g, s, r);
}

void runThm7(const VerifyOptions& opts, VerificationReport& r) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : exhaustiveClutters(n, -1, true))
            for (int s = 0; s <= 2; ++s) checkPrincipalDecomposition(c, s, r);
    SeededRng rng(opts.seed);
    for (const auto& c : randomClutterCorpus(rng, opts.randomSamples, 5, 4))
        for (int s = 0; s <= 2; ++s) checkPrincipalDecomposition(c, s, r);
}

void runThm8(const VerifyOptions& opts, VerificationReport& r) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : exhaustiveClutters(n, -1, true))
            for (int s = 0; s <= 2; ++s) checkFVectorTransform(c, s, r);
    SeededRng rng(opts.seed);
    for (const auto& c : randomClutterCorpus(rng, opts.randomSamples, 5, 4))
        for (int s = 0; s <= 2; ++s) checkFVectorTransform(c, s, r);
}

void runThm9(const VerifyOptions& opts, VerificationReport& r) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : exhaustiveClutters(n, -1, true))
            checkBettiTransform(c, 1, opts.hochsterBound, r);
    // Second-order spot check on the mixed-degree fixture.
    checkBettiTransform(clutterOfIdeal(fixtures::mixedDegreeIdeal()), 2, opts.hochsterBound,
                        r);
}

void runCor3(const VerifyOptions& opts, VerificationReport& r) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& c : exhaustiveClutters(n, -1, true))
            for (int s = 1; s <= 2; ++s)
                checkLinearResolutionEquivalence(c, s, opts.hochsterBound, r);
    // Cochordality matches linear resolutions of edge ideals.
    for (int n = 2; n <= 5; ++n) {
        for (const auto& c : exhaustiveClutters(n, -1, true)) {
            bool isGraph = std::all_of(c.edges().begin(), c.edges().end(),
                                       [](VertexSet e) { return e.count() == 2; });
            if (isGraph) checkFroeberg(Graph::make(c), opts.hochsterBound, r);
        }
    }
    SeededRng rng(opts.seed);
    for (const auto& g : graphCorpus(rng, opts.randomSamples, 7))
        checkFroeberg(g, opts.hochsterBound, r);
}

} // namespace

std::vector<std::string> verifiableTheorems() {
    return {"thm3", "thm6", "thm7", "thm8", "thm9", "lemma1", "lemma2", "cor3"};
}

VerificationReport verifyTheorem(const std::string& id, const VerifyOptions& opts) {
    VerificationReport r;
    r.theorem = id;
    r.seed = opts.seed;
    const auto start = std::chrono::steady_clock::now();
    if (id == "thm3")
        runThm3(opts, r);
    else if (id == "thm6")
        runThm6(opts, r);
    else if (id == "thm7")
        runThm7(opts, r);
    else if (id == "thm8")
        runThm8(opts, r);
    else if (id == "thm9")
        runThm9(opts, r);
    else if (id == "lemma1")
        runLemma1(opts, r);
    else if (id == "lemma2")
        runLemma2(opts, r);
    else if (id == "cor3")
        runCor3(opts, r);
    else
        throw DomainError("unknown theorem id '" + id + "'");
    r.elapsedMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return r;
}

json reportToJson(const VerificationReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{{"description", f.description}, {"witness", f.witness}});
    return json{{"theorem", r.theorem},
                {"seed", r.seed},
                {"instances", r.instances},
                {"failures", failures},
                {"elapsedMs", r.elapsedMs}};
}

} // namespace jetcover
