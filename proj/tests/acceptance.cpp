// Acceptance suite: one check per release criterion, each printing a
// single pass/fail line with its runtime.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jetcover/covers.hpp"
#include "jetcover/invariants.hpp"
#include "jetcover/io.hpp"
#include "jetcover/jets.hpp"
#include "jetcover/lifting.hpp"
#include "jetcover/simplicial.hpp"
#include "jetcover/verify.hpp"

using namespace jetcover;

namespace {

struct Outcome {
    bool pass = true;
    long long instances = 0;
    std::string detail;

    void require(bool condition, const std::string& message) {
        ++instances;
        if (!condition && pass) {
            pass = false;
            detail = message;
        }
    }
};

std::vector<std::string> strings(const std::vector<Monomial>& ms) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(to_string(m));
    return out;
}

Clutter pathClutter() { return fixtures::path3().clutter(); }

// Jet generator sums and radical generators of <xy, yz> at orders one and
// two reproduce the expected lists exactly.
Outcome criterion1() {
    Outcome r;
    auto u = Universe::make({"x", "y", "z"});
    auto ideal = MonomialIdeal::make(u, {parseMonomial(u, "x*y"), parseMonomial(u, "y*z")});

    auto first = jetIdealGenerators(ideal, 1);
    r.require(first.sums.size() == 4, "expected 4 formal sums at order 1");
    r.require(strings(first.flattenedTerms()) ==
                  std::vector<std::string>{"x_0*y_0", "y_0*z_0", "x_0*y_1", "x_1*y_0",
                                           "y_0*z_1", "y_1*z_0"},
              "order-1 radical generator list mismatch");

    auto second = jetIdealGenerators(ideal, 2);
    r.require(second.sums.size() == 6, "expected 6 formal sums at order 2");
    r.require(strings(second.flattenedTerms()) ==
                  std::vector<std::string>{"x_0*y_0", "y_0*z_0", "x_0*y_1", "x_1*y_0",
                                           "y_0*z_1", "y_1*z_0", "x_0*y_2", "x_1*y_1",
                                           "x_2*y_0", "y_0*z_2", "y_1*z_1", "y_2*z_0"},
              "order-2 radical generator list mismatch");
    for (const auto& presentation : {first, second})
        for (const auto& sum : presentation.sums)
            for (const auto& term : sum.terms)
                r.require(term.coeff == 1, "unexpected coefficient in a squarefree expansion");

    auto jets1 = jetClutter(pathClutter(), 1);
    r.require(jets1.jets.edgeCount() == 6, "order-1 jet clutter should have 6 edges");
    r.require(jetClutter(pathClutter(), 2).jets.edgeCount() == 12,
              "order-2 jet clutter should have 12 edges");
    return r;
}

// Cover ideal, symbolic square and its polarization for the path.
Outcome criterion2() {
    Outcome r;
    Clutter path = pathClutter();
    auto u = path.universePtr();
    r.require(coverIdeal(path) ==
                  MonomialIdeal::make(u, {parseMonomial(u, "x*z"), parseMonomial(u, "y")}),
              "cover ideal of the path");
    auto symb = symbolicPower(path, 2);
    r.require(strings(symb.generators()) ==
                  std::vector<std::string>{"x^2*z^2", "x*y*z", "y^2"},
              "symbolic square of the path cover ideal");
    JetSpace space(u, 1);
    r.require(strings(polarizeIdeal(space, symb).generators()) ==
                  std::vector<std::string>{"x_0*x_1*z_0*z_1", "x_0*y_0*z_0", "y_0*y_1"},
              "polarized symbolic square");
    return r;
}

// Minimal covers and irreducible 2-covers of the triangle-tail graph.
Outcome criterion3() {
    Outcome r;
    Graph g = fixtures::triangleTail();
    std::set<std::vector<std::string>> covers;
    for (VertexSet w : minimalVertexCovers(g.clutter()))
        covers.insert(labelsOf(g.universe(), w));
    r.require(covers == std::set<std::vector<std::string>>{{"u", "w", "x"},
                                                           {"v", "w", "x"},
                                                           {"u", "w", "y"},
                                                           {"v", "w", "y"},
                                                           {"v", "x", "y"}},
              "five minimal covers of the triangle-tail graph");
    auto irr = strings(irreducibleTwoCovers(g));
    r.require(irr == std::vector<std::string>{"u*v*w*x*y", "v^2*w*x*y"},
              "irreducible 2-covers of the triangle-tail graph");
    return r;
}

// Polarized symbolic-power generators equal directly enumerated minimal
// covers of the jet clutter: exhaustive over relabelling classes of
// clutters with at most 4 vertices and 3 edges, orders 0..2.
Outcome criterion4() {
    Outcome r;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& c : exhaustiveClutters(n, 3, true)) {
            for (int s = 0; s <= 2; ++s) {
                auto viaPolarization = jetCoversViaPolarization(c, s);
                auto direct = minimalVertexCovers(jetClutter(c, s).jets);
                r.require(viaPolarization.covers == direct,
                          "cover routes disagree on " + clutterToJson(c).dump() +
                              " at s=" + std::to_string(s));
            }
        }
    }
    return r;
}

// Jets of the fixed very well-covered graphs stay very well-covered with
// covers of cardinality n(s+1).
Outcome criterion5() {
    Outcome r;
    std::vector<Graph> corpus{fixtures::favaron()};
    for (int n = 1; n <= 3; ++n) corpus.push_back(fixtures::completeBipartite(n));
    for (const auto& g : corpus) {
        const int half = g.vertexCount() / 2;
        for (int s = 0; s <= 2; ++s) {
            auto jc = jetCoversViaPolarization(g.clutter(), s);
            for (VertexSet w : jc.covers)
                r.require(w.count() == half * (s + 1),
                          "cover of unexpected cardinality at s=" + std::to_string(s));
            if (g.vertexCount() * (s + 1) <= 16) {
                auto direct = minimalVertexCovers(jetClutter(g.clutter(), s).jets);
                r.require(direct == jc.covers, "cover routes disagree");
            }
        }
    }
    return r;
}

// Principal jets of the path match the expected generator sequences and
// prime decompositions; decomposition and colon constructions agree on
// every clutter class with at most 5 vertices.
Outcome criterion6() {
    Outcome r;
    Clutter path = pathClutter();
    auto p1 = principalJets(path, 1);
    r.require(strings(p1.generatorSequence) ==
                  std::vector<std::string>{"x_0*y_0", "y_0*z_0", "x_0*y_1", "x_1*y_0",
                                           "y_0*z_1", "y_1*z_0", "x_1*y_1", "y_1*z_1"},
              "order-1 principal jet generators");
    auto p2 = principalJets(path, 2);
    r.require(strings(p2.generatorSequence) ==
                  std::vector<std::string>{"x_0*y_0", "y_0*z_0", "x_0*y_1", "x_1*y_0",
                                           "y_0*z_1", "y_1*z_0", "x_0*y_2", "x_1*y_1",
                                           "x_2*y_0", "y_0*z_2", "y_1*z_1", "y_2*z_0",
                                           "x_1*y_2", "x_2*y_1", "y_1*z_2", "y_2*z_1",
                                           "x_2*y_2", "y_2*z_2"},
              "order-2 principal jet generators");

    auto d1 = principalJetDecomposition(path, 1);
    r.require(d1.components.size() == 2 &&
                  labelsOf(*d1.space.jet(), d1.components[0]) ==
                      std::vector<std::string>{"x_0", "x_1", "z_0", "z_1"} &&
                  labelsOf(*d1.space.jet(), d1.components[1]) ==
                      std::vector<std::string>{"y_0", "y_1"},
              "order-1 decomposition of the path");
    auto d2 = principalJetDecomposition(path, 2);
    r.require(d2.components.size() == 2 &&
                  labelsOf(*d2.space.jet(), d2.components[0]) ==
                      std::vector<std::string>{"x_0", "x_1", "x_2", "z_0", "z_1", "z_2"} &&
                  labelsOf(*d2.space.jet(), d2.components[1]) ==
                      std::vector<std::string>{"y_0", "y_1", "y_2"},
              "order-2 decomposition of the path");

    // Exhaustive over relabelling classes; both constructions self-check
    // against the generator construction and throw on mismatch.
    for (int n = 1; n <= 5; ++n) {
        for (const auto& c : exhaustiveClutters(n, -1, true)) {
            for (int s = 0; s <= 2; ++s) {
                try {
                    principalJetDecomposition(c, s);
                    principalJetsViaColon(c, s);
                    r.require(true, "");
                } catch (const InternalCheckError& e) {
                    r.require(false, std::string(e.what()) + " on " +
                                         clutterToJson(c).dump() + " at s=" +
                                         std::to_string(s));
                }
            }
        }
    }
    return r;
}

// Lifting matrices and f-vector transforms for the mixed-degree fixture.
Outcome criterion7() {
    Outcome r;
    r.require(liftingMatrix(1, 3).entries ==
                  std::vector<std::vector<long long>>{{1, 0, 0, 0, 0, 0, 0},
                                                      {0, 2, 1, 0, 0, 0, 0},
                                                      {0, 0, 4, 4, 1, 0, 0},
                                                      {0, 0, 0, 8, 12, 6, 1}},
              "order-1 lifting matrix");
    r.require(liftingMatrix(2, 3).entries ==
                  std::vector<std::vector<long long>>{
                      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                      {0, 3, 3, 1, 0, 0, 0, 0, 0, 0},
                      {0, 0, 9, 18, 15, 6, 1, 0, 0, 0},
                      {0, 0, 0, 27, 81, 108, 81, 36, 9, 1}},
              "order-2 lifting matrix");

    auto f = fVector(complexFromIdeal(fixtures::mixedDegreeIdeal()));
    r.require(f.entries == std::vector<long long>{1, 5, 8, 4}, "base f-vector");
    auto f1 = transformFVector(f, 1);
    auto f2 = transformFVector(f, 2);
    r.require(f1.entries == std::vector<long long>{1, 10, 37, 64, 56, 24, 4},
              "order-1 f-vector");
    r.require(f2.entries ==
                  std::vector<long long>{1, 15, 87, 257, 444, 480, 332, 144, 36, 4},
              "order-2 f-vector");
    // Dimension scales by s+1; the multiplicity is the trailing entry and
    // is preserved by the transform (4 at every order for this fixture).
    r.require(dimensionAndMultiplicity(f1) == DimensionMultiplicity{6, 4},
              "order-1 dimension/multiplicity");
    r.require(dimensionAndMultiplicity(f2) == DimensionMultiplicity{9, 4},
              "order-2 dimension/multiplicity");
    return r;
}

// Betti tables: fixture diagram, both lifted tables, and the direct
// rational recomputation on the order-1 complex (10 vertices).
Outcome criterion8() {
    Outcome r;
    auto ideal = fixtures::mixedDegreeIdeal();
    auto base = bettiNumbersHochster(complexFromIdeal(ideal));
    r.require(base.totals() == std::vector<long long>{1, 3, 2}, "base Betti totals");
    r.require(base.matrixView() ==
                  std::vector<std::vector<long long>>{
                      {1, 0, 0, 0, 0}, {0, 0, 2, 1, 0}, {0, 0, 0, 1, 1}},
              "base Betti matrix");

    auto s1 = transformBetti(base, 1);
    r.require(s1.matrixView() ==
                  std::vector<std::vector<long long>>{
                      {1, 0, 0, 0, 0, 0, 0, 0, 0},
                      {0, 0, 8, 16, 14, 6, 1, 0, 0},
                      {0, 0, 0, 8, 28, 38, 25, 8, 1}},
              "order-1 Betti matrix");
    r.require(s1.totals() == std::vector<long long>{1, 16, 44, 52, 31, 9, 1},
              "order-1 Betti totals");

    auto s2 = transformBetti(base, 2);
    r.require(s2.matrixView() ==
                  std::vector<std::vector<long long>>{
                      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                      {0, 0, 18, 63, 111, 120, 83, 36, 9, 1, 0, 0, 0},
                      {0, 0, 0, 27, 162, 432, 675, 684, 468, 217, 66, 12, 1}},
              "order-2 Betti matrix");
    r.require(s2.totals() ==
                  std::vector<long long>{1, 45, 225, 543, 795, 767, 504, 226, 67, 12, 1},
              "order-2 Betti totals");

    auto direct = bettiNumbersHochster(
        complexFromIdeal(principalJets(clutterOfIdeal(ideal), 1).ideal));
    r.require(direct.sameEntries(s1), "direct Hochster on the order-1 complex");
    return r;
}

// Property suites: staircase, support-union, lifting triple check,
// regularity preservation, dimension scaling, linear-resolution
// equivalence and the cochordality cross-check, all with zero failures.
Outcome criterion9() {
    Outcome r;
    VerifyOptions opts;
    opts.seed = 2026;
    for (const std::string& id :
         {"lemma1", "lemma2", "thm8", "thm9", "cor3"}) {
        auto report = verifyTheorem(id, opts);
        r.instances += report.instances;
        if (!report.failures.empty())
            r.require(false, id + ": " + report.failures.front().description);
    }
    // Lifting function: recursion vs closed form vs direct lift counting.
    for (int s = 0; s <= 3; ++s) {
        for (int j = 0; j <= 4; ++j) {
            for (int k = 0; k <= (s + 1) * j; ++k) {
                long long viaRecursion = liftingFunction(s, j, k);
                r.require(viaRecursion == liftingFunctionClosedForm(s, j, k),
                          "closed form mismatch");
                if ((s + 1) * j <= 16) {
                    long long count = 0;
                    for (std::uint64_t mask = 0;
                         mask < (std::uint64_t{1} << ((s + 1) * j)); ++mask) {
                        VertexSet v{mask};
                        if (v.count() != k) continue;
                        VertexSet hit;
                        v.forEach([&](int idx) { hit.add(idx / (s + 1)); });
                        if (hit == VertexSet::full(j)) ++count;
                    }
                    r.require(viaRecursion == count, "lift count mismatch");
                }
            }
        }
    }
    return r;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        std::string name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "jet generator sums and radical generators of the two-edge ideal", criterion1},
        {2, "path cover ideal, symbolic square, polarization", criterion2},
        {3, "triangle-tail covers and irreducible 2-covers", criterion3},
        {4, "polarized symbolic powers equal enumerated jet covers (exhaustive)", criterion4},
        {5, "jets of very well-covered graphs stay very well-covered", criterion5},
        {6, "principal jets: generators, decompositions, colon route (exhaustive)",
         criterion6},
        {7, "lifting matrices and f-vector transforms", criterion7},
        {8, "Betti tables: fixture, lifted tables, direct recomputation", criterion8},
        {9, "property suites over seeded corpora", criterion9},
    };

    bool allPass = true;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion.number
                  << ": " << criterion.name << " (" << outcome.instances << " checks, " << ms
                  << " ms)";
        if (!outcome.pass) std::cout << " -- " << outcome.detail;
        std::cout << "\n";
        allPass = allPass && outcome.pass;
    }
    std::cout << (allPass ? "ACCEPTANCE: all criteria passed"
                          : "ACCEPTANCE: failures present")
              << std::endl;
    return allPass ? 0 : 1;
}
