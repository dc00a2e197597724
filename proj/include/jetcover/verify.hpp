#ifndef JETCOVER_VERIFY_HPP
#define JETCOVER_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jetcover/io.hpp"

namespace jetcover {

/// Deterministic generator; reduction is done with explicit modulo so the
/// sequence does not depend on the standard library's distributions.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 engine_;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int randomSamples = 20;
    int hochsterBound = 16;
};

struct VerificationFailure {
    std::string description;
    json witness;
};

struct VerificationReport {
    std::string theorem;
    std::uint64_t seed = 0;
    long long instances = 0;
    std::vector<VerificationFailure> failures;
    long long elapsedMs = 0;
};

json reportToJson(const VerificationReport& r);

std::vector<std::string> verifiableTheorems();

/// Runs the named oracle-equivalence suite over its fixed fixtures plus a
/// seeded random corpus. Ids: thm3, thm6, thm7, thm8, thm9, lemma1,
/// lemma2, cor3.
VerificationReport verifyTheorem(const std::string& id, const VerifyOptions& opts = {});

/// Every clutter on n labelled vertices with at most maxEdges edges
/// (maxEdges < 0 means no cap); with upToIso, one representative per
/// vertex-relabelling class. Includes the edgeless clutter.
std::vector<Clutter> exhaustiveClutters(int n, int maxEdges, bool upToIso);

std::vector<Clutter> randomClutterCorpus(SeededRng& rng, int count, int maxVertices,
                                         int maxEdges);

/// Pendant-vertex extension of a random base graph; always very
/// well-covered.
Graph randomCorona(SeededRng& rng, int baseVertices);

namespace fixtures {

/// Path on x, y, z.
Graph path3();
/// Non-bipartite five-vertex graph: path u-v into the triangle w, x, y.
Graph triangleTail();
/// Favaron's very well-covered eight-vertex graph.
Graph favaron();
Graph completeBipartite(int n);
/// The mixed-degree ideal <v*w*x, x*y, y*z> on five variables.
MonomialIdeal mixedDegreeIdeal();

} // namespace fixtures

} // namespace jetcover

#endif
