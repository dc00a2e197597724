#ifndef JETCOVER_TEST_HELPERS_HPP
#define JETCOVER_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "jetcover/clutter.hpp"
#include "jetcover/covers.hpp"
#include "jetcover/ideal.hpp"

namespace jetcover::testing {

inline UniversePtr universe(std::vector<std::string> labels) {
    return Universe::make(std::move(labels));
}

inline Clutter clutterOf(std::vector<std::string> labels,
                         std::vector<std::vector<std::string>> edges) {
    return canonicalClutter(std::move(labels), edges);
}

inline Graph graphOf(std::vector<std::string> labels,
                     std::vector<std::vector<std::string>> edges) {
    return Graph::make(clutterOf(std::move(labels), std::move(edges)));
}

/// The path on x, y, z with edges xy and yz.
inline Graph pathGraph() { return graphOf({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}); }

/// Five-vertex non-bipartite graph: a path u-v-w ending in the triangle
/// w, x, y.
inline Graph triangleTail() {
    return graphOf({"u", "v", "w", "x", "y"},
                   {{"u", "v"}, {"v", "w"}, {"w", "x"}, {"w", "y"}, {"x", "y"}});
}

/// Favaron's very well-covered graph on eight vertices.
inline Graph favaronG1() {
    return graphOf({"a", "b", "c", "d", "e", "f", "g", "h"},
                   {{"a", "e"},
                    {"b", "e"},
                    {"b", "f"},
                    {"c", "e"},
                    {"c", "f"},
                    {"c", "g"},
                    {"c", "h"},
                    {"d", "h"},
                    {"e", "h"},
                    {"f", "h"}});
}

inline Graph completeBipartite(int n) {
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> edges;
    for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
    for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            edges.push_back({"a" + std::to_string(i), "b" + std::to_string(j)});
    return graphOf(std::move(labels), std::move(edges));
}

inline MonomialIdeal idealOf(const UniversePtr& u, std::vector<std::string> gens) {
    std::vector<Monomial> ms;
    for (const auto& g : gens) ms.push_back(parseMonomial(u, g));
    return MonomialIdeal::make(u, std::move(ms));
}

/// Deterministic generator with explicit modulo reduction so sequences do
/// not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    bool chance(int num, int den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

inline std::vector<std::string> letters(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

inline Graph randomGraph(Rng& rng, int n, int edgeChancePct = 50) {
    std::vector<VertexSet> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(100) < edgeChancePct) edges.push_back(VertexSet::fromIndices({i, j}));
    return Graph::make(Universe::make(letters(n)), std::move(edges));
}

inline Clutter randomClutter(Rng& rng, int n, int maxEdges) {
    std::vector<VertexSet> edges;
    const int want = 1 + rng.below(maxEdges);
    for (int t = 0; t < want; ++t) {
        VertexSet e;
        const int size = 1 + rng.below(std::min(n, 3));
        while (e.count() < size) e.add(rng.below(n));
        edges.push_back(e);
    }
    return Clutter::make(Universe::make(letters(n)), std::move(edges));
}

/// Brute-force transversal oracle: scan all subsets, keep covers, filter
/// to inclusion-minimal, sort.
inline std::vector<VertexSet> bruteForceMinimalCovers(const Clutter& c) {
    const int n = c.vertexCount();
    std::vector<VertexSet> covers;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet w{bits};
        if (isVertexCover(c, w)) covers.push_back(w);
    }
    std::vector<VertexSet> minimal;
    for (VertexSet w : covers) {
        bool keep = true;
        for (VertexSet other : covers)
            if (other.properSubsetOf(w)) {
                keep = false;
                break;
            }
        if (keep) minimal.push_back(w);
    }
    std::sort(minimal.begin(), minimal.end(), sequenceLess);
    return minimal;
}

} // namespace jetcover::testing

#endif
