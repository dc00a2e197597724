#include "jetcover/clutter.hpp"

#include <algorithm>
#include <deque>

namespace jetcover {

Clutter::Clutter(UniversePtr universe, std::vector<VertexSet> edges)
    : universe_(std::move(universe)), edges_(std::move(edges)) {}

Clutter Clutter::make(UniversePtr universe, std::vector<VertexSet> edges) {
    const VertexSet mask = VertexSet::full(universe->size());
    for (VertexSet e : edges) {
        if (e.isEmpty()) throw DomainError("clutter edge is empty");
        if (!e.subsetOf(mask)) throw DomainError("clutter edge leaves the vertex set");
    }
    // Antichain reduction: drop any edge containing another edge.
    std::vector<VertexSet> keep;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < edges.size() && !dominated; ++j) {
            if (i == j) continue;
            if (edges[j].properSubsetOf(edges[i])) dominated = true;
            if (edges[j] == edges[i] && j < i) dominated = true; // dedupe
        }
        if (!dominated) keep.push_back(edges[i]);
    }
    std::sort(keep.begin(), keep.end(), sequenceLess);
    return Clutter(std::move(universe), std::move(keep));
}

Clutter canonicalClutter(std::vector<std::string> labels,
                         const std::vector<std::vector<std::string>>& edgeLabels) {
    std::sort(labels.begin(), labels.end());
    auto universe = Universe::make(std::move(labels));
    std::vector<VertexSet> edges;
    edges.reserve(edgeLabels.size());
    for (const auto& e : edgeLabels) {
        VertexSet s;
        for (const auto& l : e) s.add(universe->indexOf(l));
        edges.push_back(s);
    }
    return Clutter::make(std::move(universe), std::move(edges));
}

Clutter canonicalize(const Clutter& c) {
    std::vector<std::vector<std::string>> edgeLabels;
    edgeLabels.reserve(c.edges().size());
    for (VertexSet e : c.edges()) edgeLabels.push_back(labelsOf(c.universe(), e));
    return canonicalClutter(c.universe().labels(), edgeLabels);
}

Graph::Graph(Clutter c) : clutter_(std::move(c)) {
    adjacency_.assign(clutter_.vertexCount(), VertexSet{});
    for (VertexSet e : clutter_.edges()) {
        auto idx = e.indices();
        adjacency_[idx[0]].add(idx[1]);
        adjacency_[idx[1]].add(idx[0]);
    }
}

Graph Graph::make(Clutter c) {
    for (VertexSet e : c.edges())
        if (e.count() != 2) throw DomainError("graph edge must have exactly two vertices");
    return Graph(std::move(c));
}

Graph Graph::make(UniversePtr universe, std::vector<VertexSet> edges) {
    return make(Clutter::make(std::move(universe), std::move(edges)));
}

bool Graph::hasIsolatedVertex() const {
    for (int v = 0; v < vertexCount(); ++v)
        if (adjacency_[v].isEmpty()) return true;
    return false;
}

Graph inducedSubgraph(const Graph& g, VertexSet ys) {
    if (!ys.subsetOf(g.clutter().vertexMask()))
        throw DomainError("induced subgraph: vertices outside the graph");
    auto idx = ys.indices();
    std::vector<std::string> labels;
    labels.reserve(idx.size());
    std::vector<int> remap(g.vertexCount(), -1);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        remap[idx[i]] = static_cast<int>(i);
        labels.push_back(g.universe().label(idx[i]));
    }
    auto universe = Universe::make(std::move(labels));
    std::vector<VertexSet> edges;
    for (VertexSet e : g.edges()) {
        if (!e.subsetOf(ys)) continue;
        VertexSet m;
        e.forEach([&](int v) { m.add(remap[v]); });
        edges.push_back(m);
    }
    return Graph::make(std::move(universe), std::move(edges));
}

VertexSet neighborSet(const Graph& g, VertexSet ys) {
    if (!ys.subsetOf(g.clutter().vertexMask()))
        throw DomainError("neighbor set: vertices outside the graph");
    VertexSet out;
    ys.forEach([&](int v) { out = out.unionWith(g.adjacent(v)); });
    return out;
}

BipartiteResult checkBipartite(const Graph& g) {
    const int n = g.vertexCount();
    std::vector<int> color(n, -1), parent(n, -1);
    VertexSet side;
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        side.add(start);
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            auto clash = std::optional<std::pair<int, int>>{};
            g.adjacent(v).forEach([&](int w) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    if (color[w] == 0) side.add(w);
                    queue.push_back(w);
                } else if (color[w] == color[v] && !clash) {
                    clash = std::make_pair(v, w);
                }
            });
            if (clash) {
                // Walk both endpoints up to their lowest common ancestor
                // (same-colored BFS clash means equal depths); the two tree
                // paths plus the clashing edge form an odd cycle.
                auto [a, b] = *clash;
                std::vector<int> pa{a}, pb{b};
                while (a != b) {
                    a = parent[a];
                    b = parent[b];
                    pa.push_back(a);
                    pb.push_back(b);
                }
                std::vector<int> cycle(pa.begin(), pa.end());
                for (int k = static_cast<int>(pb.size()) - 2; k >= 0; --k)
                    cycle.push_back(pb[k]);
                return BipartiteResult{false, std::nullopt, cycle};
            }
        }
    }
    return BipartiteResult{true, side, std::nullopt};
}

bool isChordal(const Graph& g) {
    const int n = g.vertexCount();
    if (n == 0) return true;
    // Maximum-cardinality search, numbering vertices n-1 down to 0.
    std::vector<int> weight(n, 0), position(n, -1);
    std::vector<int> order(n, -1);
    for (int step = n - 1; step >= 0; --step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (position[v] == -1 && (best == -1 || weight[v] > weight[best])) best = v;
        position[best] = step;
        order[step] = best;
        g.adjacent(best).forEach([&](int w) {
            if (position[w] == -1) ++weight[w];
        });
    }
    // Verify the order is a perfect elimination ordering: for each vertex,
    // its neighbors placed later must form a clique.
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> later;
        g.adjacent(v).forEach([&](int w) {
            if (position[w] > i) later.push_back(w);
        });
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.hasEdge(later[a], later[b])) return false;
    }
    return true;
}

Graph complementGraph(const Graph& g) {
    std::vector<VertexSet> edges;
    const int n = g.vertexCount();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.hasEdge(u, v)) edges.push_back(VertexSet::fromIndices({u, v}));
    return Graph::make(g.universePtr(), std::move(edges));
}

} // namespace jetcover
