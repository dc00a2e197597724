#ifndef JETCOVER_CLUTTER_HPP
#define JETCOVER_CLUTTER_HPP

#include <optional>
#include <string>
#include <vector>

#include "jetcover/universe.hpp"

namespace jetcover {

/// Finite vertex set together with an antichain of nonempty edges
/// (a simple hypergraph). Instances are canonical by construction:
/// dominated edges are dropped and edges are stored sorted.
class Clutter {
public:
    /// Validates edges (nonempty, inside the universe), removes edges that
    /// contain another edge, deduplicates and sorts.
    static Clutter make(UniversePtr universe, std::vector<VertexSet> edges);

    const Universe& universe() const { return *universe_; }
    const UniversePtr& universePtr() const { return universe_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    int vertexCount() const { return universe_->size(); }
    int edgeCount() const { return static_cast<int>(edges_.size()); }

    VertexSet vertexMask() const { return VertexSet::full(universe_->size()); }

    bool operator==(const Clutter& o) const {
        return universe_->sameAs(*o.universe_) && edges_ == o.edges_;
    }

private:
    Clutter(UniversePtr universe, std::vector<VertexSet> edges);
    UniversePtr universe_;
    std::vector<VertexSet> edges_;
};

/// Builds a clutter from labels, sorting the vertex labels first so that
/// parsed input lands in the canonical label-lexicographic order.
Clutter canonicalClutter(std::vector<std::string> labels,
                         const std::vector<std::vector<std::string>>& edgeLabels);

/// Re-canonicalizes: sorts vertices by label and remaps edges.
Clutter canonicalize(const Clutter& c);

/// Clutter whose edges all have two vertices.
class Graph {
public:
    static Graph make(Clutter c);
    static Graph make(UniversePtr universe, std::vector<VertexSet> edges);

    const Clutter& clutter() const { return clutter_; }
    const Universe& universe() const { return clutter_.universe(); }
    const UniversePtr& universePtr() const { return clutter_.universePtr(); }
    int vertexCount() const { return clutter_.vertexCount(); }
    const std::vector<VertexSet>& edges() const { return clutter_.edges(); }

    /// Neighbor mask of a single vertex.
    VertexSet adjacent(int v) const { return adjacency_.at(v); }
    bool hasEdge(int u, int v) const { return adjacency_.at(u).contains(v); }
    bool hasIsolatedVertex() const;

    bool operator==(const Graph& o) const { return clutter_ == o.clutter_; }

private:
    explicit Graph(Clutter c);
    Clutter clutter_;
    std::vector<VertexSet> adjacency_;
};

/// Subgraph induced on ys: all edges with both endpoints in ys.
/// The result keeps the parent universe labels, restricted to ys.
Graph inducedSubgraph(const Graph& g, VertexSet ys);

/// Vertices adjacent to at least one vertex of ys.
VertexSet neighborSet(const Graph& g, VertexSet ys);

struct BipartiteResult {
    bool bipartite = false;
    /// One side of a proper 2-coloring, when bipartite.
    std::optional<VertexSet> side;
    /// Vertex indices of an odd cycle, when not bipartite.
    std::optional<std::vector<int>> oddCycle;
};

BipartiteResult checkBipartite(const Graph& g);
inline bool isBipartite(const Graph& g) { return checkBipartite(g).bipartite; }

/// True iff the graph has a perfect elimination ordering. The order is
/// produced by maximum-cardinality search and then verified directly.
bool isChordal(const Graph& g);

Graph complementGraph(const Graph& g);

} // namespace jetcover

#endif
