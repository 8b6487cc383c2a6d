#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "vrlab/bitset.hpp"
#include "vrlab/domains.hpp"

namespace vrlab {

using VertexId = std::int32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph stored as sorted adjacency lists plus one
/// adjacency bit row per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    /// Self-loops and duplicate edges are dropped.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t size() const noexcept { return adj_.size(); }
    std::size_t edgeCount() const noexcept { return edges_; }

    std::span<const VertexId> neighbors(VertexId v) const { return adj_.at(static_cast<std::size_t>(v)); }
    /// Open neighborhood N(v) as bits.
    const DynamicBitset& adjacency(VertexId v) const { return bits_.at(static_cast<std::size_t>(v)); }
    bool hasEdge(VertexId u, VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    std::vector<Edge> edges() const;

    /// Subgraph induced on `vertices`; vertex k of the result is vertices[k].
    Graph induced(std::span<const VertexId> vertices) const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<VertexId>> adj_;
    std::vector<DynamicBitset> bits_;
    std::size_t edges_ = 0;
};

/// N[v] = N(v) ∪ {v}, sorted ascending.
std::vector<VertexId> closedNeighborhood(const Graph& g, VertexId v);
/// N[v] as bits.
DynamicBitset closedNeighborhoodBits(const Graph& g, VertexId v);

/// Radius graph G(n, r): edge iff |X_i - X_j| <= r (closed, with slack kContainTol).
struct GeometricGraph {
    Graph graph;
    double radius = 0.0;
};

/// Bucket-grid construction with cell size r; only adjacent cells are compared.
GeometricGraph buildGraph(const PointCloud& cloud, double r);

// Standard families, used by tests, examples and the CLI.
Graph pathGraph(std::size_t n);
Graph cycleGraph(std::size_t n);
Graph completeGraph(std::size_t n);
/// Center is vertex `center`; the other n vertices are leaves.
Graph starGraph(std::size_t leaves, VertexId center = 0);
/// Boundary of the k-dimensional cross-polytope: 2k vertices, i ~ j unless j = i ^ 1.
/// Its clique complex is the (k-1)-sphere; k = 3 is the octahedron.
Graph crossPolytopeGraph(std::size_t k);
Graph disjointUnion(const Graph& a, const Graph& b);

/// `n m` header then `i j` per line with i < j, edges in lexicographic order.
void writeEdgeList(std::ostream& out, const Graph& g);
Graph readEdgeList(std::istream& in);

}  // namespace vrlab
