#include "vrlab/proximity.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "vrlab/error.hpp"
#include "vrlab/spatial_grid.hpp"

namespace vrlab {

Graph::Graph(std::size_t n) : adj_(n), bits_(n, DynamicBitset(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw PreconditionError("graph: edge endpoint out of range");
        if (u == v || bits_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v))) continue;
        bits_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        bits_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
        ++edges_;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = adj_[v];
        list.reserve(bits_[v].count());
        bits_[v].forEach([&](std::size_t u) { list.push_back(static_cast<VertexId>(u)); });
    }
}

bool Graph::hasEdge(VertexId u, VertexId v) const
{
    return bits_.at(static_cast<std::size_t>(u)).test(static_cast<std::size_t>(v));
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edges_);
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (VertexId v : adj_[u])
            if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<VertexId>(u), v);
    return out;
}

Graph Graph::induced(std::span<const VertexId> vertices) const
{
    std::vector<VertexId> local(adj_.size(), -1);
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        const auto v = static_cast<std::size_t>(vertices[k]);
        if (v >= adj_.size()) throw PreconditionError("induced: vertex out of range");
        local[v] = static_cast<VertexId>(k);
    }
    std::vector<Edge> sub;
    for (std::size_t k = 0; k < vertices.size(); ++k)
        for (VertexId w : adj_[static_cast<std::size_t>(vertices[k])])
            if (const VertexId lw = local[static_cast<std::size_t>(w)]; lw > static_cast<VertexId>(k))
                sub.emplace_back(static_cast<VertexId>(k), lw);
    return Graph(vertices.size(), sub);
}

std::vector<VertexId> closedNeighborhood(const Graph& g, VertexId v)
{
    if (v < 0 || static_cast<std::size_t>(v) >= g.size()) throw PreconditionError("closed_neighborhood: vertex out of range");
    auto nb = g.neighbors(v);
    std::vector<VertexId> out(nb.begin(), nb.end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

DynamicBitset closedNeighborhoodBits(const Graph& g, VertexId v)
{
    if (v < 0 || static_cast<std::size_t>(v) >= g.size()) throw PreconditionError("closed_neighborhood: vertex out of range");
    DynamicBitset b = g.adjacency(v);
    b.set(static_cast<std::size_t>(v));
    return b;
}

GeometricGraph buildGraph(const PointCloud& cloud, double r)
{
    if (!(r > 0.0)) throw PreconditionError("build_graph: r must be positive");
    const std::size_t n = cloud.size();
    std::vector<Edge> edges;
    if (n > 1) {
        const SpatialGrid index(cloud.points, r);
        for (std::size_t i = 0; i < n; ++i)
            index.forEachWithin(cloud.points.col(static_cast<Eigen::Index>(i)), r + kContainTol, [&](std::int32_t j) {
                if (static_cast<std::size_t>(j) > i) edges.emplace_back(static_cast<VertexId>(i), j);
            });
    }
    return {Graph(n, edges), r};
}

Graph pathGraph(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    return Graph(n, e);
}

Graph cycleGraph(std::size_t n)
{
    if (n < 3) throw PreconditionError("cycle: need at least 3 vertices");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
    return Graph(n, e);
}

Graph completeGraph(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return Graph(n, e);
}

Graph starGraph(std::size_t leaves, VertexId center)
{
    const std::size_t n = leaves + 1;
    if (center < 0 || static_cast<std::size_t>(center) >= n) throw PreconditionError("star: center out of range");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        if (static_cast<VertexId>(i) != center) e.emplace_back(center, static_cast<VertexId>(i));
    return Graph(n, e);
}

Graph crossPolytopeGraph(std::size_t k)
{
    const std::size_t n = 2 * k;
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (j != (i ^ 1U)) e.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return Graph(n, e);
}

Graph disjointUnion(const Graph& a, const Graph& b)
{
    auto e = a.edges();
    const auto off = static_cast<VertexId>(a.size());
    for (auto [u, v] : b.edges()) e.emplace_back(u + off, v + off);
    return Graph(a.size() + b.size(), e);
}

void writeEdgeList(std::ostream& out, const Graph& g)
{
    out << g.size() << ' ' << g.edgeCount() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph readEdgeList(std::istream& in)
{
    long long n = -1;
    long long m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw std::runtime_error("edge list: expected 'n m' header");
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        long long u = 0;
        long long v = 0;
        if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated after " + std::to_string(k) + " edges");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::runtime_error("edge list: endpoint out of range");
        e.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return Graph(static_cast<std::size_t>(n), e);
}

}  // namespace vrlab
