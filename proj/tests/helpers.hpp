#pragma once

#include <vector>

#include "oracles.hpp"
#include "vrlab/domains.hpp"
#include "vrlab/proximity.hpp"

namespace testing {

inline vrlab::Graph toGraph(int n, const oracle::EdgeSet& edges)
{
    std::vector<vrlab::Edge> e(edges.begin(), edges.end());
    return vrlab::Graph(static_cast<std::size_t>(n), e);
}

inline oracle::EdgeSet toEdgeSet(const vrlab::Graph& g)
{
    oracle::EdgeSet out;
    for (auto [a, b] : g.edges()) out.emplace(a, b);
    return out;
}

inline oracle::Adjacency toAdjacency(const vrlab::Graph& g)
{
    return oracle::adjacency(static_cast<int>(g.size()), toEdgeSet(g));
}

inline vrlab::PointCloud cloudOf(const Eigen::MatrixXd& pts)
{
    vrlab::PointCloud c;
    c.points = pts;
    return c;
}

/// Random geometric graph on the unit cube.
inline vrlab::Graph randomGeometric(int d, int n, double r, std::uint64_t seed)
{
    return vrlab::buildGraph(cloudOf(oracle::unitCubePoints(d, n, seed)), r).graph;
}

}  // namespace testing
