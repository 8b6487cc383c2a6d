#pragma once

// Brute-force references used by the tests. Nothing here calls into the
// library's graph, complex or dismantling code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using EdgeSet = std::set<std::pair<int, int>>;
using Adjacency = std::vector<std::set<int>>;

inline EdgeSet allPairsEdges(const Eigen::MatrixXd& pts, double r)
{
    EdgeSet out;
    const int n = static_cast<int>(pts.cols());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((pts.col(i) - pts.col(j)).squaredNorm() <= r * r) out.emplace(i, j);
    return out;
}

inline Adjacency adjacency(int n, const EdgeSet& edges)
{
    Adjacency adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    }
    return adj;
}

inline std::set<int> closed(const Adjacency& adj, int v)
{
    auto s = adj[static_cast<std::size_t>(v)];
    s.insert(v);
    return s;
}

/// Some w != v with N[v] ⊆ N[w], restricted to `alive`.
inline bool dominated(const Adjacency& adj, const std::set<int>& alive, int v)
{
    std::set<int> nv;
    for (int u : closed(adj, v))
        if (alive.count(u)) nv.insert(u);
    for (int w : alive) {
        if (w == v) continue;
        std::set<int> nw;
        for (int u : closed(adj, w))
            if (alive.count(u)) nw.insert(u);
        if (std::includes(nw.begin(), nw.end(), nv.begin(), nv.end())) return true;
    }
    return false;
}

/// Repeatedly strip any dominated vertex; the survivor count is order-free.
inline bool dismantlable(const Adjacency& adj)
{
    std::set<int> alive;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) alive.insert(v);
    bool progress = true;
    while (alive.size() > 1 && progress) {
        progress = false;
        for (int v : alive)
            if (dominated(adj, alive, v)) {
                alive.erase(v);
                progress = true;
                break;
            }
    }
    return alive.size() == 1;
}

/// All cliques of size <= maxSize, grouped by size - 1.
inline std::vector<std::vector<std::vector<int>>> cliques(const Adjacency& adj, int maxSize)
{
    std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(maxSize));
    const int n = static_cast<int>(adj.size());
    std::vector<int> cur;
    auto grow = [&](auto&& self, int from) -> void {
        out[cur.size() - 1].push_back(cur);
        if (static_cast<int>(cur.size()) == maxSize) return;
        for (int v = from; v < n; ++v) {
            bool ok = true;
            for (int u : cur) ok = ok && adj[static_cast<std::size_t>(u)].count(v);
            if (!ok) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        cur = {v};
        grow(grow, v + 1);
    }
    return out;
}

/// Rank over GF(2) of a dense 0/1 matrix by row reduction.
inline long rank(std::vector<std::vector<std::uint8_t>> m)
{
    long rk = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && !m[p][c]) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != row && m[i][c])
                for (std::size_t k = c; k < cols; ++k) m[i][k] ^= m[row][k];
        ++row;
        ++rk;
    }
    return rk;
}

/// b_0 … b_{maxDim-1} of the flag complex, using simplices up to maxDim.
inline std::vector<long> betti(const Adjacency& adj, int maxDim)
{
    const auto cl = cliques(adj, maxDim + 1);
    auto boundaryRank = [&](int k) -> long {
        if (k <= 0 || k > maxDim) return 0;
        const auto& hi = cl[static_cast<std::size_t>(k)];
        const auto& lo = cl[static_cast<std::size_t>(k - 1)];
        if (hi.empty() || lo.empty()) return 0;
        std::vector<std::vector<std::uint8_t>> m(lo.size(), std::vector<std::uint8_t>(hi.size(), 0));
        for (std::size_t j = 0; j < hi.size(); ++j)
            for (std::size_t drop = 0; drop < hi[j].size(); ++drop) {
                auto f = hi[j];
                f.erase(f.begin() + static_cast<long>(drop));
                const auto it = std::lower_bound(lo.begin(), lo.end(), f);
                m[static_cast<std::size_t>(it - lo.begin())][j] = 1;
            }
        return rank(std::move(m));
    };
    std::vector<long> b;
    for (int k = 0; k < maxDim; ++k)
        b.push_back(static_cast<long>(cl[static_cast<std::size_t>(k)].size()) - boundaryRank(k) - boundaryRank(k + 1));
    return b;
}

/// Uniform points of [0,1]^d from a generator independent of the library.
inline Eigen::MatrixXd unitCubePoints(int d, int n, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Eigen::MatrixXd p(d, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < d; ++i) p(i, j) = u(gen);
    return p;
}

/// Random labelled tree by attaching each vertex to an earlier one.
inline EdgeSet randomTree(int n, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    EdgeSet e;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        e.emplace(pick(gen), v);
    }
    return e;
}

}  // namespace oracle
