#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "vrlab/proximity.hpp"

namespace vrlab {

inline constexpr std::size_t kDefaultSimplexBudget = 10'000'000;

/// Clique (flag) complex truncated at dimension dimCap.
///
/// Simplices of dimension k are stored flattened with stride k + 1, vertices
/// ascending within a simplex and simplices in lexicographic order.
struct CliqueComplex {
    int dimCap = 0;
    std::size_t vertexCount = 0;
    std::vector<std::vector<VertexId>> simplices;
    /// Some clique has more than dimCap + 1 vertices.
    bool truncated = false;

    std::size_t count(int k) const
    {
        return k >= 0 && k < static_cast<int>(simplices.size()) ? simplices[static_cast<std::size_t>(k)].size() / static_cast<std::size_t>(k + 1) : 0;
    }
    std::span<const VertexId> simplex(int k, std::size_t i) const
    {
        const auto stride = static_cast<std::size_t>(k + 1);
        return std::span<const VertexId>(simplices[static_cast<std::size_t>(k)]).subspan(i * stride, stride);
    }
    std::size_t totalCount() const
    {
        std::size_t t = 0;
        for (int k = 0; k <= dimCap; ++k) t += count(k);
        return t;
    }
};

class ComplexBudgetExceeded : public std::runtime_error {
public:
    ComplexBudgetExceeded(std::size_t budget, std::vector<std::size_t> partialCounts);
    std::size_t budget() const noexcept { return budget_; }
    /// Simplices enumerated per dimension before the budget tripped.
    const std::vector<std::size_t>& partialCounts() const noexcept { return partial_; }

private:
    std::size_t budget_;
    std::vector<std::size_t> partial_;
};

/// All cliques with at most dimCap + 1 vertices, by ordered expansion: a
/// clique is extended only by common neighbors of higher index.
CliqueComplex enumerateCliques(const Graph& g, int dimCap, std::size_t budget = kDefaultSimplexBudget);

/// GF(2) Betti numbers b_0 … b_{dimCap-1} of a truncated clique complex.
struct BettiProfile {
    std::vector<long> betti;
    /// Alternating simplex count over dimensions 0 … dimCap.
    long euler = 0;
    bool truncated = false;
    /// b_{dimCap}, exact only when the complex is not truncated.
    std::optional<long> top;
    std::vector<std::size_t> simplexCounts;

    /// Σ (-1)^k b_k including `top`; equals euler when not truncated.
    long alternatingSum() const;
};

BettiProfile bettiProfile(const CliqueComplex& complex);

/// b_0 = 1, every other computed b_k = 0, and euler = 1 when not truncated.
bool isPointLike(const BettiProfile& profile);

/// Some reduced Betti number is nonzero (b_0 ≠ 1 or b_k ≠ 0 for k ≥ 1).
bool hasNontrivialReducedHomology(const BettiProfile& profile);

/// Dense GF(2) matrix, one bit row per row.
class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rowBits_(rows, DynamicBitset(cols)) {}
    std::size_t rows() const noexcept { return rowBits_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    void set(std::size_t i, std::size_t j) { rowBits_[i].set(j); }
    void flip(std::size_t i, std::size_t j)
    {
        if (rowBits_[i].test(j)) rowBits_[i].reset(j);
        else rowBits_[i].set(j);
    }
    bool test(std::size_t i, std::size_t j) const { return rowBits_[i].test(j); }
    DynamicBitset& row(std::size_t i) { return rowBits_[i]; }
    const DynamicBitset& row(std::size_t i) const { return rowBits_[i]; }

private:
    std::size_t cols_;
    std::vector<DynamicBitset> rowBits_;
};

/// Rank by bit-packed Gaussian elimination (consumes a copy).
std::size_t gf2Rank(Gf2Matrix m);

/// Rank of a matrix given as sparse columns of sorted row indices, by column
/// reduction with a pivot table.
std::size_t gf2RankSparse(std::vector<std::vector<std::uint32_t>> columns, std::size_t rows);

/// Boundary matrix ∂_k as sparse columns (one per k-simplex) over the (k-1)-simplices.
std::vector<std::vector<std::uint32_t>> boundaryColumns(const CliqueComplex& complex, int k);

nlohmann::json toJson(const BettiProfile& profile);

}  // namespace vrlab
