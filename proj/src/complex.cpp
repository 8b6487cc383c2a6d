#include "vrlab/complex.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "vrlab/error.hpp"

namespace vrlab {

ComplexBudgetExceeded::ComplexBudgetExceeded(std::size_t budget, std::vector<std::size_t> partialCounts)
    : std::runtime_error([&] {
          std::string msg = "clique enumeration exceeded budget of " + std::to_string(budget) + " simplices; partial counts:";
          for (std::size_t k = 0; k < partialCounts.size(); ++k)
              msg += " f" + std::to_string(k) + "=" + std::to_string(partialCounts[k]);
          return msg;
      }()),
      budget_(budget),
      partial_(std::move(partialCounts))
{
}

namespace {

struct CliqueWalker {
    const Graph& g;
    CliqueComplex& out;
    std::size_t budget;
    std::size_t total = 0;
    std::vector<VertexId> stack;
    std::vector<DynamicBitset> candLevels;

    void emit()
    {
        const auto k = stack.size() - 1;
        auto& list = out.simplices[k];
        list.insert(list.end(), stack.begin(), stack.end());
        if (++total > budget) {
            std::vector<std::size_t> counts;
            for (int j = 0; j <= out.dimCap; ++j) counts.push_back(out.count(j));
            throw ComplexBudgetExceeded(budget, std::move(counts));
        }
    }

    // stack holds a clique; candLevels[depth] its common higher neighbors.
    void extend(std::size_t depth)
    {
        const DynamicBitset& cand = candLevels[depth];
        if (static_cast<int>(stack.size()) == out.dimCap + 1) {
            if (cand.any()) out.truncated = true;
            return;
        }
        cand.forEach([&](std::size_t w) {
            stack.push_back(static_cast<VertexId>(w));
            emit();
            DynamicBitset& next = candLevels[depth + 1];
            next = cand;
            next &= g.adjacency(static_cast<VertexId>(w));
            clearUpTo(next, w);
            extend(depth + 1);
            stack.pop_back();
        });
    }

    static void clearUpTo(DynamicBitset& b, std::size_t w)
    {
        auto* words = b.data();
        const std::size_t full = (w + 1) / DynamicBitset::kWordBits;
        for (std::size_t k = 0; k < full; ++k) words[k] = 0;
        const std::size_t rem = (w + 1) % DynamicBitset::kWordBits;
        if (rem && full < b.wordCount()) words[full] &= ~((DynamicBitset::Word{1} << rem) - 1);
    }
};

int compareSimplex(std::span<const VertexId> a, std::span<const VertexId> b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

std::size_t findSimplex(const CliqueComplex& c, int k, std::span<const VertexId> s)
{
    std::size_t lo = 0;
    std::size_t hi = c.count(k);
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (compareSimplex(c.simplex(k, mid), s) < 0) lo = mid + 1;
        else hi = mid;
    }
    return lo;
}

constexpr std::size_t kDenseLimit = 20000;

std::size_t boundaryRank(const CliqueComplex& c, int k)
{
    const std::size_t rows = c.count(k - 1);
    const std::size_t cols = c.count(k);
    if (rows == 0 || cols == 0) return 0;
    auto columns = boundaryColumns(c, k);
    if (std::min(rows, cols) > kDenseLimit) return gf2RankSparse(std::move(columns), rows);
    if (rows <= cols) {
        // columns as bit vectors over the rows
        Gf2Matrix m(cols, rows);
        for (std::size_t j = 0; j < cols; ++j)
            for (auto i : columns[j]) m.set(j, i);
        return gf2Rank(std::move(m));
    }
    Gf2Matrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (auto i : columns[j]) m.set(i, j);
    return gf2Rank(std::move(m));
}

}  // namespace

CliqueComplex enumerateCliques(const Graph& g, int dimCap, std::size_t budget)
{
    if (dimCap < 0) throw PreconditionError("enumerate: dim_cap must be >= 0");
    CliqueComplex out;
    out.dimCap = dimCap;
    out.vertexCount = g.size();
    out.simplices.assign(static_cast<std::size_t>(dimCap + 1), {});
    CliqueWalker walker{g, out, budget, 0, {}, std::vector<DynamicBitset>(static_cast<std::size_t>(dimCap + 2))};
    for (std::size_t v = 0; v < g.size(); ++v) {
        walker.stack.assign(1, static_cast<VertexId>(v));
        walker.emit();
        DynamicBitset& cand = walker.candLevels[0];
        cand = g.adjacency(static_cast<VertexId>(v));
        CliqueWalker::clearUpTo(cand, v);
        walker.extend(0);
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> boundaryColumns(const CliqueComplex& c, int k)
{
    if (k < 1 || k > c.dimCap) throw PreconditionError("boundary: dimension out of range");
    const std::size_t cols = c.count(k);
    std::vector<std::vector<std::uint32_t>> out(cols);
    std::vector<VertexId> face(static_cast<std::size_t>(k));
    for (std::size_t j = 0; j < cols; ++j) {
        const auto s = c.simplex(k, j);
        auto& col = out[j];
        col.reserve(static_cast<std::size_t>(k + 1));
        for (int drop = 0; drop <= k; ++drop) {
            std::size_t w = 0;
            for (int i = 0; i <= k; ++i)
                if (i != drop) face[w++] = s[static_cast<std::size_t>(i)];
            col.push_back(static_cast<std::uint32_t>(findSimplex(c, k - 1, face)));
        }
        std::sort(col.begin(), col.end());
    }
    return out;
}

std::size_t gf2Rank(Gf2Matrix m)
{
    const std::size_t width = m.cols();
    std::vector<std::int64_t> pivotRow(width, -1);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        DynamicBitset& v = m.row(i);
        while (true) {
            const std::size_t p = v.first();
            if (p == width) break;
            if (pivotRow[p] < 0) {
                pivotRow[p] = static_cast<std::int64_t>(i);
                ++rank;
                break;
            }
            v ^= m.row(static_cast<std::size_t>(pivotRow[p]));
        }
    }
    return rank;
}

std::size_t gf2RankSparse(std::vector<std::vector<std::uint32_t>> columns, std::size_t rows)
{
    std::unordered_map<std::uint32_t, std::size_t> pivotOf;
    pivotOf.reserve(std::min(rows, columns.size()));
    std::vector<std::uint32_t> scratch;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        auto& col = columns[j];
        while (!col.empty()) {
            auto it = pivotOf.find(col.back());
            if (it == pivotOf.end()) {
                pivotOf.emplace(col.back(), j);
                ++rank;
                break;
            }
            const auto& other = columns[it->second];
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(scratch));
            col.swap(scratch);
        }
    }
    return rank;
}

BettiProfile bettiProfile(const CliqueComplex& c)
{
    BettiProfile p;
    p.truncated = c.truncated;
    const int cap = c.dimCap;
    for (int k = 0; k <= cap; ++k) p.simplexCounts.push_back(c.count(k));
    std::vector<std::size_t> rank(static_cast<std::size_t>(cap + 2), 0);
    for (int k = 1; k <= cap; ++k) rank[static_cast<std::size_t>(k)] = boundaryRank(c, k);
    for (int k = 0; k <= cap; ++k) p.euler += (k % 2 ? -1 : 1) * static_cast<long>(c.count(k));
    for (int k = 0; k < cap; ++k)
        p.betti.push_back(static_cast<long>(c.count(k)) - static_cast<long>(rank[static_cast<std::size_t>(k)]) -
                          static_cast<long>(rank[static_cast<std::size_t>(k + 1)]));
    if (!c.truncated)
        p.top = static_cast<long>(c.count(cap)) - static_cast<long>(rank[static_cast<std::size_t>(cap)]);
    return p;
}

long BettiProfile::alternatingSum() const
{
    long s = 0;
    for (std::size_t k = 0; k < betti.size(); ++k) s += (k % 2 ? -1 : 1) * betti[k];
    if (top) s += (betti.size() % 2 ? -1 : 1) * *top;
    return s;
}

bool isPointLike(const BettiProfile& p)
{
    std::optional<long> b0;
    if (!p.betti.empty()) b0 = p.betti[0];
    else if (p.top) b0 = p.top;
    if (!b0 || *b0 != 1) return false;
    for (std::size_t k = 1; k < p.betti.size(); ++k)
        if (p.betti[k] != 0) return false;
    if (!p.truncated && p.euler != 1) return false;
    return true;
}

bool hasNontrivialReducedHomology(const BettiProfile& p)
{
    if (!p.betti.empty() && p.betti[0] != 1) return true;
    for (std::size_t k = 1; k < p.betti.size(); ++k)
        if (p.betti[k] != 0) return true;
    if (p.top) {
        const long reduced = p.betti.empty() ? *p.top - 1 : *p.top;
        if (reduced != 0) return true;
    }
    return false;
}

nlohmann::json toJson(const BettiProfile& p)
{
    nlohmann::json j;
    nlohmann::json counts = nlohmann::json::object();
    for (std::size_t k = 0; k < p.simplexCounts.size(); ++k) counts[std::to_string(k)] = p.simplexCounts[k];
    nlohmann::json betti = nlohmann::json::object();
    for (std::size_t k = 0; k < p.betti.size(); ++k) betti[std::to_string(k)] = p.betti[k];
    j["simplex_counts"] = counts;
    j["betti"] = betti;
    j["euler"] = p.euler;
    j["truncated"] = p.truncated;
    if (p.top) j["top_betti"] = *p.top;
    else j["top_betti"] = nullptr;
    j["point_like"] = isPointLike(p);
    return j;
}

}  // namespace vrlab
