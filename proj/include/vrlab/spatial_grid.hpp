#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace vrlab {

/// Uniform bucket grid over column-stored points.
///
/// Cells are keyed by a hash of their integer coordinates; unrelated cells
/// may share a bucket, so every query filters by true distance.
class SpatialGrid {
public:
    SpatialGrid(const Eigen::MatrixXd& points, double cellSize) : points_(&points), cell_(cellSize)
    {
        origin_ = points.cols() > 0 ? Eigen::VectorXd(points.rowwise().minCoeff()) : Eigen::VectorXd::Zero(points.rows());
        buckets_.reserve(static_cast<std::size_t>(points.cols()));
        for (Eigen::Index i = 0; i < points.cols(); ++i)
            buckets_[key(cellOf(points.col(i)))].push_back(static_cast<std::int32_t>(i));
    }

    double cellSize() const noexcept { return cell_; }

    /// Call f(j) for every stored point with |p - X_j| <= radius.
    template <typename Derived, typename F>
    void forEachWithin(const Eigen::MatrixBase<Derived>& p, double radius, F&& f) const
    {
        const auto dim = static_cast<int>(points_->rows());
        const std::vector<std::int64_t> base = cellOf(p);
        const auto reach = static_cast<std::int64_t>(std::ceil(radius / cell_));
        std::vector<std::int64_t> offset(static_cast<std::size_t>(dim), -reach);
        std::vector<std::int64_t> cell(static_cast<std::size_t>(dim));
        const double r2 = radius * radius;
        std::vector<std::uint64_t> seen;
        while (true) {
            for (int k = 0; k < dim; ++k) cell[static_cast<std::size_t>(k)] = base[static_cast<std::size_t>(k)] + offset[static_cast<std::size_t>(k)];
            const std::uint64_t h = key(cell);
            bool dup = false;
            for (auto s : seen)
                if (s == h) {
                    dup = true;
                    break;
                }
            if (!dup) {
                seen.push_back(h);
                if (auto it = buckets_.find(h); it != buckets_.end())
                    for (std::int32_t j : it->second)
                        if ((points_->col(j) - p).squaredNorm() <= r2) f(j);
            }
            int k = 0;
            while (k < dim && ++offset[static_cast<std::size_t>(k)] > reach) {
                offset[static_cast<std::size_t>(k)] = -reach;
                ++k;
            }
            if (k == dim) break;
        }
    }

    template <typename Derived>
    bool anyWithin(const Eigen::MatrixBase<Derived>& p, double radius) const
    {
        bool found = false;
        forEachWithin(p, radius, [&](std::int32_t) { found = true; });
        return found;
    }

private:
    template <typename Derived>
    std::vector<std::int64_t> cellOf(const Eigen::MatrixBase<Derived>& p) const
    {
        std::vector<std::int64_t> c(static_cast<std::size_t>(p.size()));
        for (Eigen::Index k = 0; k < p.size(); ++k)
            c[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(std::floor((p[k] - origin_[k]) / cell_));
        return c;
    }

    static std::uint64_t key(const std::vector<std::int64_t>& c) noexcept
    {
        std::uint64_t h = 0x84222325cbf29ce4ULL;
        for (auto v : c) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    const Eigen::MatrixXd* points_;
    double cell_;
    Eigen::VectorXd origin_;
    std::unordered_map<std::uint64_t, std::vector<std::int32_t>> buckets_;
};

}  // namespace vrlab
