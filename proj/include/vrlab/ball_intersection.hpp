#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "vrlab/domains.hpp"

namespace vrlab {

/// Early exits for callers that only need to classify the depth.
struct DepthQuery {
    /// Stop as soon as a point of depth >= stopAbove is found.
    double stopAbove = std::numeric_limits<double>::infinity();
    /// Stop once the optimal depth is known to be below stopBelow.
    double stopBelow = -std::numeric_limits<double>::infinity();
};

struct DepthResult {
    Point x;
    /// min_i (s_i - |x - c_i|) at x; the largest ball around x inside every B(c_i, s_i).
    double depth = -std::numeric_limits<double>::infinity();
    bool converged = false;
    bool stoppedEarly = false;
    std::size_t newtonSteps = 0;
    std::size_t starts = 0;
};

/// Maximizes min_i (s_i - |x - c_i|) over x ∈ K.
///
/// The epigraph form (x, t) with |x - c_i| <= s_i - t is solved by a
/// log-barrier Newton method on the cone, halfspace and ball constraints of
/// the convex part of K. The excluded ball of a non-convex K is replaced by
/// tangent halfspaces, one solve per direction, directions taken towards the
/// ball centers, along the axes and at random, then refined at the best point.
/// A negative depth means K ∩ ⋂ B(c_i, s_i) is empty (exact for convex K).
class DepthSolver {
public:
    explicit DepthSolver(const Domain& domain, std::size_t newtonBudget = 4000, std::uint64_t seed = 0);

    DepthResult solve(std::span<const Ball> balls, const DepthQuery& query = {}) const;

    const Domain& domain() const noexcept { return domain_; }

private:
    struct Problem;
    DepthResult solveRestricted(const Problem& p, const Point& start, const DepthQuery& query) const;

    Domain domain_;
    ConvexRegion region_;
    std::vector<Point> anchors_;
    std::size_t budget_;
    std::uint64_t seed_;
};

/// Depth of x with respect to the balls alone.
double depthAt(const Point& x, std::span<const Ball> balls);

}  // namespace vrlab
