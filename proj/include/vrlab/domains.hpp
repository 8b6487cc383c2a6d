#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vrlab/geometry.hpp"

namespace vrlab {

enum class DomainKind { Box, Ball, Polytope, Annulus, BoxMinusBall };

/// Closed halfspace {x : normal·x <= offset}.
struct Halfspace {
    Point normal;
    double offset = 0.0;
};

/// Intersection of halfspaces and closed balls.
struct ConvexRegion {
    std::vector<Halfspace> halfspaces;
    std::vector<Ball> balls;

    bool empty() const { return halfspaces.empty() && balls.empty(); }
};

/// The support K of the sampling measure.
///
/// Every kind is the convex region returned by convexPart() minus, for the
/// non-convex kinds, the open ball returned by hole().
class Domain {
public:
    static Domain box(Point lo, Point hi);
    static Domain unitCube(int dim);
    static Domain ball(Point center, double radius);
    /// {x : A x <= b}; must be bounded with nonempty interior.
    static Domain polytope(Eigen::MatrixXd A, Eigen::VectorXd b);
    /// Outer closed ball minus inner open ball, same center.
    static Domain annulus(Point center, double inner, double outer);
    /// Box minus an open ball strictly inside it.
    static Domain boxMinusBall(Point lo, Point hi, Point holeCenter, double holeRadius);

    /// Parse `box[:side]`, `ball[:radius]`, `annulus:inner,outer`,
    /// `box-minus-ball[:hole_radius]`, `simplex`, `polygon:k` (2-D only).
    static Domain parse(std::string_view spec, int dim);

    DomainKind kind() const noexcept { return kind_; }
    int dim() const noexcept { return static_cast<int>(lo_.size()); }
    bool isConvex() const noexcept { return kind_ != DomainKind::Annulus && kind_ != DomainKind::BoxMinusBall; }

    bool contains(const Point& x, double tol = kContainTol) const;
    /// Distance to the boundary for interior points; nonpositive outside.
    double clearance(const Point& x) const;

    const Point& lower() const noexcept { return lo_; }
    const Point& upper() const noexcept { return hi_; }
    double diameter() const noexcept { return diameter_; }
    double inradius() const noexcept { return inradius_; }
    const Point& incenter() const noexcept { return incenter_; }
    double volume() const noexcept { return volume_; }

    ConvexRegion convexPart() const;
    std::optional<Ball> hole() const;

    /// Short label for reports; parse() accepts it for every kind built by parse().
    const std::string& tag() const noexcept { return tag_; }

private:
    Domain() = default;
    void finalize();

    DomainKind kind_ = DomainKind::Box;
    std::string tag_;
    // kind parameters
    Point center_;
    double outer_ = 0.0;
    double inner_ = 0.0;
    Eigen::MatrixXd A_;
    Eigen::VectorXd b_;
    Point boxLo_, boxHi_;
    // cached
    Point lo_, hi_;
    double diameter_ = 0.0;
    double inradius_ = 0.0;
    Point incenter_;
    double volume_ = 0.0;
};

enum class DensityKind { Uniform, BoundedRatio };

/// Density of the sampling measure on K.
///
/// The bounded-ratio kind is piecewise constant: value `low` where
/// x[0] < split and `low * ratio` elsewhere, normalized to integrate to 1.
class DensitySpec {
public:
    static DensitySpec uniform(const Domain& domain);
    static DensitySpec boundedRatio(const Domain& domain, double ratio);
    /// `uniform` or `ratio:<max/min>`.
    static DensitySpec parse(std::string_view spec, const Domain& domain);

    DensityKind kind() const noexcept { return kind_; }
    double nuMin() const noexcept { return low_; }
    double nuMax() const noexcept { return low_ * ratio_; }
    double ratio() const noexcept { return ratio_; }
    double split() const noexcept { return split_; }
    /// Density value at x (0 outside K).
    double operator()(const Point& x, const Domain& domain) const;
    /// Density value at x, assuming x ∈ K.
    double valueInside(const Point& x) const noexcept { return x[0] < split_ ? low_ : low_ * ratio_; }
    const std::string& tag() const noexcept { return tag_; }

private:
    DensityKind kind_ = DensityKind::Uniform;
    double low_ = 1.0;
    double ratio_ = 1.0;
    double split_ = 0.0;
    std::string tag_ = "uniform";
};

/// n sample points, stored column-wise (dim × n).
struct PointCloud {
    Eigen::MatrixXd points;
    std::uint64_t seed = 0;
    std::string domainTag;

    int dim() const noexcept { return static_cast<int>(points.rows()); }
    std::size_t size() const noexcept { return static_cast<std::size_t>(points.cols()); }
    Point point(std::size_t i) const { return points.col(static_cast<Eigen::Index>(i)); }
};

/// Draw n i.i.d. points by rejection against the bounding box.
PointCloud sample(const Domain& domain, const DensitySpec& density, std::size_t n, std::uint64_t seed);

struct CoverageResult {
    bool covered = false;
    std::optional<Point> witness;
    /// A covered verdict guarantees K ⊆ ⋃ B(X_i, certifiedRadius).
    double certifiedRadius = 0.0;
    std::size_t gridPoints = 0;
};

/// Check K ⊆ ⋃ B̄(X_i, r) on the grid of pitch gridStep anchored at the
/// lower bounding-box corner. Requires gridStep ≤ r/4.
CoverageResult checkCoverage(const PointCloud& cloud, const Domain& domain, double r, double gridStep);

/// Lattice points of pitch `step` inside K, in lexicographic grid order
/// (last coordinate fastest).
std::vector<Point> gridPointsIn(const Domain& domain, double step);

/// `dim,<d>` header then one comma-separated point per line.
void writeCloudCsv(std::ostream& out, const PointCloud& cloud);
PointCloud readCloudCsv(std::istream& in);

}  // namespace vrlab
