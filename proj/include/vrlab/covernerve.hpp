#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vrlab/ball_intersection.hpp"
#include "vrlab/dismantle.hpp"
#include "vrlab/domains.hpp"
#include "vrlab/proximity.hpp"

namespace vrlab {

using IndexSet = std::vector<int>;

struct CoverOptions {
    /// Pitch of the candidate and coverage grid; 0 means r / 10.
    double gridStep = 0.0;
    /// Random candidate centers scanned after the grid.
    std::size_t sampledCandidates = 256;
    std::uint64_t seed = 0;
    /// Newton steps allowed per intersection solve.
    std::size_t newtonBudget = 4000;
    /// Index sets examined per pass before giving up.
    std::size_t faceBudget = 2'000'000;
};

struct FaceDepth {
    IndexSet face;
    /// Lower bound on the depth of K ∩ ⋂_{i∈face} B(x_i, s_i).
    double depth = 0.0;
};

/// Balls B(x_i, s_i) around an r-packing of K, radii inflated so that every
/// nonempty intersection with K is at least epsilon·r deep.
struct Cover {
    std::shared_ptr<const Domain> domain;
    std::vector<Point> centers;
    std::vector<double> radii;
    double r = 0.0;
    double epsilon = 0.0;
    std::vector<double> epsilonsTried;

    double gridStep = 0.0;
    std::size_t gridPoints = 0;
    /// Centers pairwise more than 2r apart.
    bool packingDisjoint = false;
    /// Every grid point within 2r of a center.
    bool covers2r = false;
    /// max_i #{j : |x_i - x_j| <= 8r}, counting i itself.
    std::size_t maxLocality = 0;

    /// Inflated index sets in the order they were processed.
    std::vector<IndexSet> inflated;
    std::size_t passes = 0;
    /// Nonempty faces of the final pass with their depth bounds, in (size, lex) order.
    std::vector<FaceDepth> faces;

    std::size_t size() const noexcept { return centers.size(); }
    std::vector<Ball> balls() const;
    std::vector<Ball> balls(std::span<const int> I) const;
};

/// Some s_i would exceed 4r.
class CoverOverflow : public std::runtime_error {
public:
    CoverOverflow(IndexSet face, double epsilon);
    const IndexSet& face() const noexcept { return face_; }
    double epsilon() const noexcept { return epsilon_; }

private:
    IndexSet face_;
    double epsilon_;
};

class InnerBallBudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Greedy packing, then s_i = 3r and inflation by epsilon·r of every index set
/// whose intersection with K is nonempty but less than epsilon·r deep.
Cover buildCover(const Domain& domain, double r, double epsilon, const CoverOptions& options = {});

/// buildCover with epsilon halved after every overflow, down to `floor`.
Cover buildCoverAdaptive(const Domain& domain, double r, const CoverOptions& options = {}, double epsilon = 0.05,
                         double floor = 0x1p-20);

/// Deepest point of K ∩ ⋂_{i∈I} B(centers_i, radii_i); the ball around it of
/// the returned radius lies in every B(centers_i, radii_i). None when the
/// depth is below target.
std::optional<WitnessBall> innerBallSearch(const DepthSolver& solver, std::span<const Point> centers,
                                           std::span<const double> radii, std::span<const int> I, double target);
std::optional<WitnessBall> innerBallSearch(const Domain& domain, std::span<const Point> centers,
                                           std::span<const double> radii, std::span<const int> I, double target,
                                           std::size_t budget = 4000);

/// Faces of the nerve of {K ∩ B(x_i, s_i)}: index sets whose intersection is
/// at least minDepth deep, in (size, lex) order.
std::vector<FaceDepth> nerveFaces(const Cover& cover, const DepthSolver& solver, double minDepth,
                                  std::size_t faceBudget = 2'000'000);

/// Number of faces of the nerve of {B(x_i, radius)} (K ignored).
std::size_t countBallNerveFaces(std::span<const Point> centers, double radius, std::size_t faceBudget = 2'000'000);

struct VerifyOptions {
    unsigned threads = 1;
    /// Also test the chain order: points by distance from the anchor, the farthest dominated at every stage.
    bool anchoredChain = true;
    /// Maximal cliques examined per vertex when the neighborhood shortcut fails.
    std::size_t cliqueBudget = 200'000;
};

struct FaceCheck {
    IndexSet face;
    bool inNerveA = false;
    bool inNerveDelta = false;
    std::size_t points = 0;
    /// Depth of K ∩ ⋂ B(x_i, s_i) when computed.
    std::optional<double> depth;
    std::optional<bool> dismantled;
    std::size_t residual = 0;
    std::optional<VertexId> anchor;
    std::optional<bool> anchoredChain;
    std::string failure;
};

struct NerveReport {
    bool conditionA = false;
    bool conditionB = false;
    bool conditionC = false;
    std::vector<IndexSet> nerveA;
    std::vector<IndexSet> nerveDelta;
    /// Union of both nerves in (size, lex) order.
    std::vector<FaceCheck> faces;
    /// Vertices with a maximal clique outside every A_i.
    std::vector<VertexId> uncoveredVertices;
    std::size_t fallbackVertices = 0;
    double epsilon = 0.0;
};

/// Conditions on A_i = B(x_i, s_i) ∩ K and the induced subcomplexes Δ_i:
/// (a) every maximal clique lies in a single A_i, (b) every nonempty ⋂Δ_i
/// dismantles to a point, (c) the nerves of (A_i) and (Δ_i) coincide.
NerveReport verifyNerve(const PointCloud& cloud, const GeometricGraph& graph, const Cover& cover,
                        const VerifyOptions& options = {});

/// Ball in W(x, y, r) ∩ ⋂_{i∈I} A_i near the segment [x, y]; none if no
/// candidate survives the probes.
std::optional<WitnessBall> smoothConditionB5(const Cover& cover, const DepthSolver& solver, std::span<const int> I,
                                             const Point& x, const Point& y, std::size_t probes = 64,
                                             std::uint64_t seed = 0);

nlohmann::json toJson(const Cover& cover);
nlohmann::json toJson(const NerveReport& report);

}  // namespace vrlab
