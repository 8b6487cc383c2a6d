#pragma once

// Ball geometry behind domination in radius graphs: the set W(x, y, r) of
// points whose r-ball absorbs B(x, r) ∩ B(y, |y - x|), an explicit ball
// inside W, and a ball inside B(x, r) ∩ X for a convex set X with known
// inball.

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <sstream>

#include "vrlab/error.hpp"
#include "vrlab/rng.hpp"

namespace vrlab {

template <typename Scalar>
using PointT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Point = PointT<double>;

/// Absolute slack for closed-ball comparisons.
inline constexpr double kContainTol = 1e-12;

template <typename Scalar>
struct BallT {
    PointT<Scalar> center;
    Scalar radius{0};

    bool contains(const PointT<Scalar>& p, Scalar tol = Scalar(kContainTol)) const
    {
        return (p - center).norm() <= radius + tol;
    }
};
using Ball = BallT<double>;

/// Which containment a witness ball certifies.
enum class WitnessClaim {
    InsideW,             ///< B(center, radius) ⊆ W(x, y, r)
    InsideBallAndSet,    ///< B(center, radius) ⊆ B(x, r) ∩ X, X convex
    InsideIntersection,  ///< B(center, radius) ⊆ ⋂ B(x_i, s_i), center in K
    InsideWAndCover,     ///< B(center, radius) ⊆ W(x, y, r) ∩ ⋂ A_i
};

template <typename Scalar>
struct WitnessBallT {
    PointT<Scalar> center;
    Scalar radius{0};
    WitnessClaim claim = WitnessClaim::InsideW;
};
using WitnessBall = WitnessBallT<double>;

// ---------------------------------------------------------------------------
// sampling helpers

/// Uniform point on the unit sphere S^{d-1}.
template <typename Scalar = double>
PointT<Scalar> sampleUnitSphere(Eigen::Index dim, Rng& rng)
{
    PointT<Scalar> v(dim);
    Scalar n2;
    do {
        for (Eigen::Index k = 0; k < dim; ++k) v[k] = Scalar(rng.normal());
        n2 = v.squaredNorm();
    } while (n2 == Scalar(0));
    return v / std::sqrt(n2);
}

/// Uniform point in the open ball B(center, radius).
template <typename Derived>
PointT<typename Derived::Scalar> sampleInBall(const Eigen::MatrixBase<Derived>& center,
                                              typename Derived::Scalar radius, Rng& rng)
{
    using Scalar = typename Derived::Scalar;
    const auto dim = center.size();
    const Scalar rho = radius * Scalar(std::pow(rng.uniform(), 1.0 / static_cast<double>(dim)));
    return center + rho * sampleUnitSphere<Scalar>(dim, rng);
}

// ---------------------------------------------------------------------------
// constants

/// Radius factor of the explicit ball inside W: min(1/(10λ), 1 - sqrt(1 - 1/(100λ²))).
template <typename Scalar>
Scalar witnessDelta(Scalar lambda)
{
    const Scalar a = Scalar(1) / (Scalar(10) * lambda);
    const Scalar b = Scalar(1) - std::sqrt(Scalar(1) - Scalar(1) / (Scalar(100) * lambda * lambda));
    return std::min(a, b);
}

/// Radius factor of the inner ball: 1/(1 + 2λ).
template <typename Scalar>
Scalar innerBallDelta(Scalar lambda)
{
    return Scalar(1) / (Scalar(1) + Scalar(2) * lambda);
}

// ---------------------------------------------------------------------------
// W(x, y, r) membership

struct WMembership {
    bool member = false;
    /// No probe could be drawn from B(x, r) ∩ B(y, |y - x|); membership holds vacuously.
    bool vacuous = false;
    /// The axis pre-check alone refuted membership.
    bool precheckFailed = false;
    std::size_t probes = 0;
    std::size_t violations = 0;
};

/// Monte Carlo test of z ∈ W(x, y, r).
///
/// Checks z ∈ B̄(y, |y - x|), a deterministic necessary condition on the two
/// axial extreme points of the lens, then that `probes` uniform points of
/// B(x, r) ∩ B(y, |y - x|) all lie within r + tol of z.
template <typename Scalar>
WMembership wMembership(const PointT<Scalar>& x, const PointT<Scalar>& y, Scalar r, const PointT<Scalar>& z,
                        std::size_t probes, std::uint64_t seed, Scalar tol = Scalar(kContainTol))
{
    if (x.size() != y.size() || x.size() != z.size()) throw PreconditionError("w_contains: dimension mismatch");
    if (!(r > Scalar(0))) throw PreconditionError("w_contains: r must be positive");
    const Scalar dist = (y - x).norm();
    if (!(dist > Scalar(0))) throw PreconditionError("w_contains: degenerate input, x == y");

    WMembership out;
    if ((z - y).norm() > dist + tol) {
        out.precheckFailed = true;
        return out;
    }

    // The lens closure contains x and x + min(r, 2|y-x|)·e along the axis.
    const PointT<Scalar> axis = (y - x) / dist;
    const PointT<Scalar> far = x + std::min(r, Scalar(2) * dist) * axis;
    if ((z - x).norm() > r + tol || (z - far).norm() > r + tol) {
        out.precheckFailed = true;
        return out;
    }

    const bool xSmaller = r <= dist;
    const PointT<Scalar>& c = xSmaller ? x : y;
    const Scalar rad = xSmaller ? r : dist;
    Rng rng(seed);
    const std::size_t maxAttempts = 1000 * std::max<std::size_t>(probes, 1);
    std::size_t attempts = 0;
    while (out.probes < probes && attempts < maxAttempts) {
        ++attempts;
        const PointT<Scalar> u = sampleInBall(c, rad, rng);
        if ((u - x).norm() >= r || (u - y).norm() >= dist) continue;
        ++out.probes;
        if ((u - z).norm() > r + tol) ++out.violations;
    }
    out.vacuous = out.probes == 0 && probes > 0;
    out.member = out.violations == 0;
    return out;
}

template <typename Scalar>
bool wContains(const PointT<Scalar>& x, const PointT<Scalar>& y, Scalar r, const PointT<Scalar>& z,
               std::size_t probes = 4096, std::uint64_t seed = 0, Scalar tol = Scalar(kContainTol))
{
    return wMembership(x, y, r, z, probes, seed, tol).member;
}

/// Largest distance from z to a point of the lens B(x, r) ∩ B(y, |y - x|).
/// Exact: the maximum sits at a cap antipode or on the rim circle.
template <typename Scalar>
Scalar lensReach(const PointT<Scalar>& x, const PointT<Scalar>& y, Scalar r, const PointT<Scalar>& z)
{
    using std::sqrt;
    const Scalar D = (y - x).norm();
    if (!(D > Scalar(0))) throw PreconditionError("lens_reach: degenerate input, x == y");
    if (!(r > Scalar(0))) throw PreconditionError("lens_reach: r must be positive");
    const Scalar dy = (z - y).norm();
    if (r >= 2 * D) return dy + D;
    const Scalar dx = (z - x).norm();
    const Scalar slack = Scalar(1e-12) * (D + r);
    Scalar best = 0;
    const PointT<Scalar> onX = dx > Scalar(0) ? PointT<Scalar>(x + r * (x - z) / dx) : PointT<Scalar>(x + r * (y - x) / D);
    if ((onX - y).norm() <= D + slack) best = std::max(best, dx + r);
    const PointT<Scalar> onY = dy > Scalar(0) ? PointT<Scalar>(y + D * (y - z) / dy) : PointT<Scalar>(x);
    if ((onY - x).norm() <= r + slack) best = std::max(best, dy + D);
    const PointT<Scalar> e = (y - x) / D;
    const Scalar a = r * r / (2 * D);
    const Scalar rim = sqrt(std::max(Scalar(0), r * r - a * a));
    const Scalar along = (z - x).dot(e);
    const Scalar off = sqrt(std::max(Scalar(0), (z - x).squaredNorm() - along * along));
    const Scalar h = along - a;
    return std::max(best, Scalar(sqrt(h * h + (off + rim) * (off + rim))));
}

/// A radius ρ with B(z, ρ) ⊆ W(x, y, r); negative when z lies outside.
template <typename Scalar>
Scalar wInradius(const PointT<Scalar>& x, const PointT<Scalar>& y, Scalar r, const PointT<Scalar>& z)
{
    return std::min(r - lensReach(x, y, r, z), (y - x).norm() - (z - y).norm());
}

// ---------------------------------------------------------------------------
// explicit witness balls

/// Ball B(z, δ₁(λ)·r) ⊆ W(x, y, r) with z on the segment [x, y].
///
/// Requires r ≤ |x - y| ≤ λ r. The center sits at distance r/(10λ) from x
/// towards y.
template <typename Scalar>
WitnessBallT<Scalar> wWitnessBall(const PointT<Scalar>& x, const PointT<Scalar>& y, Scalar r, Scalar lambda)
{
    if (x.size() != y.size()) throw PreconditionError("w_witness_ball: dimension mismatch");
    if (!(r > Scalar(0))) throw PreconditionError("w_witness_ball: r must be positive");
    if (!(lambda >= Scalar(1))) throw PreconditionError("w_witness_ball: lambda must be >= 1");
    const Scalar dist = (y - x).norm();
    const Scalar slack = Scalar(kContainTol) * std::max(Scalar(1), r);
    if (dist < r - slack) {
        std::ostringstream msg;
        msg << "w_witness_ball: violated r <= |x - y| (r = " << r << ", |x - y| = " << dist << ")";
        throw PreconditionError(msg.str());
    }
    if (dist > lambda * r + slack) {
        std::ostringstream msg;
        msg << "w_witness_ball: violated |x - y| <= lambda * r (|x - y| = " << dist << ", lambda * r = " << lambda * r
            << ")";
        throw PreconditionError(msg.str());
    }
    WitnessBallT<Scalar> out;
    out.center = x + (r / (Scalar(10) * lambda)) * (y - x) / dist;
    out.radius = witnessDelta(lambda) * r;
    out.claim = WitnessClaim::InsideW;
    return out;
}

/// Ball of radius r/(1 + 2λ) inside B(x, r) ∩ X.
///
/// The caller vouches that X is convex, contains x, satisfies
/// diam(X) ≤ λ·inballRadius and contains B(inballCenter, inballRadius).
/// The construction shrinks B(inballCenter, inballRadius/2) towards x by the
/// factor μ = r / (inballRadius·(1/2 + λ)).
template <typename Scalar>
WitnessBallT<Scalar> innerBall(const PointT<Scalar>& x, const PointT<Scalar>& inballCenter, Scalar inballRadius,
                               Scalar r, Scalar lambda)
{
    if (x.size() != inballCenter.size()) throw PreconditionError("inner_ball: dimension mismatch");
    if (!(inballRadius > Scalar(0))) throw PreconditionError("inner_ball: inball radius must be positive");
    if (!(r > Scalar(0))) throw PreconditionError("inner_ball: r must be positive");
    const Scalar slack = Scalar(kContainTol) * std::max(Scalar(1), lambda * inballRadius);
    const Scalar offset = (x - inballCenter).norm();
    if (offset > lambda * inballRadius + slack) {
        std::ostringstream msg;
        msg << "inner_ball: |x - incenter| = " << offset << " exceeds lambda * inradius = " << lambda * inballRadius
            << ", so diam(X) <= lambda * inr(X) cannot hold";
        throw PreconditionError(msg.str());
    }
    if (r > lambda * inballRadius + slack) {
        std::ostringstream msg;
        msg << "inner_ball: r = " << r << " exceeds lambda * inradius = " << lambda * inballRadius
            << ", so r <= diam(X) cannot hold";
        throw PreconditionError(msg.str());
    }
    const Scalar mu = r / (inballRadius * (Scalar(0.5) + lambda));
    WitnessBallT<Scalar> out;
    out.center = (Scalar(1) - mu) * x + mu * inballCenter;
    out.radius = innerBallDelta(lambda) * r;
    out.claim = WitnessClaim::InsideBallAndSet;
    return out;
}

}  // namespace vrlab
