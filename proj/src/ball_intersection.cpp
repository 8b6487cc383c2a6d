#include "vrlab/ball_intersection.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>

#include "vrlab/error.hpp"
#include "vrlab/rng.hpp"

namespace vrlab {

namespace {

constexpr std::size_t kMaxCenteringSteps = 60;
constexpr double kBarrierGrowth = 40.0;
constexpr double kGapTolerance = 1e-10;

}  // namespace

struct DepthSolver::Problem {
    std::span<const Ball> cones;
    std::vector<Halfspace> halfspaces;
    std::vector<Ball> outer;
    Eigen::Index dim = 0;
    double scale = 1.0;

    std::size_t constraintCount() const { return cones.size() + halfspaces.size() + outer.size(); }

    // Barrier objective tau * (-t) - Σ log(slack); +inf outside the interior.
    double evaluate(const Eigen::VectorXd& y, double tau, Eigen::VectorXd* grad, Eigen::MatrixXd* hess) const
    {
        const Eigen::Index d = dim;
        const double* x = y.data();
        const double t = y[d];
        double f = -tau * t;
        if (grad) {
            grad->setZero();
            (*grad)[d] = -tau;
        }
        if (hess) hess->setZero();
        double* g = grad ? grad->data() : nullptr;
        double* H = hess ? hess->data() : nullptr;
        const Eigen::Index n = d + 1;
        double dq[16];
        for (const auto& b : cones) {
            const double a = b.radius - t;
            if (!(a > 0.0)) return std::numeric_limits<double>::infinity();
            double r2 = 0.0;
            for (Eigen::Index k = 0; k < d; ++k) {
                const double diff = x[k] - b.center[k];
                dq[k] = -2.0 * diff;
                r2 += diff * diff;
            }
            dq[d] = -2.0 * a;
            const double q = a * a - r2;
            if (!(q > 0.0)) return std::numeric_limits<double>::infinity();
            f -= std::log(q);
            if (!g) continue;
            const double iq = 1.0 / q;
            for (Eigen::Index k = 0; k < n; ++k) g[k] -= dq[k] * iq;
            if (!H) continue;
            const double iq2 = iq * iq;
            for (Eigen::Index j = 0; j < n; ++j)
                for (Eigen::Index k = 0; k < n; ++k) H[j * n + k] += dq[j] * dq[k] * iq2;
            for (Eigen::Index k = 0; k < d; ++k) H[k * n + k] += 2.0 * iq;
            H[d * n + d] -= 2.0 * iq;
        }
        for (const auto& h : halfspaces) {
            double q = h.offset;
            for (Eigen::Index k = 0; k < d; ++k) q -= h.normal[k] * x[k];
            if (!(q > 0.0)) return std::numeric_limits<double>::infinity();
            f -= std::log(q);
            if (!g) continue;
            const double iq = 1.0 / q;
            for (Eigen::Index k = 0; k < d; ++k) g[k] += h.normal[k] * iq;
            if (!H) continue;
            for (Eigen::Index j = 0; j < d; ++j)
                for (Eigen::Index k = 0; k < d; ++k) H[j * n + k] += h.normal[j] * h.normal[k] * iq * iq;
        }
        for (const auto& b : outer) {
            double r2 = 0.0;
            for (Eigen::Index k = 0; k < d; ++k) {
                dq[k] = x[k] - b.center[k];
                r2 += dq[k] * dq[k];
            }
            const double q = b.radius * b.radius - r2;
            if (!(q > 0.0)) return std::numeric_limits<double>::infinity();
            f -= std::log(q);
            if (!g) continue;
            const double iq = 1.0 / q;
            for (Eigen::Index k = 0; k < d; ++k) g[k] += 2.0 * dq[k] * iq;
            if (!H) continue;
            for (Eigen::Index j = 0; j < d; ++j)
                for (Eigen::Index k = 0; k < d; ++k) H[j * n + k] += 4.0 * dq[j] * dq[k] * iq * iq;
            for (Eigen::Index k = 0; k < d; ++k) H[k * n + k] += 2.0 * iq;
        }
        return f;
    }

    bool strictlyFeasible(const Point& x) const
    {
        for (const auto& h : halfspaces)
            if (!(h.normal.dot(x) < h.offset)) return false;
        for (const auto& b : outer)
            if (!((x - b.center).norm() < b.radius)) return false;
        return true;
    }
};

double depthAt(const Point& x, std::span<const Ball> balls)
{
    double d = std::numeric_limits<double>::infinity();
    for (const auto& b : balls) d = std::min(d, b.radius - (x - b.center).norm());
    return d;
}

DepthSolver::DepthSolver(const Domain& domain, std::size_t newtonBudget, std::uint64_t seed)
    : domain_(domain), region_(domain.convexPart()), budget_(newtonBudget), seed_(seed)
{
    if (!domain.isConvex()) {
        const int d = domain.dim();
        const double per = d <= 2 ? 48.0 : (d == 3 ? 14.0 : 6.0);
        const double step = (domain.upper() - domain.lower()).maxCoeff() / per;
        for (auto& p : gridPointsIn(domain, step))
            if (domain.clearance(p) > 0.05 * step) anchors_.push_back(std::move(p));
        if (domain.clearance(domain.incenter()) > 0.0) anchors_.push_back(domain.incenter());
    }
}

DepthResult DepthSolver::solveRestricted(const Problem& p, const Point& start, const DepthQuery& query) const
{
    const Eigen::Index n = p.dim + 1;
    Eigen::VectorXd y(n);
    y.head(p.dim) = start;
    y[p.dim] = depthAt(start, p.cones) - p.scale;

    DepthResult out;
    out.x = start;
    out.depth = depthAt(start, p.cones);
    out.starts = 1;
    if (out.depth >= query.stopAbove) {
        out.stoppedEarly = true;
        out.converged = true;
        return out;
    }

    const double m = static_cast<double>(p.constraintCount());
    Eigen::VectorXd grad(n), step(n), trial(n);
    Eigen::MatrixXd hess(n, n);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(n);
    double tau = 1.0 / p.scale;
    while (true) {
        for (std::size_t it = 0; it < kMaxCenteringSteps; ++it) {
            const double f = p.evaluate(y, tau, &grad, &hess);
            ldlt.compute(hess);
            step = -ldlt.solve(grad);
            const double decrement = -grad.dot(step);
            if (!(decrement > 1e-12)) break;
            double s = 1.0;
            bool accepted = false;
            while (s > 1e-14) {
                trial = y + s * step;
                const double ft = p.evaluate(trial, tau, nullptr, nullptr);
                if (ft <= f - 0.25 * s * decrement) {
                    accepted = true;
                    break;
                }
                s *= 0.5;
            }
            if (!accepted) break;
            y = trial;
            if (++out.newtonSteps > budget_) return out;
            const Point x = y.head(p.dim);
            if (const double dep = depthAt(x, p.cones); dep > out.depth && domain_.contains(x, 1e-9)) {
                out.depth = dep;
                out.x = x;
                if (dep >= query.stopAbove) {
                    out.stoppedEarly = true;
                    out.converged = true;
                    return out;
                }
            }
            if (decrement < 1e-9) break;
        }
        const double gap = m / tau;
        if (y[p.dim] + 1.5 * gap < query.stopBelow) {
            out.stoppedEarly = true;
            out.converged = true;
            return out;
        }
        if (gap < kGapTolerance * p.scale) break;
        tau *= kBarrierGrowth;
    }
    out.converged = true;
    return out;
}

DepthResult DepthSolver::solve(std::span<const Ball> balls, const DepthQuery& query) const
{
    if (balls.empty()) throw PreconditionError("depth: need at least one ball");
    if (domain_.dim() > 15) throw PreconditionError("depth: dimension above 15 not supported");
    Problem p;
    p.cones = balls;
    p.dim = domain_.dim();
    p.halfspaces = region_.halfspaces;
    p.outer = region_.balls;
    p.scale = 0.0;
    for (const auto& b : balls) p.scale = std::max(p.scale, b.radius);
    if (!(p.scale > 0.0)) p.scale = 1.0;

    if (domain_.isConvex()) return solveRestricted(p, domain_.incenter(), query);

    const Ball hole = *domain_.hole();
    std::vector<Point> dirs;
    auto addDir = [&](Point u) {
        const double len = u.norm();
        if (!(len > 1e-12)) return;
        u /= len;
        for (const auto& v : dirs)
            if (u.dot(v) > 1.0 - 1e-9) return;
        dirs.push_back(std::move(u));
    };
    for (const auto& b : balls) addDir(b.center - hole.center);
    {
        const Point* deepest = nullptr;
        double dep = -std::numeric_limits<double>::infinity();
        for (const auto& a : anchors_)
            if (const double da = depthAt(a, balls); da > dep) {
                dep = da;
                deepest = &a;
            }
        if (deepest) addDir(*deepest - hole.center);
    }
    for (Eigen::Index k = 0; k < p.dim; ++k) {
        Point e = Point::Zero(p.dim);
        e[k] = 1.0;
        addDir(e);
        addDir(-e);
    }
    Rng rng(seed_);
    for (int k = 0; k < 4; ++k) addDir(sampleUnitSphere(p.dim, rng));

    DepthResult best;
    std::size_t steps = 0;
    std::size_t starts = 0;
    bool allConverged = true;
    auto run = [&](const Point& u, const Point* hint) -> bool {
        Problem q = p;
        q.halfspaces.push_back({-u, -(u.dot(hole.center) + hole.radius)});
        const Point* startPt = hint && q.strictlyFeasible(*hint) ? hint : nullptr;
        double bestStart = -std::numeric_limits<double>::infinity();
        if (!startPt)
            for (const auto& a : anchors_)
                if (q.strictlyFeasible(a))
                    if (const double dep = depthAt(a, balls); dep > bestStart) {
                        bestStart = dep;
                        startPt = &a;
                    }
        if (!startPt) return false;
        DepthResult r = solveRestricted(q, *startPt, query);
        steps += r.newtonSteps;
        ++starts;
        allConverged = allConverged && r.converged;
        if (r.depth > best.depth) best = std::move(r);
        return best.depth >= query.stopAbove;
    };
    bool done = false;
    for (const auto& u : dirs)
        if ((done = run(u, nullptr))) break;
    // The optimum lies in the tangent halfspace at its own radial direction.
    for (int round = 0; !done && round < 8 && std::isfinite(best.depth); ++round) {
        const Point x = best.x;
        const double before = best.depth;
        done = run(x - hole.center, &x);
        if (best.depth <= before + 1e-12 * p.scale) break;
    }
    best.newtonSteps = steps;
    best.starts = starts;
    best.converged = allConverged;
    best.stoppedEarly = best.depth >= query.stopAbove || (best.depth < query.stopBelow && best.stoppedEarly);
    if (!std::isfinite(best.depth) && !anchors_.empty()) best.x = anchors_.front();
    return best;
}

}  // namespace vrlab
