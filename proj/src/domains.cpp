#include "vrlab/domains.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "vrlab/format.hpp"
#include "vrlab/spatial_grid.hpp"

namespace vrlab {

namespace {

double unitBallVolume(int d)
{
    return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

// Calls f(indices) for every k-subset of {0, ..., m-1} in lexicographic order.
template <typename F>
void forEachSubset(int m, int k, F&& f)
{
    if (k > m || k <= 0) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<Point> polytopeVertices(const Eigen::MatrixXd& A, const Eigen::VectorXd& b)
{
    const int m = static_cast<int>(A.rows());
    const int d = static_cast<int>(A.cols());
    std::vector<Point> verts;
    forEachSubset(m, d, [&](const std::vector<int>& rows) {
        Eigen::MatrixXd M(d, d);
        Eigen::VectorXd rhs(d);
        for (int i = 0; i < d; ++i) {
            M.row(i) = A.row(rows[static_cast<std::size_t>(i)]);
            rhs[i] = b[rows[static_cast<std::size_t>(i)]];
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
        if (!lu.isInvertible()) return;
        const Point v = lu.solve(rhs);
        const Eigen::VectorXd slack = b - A * v;
        if (slack.minCoeff() >= -1e-9 * (1.0 + b.cwiseAbs().maxCoeff())) verts.push_back(v);
    });
    return verts;
}

// Largest ball {x : a_j·x + t|a_j| <= b_j}: best vertex of the (d+1)-dim LP.
std::pair<Point, double> chebyshevCenter(const Eigen::MatrixXd& A, const Eigen::VectorXd& b)
{
    const int m = static_cast<int>(A.rows());
    const int d = static_cast<int>(A.cols());
    Eigen::MatrixXd Aext(m, d + 1);
    Aext.leftCols(d) = A;
    Aext.col(d) = A.rowwise().norm();
    double bestT = -1.0;
    Point best = Point::Zero(d);
    forEachSubset(m, d + 1, [&](const std::vector<int>& rows) {
        Eigen::MatrixXd M(d + 1, d + 1);
        Eigen::VectorXd rhs(d + 1);
        for (int i = 0; i <= d; ++i) {
            M.row(i) = Aext.row(rows[static_cast<std::size_t>(i)]);
            rhs[i] = b[rows[static_cast<std::size_t>(i)]];
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
        if (!lu.isInvertible()) return;
        const Eigen::VectorXd v = lu.solve(rhs);
        if ((b - Aext * v).minCoeff() < -1e-9 * (1.0 + b.cwiseAbs().maxCoeff())) return;
        if (v[d] > bestT) {
            bestT = v[d];
            best = v.head(d);
        }
    });
    return {best, bestT};
}

double boxClearance(const Point& x, const Point& lo, const Point& hi)
{
    return std::min((x - lo).minCoeff(), (hi - x).minCoeff());
}

// Volume of {x in K : x[0] < split} by midpoint quadrature on the bounding box.
double gridVolume(const Domain& K, double split, bool below)
{
    const int d = K.dim();
    const int per = d == 1 ? 1 << 16 : d == 2 ? 2048 : d == 3 ? 160 : 12;
    const Point lo = K.lower();
    const Point ext = K.upper() - K.lower();
    double cellVol = 1.0;
    for (int k = 0; k < d; ++k) cellVol *= ext[k] / per;
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    Point x(d);
    double vol = 0.0;
    while (true) {
        for (int k = 0; k < d; ++k) x[k] = lo[k] + (idx[static_cast<std::size_t>(k)] + 0.5) * ext[k] / per;
        if (K.contains(x, 0.0) && ((x[0] < split) == below)) vol += cellVol;
        int k = 0;
        while (k < d && ++idx[static_cast<std::size_t>(k)] == per) idx[static_cast<std::size_t>(k++)] = 0;
        if (k == d) break;
    }
    return vol;
}

std::string joinDoubles(const Point& p, char sep = ',')
{
    std::string s;
    for (Eigen::Index k = 0; k < p.size(); ++k) {
        if (k) s += sep;
        s += formatDouble(p[k]);
    }
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// construction

Domain Domain::box(Point lo, Point hi)
{
    if (lo.size() != hi.size() || lo.size() == 0) throw PreconditionError("box: dimension mismatch");
    if ((hi - lo).minCoeff() <= 0.0) throw PreconditionError("box: empty interior");
    Domain K;
    K.kind_ = DomainKind::Box;
    K.boxLo_ = std::move(lo);
    K.boxHi_ = std::move(hi);
    K.tag_ = "box:" + joinDoubles(K.boxLo_, ' ') + ";" + joinDoubles(K.boxHi_, ' ');
    K.finalize();
    return K;
}

Domain Domain::unitCube(int dim)
{
    if (dim < 1) throw PreconditionError("unit cube: dim must be >= 1");
    Domain K = box(Point::Zero(dim), Point::Ones(dim));
    K.tag_ = "box";
    return K;
}

Domain Domain::ball(Point center, double radius)
{
    if (center.size() == 0) throw PreconditionError("ball: dim must be >= 1");
    if (!(radius > 0.0)) throw PreconditionError("ball: radius must be positive");
    Domain K;
    K.kind_ = DomainKind::Ball;
    K.center_ = std::move(center);
    K.outer_ = radius;
    K.tag_ = "ball:" + formatDouble(radius);
    K.finalize();
    return K;
}

Domain Domain::polytope(Eigen::MatrixXd A, Eigen::VectorXd b)
{
    if (A.rows() != b.size() || A.cols() == 0) throw PreconditionError("polytope: shape mismatch");
    if (A.rows() <= A.cols()) throw PreconditionError("polytope: needs more than dim halfspaces to be bounded");
    Domain K;
    K.kind_ = DomainKind::Polytope;
    K.A_ = std::move(A);
    K.b_ = std::move(b);
    K.tag_ = "polytope";
    K.finalize();
    return K;
}

Domain Domain::annulus(Point center, double inner, double outer)
{
    if (center.size() == 0) throw PreconditionError("annulus: dim must be >= 1");
    if (!(inner > 0.0 && outer > inner)) throw PreconditionError("annulus: need 0 < inner < outer");
    Domain K;
    K.kind_ = DomainKind::Annulus;
    K.center_ = std::move(center);
    K.inner_ = inner;
    K.outer_ = outer;
    K.tag_ = "annulus:" + formatDouble(inner) + "," + formatDouble(outer);
    K.finalize();
    return K;
}

Domain Domain::boxMinusBall(Point lo, Point hi, Point holeCenter, double holeRadius)
{
    if (lo.size() != hi.size() || lo.size() != holeCenter.size() || lo.size() == 0)
        throw PreconditionError("box-minus-ball: dimension mismatch");
    if ((hi - lo).minCoeff() <= 0.0) throw PreconditionError("box-minus-ball: empty box");
    if (!(holeRadius > 0.0) || boxClearance(holeCenter, lo, hi) <= holeRadius)
        throw PreconditionError("box-minus-ball: hole must lie strictly inside the box");
    Domain K;
    K.kind_ = DomainKind::BoxMinusBall;
    K.boxLo_ = std::move(lo);
    K.boxHi_ = std::move(hi);
    K.center_ = std::move(holeCenter);
    K.inner_ = holeRadius;
    K.tag_ = "box-minus-ball:" + formatDouble(holeRadius);
    K.finalize();
    return K;
}

Domain Domain::parse(std::string_view spec, int dim)
{
    if (dim < 1) throw ConfigError("domain: dim must be >= 1");
    const auto colon = spec.find(':');
    const std::string_view name = spec.substr(0, colon);
    const std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    auto numbers = [&]() {
        std::vector<double> v;
        if (!args.empty())
            for (auto part : splitView(args, ',')) v.push_back(parseDouble(part));
        return v;
    };
    try {
        if (name == "box" || name == "square" || name == "cube") {
            const auto v = numbers();
            if (v.empty()) return unitCube(dim);
            Domain K = box(Point::Zero(dim), Point::Constant(dim, v.at(0)));
            K.tag_ = "box:" + formatDouble(v[0]);
            return K;
        }
        if (name == "ball" || name == "disk") {
            const auto v = numbers();
            return ball(Point::Zero(dim), v.empty() ? 1.0 : v.at(0));
        }
        if (name == "annulus") {
            auto v = numbers();
            if (v.empty()) v = {0.5, 1.0};
            if (v.size() != 2) throw ConfigError("annulus needs inner,outer");
            return annulus(Point::Zero(dim), v[0], v[1]);
        }
        if (name == "box-minus-ball") {
            const auto v = numbers();
            return boxMinusBall(Point::Zero(dim), Point::Ones(dim), Point::Constant(dim, 0.5), v.empty() ? 0.25 : v.at(0));
        }
        if (name == "simplex") {
            Eigen::MatrixXd A(dim + 1, dim);
            Eigen::VectorXd b = Eigen::VectorXd::Zero(dim + 1);
            A.topRows(dim) = -Eigen::MatrixXd::Identity(dim, dim);
            A.row(dim).setOnes();
            b[dim] = 1.0;
            Domain K = polytope(A, b);
            K.tag_ = "simplex";
            return K;
        }
        if (name == "polygon") {
            if (dim != 2) throw ConfigError("polygon domains are 2-D");
            const auto v = numbers();
            const int k = v.empty() ? 6 : static_cast<int>(v.at(0));
            if (k < 3) throw ConfigError("polygon needs at least 3 sides");
            Eigen::MatrixXd A(k, 2);
            Eigen::VectorXd b(k);
            const double apothem = std::cos(std::numbers::pi / k);
            for (int j = 0; j < k; ++j) {
                const double a = 2.0 * std::numbers::pi * (j + 0.5) / k;
                A(j, 0) = std::cos(a);
                A(j, 1) = std::sin(a);
                b[j] = apothem;
            }
            Domain K = polytope(A, b);
            K.tag_ = "polygon:" + std::to_string(k);
            return K;
        }
    } catch (const PreconditionError& e) {
        throw ConfigError(std::string("domain '") + std::string(spec) + "': " + e.what());
    }
    throw ConfigError("unknown domain '" + std::string(spec) + "'");
}

void Domain::finalize()
{
    switch (kind_) {
    case DomainKind::Box: {
        lo_ = boxLo_;
        hi_ = boxHi_;
        diameter_ = (hi_ - lo_).norm();
        inradius_ = 0.5 * (hi_ - lo_).minCoeff();
        incenter_ = 0.5 * (hi_ + lo_);
        volume_ = (hi_ - lo_).prod();
        break;
    }
    case DomainKind::Ball: {
        const int d = static_cast<int>(center_.size());
        lo_ = center_.array() - outer_;
        hi_ = center_.array() + outer_;
        diameter_ = 2.0 * outer_;
        inradius_ = outer_;
        incenter_ = center_;
        volume_ = unitBallVolume(d) * std::pow(outer_, d);
        break;
    }
    case DomainKind::Annulus: {
        const int d = static_cast<int>(center_.size());
        lo_ = center_.array() - outer_;
        hi_ = center_.array() + outer_;
        diameter_ = 2.0 * outer_;
        inradius_ = 0.5 * (outer_ - inner_);
        incenter_ = center_;
        incenter_[0] += 0.5 * (outer_ + inner_);
        volume_ = unitBallVolume(d) * (std::pow(outer_, d) - std::pow(inner_, d));
        break;
    }
    case DomainKind::BoxMinusBall: {
        const int d = static_cast<int>(boxLo_.size());
        lo_ = boxLo_;
        hi_ = boxHi_;
        diameter_ = (hi_ - lo_).norm();
        volume_ = (hi_ - lo_).prod() - unitBallVolume(d) * std::pow(inner_, d);
        // Largest inscribed ball: coarse grid scan, then compass refinement.
        const int per = d <= 3 ? 64 : 8;
        std::vector<int> idx(static_cast<std::size_t>(d), 0);
        Point x(d);
        double best = -1.0;
        Point bestX = lo_;
        while (true) {
            for (int k = 0; k < d; ++k) x[k] = lo_[k] + (idx[static_cast<std::size_t>(k)] + 0.5) * (hi_[k] - lo_[k]) / per;
            if (const double c = clearance(x); c > best) {
                best = c;
                bestX = x;
            }
            int k = 0;
            while (k < d && ++idx[static_cast<std::size_t>(k)] == per) idx[static_cast<std::size_t>(k++)] = 0;
            if (k == d) break;
        }
        double step = (hi_ - lo_).maxCoeff() / per;
        while (step > 1e-12) {
            bool improved = false;
            for (int k = 0; k < d; ++k)
                for (double sgn : {-1.0, 1.0}) {
                    Point y = bestX;
                    y[k] += sgn * step;
                    if (const double c = clearance(y); c > best) {
                        best = c;
                        bestX = y;
                        improved = true;
                    }
                }
            if (!improved) step *= 0.5;
        }
        inradius_ = best;
        incenter_ = bestX;
        break;
    }
    case DomainKind::Polytope: {
        const int d = static_cast<int>(A_.cols());
        const auto verts = polytopeVertices(A_, b_);
        if (static_cast<int>(verts.size()) < d + 1) throw PreconditionError("polytope: unbounded or degenerate");
        lo_ = verts.front();
        hi_ = verts.front();
        diameter_ = 0.0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            lo_ = lo_.cwiseMin(verts[i]);
            hi_ = hi_.cwiseMax(verts[i]);
            for (std::size_t j = i + 1; j < verts.size(); ++j) diameter_ = std::max(diameter_, (verts[i] - verts[j]).norm());
        }
        auto [c, t] = chebyshevCenter(A_, b_);
        if (!(t > 0.0)) throw PreconditionError("polytope: empty interior");
        incenter_ = c;
        inradius_ = t;
        // Unbounded directions would leave the bounding box open: probe well outside the vertex hull.
        for (int k = 0; k < d; ++k)
            for (double sgn : {-1.0, 1.0}) {
                Point far = incenter_;
                far[k] += sgn * 4.0 * (diameter_ + 1.0);
                if (contains(far, 0.0)) throw PreconditionError("polytope: unbounded");
            }
        if (d == 2) {
            std::vector<Point> v = verts;
            Point mid = Point::Zero(2);
            for (const auto& p : v) mid += p;
            mid /= static_cast<double>(v.size());
            std::sort(v.begin(), v.end(), [&](const Point& a, const Point& b) {
                return std::atan2(a[1] - mid[1], a[0] - mid[0]) < std::atan2(b[1] - mid[1], b[0] - mid[0]);
            });
            double area = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                const Point& p = v[i];
                const Point& q = v[(i + 1) % v.size()];
                area += p[0] * q[1] - p[1] * q[0];
            }
            volume_ = 0.5 * std::abs(area);
        } else {
            volume_ = gridVolume(*this, std::numeric_limits<double>::infinity(), true);
        }
        break;
    }
    }
}

// ---------------------------------------------------------------------------
// queries

bool Domain::contains(const Point& x, double tol) const
{
    switch (kind_) {
    case DomainKind::Box:
        return (x - boxLo_).minCoeff() >= -tol && (boxHi_ - x).minCoeff() >= -tol;
    case DomainKind::Ball:
        return (x - center_).norm() <= outer_ + tol;
    case DomainKind::Annulus: {
        const double rho = (x - center_).norm();
        return rho <= outer_ + tol && rho >= inner_ - tol;
    }
    case DomainKind::BoxMinusBall:
        return (x - boxLo_).minCoeff() >= -tol && (boxHi_ - x).minCoeff() >= -tol && (x - center_).norm() >= inner_ - tol;
    case DomainKind::Polytope:
        return ((A_ * x - b_).array() <= tol * A_.rowwise().norm().array()).all();
    }
    return false;
}

double Domain::clearance(const Point& x) const
{
    switch (kind_) {
    case DomainKind::Box:
        return boxClearance(x, boxLo_, boxHi_);
    case DomainKind::Ball:
        return outer_ - (x - center_).norm();
    case DomainKind::Annulus: {
        const double rho = (x - center_).norm();
        return std::min(outer_ - rho, rho - inner_);
    }
    case DomainKind::BoxMinusBall:
        return std::min(boxClearance(x, boxLo_, boxHi_), (x - center_).norm() - inner_);
    case DomainKind::Polytope:
        return ((b_ - A_ * x).array() / A_.rowwise().norm().array()).minCoeff();
    }
    return 0.0;
}

ConvexRegion Domain::convexPart() const
{
    ConvexRegion out;
    switch (kind_) {
    case DomainKind::Box:
    case DomainKind::BoxMinusBall: {
        const int d = static_cast<int>(boxLo_.size());
        for (int k = 0; k < d; ++k) {
            Point e = Point::Zero(d);
            e[k] = 1.0;
            out.halfspaces.push_back({e, boxHi_[k]});
            out.halfspaces.push_back({-e, -boxLo_[k]});
        }
        break;
    }
    case DomainKind::Ball:
    case DomainKind::Annulus:
        out.balls.push_back({center_, outer_});
        break;
    case DomainKind::Polytope:
        for (Eigen::Index j = 0; j < A_.rows(); ++j) out.halfspaces.push_back({A_.row(j).transpose(), b_[j]});
        break;
    }
    return out;
}

std::optional<Ball> Domain::hole() const
{
    if (kind_ == DomainKind::Annulus || kind_ == DomainKind::BoxMinusBall) return Ball{center_, inner_};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// densities

DensitySpec DensitySpec::uniform(const Domain& domain)
{
    DensitySpec f;
    f.kind_ = DensityKind::Uniform;
    f.low_ = 1.0 / domain.volume();
    f.ratio_ = 1.0;
    f.split_ = std::numeric_limits<double>::infinity();
    f.tag_ = "uniform";
    return f;
}

DensitySpec DensitySpec::boundedRatio(const Domain& domain, double ratio)
{
    if (!(ratio >= 1.0)) throw PreconditionError("bounded-ratio density: ratio must be >= 1");
    DensitySpec f;
    f.kind_ = DensityKind::BoundedRatio;
    f.ratio_ = ratio;
    f.split_ = 0.5 * (domain.lower()[0] + domain.upper()[0]);
    double below = 0.0;
    double above = 0.0;
    const bool symmetric = domain.kind() == DomainKind::Box || domain.kind() == DomainKind::Ball ||
                           domain.kind() == DomainKind::Annulus ||
                           (domain.kind() == DomainKind::BoxMinusBall &&
                            std::abs(domain.hole()->center[0] - f.split_) <= 1e-15 * (1.0 + std::abs(f.split_)));
    if (symmetric) {
        below = above = 0.5 * domain.volume();
    } else {
        below = gridVolume(domain, f.split_, true);
        above = gridVolume(domain, f.split_, false);
    }
    f.low_ = 1.0 / (below + ratio * above);
    f.tag_ = "ratio:" + formatDouble(ratio);
    return f;
}

DensitySpec DensitySpec::parse(std::string_view spec, const Domain& domain)
{
    if (spec == "uniform") return uniform(domain);
    if (spec.starts_with("ratio:")) {
        try {
            return boundedRatio(domain, parseDouble(spec.substr(6)));
        } catch (const PreconditionError& e) {
            throw ConfigError(std::string("density: ") + e.what());
        }
    }
    throw ConfigError("unknown density '" + std::string(spec) + "'");
}

double DensitySpec::operator()(const Point& x, const Domain& domain) const
{
    return domain.contains(x) ? valueInside(x) : 0.0;
}

// ---------------------------------------------------------------------------
// sampling and coverage

PointCloud sample(const Domain& domain, const DensitySpec& density, std::size_t n, std::uint64_t seed)
{
    if (n == 0) throw PreconditionError("sample: n must be >= 1");
    const int d = domain.dim();
    const Point lo = domain.lower();
    const Point ext = domain.upper() - domain.lower();
    const bool weighted = density.ratio() != 1.0;
    constexpr double kMinAcceptance = 1e-4;
    constexpr std::size_t kCheckAfter = 100000;

    PointCloud cloud;
    cloud.points.resize(d, static_cast<Eigen::Index>(n));
    cloud.seed = seed;
    cloud.domainTag = domain.tag();
    Rng rng(seed);
    Point x(d);
    std::size_t accepted = 0;
    std::size_t attempts = 0;
    while (accepted < n) {
        ++attempts;
        for (int k = 0; k < d; ++k) x[k] = lo[k] + ext[k] * rng.uniform();
        bool keep = domain.contains(x, 0.0);
        if (weighted) keep = rng.uniform() * density.nuMax() < density.valueInside(x) && keep;
        if (keep) cloud.points.col(static_cast<Eigen::Index>(accepted++)) = x;
        if (attempts % kCheckAfter == 0 && static_cast<double>(accepted) < kMinAcceptance * static_cast<double>(attempts)) {
            std::ostringstream msg;
            msg << "sample: rejection acceptance ratio " << static_cast<double>(accepted) / static_cast<double>(attempts)
                << " below " << kMinAcceptance << " for domain '" << domain.tag()
                << "'; reparameterize the domain or density";
            throw std::runtime_error(msg.str());
        }
    }
    return cloud;
}

std::vector<Point> gridPointsIn(const Domain& domain, double step)
{
    if (!(step > 0.0)) throw PreconditionError("grid: step must be positive");
    const int d = domain.dim();
    const Point lo = domain.lower();
    const Point hi = domain.upper();
    std::vector<long> counts(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) counts[static_cast<std::size_t>(k)] = static_cast<long>(std::floor((hi[k] - lo[k]) / step + 1e-9)) + 1;
    std::vector<long> idx(static_cast<std::size_t>(d), 0);
    std::vector<Point> out;
    Point x(d);
    while (true) {
        for (int k = 0; k < d; ++k) x[k] = lo[k] + static_cast<double>(idx[static_cast<std::size_t>(k)]) * step;
        if (domain.contains(x)) out.push_back(x);
        int k = d - 1;
        while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == counts[static_cast<std::size_t>(k)]) idx[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
    }
    return out;
}

CoverageResult checkCoverage(const PointCloud& cloud, const Domain& domain, double r, double gridStep)
{
    if (!(r > 0.0)) throw PreconditionError("check_coverage: r must be positive");
    if (!(gridStep > 0.0) || gridStep > r / 4.0 * (1.0 + 1e-12))
        throw PreconditionError("check_coverage: grid_step must satisfy 0 < grid_step <= r/4");
    if (cloud.size() > 0 && cloud.dim() != domain.dim()) throw PreconditionError("check_coverage: dimension mismatch");
    CoverageResult out;
    out.certifiedRadius = r + gridStep * std::sqrt(static_cast<double>(domain.dim()));
    const auto grid = gridPointsIn(domain, gridStep);
    out.gridPoints = grid.size();
    if (cloud.size() == 0) {
        out.covered = grid.empty();
        if (!grid.empty()) out.witness = grid.front();
        return out;
    }
    const SpatialGrid index(cloud.points, r);
    for (const Point& g : grid) {
        if (!index.anyWithin(g, r + kContainTol)) {
            out.covered = false;
            out.witness = g;
            return out;
        }
    }
    out.covered = true;
    return out;
}

// ---------------------------------------------------------------------------
// CSV

void writeCloudCsv(std::ostream& out, const PointCloud& cloud)
{
    out << "dim," << cloud.dim() << '\n';
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        for (int k = 0; k < cloud.dim(); ++k) {
            if (k) out << ',';
            out << formatDouble(cloud.points(k, static_cast<Eigen::Index>(i)));
        }
        out << '\n';
    }
}

PointCloud readCloudCsv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("point cloud CSV: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.starts_with("dim,")) throw std::runtime_error("point cloud CSV: expected 'dim,<d>' header");
    const int d = static_cast<int>(parseDouble(std::string_view(line).substr(4)));
    if (d < 1) throw std::runtime_error("point cloud CSV: dim must be >= 1");
    std::vector<double> values;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto parts = splitView(line, ',');
        if (static_cast<int>(parts.size()) != d)
            throw std::runtime_error("point cloud CSV: row " + std::to_string(rows + 1) + " has " +
                                     std::to_string(parts.size()) + " fields, expected " + std::to_string(d));
        for (auto p : parts) values.push_back(parseDouble(p));
        ++rows;
    }
    PointCloud cloud;
    cloud.points = Eigen::Map<const Eigen::MatrixXd>(values.data(), d, static_cast<Eigen::Index>(rows));
    return cloud;
}

}  // namespace vrlab
