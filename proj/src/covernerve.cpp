#include "vrlab/covernerve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "vrlab/error.hpp"
#include "vrlab/parallel.hpp"
#include "vrlab/rng.hpp"
#include "vrlab/spatial_grid.hpp"

namespace vrlab {

namespace {

// Downward-closed families over [0, N) in (size, lex) order. `test` sees a
// candidate only after all of its facets were accepted.
template <typename Test>
std::vector<IndexSet> levelwise(std::size_t N, Test&& test, std::size_t budget)
{
    std::vector<IndexSet> all;
    std::vector<IndexSet> level;
    std::vector<IndexSet> next;
    std::size_t examined = 0;
    auto count = [&] {
        if (++examined > budget)
            throw std::runtime_error("nerve enumeration exceeded budget of " + std::to_string(budget) + " index sets");
    };
    for (std::size_t i = 0; i < N; ++i) {
        IndexSet f{static_cast<int>(i)};
        count();
        if (test(f)) level.push_back(std::move(f));
    }
    IndexSet sub;
    while (!level.empty()) {
        next.clear();
        for (const auto& F : level)
            for (int j = F.back() + 1; j < static_cast<int>(N); ++j) {
                IndexSet G = F;
                G.push_back(j);
                bool closed = true;
                for (std::size_t m = 0; m + 1 < G.size() && closed; ++m) {
                    sub.assign(G.begin(), G.end());
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(m));
                    closed = std::binary_search(level.begin(), level.end(), sub);
                }
                if (!closed) continue;
                count();
                if (test(G)) next.push_back(std::move(G));
            }
        all.insert(all.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
        level.swap(next);
    }
    return all;
}

std::vector<IndexSet> maximalFaces(const std::vector<IndexSet>& faces)
{
    std::set<IndexSet> covered;
    IndexSet sub;
    for (const auto& G : faces)
        for (std::size_t m = 0; m < G.size() && G.size() > 1; ++m) {
            sub = G;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(m));
            covered.insert(sub);
        }
    std::vector<IndexSet> out;
    for (const auto& F : faces)
        if (!covered.count(F)) out.push_back(F);
    return out;
}

bool sizeLexLess(const IndexSet& a, const IndexSet& b)
{
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

// Greedy scan accepting candidates more than 2r from every accepted center.
class PackingIndex {
public:
    PackingIndex(int dim, double cell) : dim_(dim), cell_(cell) {}

    bool farFromAll(const Point& p, double sep) const
    {
        const auto base = key(p);
        std::vector<long long> k(base.size());
        std::vector<int> off(static_cast<std::size_t>(dim_), -1);
        while (true) {
            for (int a = 0; a < dim_; ++a) k[static_cast<std::size_t>(a)] = base[static_cast<std::size_t>(a)] + off[static_cast<std::size_t>(a)];
            if (auto it = buckets_.find(k); it != buckets_.end())
                for (const auto& q : it->second)
                    if ((q - p).norm() <= sep) return false;
            int a = 0;
            while (a < dim_ && ++off[static_cast<std::size_t>(a)] == 2) off[static_cast<std::size_t>(a++)] = -1;
            if (a == dim_) break;
        }
        return true;
    }
    void insert(const Point& p) { buckets_[key(p)].push_back(p); }

private:
    std::vector<long long> key(const Point& p) const
    {
        std::vector<long long> k(static_cast<std::size_t>(dim_));
        for (int a = 0; a < dim_; ++a) k[static_cast<std::size_t>(a)] = static_cast<long long>(std::floor(p[a] / cell_));
        return k;
    }

    int dim_;
    double cell_;
    std::map<std::vector<long long>, std::vector<Point>> buckets_;
};

bool ballsPairwiseMeet(const Cover& c, const IndexSet& I)
{
    const auto last = static_cast<std::size_t>(I.back());
    for (std::size_t m = 0; m + 1 < I.size(); ++m) {
        const auto i = static_cast<std::size_t>(I[m]);
        if ((c.centers[i] - c.centers[last]).norm() > c.radii[i] + c.radii[last]) return false;
    }
    return true;
}

}  // namespace

std::vector<Ball> Cover::balls() const
{
    std::vector<Ball> out;
    for (std::size_t i = 0; i < centers.size(); ++i) out.push_back({centers[i], radii[i]});
    return out;
}

std::vector<Ball> Cover::balls(std::span<const int> I) const
{
    std::vector<Ball> out;
    out.reserve(I.size());
    for (int i : I) out.push_back({centers[static_cast<std::size_t>(i)], radii[static_cast<std::size_t>(i)]});
    return out;
}

CoverOverflow::CoverOverflow(IndexSet face, double epsilon)
    : std::runtime_error([&] {
          std::string s = "cover: inflating {";
          for (std::size_t k = 0; k < face.size(); ++k) s += (k ? "," : "") + std::to_string(face[k]);
          s += "} pushes a radius past 4r at epsilon " + std::to_string(epsilon) + "; use a smaller epsilon";
          return s;
      }()),
      face_(std::move(face)),
      epsilon_(epsilon)
{
}

Cover buildCover(const Domain& domain, double r, double epsilon, const CoverOptions& options)
{
    if (!(r > 0.0)) throw PreconditionError("build_cover: r must be positive");
    if (!(r < domain.diameter())) throw PreconditionError("build_cover: r must be below diam(K); the complex is complete");
    if (!(epsilon > 0.0)) throw PreconditionError("build_cover: epsilon must be positive");
    const int d = domain.dim();

    Cover cover;
    cover.domain = std::make_shared<const Domain>(domain);
    cover.r = r;
    cover.epsilon = epsilon;
    cover.epsilonsTried = {epsilon};
    cover.gridStep = options.gridStep > 0.0 ? options.gridStep : r / 10.0;

    const auto grid = gridPointsIn(domain, cover.gridStep);
    cover.gridPoints = grid.size();
    PackingIndex packing(d, 2.0 * r);
    auto consider = [&](const Point& p) {
        if (!packing.farFromAll(p, 2.0 * r)) return;
        packing.insert(p);
        cover.centers.push_back(p);
    };
    for (const auto& p : grid) consider(p);
    if (options.sampledCandidates > 0) {
        const auto extra = sample(domain, DensitySpec::uniform(domain), options.sampledCandidates, options.seed);
        for (std::size_t k = 0; k < extra.size(); ++k) consider(extra.point(k));
    }
    if (cover.centers.empty()) throw PreconditionError("build_cover: grid too coarse for the domain");
    const std::size_t N = cover.centers.size();

    cover.packingDisjoint = true;
    cover.maxLocality = 0;
    for (std::size_t i = 0; i < N; ++i) {
        std::size_t m = 0;
        for (std::size_t j = 0; j < N; ++j) {
            const double dist = (cover.centers[i] - cover.centers[j]).norm();
            if (j != i && !(dist > 2.0 * r)) cover.packingDisjoint = false;
            if (dist <= 8.0 * r) ++m;
        }
        cover.maxLocality = std::max(cover.maxLocality, m);
    }
    if (static_cast<double>(cover.maxLocality) > std::pow(9.0, d))
        throw std::logic_error("build_cover: locality bound 9^d violated");
    {
        Eigen::MatrixXd cm(d, static_cast<Eigen::Index>(N));
        for (std::size_t i = 0; i < N; ++i) cm.col(static_cast<Eigen::Index>(i)) = cover.centers[i];
        const SpatialGrid index(cm, 2.0 * r);
        cover.covers2r = std::all_of(grid.begin(), grid.end(), [&](const Point& p) { return index.anyWithin(p, 2.0 * r + kContainTol); });
    }

    cover.radii.assign(N, 3.0 * r);
    const DepthSolver solver(domain, options.newtonBudget, options.seed);
    const double step = epsilon * r;
    const double cap = 4.0 * r * (1.0 + 1e-12);
    std::map<IndexSet, double> depthCache;
    std::set<IndexSet> inflatedSets;
    while (true) {
        bool changed = false;
        std::vector<FaceDepth> faces;
        auto test = [&](const IndexSet& I) {
            if (!ballsPairwiseMeet(cover, I)) return false;
            if (auto it = depthCache.find(I); it != depthCache.end() && it->second >= step) {
                faces.push_back({I, it->second});
                return true;
            }
            const auto balls = cover.balls(I);
            const auto res = solver.solve(balls, {step, 0.0});
            if (!res.converged) throw InnerBallBudgetExhausted("build_cover: inner-ball search budget exhausted");
            if (res.depth >= step) {
                depthCache[I] = res.depth;
                faces.push_back({I, res.depth});
                return true;
            }
            if (res.depth < 0.0) return false;
            if (!inflatedSets.insert(I).second) throw std::logic_error("build_cover: index set inflated twice");
            for (int i : I)
                if (cover.radii[static_cast<std::size_t>(i)] + step > cap) throw CoverOverflow(I, epsilon);
            for (int i : I) cover.radii[static_cast<std::size_t>(i)] += step;
            cover.inflated.push_back(I);
            depthCache[I] = res.depth + step;
            faces.push_back({I, res.depth + step});
            changed = true;
            return true;
        };
        levelwise(N, test, options.faceBudget);
        ++cover.passes;
        if (!changed) {
            cover.faces = std::move(faces);
            break;
        }
    }
    return cover;
}

Cover buildCoverAdaptive(const Domain& domain, double r, const CoverOptions& options, double epsilon, double floor)
{
    std::vector<double> tried;
    while (true) {
        tried.push_back(epsilon);
        try {
            Cover c = buildCover(domain, r, epsilon, options);
            c.epsilonsTried = tried;
            return c;
        } catch (const CoverOverflow&) {
            if (epsilon / 2.0 < floor) throw;
            epsilon /= 2.0;
        }
    }
}

std::optional<WitnessBall> innerBallSearch(const DepthSolver& solver, std::span<const Point> centers,
                                           std::span<const double> radii, std::span<const int> I, double target)
{
    if (I.empty()) throw PreconditionError("inner_ball_search: index set is empty");
    std::vector<Ball> balls;
    for (int i : I) {
        if (i < 0 || static_cast<std::size_t>(i) >= centers.size() || static_cast<std::size_t>(i) >= radii.size())
            throw PreconditionError("inner_ball_search: index out of range");
        balls.push_back({centers[static_cast<std::size_t>(i)], radii[static_cast<std::size_t>(i)]});
    }
    const auto res = solver.solve(balls);
    if (!res.converged || !(res.depth >= target)) return std::nullopt;
    return WitnessBall{res.x, std::max(res.depth, 0.0), WitnessClaim::InsideIntersection};
}

std::optional<WitnessBall> innerBallSearch(const Domain& domain, std::span<const Point> centers,
                                           std::span<const double> radii, std::span<const int> I, double target,
                                           std::size_t budget)
{
    const DepthSolver solver(domain, budget);
    return innerBallSearch(solver, centers, radii, I, target);
}

std::vector<FaceDepth> nerveFaces(const Cover& cover, const DepthSolver& solver, double minDepth, std::size_t faceBudget)
{
    std::vector<FaceDepth> out;
    auto test = [&](const IndexSet& I) {
        if (!ballsPairwiseMeet(cover, I)) return false;
        const auto balls = cover.balls(I);
        const auto res = solver.solve(balls, {minDepth, minDepth});
        if (!res.converged) throw InnerBallBudgetExhausted("nerve: inner-ball search budget exhausted");
        if (!(res.depth >= minDepth)) return false;
        out.push_back({I, res.depth});
        return true;
    };
    levelwise(cover.size(), test, faceBudget);
    return out;
}

std::size_t countBallNerveFaces(std::span<const Point> centers, double radius, std::size_t faceBudget)
{
    if (centers.empty()) return 0;
    const Eigen::Index d = centers.front().size();
    Point lo = centers.front();
    Point hi = centers.front();
    for (const auto& c : centers) {
        lo = lo.cwiseMin(c);
        hi = hi.cwiseMax(c);
    }
    const Point pad = Point::Constant(d, 2.0 * radius + 1.0);
    const DepthSolver solver(Domain::box(lo - pad, hi + pad));
    auto test = [&](const IndexSet& I) {
        const auto last = static_cast<std::size_t>(I.back());
        for (std::size_t m = 0; m + 1 < I.size(); ++m)
            if ((centers[static_cast<std::size_t>(I[m])] - centers[last]).norm() > 2.0 * radius) return false;
        if (I.size() <= 2) return true;
        std::vector<Ball> balls;
        for (int i : I) balls.push_back({centers[static_cast<std::size_t>(i)], radius});
        return solver.solve(balls, {0.0, 0.0}).depth >= 0.0;
    };
    return levelwise(centers.size(), test, faceBudget).size();
}

namespace {

// Bron–Kerbosch with pivoting; calls f(R) per maximal clique until it returns false.
template <typename F>
bool maximalCliques(const Graph& g, DynamicBitset& R, DynamicBitset P, DynamicBitset X, std::size_t& budget, F& f)
{
    if (!P.any() && !X.any()) {
        if (budget == 0) return false;
        --budget;
        return f(R);
    }
    std::size_t pivot = P.any() ? P.first() : X.first();
    std::size_t best = 0;
    auto pick = [&](std::size_t u) {
        DynamicBitset t = P & g.adjacency(static_cast<VertexId>(u));
        if (const std::size_t c = t.count(); c >= best) {
            best = c;
            pivot = u;
        }
    };
    P.forEach(pick);
    X.forEach(pick);
    DynamicBitset todo = P;
    todo.subtract(g.adjacency(static_cast<VertexId>(pivot)));
    bool go = true;
    todo.forEach([&](std::size_t v) {
        if (!go) return;
        R.set(v);
        if (!maximalCliques(g, R, P & g.adjacency(static_cast<VertexId>(v)), X & g.adjacency(static_cast<VertexId>(v)), budget, f))
            go = false;
        R.reset(v);
        P.reset(v);
        X.set(v);
    });
    return go;
}

bool anchoredChainHolds(const Graph& sub, const std::vector<VertexId>& order)
{
    const std::size_t n = sub.size();
    std::vector<DynamicBitset> closed;
    closed.reserve(n);
    for (std::size_t v = 0; v < n; ++v) closed.push_back(closedNeighborhoodBits(sub, static_cast<VertexId>(v)));
    DynamicBitset alive(n);
    alive.setAll();
    for (std::size_t k = order.size(); k-- > 1;) {
        const VertexId v = order[k];
        bool dominated = false;
        for (VertexId w : sub.neighbors(v))
            if (alive.test(static_cast<std::size_t>(w)) &&
                closed[static_cast<std::size_t>(v)].isSubsetOf(closed[static_cast<std::size_t>(w)], alive)) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
        alive.reset(static_cast<std::size_t>(v));
    }
    return true;
}

}  // namespace

NerveReport verifyNerve(const PointCloud& cloud, const GeometricGraph& graph, const Cover& cover, const VerifyOptions& options)
{
    if (std::abs(graph.radius - cover.r) > 1e-12 * std::max(1.0, cover.r))
        throw PreconditionError("verify_nerve: graph radius " + std::to_string(graph.radius) + " differs from cover radius " +
                                std::to_string(cover.r));
    if (graph.graph.size() != cloud.size()) throw PreconditionError("verify_nerve: graph and cloud sizes differ");
    if (!cover.domain || cloud.dim() != cover.domain->dim()) throw PreconditionError("verify_nerve: dimension mismatch");
    const Graph& g = graph.graph;
    const std::size_t n = cloud.size();
    const std::size_t N = cover.size();

    NerveReport rep;
    rep.epsilon = cover.epsilon;
    std::vector<DynamicBitset> member(N, DynamicBitset(n));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t v = 0; v < n; ++v)
            if ((cloud.points.col(static_cast<Eigen::Index>(v)) - cover.centers[i]).norm() <= cover.radii[i] + kContainTol)
                member[i].set(v);

    // condition a
    for (std::size_t v = 0; v < n; ++v) {
        const DynamicBitset closed = closedNeighborhoodBits(g, static_cast<VertexId>(v));
        bool inside = false;
        for (std::size_t i = 0; i < N && !inside; ++i) inside = member[i].test(v) && closed.isSubsetOf(member[i]);
        if (inside) continue;
        ++rep.fallbackVertices;
        DynamicBitset R(n);
        R.set(v);
        std::size_t budget = options.cliqueBudget;
        bool ok = true;
        auto check = [&](const DynamicBitset& clique) {
            for (std::size_t i = 0; i < N; ++i)
                if (clique.isSubsetOf(member[i])) return true;
            ok = false;
            return false;
        };
        const bool finished = maximalCliques(g, R, g.adjacency(static_cast<VertexId>(v)), DynamicBitset(n), budget, check);
        if (!ok || !finished) rep.uncoveredVertices.push_back(static_cast<VertexId>(v));
    }
    rep.conditionA = rep.uncoveredVertices.empty();

    // nerve of the subcomplexes: some sample point in every A_i of the face
    auto pointsOf = [&](const IndexSet& I) {
        DynamicBitset b = member[static_cast<std::size_t>(I.front())];
        for (std::size_t m = 1; m < I.size(); ++m) b &= member[static_cast<std::size_t>(I[m])];
        return b;
    };
    rep.nerveDelta = levelwise(N, [&](const IndexSet& I) { return pointsOf(I).any(); }, 2'000'000);

    const DepthSolver solver(*cover.domain);
    const double tol = 1e-9 * cover.r;
    const auto facesA = nerveFaces(cover, solver, -tol);
    for (const auto& f : facesA) rep.nerveA.push_back(f.face);
    rep.conditionC = rep.nerveA == rep.nerveDelta;

    std::vector<IndexSet> all = rep.nerveA;
    all.insert(all.end(), rep.nerveDelta.begin(), rep.nerveDelta.end());
    std::sort(all.begin(), all.end(), sizeLexLess);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    rep.faces.resize(all.size());

    parallelFor(all.size(), options.threads, [&](std::size_t k) {
        FaceCheck& fc = rep.faces[k];
        fc.face = all[k];
        fc.inNerveA = std::binary_search(rep.nerveA.begin(), rep.nerveA.end(), fc.face, sizeLexLess);
        fc.inNerveDelta = std::binary_search(rep.nerveDelta.begin(), rep.nerveDelta.end(), fc.face, sizeLexLess);
        const DynamicBitset pts = pointsOf(fc.face);
        fc.points = pts.count();
        const auto deep = solver.solve(cover.balls(fc.face));
        fc.depth = deep.depth;
        if (!fc.inNerveDelta) {
            fc.failure = "nonempty intersection (depth " + std::to_string(deep.depth) + ") holds no sample point";
            return;
        }
        if (!fc.inNerveA) fc.failure = "sample points found but the intersection search reported it empty";
        std::vector<VertexId> verts;
        pts.forEach([&](std::size_t v) { verts.push_back(static_cast<VertexId>(v)); });
        const Graph sub = g.induced(verts);
        const auto rec = dismantle(sub);
        fc.dismantled = rec.complete;
        fc.residual = rec.residual.size();
        if (!rec.complete && fc.failure.empty())
            fc.failure = "induced subgraph leaves a residual of " + std::to_string(rec.residual.size()) + " vertices";

        std::vector<double> dist(verts.size());
        for (std::size_t a = 0; a < verts.size(); ++a)
            dist[a] = (cloud.points.col(verts[a]) - deep.x).norm();
        std::vector<VertexId> order(verts.size());
        std::iota(order.begin(), order.end(), 0);
        const auto anchorLocal = static_cast<std::size_t>(std::min_element(dist.begin(), dist.end()) - dist.begin());
        fc.anchor = verts[anchorLocal];
        if (options.anchoredChain) {
            std::vector<double> fromAnchor(verts.size());
            for (std::size_t a = 0; a < verts.size(); ++a)
                fromAnchor[a] = (cloud.points.col(verts[a]) - cloud.points.col(verts[anchorLocal])).norm();
            std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
                return fromAnchor[static_cast<std::size_t>(a)] < fromAnchor[static_cast<std::size_t>(b)];
            });
            fc.anchoredChain = anchoredChainHolds(sub, order);
        }
    });
    rep.conditionB = std::all_of(rep.faces.begin(), rep.faces.end(),
                                 [](const FaceCheck& f) { return !f.inNerveDelta || f.dismantled.value_or(false); });
    return rep;
}

std::optional<WitnessBall> smoothConditionB5(const Cover& cover, const DepthSolver& solver, std::span<const int> I,
                                             const Point& x, const Point& y, std::size_t probes, std::uint64_t seed)
{
    const double r = cover.r;
    const double D = (y - x).norm();
    if (D < r) throw PreconditionError("smooth_condition_b5: |x - y| < r; use direct adjacency");
    if (I.empty()) throw PreconditionError("smooth_condition_b5: index set is empty");
    const Domain& K = *cover.domain;
    const auto balls = cover.balls(I);
    auto inCover = [&](const Point& p) {
        if (!K.contains(p)) return false;
        for (const auto& b : balls)
            if (!b.contains(p)) return false;
        return true;
    };

    Rng rng(seed);
    const auto deep = solver.solve(balls);
    if (!(deep.depth > 0.0)) throw PreconditionError("smooth_condition_b5: intersection has no interior");
    for (std::size_t k = 0; k < probes; ++k)
        if (!inCover(sampleInBall(y, deep.depth / 2.0, rng)))
            throw PreconditionError("smooth_condition_b5: B(y, inner radius / 2) leaves the intersection");

    // candidates on [x, y], the explicit witness center first
    const double lambda = D / r;
    const Point u = (y - x) / D;
    std::vector<Point> candidates{x + (r / (10.0 * lambda)) * u};
    for (int k = 1; k < 64; ++k) candidates.push_back(x + (D * k / 64.0) * u);

    std::optional<WitnessBall> best;
    for (const Point& z : candidates) {
        const double rho = std::min({depthAt(z, balls), K.clearance(z), wInradius(x, y, r, z)});
        if (rho > 1e-9 * r && (!best || rho > best->radius)) best = WitnessBall{z, rho, WitnessClaim::InsideWAndCover};
    }
    return best;
}

nlohmann::json toJson(const Cover& c)
{
    nlohmann::json centers = nlohmann::json::array();
    for (const auto& p : c.centers) centers.push_back(std::vector<double>(p.data(), p.data() + p.size()));
    nlohmann::json faces = nlohmann::json::array();
    for (const auto& f : c.faces) faces.push_back({{"face", f.face}, {"depth", f.depth}});
    return {{"domain", c.domain ? c.domain->tag() : ""},
            {"r", c.r},
            {"epsilon", c.epsilon},
            {"epsilons_tried", c.epsilonsTried},
            {"centers", centers},
            {"radii", c.radii},
            {"grid_step", c.gridStep},
            {"grid_points", c.gridPoints},
            {"packing_disjoint", c.packingDisjoint},
            {"covers_2r", c.covers2r},
            {"max_locality", c.maxLocality},
            {"passes", c.passes},
            {"inflated", c.inflated},
            {"faces", faces}};
}

nlohmann::json toJson(const NerveReport& rep)
{
    nlohmann::json faces = nlohmann::json::array();
    for (const auto& f : rep.faces) {
        nlohmann::json j = {{"face", f.face}, {"in_nerve_A", f.inNerveA}, {"in_nerve_Delta", f.inNerveDelta}, {"points", f.points}};
        j["depth"] = f.depth ? nlohmann::json(*f.depth) : nlohmann::json(nullptr);
        j["dismantled"] = f.dismantled ? nlohmann::json(*f.dismantled) : nlohmann::json(nullptr);
        j["residual"] = f.residual;
        j["anchor"] = f.anchor ? nlohmann::json(*f.anchor) : nlohmann::json(nullptr);
        j["anchored_chain"] = f.anchoredChain ? nlohmann::json(*f.anchoredChain) : nlohmann::json(nullptr);
        if (!f.failure.empty()) j["failure"] = f.failure;
        faces.push_back(std::move(j));
    }
    return {{"condition_a", rep.conditionA},
            {"condition_b", rep.conditionB},
            {"condition_c", rep.conditionC},
            {"epsilon", rep.epsilon},
            {"nerve_A_faces", rep.nerveA.size()},
            {"nerve_Delta_faces", rep.nerveDelta.size()},
            {"nerve_A_maximal", maximalFaces(rep.nerveA)},
            {"nerve_Delta_maximal", maximalFaces(rep.nerveDelta)},
            {"uncovered_vertices", rep.uncoveredVertices},
            {"fallback_vertices", rep.fallbackVertices},
            {"faces", faces}};
}

}  // namespace vrlab
