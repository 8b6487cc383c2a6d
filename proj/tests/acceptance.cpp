// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run everything
//   acceptance 3 7        run a subset

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vrlab/ball_intersection.hpp"
#include "vrlab/complex.hpp"
#include "vrlab/covernerve.hpp"
#include "vrlab/dismantle.hpp"
#include "vrlab/domains.hpp"
#include "vrlab/geometry.hpp"
#include "vrlab/lab.hpp"
#include "vrlab/proximity.hpp"
#include "vrlab/rng.hpp"

using namespace vrlab;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double limitSeconds;
    std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

oracle::EdgeSet edgeSet(const Graph& g)
{
    oracle::EdgeSet out;
    for (auto [a, b] : g.edges()) out.emplace(a, b);
    return out;
}

Graph withoutVertex(const Graph& g, VertexId v)
{
    std::vector<VertexId> keep;
    for (VertexId u = 0; u < static_cast<VertexId>(g.size()); ++u)
        if (u != v) keep.push_back(u);
    return g.induced(keep);
}

// Maps original vertex ids to positions in the shrinking graph.
struct Shrinking {
    Graph g;
    std::vector<VertexId> ids;
    void remove(VertexId original)
    {
        const auto it = std::find(ids.begin(), ids.end(), original);
        g = withoutVertex(g, static_cast<VertexId>(it - ids.begin()));
        ids.erase(it);
    }
};

bool sameBetti(const BettiProfile& a, const BettiProfile& b)
{
    if (a.betti != b.betti) return false;
    if (!a.truncated && !b.truncated) return a.top == b.top;
    return true;
}

Graph squareGraph(std::size_t n, double r, std::uint64_t seed)
{
    const Domain K = Domain::unitCube(2);
    return buildGraph(sample(K, DensitySpec::uniform(K), n, seed), r).graph;
}

std::vector<long> firstBetti(const BettiProfile& p, std::size_t k)
{
    std::vector<long> out;
    for (std::size_t i = 0; i < k; ++i)
        if (i < p.betti.size())
            out.push_back(p.betti[i]);
        else if (i == p.betti.size() && p.top)
            out.push_back(*p.top);
        else
            out.push_back(p.truncated ? -1 : 0);
    return out;
}

// ---------------------------------------------------------------------------

Outcome homologyInvariance()
{
    Rng rng(101);
    std::size_t graphs = 0, deletions = 0, mismatches = 0;
    std::uint64_t seed = 0;
    while (graphs < 200) {
        ++seed;
        const std::size_t n = 5 + rng.below(26);
        const double r = rng.uniform(0.15, 0.6);
        const Graph g = squareGraph(n, r, seed);
        const auto rec = dismantle(g);
        if (rec.steps.empty()) continue;
        ++graphs;
        Shrinking s{g, {}};
        for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) s.ids.push_back(v);
        auto before = bettiProfile(enumerateCliques(s.g, 3));
        for (const auto& step : rec.steps) {
            s.remove(step.removed);
            auto after = bettiProfile(enumerateCliques(s.g, 3));
            ++deletions;
            if (!sameBetti(before, after)) ++mismatches;
            before = std::move(after);
        }
    }
    return {mismatches == 0, fmt("%zu graphs, %zu deletions, %zu mismatches", graphs, deletions, mismatches)};
}

Outcome certificateSoundness()
{
    Rng rng(202);
    std::size_t instances = 0, bad = 0;
    std::uint64_t seed = 1000;
    while (instances < 150) {
        ++seed;
        const std::size_t n = 2 + rng.below(24);
        const Graph g = squareGraph(n, rng.uniform(0.2, 0.5), seed);
        if (!dismantle(g).complete) continue;
        ++instances;
        const auto p = bettiProfile(enumerateCliques(g, static_cast<int>(n)));
        if (p.truncated || firstBetti(p, 4) != std::vector<long>{1, 0, 0, 0} || !isPointLike(p)) ++bad;
    }
    return {bad == 0, fmt("%zu dismantlable instances, %zu not (1,0,0,0) or truncated", instances, bad)};
}

Outcome refutationSoundness()
{
    std::vector<std::string> issues;
    for (std::size_t k : {4, 5, 6}) {
        const Graph c = cycleGraph(k);
        const auto rec = dismantle(c);
        const auto p = bettiProfile(enumerateCliques(c, 3));
        const auto cert = certifyContractible(c, rec, 3);
        if (rec.complete || p.betti.at(1) != 1 || cert.verdict != Verdict::Refuted) issues.push_back("C" + std::to_string(k));
    }
    const Graph oct = crossPolytopeGraph(3);
    const auto p = bettiProfile(enumerateCliques(oct, 3));
    if (firstBetti(p, 3) != std::vector<long>{1, 0, 1} || p.truncated) issues.push_back("octahedron");
    if (dismantle(oct).complete) issues.push_back("octahedron dismantled");
    std::string d = issues.empty() ? "C4, C5, C6 refuted with b1 = 1; octahedron (1,0,1)" : "failed:";
    for (const auto& s : issues) d += " " + s;
    return {issues.empty(), d};
}

Outcome witnessInW()
{
    Rng rng(404);
    std::size_t violations = 0, probes = 0, vacuous = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 2 + static_cast<int>(rng.below(4));
        const double r = rng.uniform(0.05, 3.0);
        const double lambda = rng.uniform(1.0, 10.0);
        const double dist = r * rng.uniform(1.0, lambda);
        Point x(d);
        for (int i = 0; i < d; ++i) x[i] = rng.uniform(-5, 5);
        const Point y = x + dist * sampleUnitSphere(d, rng);
        const auto w = wWitnessBall(x, y, r, lambda);
        for (int k = 0; k < 1000; ++k) {
            const Point z = k % 2 ? sampleInBall(w.center, w.radius, rng)
                                  : Point(w.center + w.radius * sampleUnitSphere(d, rng));
            const auto m = wMembership(x, y, r, z, 64, rng.bits(), 1e-9);
            ++probes;
            vacuous += m.vacuous;
            if (!m.member) ++violations;
        }
    }
    return {violations == 0 && vacuous == 0,
            fmt("1000 configurations, %zu probe points, %zu violations", probes, violations)};
}

Domain randomConvex(Rng& rng, int d)
{
    for (;;) {
        switch (rng.below(4)) {
        case 0: {
            Point lo(d), hi(d);
            for (int i = 0; i < d; ++i) {
                lo[i] = rng.uniform(-2, 2);
                hi[i] = lo[i] + rng.uniform(0.05, 3);
            }
            return Domain::box(lo, hi);
        }
        case 1: {
            Point c(d);
            for (int i = 0; i < d; ++i) c[i] = rng.uniform(-2, 2);
            return Domain::ball(c, rng.uniform(0.1, 2));
        }
        case 2:
            return Domain::parse(d == 2 ? "polygon:" + std::to_string(3 + rng.below(8)) : std::string("simplex"), d);
        default: {
            const int m = d + 1 + static_cast<int>(rng.below(6));
            Eigen::MatrixXd A(m, d);
            Eigen::VectorXd b(m);
            for (int j = 0; j < m; ++j) {
                A.row(j) = sampleUnitSphere(d, rng).transpose();
                b[j] = rng.uniform(0.2, 1.5);
            }
            try {
                return Domain::polytope(A, b);
            } catch (const std::exception&) {
                continue;
            }
        }
        }
    }
}

Point randomPointIn(const Domain& K, Rng& rng)
{
    for (;;) {
        Point x(K.dim());
        for (int i = 0; i < K.dim(); ++i) x[i] = rng.uniform(K.lower()[i], K.upper()[i]);
        if (K.contains(x, 0.0)) return x;
    }
}

Outcome innerBallInside()
{
    Rng rng(505);
    std::size_t violations = 0, probes = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 2 + static_cast<int>(rng.below(2));
        const Domain K = randomConvex(rng, d);
        const Point x = randomPointIn(K, rng);
        const double rho = K.inradius();
        const double r = rng.uniform(1e-3, 1.0) * K.diameter();
        const double lambda = std::max({K.diameter(), (x - K.incenter()).norm(), r}) / rho;
        const auto b = innerBall(x, K.incenter(), rho, r, lambda);
        for (int k = 0; k < 1000; ++k) {
            const Point z = k % 2 ? sampleInBall(b.center, b.radius, rng)
                                  : Point(b.center + b.radius * sampleUnitSphere(d, rng));
            ++probes;
            if (!K.contains(z, 1e-9) || (z - x).norm() > r + 1e-9) ++violations;
        }
    }
    return {violations == 0, fmt("1000 convex instances, %zu probe points, %zu violations", probes, violations)};
}

Outcome coverConstruction()
{
    const Domain K = Domain::unitCube(2);
    std::vector<std::string> parts;
    bool ok = true;
    for (double r : {0.1, 0.2}) {
        const Cover c = buildCoverAdaptive(K, r, {}, 0.05);
        bool radii = true;
        for (double s : c.radii) radii = radii && s >= 3 * r && s <= 4 * r * (1 + 1e-12);
        bool packing = true;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) packing = packing && (c.centers[i] - c.centers[j]).norm() > 2 * r;
        bool covering = true;
        for (const auto& g : gridPointsIn(K, r / 10)) {
            double best = 1e300;
            for (const auto& x : c.centers) best = std::min(best, (g - x).norm());
            covering = covering && best <= 2 * r;
        }
        std::size_t locality = 0;
        for (const auto& x : c.centers) {
            std::size_t m = 0;
            for (const auto& y : c.centers) m += (x - y).norm() <= 8 * r;
            locality = std::max(locality, m);
        }
        const std::set<IndexSet> distinct(c.inflated.begin(), c.inflated.end());
        const bool once = distinct.size() == c.inflated.size();
        const bool good = radii && packing && covering && c.packingDisjoint && c.covers2r && locality <= 81 &&
                          locality == c.maxLocality && once;
        ok = ok && good;
        parts.push_back(fmt("r=%.1f: N=%zu eps=%g inflated=%zu locality=%zu%s", r, c.size(), c.epsilon,
                            c.inflated.size(), locality, good ? "" : " [violation]"));
    }
    return {ok, parts[0] + "; " + parts[1]};
}

Outcome nerveEndToEnd()
{
    const std::size_t n = 2000;
    const double r = 4.0 * std::sqrt(std::log(static_cast<double>(n)) / static_cast<double>(n));
    const Domain K = Domain::unitCube(2);
    CoverOptions co;
    co.seed = 7;
    const Cover cover = buildCoverAdaptive(K, r, co);
    std::size_t good = 0;
    std::string failed;
    for (std::size_t t = 0; t < 20; ++t) {
        const std::uint64_t seed = deriveSeed(7, 7, t);
        const auto cloud = sample(K, DensitySpec::uniform(K), n, seed);
        const auto rep = verifyNerve(cloud, buildGraph(cloud, r), cover);
        if (rep.conditionA && rep.conditionB && rep.conditionC) ++good;
        else failed += fmt(" %llu(%d%d%d)", static_cast<unsigned long long>(seed), rep.conditionA, rep.conditionB, rep.conditionC);
    }
    return {good >= 18, fmt("%zu/20 trials with a, b, c (N=%zu, eps=%g, faces=%zu)", good, cover.size(), cover.epsilon,
                            cover.faces.size()) + (failed.empty() ? "" : "; failing seeds" + failed)};
}

// Criterion 8's sweep is shared with criterion 9's calibration.
const std::vector<TrialResult>& thresholdSweep()
{
    static const std::vector<TrialResult> results = [] {
        SweepConfig cfg;
        cfg.ns = {500, 2000};
        cfg.cs.clear();
        for (int k = 1; k <= 12; ++k) cfg.cs.push_back(0.5 * k);
        cfg.trials = 50;
        cfg.seed = 8;
        cfg.checks = kCheckDismantle;
        return runSweep(cfg);
    }();
    return results;
}

Outcome thresholdMonotone()
{
    const auto& results = thresholdSweep();
    bool ok = true;
    std::string d;
    for (std::size_t n : {500, 2000}) {
        const auto curve = dismantlableByC(results, n);
        const auto viol = monotoneViolations(curve, 2.0);
        std::string ps;
        for (const auto& p : curve) ps += fmt("%.2f ", p.p());
        double cHat = NAN;
        try {
            cHat = estimateThreshold([&] {
                std::vector<TrialResult> sub;
                for (const auto& r : results)
                    if (r.n == n) sub.push_back(r);
                return sub;
            }(), 0.5).cHat;
        } catch (const std::exception& e) {
            d += fmt("n=%zu threshold error: %s; ", n, e.what());
        }
        const bool good = viol.empty() && std::isfinite(cHat) && cHat <= 10.0;
        ok = ok && good;
        d += fmt("n=%zu c_hat=%.3f violations=%zu P=[%s]; ", n, cHat, viol.size(), ps.c_str());
    }
    d.resize(d.size() - 2);
    return {ok, d};
}

double calibratedC()
{
    const auto curve = dismantlableByC(thresholdSweep(), 2000);
    for (const auto& p : curve)
        if (p.p() >= 0.9) return p.c;
    return curve.back().c;
}

Outcome annulusHomotopyType()
{
    const double c = calibratedC();
    SweepConfig cfg;
    cfg.domain = "annulus:0.5,1";
    cfg.ns = {3000};
    cfg.cs = {c};
    cfg.trials = 20;
    cfg.seed = 9;
    cfg.checks = kCheckBetti;
    std::map<std::vector<long>, int> profiles;
    for (const auto& r : runSweep(cfg))
        profiles[r.betti ? firstBetti(*r.betti, 3) : std::vector<long>{-1}]++;
    const auto modal = std::max_element(profiles.begin(), profiles.end(),
                                        [](const auto& a, const auto& b) { return a.second < b.second; });
    const int circle = profiles[{1, 1, 0}];

    SweepConfig full = cfg;
    full.cs.clear();
    full.radius = Domain::parse(cfg.domain, 2).diameter();
    full.allowBeyondDiameter = true;
    int point = 0;
    for (const auto& r : runSweep(full))
        if (r.betti && firstBetti(*r.betti, 3) == std::vector<long>{1, 0, 0}) ++point;

    const bool ok = modal->first == std::vector<long>{1, 1, 0} && circle >= 15 && point == 20;
    return {ok, fmt("c=%.1f (r=%.4f): %d/20 circle profiles; r=diam: %d/20 point profiles", c,
                    radiusFor(c, 3000, 2), circle, point)};
}

Outcome pursuitCapture()
{
    Rng rng(1010);
    std::size_t games = 0, captured = 0, graphs = 0, worst = 0;
    std::uint64_t seed = 5000;
    while (graphs < 100) {
        ++seed;
        const std::size_t n = 2 + rng.below(199);
        const Graph g = squareGraph(n, rng.uniform(0.2, 0.5), seed);
        const auto rec = dismantle(g);
        if (!rec.complete) continue;
        ++graphs;
        for (auto robber : {RobberStrategy::GreedyEscape, RobberStrategy::UniformRandom}) {
            ++games;
            try {
                const auto t = pursue(g, rec, robber, seed);
                if (t.captured && t.turns <= g.size()) ++captured;
                worst = std::max(worst, t.turns);
            } catch (const std::exception&) {
            }
        }
    }
    return {captured == games, fmt("%zu graphs, %zu/%zu games captured within |V| moves (longest %zu)", graphs,
                                   captured, games, worst)};
}

Outcome graphKernel()
{
    Rng rng(1111);
    std::size_t mismatched = 0, eulerChecked = 0, eulerBad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + trial % 2;
        const std::size_t n = 1 + rng.below(200);
        const double r = rng.uniform(0.03, 0.3);
        const Domain K = Domain::unitCube(d);
        const auto cloud = sample(K, DensitySpec::uniform(K), n, rng.bits());
        const Graph g = buildGraph(cloud, r).graph;
        if (edgeSet(g) != oracle::allPairsEdges(cloud.points, r)) ++mismatched;
        try {
            const auto p = bettiProfile(enumerateCliques(g, 6, 2'000'000));
            if (p.truncated) continue;
            ++eulerChecked;
            if (p.alternatingSum() != p.euler) ++eulerBad;
        } catch (const ComplexBudgetExceeded&) {
        }
    }
    return {mismatched == 0 && eulerBad == 0 && eulerChecked > 0,
            fmt("100 instances, %zu edge-set mismatches; euler checked on %zu untruncated, %zu mismatches", mismatched,
                eulerChecked, eulerBad)};
}

Outcome determinism()
{
    SweepConfig cfg;
    cfg.ns = {150, 300};
    cfg.cs = {1.0, 2.5, 4.0};
    cfg.trials = 4;
    cfg.seed = 12;
    cfg.checks = parseChecks("all");
    const auto results = runSweep(cfg);
    const auto cells = sweepCells(cfg);
    std::size_t replayed = 0, differ = 0;
    for (const auto& r : results) {
        if (trialSeed(cfg.seed, r.cell, r.trial) != r.seed) ++differ;
        const Domain K = Domain::parse(cfg.domain, r.d);
        const auto a = sample(K, DensitySpec::parse(cfg.density, K), r.n, r.seed);
        const auto b = sample(K, DensitySpec::parse(cfg.density, K), r.n, r.seed);
        if (a.points != b.points) ++differ;
        if (!runTrial(cfg, cells[r.cell], r.trial).sameOutcome(r)) ++differ;
        ++replayed;
    }
    auto csv = [](const std::vector<TrialResult>& rs, bool timings) {
        std::ostringstream ss;
        EmitOptions o;
        o.timings = timings;
        emitCsv(ss, rs, o);
        return ss.str();
    };
    const bool reemit = csv(results, true) == csv(results, true);
    SweepConfig threaded = cfg;
    threaded.threads = 3;
    const bool rerun = csv(results, false) == csv(runSweep(cfg), false) && csv(results, false) == csv(runSweep(threaded), false);
    return {differ == 0 && reemit && rerun,
            fmt("%zu trials replayed, %zu differences; re-emit %s, rerun CSV %s", replayed, differ,
                reemit ? "identical" : "differs", rerun ? "identical" : "differs")};
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> all{
        {1, "homology invariance under dominated-vertex deletion", 120, homologyInvariance},
        {2, "certificate soundness", 300, certificateSoundness},
        {3, "refutation soundness", 0, refutationSoundness},
        {4, "witness ball inside W(x,y,r)", 60, witnessInW},
        {5, "inner ball inside B(x,r) and X", 0, innerBallInside},
        {6, "cover construction", 300, coverConstruction},
        {7, "end-to-end nerve verification", 900, nerveEndToEnd},
        {8, "threshold monotonicity and existence", 1800, thresholdMonotone},
        {9, "homotopy type on the annulus", 0, annulusHomotopyType},
        {10, "pursuit capture", 0, pursuitCapture},
        {11, "graph kernel and euler characteristic", 0, graphKernel},
        {12, "determinism and byte-stable CSV", 0, determinism},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : all) {
        if (!wanted.empty() && !wanted.count(c.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool inTime = c.limitSeconds <= 0 || secs <= c.limitSeconds;
        const bool pass = o.pass && inTime;
        failures += !pass;
        std::printf("%s %2d  %s: %s (%.1f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                    inTime ? "" : fmt(", limit %.0f s", c.limitSeconds).c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
