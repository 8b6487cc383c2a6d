// vrlab: command-line front end to the random Vietoris-Rips laboratory.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vrlab/complex.hpp"
#include "vrlab/covernerve.hpp"
#include "vrlab/dismantle.hpp"
#include "vrlab/domains.hpp"
#include "vrlab/error.hpp"
#include "vrlab/lab.hpp"
#include "vrlab/proximity.hpp"

using namespace vrlab;

namespace {

struct Options {
    std::string domain = "square";
    std::string density = "uniform";
    std::vector<int> dims{2};
    std::vector<std::size_t> ns{500};
    std::vector<double> cs;
    std::optional<double> r;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    int dimCap = -1;
    double epsilon = 0.05;
    std::string out;
    std::string format = "csv";
    std::string in;
    std::string graph;
    std::string checks = "dismantle";
    unsigned threads = 1;
    bool allowBeyond = false;
    bool noTimings = false;
    bool fullComplex = false;
    std::string robber = "greedy";
    double target = 0.5;
    bool adaptive = true;
};

int dim(const Options& o) { return o.dims.front(); }

std::ostream& output(const Options& o, std::ofstream& file)
{
    if (o.out.empty() || o.out == "-") return std::cout;
    file.open(o.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + o.out + "' for writing");
    return file;
}

void writeJson(const Options& o, const nlohmann::json& j)
{
    std::ofstream file;
    output(o, file) << j.dump(2) << '\n';
}

PointCloud loadOrSample(const Options& o)
{
    if (!o.in.empty()) {
        std::ifstream f(o.in);
        if (!f) throw std::runtime_error("cannot open '" + o.in + "'");
        try {
            return readCloudCsv(f);
        } catch (const std::exception& e) {
            throw std::runtime_error(o.in + ": " + e.what());
        }
    }
    const Domain K = Domain::parse(o.domain, dim(o));
    return sample(K, DensitySpec::parse(o.density, K), o.ns.front(), o.seed);
}

double radiusOf(const Options& o, std::size_t n, int d)
{
    if (o.r) {
        if (!(*o.r > 0.0)) throw ConfigError("--r must be positive");
        return *o.r;
    }
    if (o.cs.empty()) throw ConfigError("need --r or --c");
    if (!(o.cs.front() > 0.0)) throw ConfigError("--c must be positive");
    if (n < 2) throw ConfigError("the c scaling needs n >= 2");
    return radiusFor(o.cs.front(), n, d);
}

Graph loadGraph(const Options& o)
{
    if (!o.graph.empty()) {
        std::ifstream f(o.graph);
        if (!f) throw std::runtime_error("cannot open '" + o.graph + "'");
        try {
            return readEdgeList(f);
        } catch (const std::exception& e) {
            throw std::runtime_error(o.graph + ": " + e.what());
        }
    }
    const PointCloud cloud = loadOrSample(o);
    return buildGraph(cloud, radiusOf(o, cloud.size(), cloud.dim())).graph;
}

int cap(const Options& o, int d) { return o.dimCap >= 0 ? o.dimCap : d + 1; }

Cover makeCover(const Options& o, const Domain& K, double r)
{
    CoverOptions co;
    co.seed = o.seed;
    return o.adaptive ? buildCoverAdaptive(K, r, co, o.epsilon) : buildCover(K, r, o.epsilon, co);
}

SweepConfig sweepConfig(const Options& o)
{
    SweepConfig cfg;
    cfg.domain = o.domain;
    cfg.density = o.density;
    cfg.dims = o.dims;
    cfg.ns = o.ns;
    cfg.cs = o.cs.empty() ? std::vector<double>{1.0} : o.cs;
    cfg.radius = o.r;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.dimCap = o.dimCap;
    cfg.checks = parseChecks(o.checks);
    cfg.allowBeyondDiameter = o.allowBeyond;
    cfg.epsilon = o.epsilon;
    cfg.threads = o.threads;
    cfg.bettiOnCore = !o.fullComplex;
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Random Vietoris-Rips complexes: dismantling, homology, covers and nerves"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file using the long flag names; flags override it");

    Options o;
    app.add_option("--domain", o.domain, "square, cube, box[:side], ball[:R], disk, annulus:in,out, box-minus-ball[:hr], simplex, polygon:k");
    app.add_option("--density", o.density, "uniform or ratio:<max/min>");
    app.add_option("--dim", o.dims, "ambient dimension(s)")->delimiter(',');
    app.add_option("--n", o.ns, "number of points (list for sweep)")->delimiter(',');
    app.add_option("--c", o.cs, "radius constant(s), r = c (ln n / n)^(1/d)")->delimiter(',');
    app.add_option("--r", o.r, "fixed radius");
    app.add_option("--trials", o.trials, "trials per cell");
    app.add_option("--seed", o.seed, "base seed");
    app.add_option("--dim-cap", o.dimCap, "clique complex dimension cap (default d + 1)");
    app.add_option("--epsilon", o.epsilon, "cover inflation step, as a fraction of r");
    app.add_option("--out", o.out, "output path (default stdout)");
    app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--in", o.in, "input file: point cloud CSV, or results CSV for threshold");
    app.add_option("--graph", o.graph, "edge list input");
    app.add_option("--checks", o.checks, "sweep checks: dismantle,betti,coverage,nerve,pursuit or all");
    app.add_option("--threads", o.threads, "worker threads (0 = all cores)");
    app.add_flag("--allow-beyond-diameter", o.allowBeyond, "permit r > diam(K) in sweeps");
    app.add_flag("--no-timings", o.noTimings, "omit timings so reruns emit identical bytes");
    app.add_flag("--full-complex", o.fullComplex, "Betti numbers of the full complex instead of the dismantled core");
    app.add_option("--robber", o.robber, "greedy or random")->check(CLI::IsMember({"greedy", "random"}));
    app.add_option("--target", o.target, "threshold target probability");
    app.add_flag("!--fixed-epsilon", o.adaptive, "do not halve epsilon on overflow");

    auto* cmdSample = app.add_subcommand("sample", "draw a point cloud");
    auto* cmdGraph = app.add_subcommand("graph", "radius graph as an edge list");
    auto* cmdDismantle = app.add_subcommand("dismantle", "dominated-vertex elimination and certification");
    auto* cmdBetti = app.add_subcommand("betti", "GF(2) Betti numbers of the clique complex");
    auto* cmdCover = app.add_subcommand("cover", "packing cover with radius inflation");
    auto* cmdNerve = app.add_subcommand("verify-nerve", "check the cover conditions on a sample");
    auto* cmdPursuit = app.add_subcommand("pursuit", "cops and robbers with the retract strategy");
    auto* cmdSweep = app.add_subcommand("sweep", "Monte Carlo sweep over (d, n, c)");
    auto* cmdThreshold = app.add_subcommand("threshold", "logistic threshold estimate from sweep results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (o.dims.empty() || o.ns.empty()) throw ConfigError("--dim and --n need a value");
        if (*cmdSample) {
            if (o.ns.front() == 0) throw ConfigError("--n must be positive");
            const PointCloud cloud = loadOrSample(o);
            std::ofstream file;
            writeCloudCsv(output(o, file), cloud);
        } else if (*cmdGraph) {
            const Graph g = loadGraph(o);
            std::ofstream file;
            writeEdgeList(output(o, file), g);
        } else if (*cmdDismantle) {
            const Graph g = loadGraph(o);
            const auto rec = dismantle(g);
            const auto cert = certifyContractible(g, rec, cap(o, dim(o)));
            writeJson(o, {{"copwin", rec.complete}, {"record", toJson(rec)}, {"certification", toJson(cert)}});
        } else if (*cmdBetti) {
            const Graph g = loadGraph(o);
            writeJson(o, toJson(bettiProfile(enumerateCliques(g, cap(o, dim(o))))));
        } else if (*cmdCover) {
            const Domain K = Domain::parse(o.domain, dim(o));
            const double r = radiusOf(o, o.ns.front(), dim(o));
            if (r >= K.diameter()) throw ConfigError("r >= diam(K): the complex is complete and needs no cover");
            writeJson(o, toJson(makeCover(o, K, r)));
        } else if (*cmdNerve) {
            const Domain K = Domain::parse(o.domain, dim(o));
            const PointCloud cloud = loadOrSample(o);
            const double r = radiusOf(o, cloud.size(), cloud.dim());
            if (r >= K.diameter()) throw ConfigError("r >= diam(K): the complex is complete and needs no cover");
            const auto gg = buildGraph(cloud, r);
            const Cover cover = makeCover(o, K, r);
            VerifyOptions vo;
            vo.threads = o.threads;
            writeJson(o, {{"cover", toJson(cover)}, {"report", toJson(verifyNerve(cloud, gg, cover, vo))}});
        } else if (*cmdPursuit) {
            const Graph g = loadGraph(o);
            const auto rec = dismantle(g);
            if (!rec.complete) throw std::runtime_error("graph is not cop-win; residual of " + std::to_string(rec.residual.size()) + " vertices");
            const auto robber = o.robber == "greedy" ? RobberStrategy::GreedyEscape : RobberStrategy::UniformRandom;
            writeJson(o, toJson(pursue(g, rec, robber, o.seed)));
        } else if (*cmdSweep) {
            const SweepConfig cfg = sweepConfig(o);
            EmitOptions eo;
            eo.timings = !o.noTimings;
            const bool streaming = o.format == "csv";
            std::ofstream file;
            std::ostream& out = output(o, file);
            if (streaming) {
                out << "n,c,d,domain,seed,dismantlable,covered,b0,b1,b2,truncated,nerve_a,nerve_b,nerve_c,ms_total\n";
                out.flush();
            }
            const auto results = runSweep(cfg, [&](const TrialResult& r) {
                if (!streaming) return;
                std::ostringstream row;
                emitCsv(row, {r}, eo);
                const std::string s = row.str();
                out << s.substr(s.find('\n') + 1);
                out.flush();
                if (!r.error.empty()) std::cerr << "trial " << r.cell << "/" << r.trial << ": " << r.error << '\n';
            });
            if (!streaming) emitJson(out, results, eo);
            if (!out) throw std::runtime_error("write failed");
        } else if (*cmdThreshold) {
            if (o.in.empty()) throw ConfigError("threshold needs --in results.csv");
            std::ifstream f(o.in);
            if (!f) throw std::runtime_error("cannot open '" + o.in + "'");
            const auto results = readResultsCsv(f);
            nlohmann::json j = nlohmann::json::array();
            for (const auto& [n, est] : estimateThresholds(results, o.target))
                j.push_back({{"n", n},
                             {"target", o.target},
                             {"c_hat", est.cHat},
                             {"ci", {est.ciLow, est.ciHigh}},
                             {"slope", est.slope},
                             {"p_range", {est.pMin, est.pMax}}});
            writeJson(o, j);
        }
    } catch (const ConfigError& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
