#include "vrlab/lab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>

#include "vrlab/dismantle.hpp"
#include "vrlab/error.hpp"
#include "vrlab/format.hpp"
#include "vrlab/parallel.hpp"
#include "vrlab/rng.hpp"

namespace vrlab {

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
auto timed(double& slot, F&& f)
{
    const auto t0 = Clock::now();
    struct Stop {
        double& slot;
        Clock::time_point t0;
        ~Stop() { slot = std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }
    } stop{slot, t0};
    return f();
}

const std::pair<const char*, unsigned> kCheckNames[] = {
    {"dismantle", kCheckDismantle}, {"betti", kCheckBetti},     {"coverage", kCheckCoverage},
    {"nerve", kCheckNerve},         {"pursuit", kCheckPursuit},
};

bool sameProfile(const std::optional<BettiProfile>& a, const std::optional<BettiProfile>& b)
{
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->betti == b->betti && a->euler == b->euler && a->truncated == b->truncated && a->top == b->top &&
           a->simplexCounts == b->simplexCounts;
}

}  // namespace

unsigned parseChecks(const std::string& list)
{
    if (list == "all") return kCheckDismantle | kCheckBetti | kCheckCoverage | kCheckNerve | kCheckPursuit;
    unsigned out = 0;
    for (auto part : splitView(list, ',')) {
        if (part.empty()) continue;
        bool known = false;
        for (auto [name, bit] : kCheckNames)
            if (part == name) {
                out |= bit;
                known = true;
            }
        if (!known) throw ConfigError("unknown check '" + std::string(part) + "'");
    }
    if (out == 0) throw ConfigError("no checks selected");
    return out | kCheckDismantle;
}

std::string checksToString(unsigned checks)
{
    std::string s;
    for (auto [name, bit] : kCheckNames)
        if (checks & bit) s += (s.empty() ? "" : ",") + std::string(name);
    return s;
}

double radiusFor(double c, std::size_t n, int d)
{
    if (n < 2) throw PreconditionError("radius: need n >= 2 for the (ln n / n) scaling");
    const double nn = static_cast<double>(n);
    return c * std::pow(std::log(nn) / nn, 1.0 / d);
}

void SweepConfig::validate() const
{
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (dims.empty() || ns.empty()) throw ConfigError("need at least one dimension and one n");
    if (!radius && cs.empty()) throw ConfigError("need at least one c value or a fixed radius");
    for (double c : cs)
        if (!(c > 0.0)) throw ConfigError("c must be positive");
    if (radius && !(*radius > 0.0)) throw ConfigError("r must be positive");
    if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
    if (dimCap < -1) throw ConfigError("dim_cap must be >= 0");
    for (std::size_t n : ns)
        if (n < 2) throw ConfigError("n must be >= 2");
    for (int d : dims) {
        if (d < 1) throw ConfigError("dimension must be >= 1");
        try {
            const Domain K = Domain::parse(domain, d);
            DensitySpec::parse(density, K);
            for (std::size_t n : ns)
                for (double c : radius ? std::vector<double>{0.0} : cs) {
                    const double r = radius ? *radius : radiusFor(c, n, d);
                    if (r > K.diameter() && !allowBeyondDiameter)
                        throw ConfigError("r = " + formatDouble(r) + " exceeds diam(K) = " + formatDouble(K.diameter()) +
                                          "; pass allow_beyond_diameter to permit it");
                }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
    }
}

std::vector<Cell> sweepCells(const SweepConfig& config)
{
    std::vector<Cell> out;
    const std::vector<double> cs = config.radius ? std::vector<double>{0.0} : config.cs;
    for (int d : config.dims) {
        const Domain K = Domain::parse(config.domain, d);
        for (std::size_t n : config.ns)
            for (double c : cs) {
                Cell cell;
                cell.index = out.size();
                cell.n = n;
                cell.d = d;
                cell.domain = K.tag();
                cell.r = config.radius ? *config.radius : radiusFor(c, n, d);
                cell.c = config.radius ? cell.r / std::pow(std::log(double(n)) / double(n), 1.0 / d) : c;
                out.push_back(cell);
            }
    }
    return out;
}

std::uint64_t trialSeed(std::uint64_t base, std::size_t cell, std::size_t trial)
{
    return deriveSeed(base, cell, trial);
}

std::uint64_t coverSeed(std::uint64_t base, std::size_t cell)
{
    return deriveSeed(base, cell, ~std::uint64_t{0});
}

bool TrialResult::sameOutcome(const TrialResult& o) const
{
    return n == o.n && c == o.c && d == o.d && domain == o.domain && cell == o.cell && trial == o.trial && seed == o.seed &&
           r == o.r && edges == o.edges && dismantlable == o.dismantlable && residual == o.residual &&
           sameProfile(betti, o.betti) && covered == o.covered && nerveA == o.nerveA && nerveB == o.nerveB &&
           nerveC == o.nerveC && nerveEpsilon == o.nerveEpsilon && captured == o.captured &&
           captureTurns == o.captureTurns && error == o.error;
}

CellCover buildCellCover(const SweepConfig& config, const Cell& cell)
{
    CellCover out;
    const Domain K = Domain::parse(config.domain, cell.d);
    if (cell.r >= K.diameter()) {
        out.trivial = true;
        return out;
    }
    CoverOptions opts;
    opts.seed = coverSeed(config.seed, cell.index);
    try {
        out.cover = buildCoverAdaptive(K, cell.r, opts, config.epsilon);
    } catch (const std::exception& e) {
        out.error = std::string("cover: ") + e.what();
    }
    return out;
}

TrialResult runTrial(const SweepConfig& config, const Cell& cell, std::size_t trial, const CellCover* cover)
{
    TrialResult res;
    res.n = cell.n;
    res.c = cell.c;
    res.d = cell.d;
    res.domain = cell.domain;
    res.cell = cell.index;
    res.trial = trial;
    res.seed = trialSeed(config.seed, cell.index, trial);
    res.r = cell.r;
    const auto t0 = Clock::now();
    try {
        const Domain K = Domain::parse(config.domain, cell.d);
        const DensitySpec nu = DensitySpec::parse(config.density, K);
        const PointCloud cloud = timed(res.ms.sample, [&] { return sample(K, nu, cell.n, res.seed); });
        const GeometricGraph gg = timed(res.ms.graph, [&] { return buildGraph(cloud, cell.r); });
        res.edges = gg.graph.edgeCount();
        const EliminationRecord rec = timed(res.ms.dismantle, [&] { return dismantle(gg.graph); });
        res.dismantlable = rec.complete;
        res.residual = rec.residual.size();

        if (config.checks & kCheckCoverage)
            res.covered = timed(res.ms.coverage, [&] { return checkCoverage(cloud, K, cell.r, cell.r / 4.0).covered; });

        if (config.checks & kCheckPursuit && rec.complete) {
            const auto game = timed(res.ms.pursuit, [&] { return pursue(gg.graph, rec, RobberStrategy::GreedyEscape, res.seed); });
            res.captured = game.captured;
            res.captureTurns = game.turns;
        }

        if (config.checks & kCheckNerve) {
            timed(res.ms.nerve, [&] {
                CellCover local;
                if (!cover) {
                    local = buildCellCover(config, cell);
                    cover = &local;
                }
                if (cover->trivial) {
                    res.nerveA = true;
                    res.nerveB = rec.complete;
                    res.nerveC = true;
                    return 0;
                }
                if (!cover->cover) throw std::runtime_error(cover->error);
                const auto rep = verifyNerve(cloud, gg, *cover->cover);
                res.nerveA = rep.conditionA;
                res.nerveB = rep.conditionB;
                res.nerveC = rep.conditionC;
                res.nerveEpsilon = rep.epsilon;
                return 0;
            });
        }

        if (config.checks & kCheckBetti) {
            const int cap = config.dimCap >= 0 ? config.dimCap : cell.d + 1;
            res.betti = timed(res.ms.betti, [&] {
                const Graph target = config.bettiOnCore ? gg.graph.induced(rec.residual) : gg.graph;
                return bettiProfile(enumerateCliques(target, cap, config.simplexBudget));
            });
        }
    } catch (const std::exception& e) {
        res.error = e.what();
    }
    res.ms.total = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return res;
}

std::vector<TrialResult> runSweep(const SweepConfig& config, const std::function<void(const TrialResult&)>& onResult)
{
    config.validate();
    const auto cells = sweepCells(config);
    std::vector<CellCover> covers(cells.size());
    if (config.checks & kCheckNerve)
        for (const auto& cell : cells) covers[cell.index] = buildCellCover(config, cell);

    const std::size_t jobs = cells.size() * config.trials;
    std::vector<TrialResult> results(jobs);
    std::vector<char> done(jobs, 0);
    std::size_t emitted = 0;
    std::mutex mutex;
    parallelFor(jobs, config.threads, [&](std::size_t k) {
        const Cell& cell = cells[k / config.trials];
        TrialResult r = runTrial(config, cell, k % config.trials, (config.checks & kCheckNerve) ? &covers[cell.index] : nullptr);
        std::lock_guard lock(mutex);
        results[k] = std::move(r);
        done[k] = 1;
        while (emitted < jobs && done[emitted]) {
            if (onResult) onResult(results[emitted]);
            ++emitted;
        }
    });
    return results;
}

// ---------------------------------------------------------------------------
// thresholds

namespace {

struct Fit {
    double a = 0.0;
    double b = 0.0;
    bool ok = false;
};

// Ridge-penalized binomial logistic regression on standardized x.
Fit fitLogistic(const std::vector<double>& x, const std::vector<double>& y, const std::vector<double>& m, double ridge)
{
    Fit f;
    auto loglik = [&](double a, double b) {
        double s = -0.5 * ridge * b * b;
        for (std::size_t k = 0; k < x.size(); ++k) {
            const double eta = a + b * x[k];
            const double soft = eta > 0 ? eta + std::log1p(std::exp(-eta)) : std::log1p(std::exp(eta));
            s += y[k] * eta - m[k] * soft;
        }
        return s;
    };
    double a = 0.0;
    double b = 0.0;
    double cur = loglik(a, b);
    for (int it = 0; it < 200; ++it) {
        double ga = 0.0, gb = -ridge * b, haa = 1e-9, hab = 0.0, hbb = ridge;
        for (std::size_t k = 0; k < x.size(); ++k) {
            const double p = 1.0 / (1.0 + std::exp(-(a + b * x[k])));
            const double w = m[k] * p * (1.0 - p);
            ga += y[k] - m[k] * p;
            gb += x[k] * (y[k] - m[k] * p);
            haa += w;
            hab += w * x[k];
            hbb += w * x[k] * x[k];
        }
        const double det = haa * hbb - hab * hab;
        if (!(det > 0.0)) break;
        const double da = (hbb * ga - hab * gb) / det;
        const double db = (haa * gb - hab * ga) / det;
        double s = 1.0;
        double next = loglik(a + da, b + db);
        while (next < cur && s > 1e-10) {
            s *= 0.5;
            next = loglik(a + s * da, b + s * db);
        }
        a += s * da;
        b += s * db;
        const bool small = std::abs(s * da) + std::abs(s * db) < 1e-12;
        cur = next;
        if (small) break;
    }
    f.a = a;
    f.b = b;
    f.ok = std::isfinite(a) && std::isfinite(b);
    return f;
}

struct Curve {
    std::vector<double> c;
    std::vector<double> y;
    std::vector<double> m;
};

std::optional<double> crossing(const Curve& cv, double target, double ridge, double* slope, double* intercept)
{
    double mean = 0.0;
    double tot = 0.0;
    for (std::size_t k = 0; k < cv.c.size(); ++k) {
        mean += cv.m[k] * cv.c[k];
        tot += cv.m[k];
    }
    mean /= tot;
    double var = 0.0;
    for (std::size_t k = 0; k < cv.c.size(); ++k) var += cv.m[k] * (cv.c[k] - mean) * (cv.c[k] - mean);
    const double sd = std::sqrt(var / tot);
    if (!(sd > 0.0)) return std::nullopt;
    std::vector<double> x(cv.c.size());
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = (cv.c[k] - mean) / sd;
    const Fit f = fitLogistic(x, cv.y, cv.m, ridge);
    if (!f.ok || !(f.b > 0.0)) return std::nullopt;
    const double logit = std::log(target / (1.0 - target));
    if (slope) *slope = f.b / sd;
    if (intercept) *intercept = f.a - f.b * mean / sd;
    return mean + sd * (logit - f.a) / f.b;
}

}  // namespace

double Proportion::adjustedSe() const
{
    const double pt = (static_cast<double>(successes) + 2.0) / (static_cast<double>(trials) + 4.0);
    return std::sqrt(pt * (1.0 - pt) / (static_cast<double>(trials) + 4.0));
}

namespace {

template <typename Pick>
std::vector<Proportion> byC(const std::vector<TrialResult>& results, std::size_t n, Pick pick)
{
    std::map<double, Proportion> acc;
    for (const auto& r : results) {
        if (r.n != n) continue;
        const std::optional<bool> v = pick(r);
        if (!v) continue;
        auto& p = acc[r.c];
        p.c = r.c;
        ++p.trials;
        if (*v) ++p.successes;
    }
    std::vector<Proportion> out;
    for (auto& [c, p] : acc) out.push_back(p);
    return out;
}

}  // namespace

std::vector<Proportion> dismantlableByC(const std::vector<TrialResult>& results, std::size_t n)
{
    return byC(results, n, [](const TrialResult& r) { return r.dismantlable; });
}

std::vector<Proportion> coveredByC(const std::vector<TrialResult>& results, std::size_t n)
{
    return byC(results, n, [](const TrialResult& r) { return r.covered; });
}

std::vector<std::pair<double, double>> monotoneViolations(const std::vector<Proportion>& curve, double k)
{
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < curve.size(); ++i)
        for (std::size_t j = i + 1; j < curve.size(); ++j) {
            const double se = std::hypot(curve[i].adjustedSe(), curve[j].adjustedSe());
            if (curve[j].p() < curve[i].p() - k * se) out.emplace_back(curve[i].c, curve[j].c);
        }
    return out;
}

ThresholdEstimate estimateThreshold(const std::vector<TrialResult>& results, double target, const ThresholdOptions& options)
{
    if (!(target > 0.0 && target < 1.0)) throw PreconditionError("threshold: target must lie in (0, 1)");
    ThresholdEstimate est;
    std::vector<Proportion> curve;
    {
        std::map<double, Proportion> acc;
        for (const auto& r : results) {
            if (!r.dismantlable) continue;
            est.n = r.n;
            auto& p = acc[r.c];
            p.c = r.c;
            ++p.trials;
            if (*r.dismantlable) ++p.successes;
        }
        for (auto& [c, p] : acc) curve.push_back(p);
    }
    if (curve.empty()) throw std::runtime_error("threshold: no results with a dismantlability verdict");
    est.pMin = 1.0;
    est.pMax = 0.0;
    for (const auto& p : curve) {
        est.pMin = std::min(est.pMin, p.p());
        est.pMax = std::max(est.pMax, p.p());
    }
    if (!(est.pMin < target && est.pMax > target))
        throw std::runtime_error("threshold: observed P(dismantlable) ranges over [" + formatDouble(est.pMin) + ", " +
                                 formatDouble(est.pMax) + "], which does not bracket the target " + formatDouble(target));
    Curve cv;
    for (const auto& p : curve) {
        cv.c.push_back(p.c);
        cv.y.push_back(static_cast<double>(p.successes));
        cv.m.push_back(static_cast<double>(p.trials));
    }
    const auto chat = crossing(cv, target, options.ridge, &est.slope, &est.intercept);
    if (!chat) throw std::runtime_error("threshold: logistic fit is not increasing in c");
    est.cHat = *chat;

    Rng rng(options.seed);
    std::vector<double> boot;
    for (std::size_t b = 0; b < options.bootstrap; ++b) {
        Curve rs = cv;
        for (std::size_t k = 0; k < curve.size(); ++k) {
            const double p = curve[k].p();
            std::size_t s = 0;
            for (std::size_t t = 0; t < curve[k].trials; ++t)
                if (rng.uniform() < p) ++s;
            rs.y[k] = static_cast<double>(s);
        }
        if (auto v = crossing(rs, target, options.ridge, nullptr, nullptr)) boot.push_back(*v);
    }
    if (boot.empty()) {
        est.ciLow = est.ciHigh = est.cHat;
    } else {
        std::sort(boot.begin(), boot.end());
        auto quantile = [&](double q) {
            const double pos = q * static_cast<double>(boot.size() - 1);
            const auto lo = static_cast<std::size_t>(std::floor(pos));
            const auto hi = std::min(lo + 1, boot.size() - 1);
            return boot[lo] + (pos - static_cast<double>(lo)) * (boot[hi] - boot[lo]);
        };
        est.ciLow = quantile((1.0 - options.level) / 2.0);
        est.ciHigh = quantile(1.0 - (1.0 - options.level) / 2.0);
    }
    return est;
}

std::map<std::size_t, ThresholdEstimate> estimateThresholds(const std::vector<TrialResult>& results, double target,
                                                            const ThresholdOptions& options)
{
    std::map<std::size_t, std::vector<TrialResult>> groups;
    for (const auto& r : results) groups[r.n].push_back(r);
    std::map<std::size_t, ThresholdEstimate> out;
    for (const auto& [n, rs] : groups) {
        out[n] = estimateThreshold(rs, target, options);
        out[n].n = n;
    }
    return out;
}

// ---------------------------------------------------------------------------
// emission

namespace {

constexpr const char* kCsvHeader = "n,c,d,domain,seed,dismantlable,covered,b0,b1,b2,truncated,nerve_a,nerve_b,nerve_c,ms_total";

std::string csvField(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string flag(const std::optional<bool>& b)
{
    return b ? (*b ? "1" : "0") : "";
}

std::optional<long> bettiAt(const BettiProfile& p, std::size_t k)
{
    if (k < p.betti.size()) return p.betti[k];
    if (k == p.betti.size() && p.top) return p.top;
    return std::nullopt;
}

std::vector<std::string> splitCsvLine(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

std::optional<bool> parseFlag(const std::string& s)
{
    if (s.empty()) return std::nullopt;
    if (s == "1") return true;
    if (s == "0") return false;
    throw std::runtime_error("results csv: bad boolean '" + s + "'");
}

}  // namespace

void emitCsv(std::ostream& out, const std::vector<TrialResult>& results, const EmitOptions& options)
{
    out << kCsvHeader << '\n';
    for (const auto& r : results) {
        out << r.n << ',' << formatDouble(r.c) << ',' << r.d << ',' << csvField(r.domain) << ',' << r.seed << ','
            << flag(r.dismantlable) << ',' << flag(r.covered);
        for (std::size_t k = 0; k < 3; ++k) {
            out << ',';
            if (r.betti)
                if (auto v = bettiAt(*r.betti, k)) out << *v;
        }
        out << ',' << (r.betti ? (r.betti->truncated ? "1" : "0") : "");
        out << ',' << flag(r.nerveA) << ',' << flag(r.nerveB) << ',' << flag(r.nerveC) << ',';
        if (options.timings) out << formatDouble(r.ms.total);
        out << '\n';
    }
}

nlohmann::json toJson(const TrialResult& r, const EmitOptions& options)
{
    auto opt = [](const auto& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    nlohmann::json j = {{"n", r.n},
                        {"c", r.c},
                        {"d", r.d},
                        {"domain", r.domain},
                        {"cell", r.cell},
                        {"trial", r.trial},
                        {"seed", r.seed},
                        {"r", r.r},
                        {"edges", r.edges},
                        {"dismantlable", opt(r.dismantlable)},
                        {"residual", r.residual},
                        {"covered", opt(r.covered)},
                        {"error", r.error}};
    j["betti"] = r.betti ? toJson(*r.betti) : nlohmann::json(nullptr);
    if (r.nerveA)
        j["nerve"] = {{"a", opt(r.nerveA)}, {"b", opt(r.nerveB)}, {"c", opt(r.nerveC)}, {"epsilon", opt(r.nerveEpsilon)}};
    else
        j["nerve"] = nullptr;
    if (r.captured)
        j["pursuit"] = {{"captured", *r.captured}, {"turns", opt(r.captureTurns)}};
    else
        j["pursuit"] = nullptr;
    if (options.timings)
        j["ms"] = {{"sample", r.ms.sample},   {"graph", r.ms.graph},   {"dismantle", r.ms.dismantle},
                   {"betti", r.ms.betti},     {"coverage", r.ms.coverage}, {"nerve", r.ms.nerve},
                   {"pursuit", r.ms.pursuit}, {"total", r.ms.total}};
    return j;
}

void emitJson(std::ostream& out, const std::vector<TrialResult>& results, const EmitOptions& options)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) arr.push_back(toJson(r, options));
    out << arr.dump(2) << '\n';
}

void emitFile(const std::filesystem::path& path, const std::vector<TrialResult>& results, const std::string& format,
              const EmitOptions& options)
{
    if (format != "csv" && format != "json") throw ConfigError("unknown format '" + format + "' (csv or json)");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    if (format == "csv") emitCsv(out, results, options);
    else emitJson(out, results, options);
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::vector<TrialResult> readResultsCsv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("results csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) throw std::runtime_error("results csv: unexpected header '" + line + "'");
    std::vector<TrialResult> out;
    std::size_t lineNo = 1;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty()) continue;
        const auto f = splitCsvLine(line);
        if (f.size() != 15) throw std::runtime_error("results csv: line " + std::to_string(lineNo) + " has " + std::to_string(f.size()) + " fields");
        try {
            TrialResult r;
            r.n = std::stoull(f[0]);
            r.c = parseDouble(f[1]);
            r.d = std::stoi(f[2]);
            r.domain = f[3];
            r.seed = std::stoull(f[4]);
            r.dismantlable = parseFlag(f[5]);
            r.covered = parseFlag(f[6]);
            if (!f[10].empty()) {
                BettiProfile p;
                p.truncated = f[10] == "1";
                for (std::size_t k = 7; k < 10 && !f[k].empty(); ++k) p.betti.push_back(std::stol(f[k]));
                r.betti = p;
            }
            r.nerveA = parseFlag(f[11]);
            r.nerveB = parseFlag(f[12]);
            r.nerveC = parseFlag(f[13]);
            if (!f[14].empty()) r.ms.total = parseDouble(f[14]);
            out.push_back(std::move(r));
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception& e) {
            throw std::runtime_error("results csv: line " + std::to_string(lineNo) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace vrlab
