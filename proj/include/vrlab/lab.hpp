#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vrlab/complex.hpp"
#include "vrlab/covernerve.hpp"
#include "vrlab/domains.hpp"

namespace vrlab {

enum Check : unsigned {
    kCheckDismantle = 1U << 0,
    kCheckBetti = 1U << 1,
    kCheckCoverage = 1U << 2,
    kCheckNerve = 1U << 3,
    kCheckPursuit = 1U << 4,
};

/// Comma-separated subset of dismantle,betti,coverage,nerve,pursuit (or `all`).
unsigned parseChecks(const std::string& list);
std::string checksToString(unsigned checks);

struct SweepConfig {
    std::string domain = "square";
    std::string density = "uniform";
    std::vector<int> dims{2};
    std::vector<std::size_t> ns{500};
    std::vector<double> cs{1.0};
    /// Fixed radius overriding the c scaling.
    std::optional<double> radius;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    /// Clique complex dimension cap; negative means d + 1.
    int dimCap = -1;
    unsigned checks = kCheckDismantle;
    bool allowBeyondDiameter = false;
    double epsilon = 0.05;
    unsigned threads = 1;
    /// Compute Betti numbers on the dismantled core instead of the full complex.
    bool bettiOnCore = true;
    std::size_t simplexBudget = kDefaultSimplexBudget;

    /// Throws ConfigError on invalid settings.
    void validate() const;
};

/// r = c (ln n / n)^(1/d).
double radiusFor(double c, std::size_t n, int d);

struct Cell {
    std::size_t index = 0;
    std::size_t n = 0;
    double c = 0.0;
    int d = 2;
    std::string domain;
    double r = 0.0;
};

/// Cells in (d, n, c) order.
std::vector<Cell> sweepCells(const SweepConfig& config);

std::uint64_t trialSeed(std::uint64_t base, std::size_t cell, std::size_t trial);
std::uint64_t coverSeed(std::uint64_t base, std::size_t cell);

struct StageTimes {
    double sample = 0.0;
    double graph = 0.0;
    double dismantle = 0.0;
    double betti = 0.0;
    double coverage = 0.0;
    double nerve = 0.0;
    double pursuit = 0.0;
    double total = 0.0;
};

struct TrialResult {
    std::size_t n = 0;
    double c = 0.0;
    int d = 2;
    std::string domain;
    std::size_t cell = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    double r = 0.0;
    std::size_t edges = 0;

    std::optional<bool> dismantlable;
    std::size_t residual = 0;
    std::optional<BettiProfile> betti;
    std::optional<bool> covered;
    std::optional<bool> nerveA;
    std::optional<bool> nerveB;
    std::optional<bool> nerveC;
    std::optional<double> nerveEpsilon;
    std::optional<bool> captured;
    std::optional<std::size_t> captureTurns;
    std::string error;

    /// Milliseconds per stage; measurements, not outcomes.
    StageTimes ms;

    /// Every field except the timings.
    bool sameOutcome(const TrialResult& other) const;
};

/// Cover shared by the trials of a cell when the nerve check runs.
struct CellCover {
    std::optional<Cover> cover;
    std::string error;
    /// r >= diam(K): the single set K covers everything.
    bool trivial = false;
};

CellCover buildCellCover(const SweepConfig& config, const Cell& cell);

/// One trial; `cover` may be supplied to skip rebuilding the cell cover.
TrialResult runTrial(const SweepConfig& config, const Cell& cell, std::size_t trial, const CellCover* cover = nullptr);

/// All trials of all cells, sorted by (cell, trial). `onResult` sees results
/// in that order as soon as each prefix is complete.
std::vector<TrialResult> runSweep(const SweepConfig& config,
                                  const std::function<void(const TrialResult&)>& onResult = {});

struct ThresholdOptions {
    std::size_t bootstrap = 200;
    std::uint64_t seed = 7;
    double ridge = 1e-2;
    double level = 0.95;
};

struct ThresholdEstimate {
    std::size_t n = 0;
    double cHat = 0.0;
    double ciLow = 0.0;
    double ciHigh = 0.0;
    double intercept = 0.0;
    /// Slope of the logit in c; its growth with n signals a sharp threshold.
    double slope = 0.0;
    double pMin = 0.0;
    double pMax = 0.0;
};

/// Logistic fit of P(dismantlable | c) over the given results (one n).
ThresholdEstimate estimateThreshold(const std::vector<TrialResult>& results, double target,
                                    const ThresholdOptions& options = {});
/// estimateThreshold per n.
std::map<std::size_t, ThresholdEstimate> estimateThresholds(const std::vector<TrialResult>& results, double target,
                                                            const ThresholdOptions& options = {});

struct Proportion {
    double c = 0.0;
    std::size_t successes = 0;
    std::size_t trials = 0;
    double p() const { return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0; }
    /// Standard error from the adjusted estimate (s + 2) / (m + 4).
    double adjustedSe() const;
};

/// P(dismantlable) per c for a fixed n, ascending in c.
std::vector<Proportion> dismantlableByC(const std::vector<TrialResult>& results, std::size_t n);
std::vector<Proportion> coveredByC(const std::vector<TrialResult>& results, std::size_t n);

/// Pairs (i, j), c_i < c_j, with p_j < p_i - k·sqrt(se_i² + se_j²).
std::vector<std::pair<double, double>> monotoneViolations(const std::vector<Proportion>& curve, double k = 2.0);

struct EmitOptions {
    /// Leave ms_total empty so reruns emit identical bytes.
    bool timings = true;
};

void emitCsv(std::ostream& out, const std::vector<TrialResult>& results, const EmitOptions& options = {});
void emitJson(std::ostream& out, const std::vector<TrialResult>& results, const EmitOptions& options = {});
/// Writes `csv` or `json`; I/O failures raise std::runtime_error naming the path.
void emitFile(const std::filesystem::path& path, const std::vector<TrialResult>& results, const std::string& format,
              const EmitOptions& options = {});

nlohmann::json toJson(const TrialResult& result, const EmitOptions& options = {});

/// Parses the CSV written by emitCsv (the CSV columns only).
std::vector<TrialResult> readResultsCsv(std::istream& in);

}  // namespace vrlab
