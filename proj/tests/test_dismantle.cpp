#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "vrlab/dismantle.hpp"
#include "vrlab/error.hpp"

using namespace vrlab;

namespace {

// Replays a record with the set-based oracle: each removed vertex must be
// dominated by its recorded dominator in the graph that remains.
bool replayWithOracle(const Graph& g, const EliminationRecord& rec)
{
    const auto adj = testing::toAdjacency(g);
    std::set<int> alive;
    for (int v = 0; v < static_cast<int>(g.size()); ++v) alive.insert(v);
    for (const auto& s : rec.steps) {
        if (!alive.count(s.removed) || !alive.count(s.dominator) || s.removed == s.dominator) return false;
        for (int u : oracle::closed(adj, s.removed))
            if (alive.count(u) && !oracle::closed(adj, s.dominator).count(u)) return false;
        alive.erase(s.removed);
    }
    if (std::set<int>(rec.residual.begin(), rec.residual.end()) != alive) return false;
    if (!rec.complete)
        for (int v : alive)
            if (oracle::dominated(adj, alive, v)) return false;
    return true;
}

}  // namespace

TEST_CASE("complete graphs dismantle in n - 1 steps")
{
    for (std::size_t n : {1, 2, 5, 12}) {
        const auto rec = dismantle(completeGraph(n));
        CHECK(rec.complete);
        CHECK(rec.steps.size() == n - 1);
        CHECK(rec.residual.size() == 1);
    }
}

TEST_CASE("the 4-cycle has no dominated vertex")
{
    const auto rec = dismantle(cycleGraph(4));
    CHECK_FALSE(rec.complete);
    CHECK(rec.steps.empty());
    CHECK(rec.residual == std::vector<VertexId>{0, 1, 2, 3});
    CHECK_FALSE(isCopwin(cycleGraph(4)));
}

TEST_CASE("paths, stars and trees dismantle")
{
    CHECK(dismantle(pathGraph(5)).complete);
    CHECK(isCopwin(starGraph(7)));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int n = 2 + static_cast<int>(seed % 40);
        const Graph t = testing::toGraph(n, oracle::randomTree(n, seed));
        const auto rec = dismantle(t);
        CHECK(rec.complete);
        CHECK(replayWithOracle(t, rec));
    }
}

TEST_CASE("disconnected graphs never dismantle")
{
    CHECK_FALSE(isCopwin(Graph(2)));
    CHECK_FALSE(isCopwin(disjointUnion(completeGraph(3), Graph(1))));
    CHECK(isCopwin(Graph(1)));
    CHECK_THROWS(dismantle(Graph(0)));
}

TEST_CASE("records are valid witnesses under the set oracle")
{
    std::mt19937_64 gen(321);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 60);
        const double r = 0.15 + 0.5 * static_cast<double>(gen() % 100) / 100.0;
        const Graph g = testing::randomGeometric(2, n, r, gen());
        for (auto order : {RemovalOrder::Worklist, RemovalOrder::LowestId, RemovalOrder::Random}) {
            const auto rec = dismantle(g, order, static_cast<std::uint64_t>(trial));
            CAPTURE(trial);
            REQUIRE(replayWithOracle(g, rec));
            CHECK(verifyRecord(g, rec));
            CHECK(rec.complete == oracle::dismantlable(testing::toAdjacency(g)));
        }
    }
}

TEST_CASE("lowest-id order removes the smallest dominated vertex")
{
    const Graph g = testing::randomGeometric(2, 30, 0.35, 44);
    const auto rec = dismantle(g, RemovalOrder::LowestId);
    const auto adj = testing::toAdjacency(g);
    std::set<int> alive;
    for (int v = 0; v < 30; ++v) alive.insert(v);
    for (const auto& s : rec.steps) {
        int first = -1;
        for (int v : alive)
            if (oracle::dominated(adj, alive, v)) {
                first = v;
                break;
            }
        REQUIRE(first == s.removed);
        alive.erase(s.removed);
    }
}

TEST_CASE("dismantlability is independent of the removal order")
{
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 5 + static_cast<int>(gen() % 80);
        const Graph g = testing::randomGeometric(2, n, 0.2 + 0.3 * static_cast<double>(gen() % 100) / 100.0, gen());
        const auto base = dismantle(g);
        for (std::uint64_t s = 0; s < 20; ++s) {
            const auto rec = dismantle(g, RemovalOrder::Random, s);
            REQUIRE(rec.complete == base.complete);
            CHECK(rec.residual.size() == base.residual.size());
        }
    }
}

TEST_CASE("verifyRecord rejects a tampered record")
{
    const Graph g = pathGraph(4);
    auto rec = dismantle(g);
    REQUIRE(verifyRecord(g, rec));
    auto bad = rec;
    bad.steps[0].dominator = bad.steps[0].removed;
    CHECK_FALSE(verifyRecord(g, bad));
    bad = rec;
    bad.residual.push_back(99);
    CHECK_FALSE(verifyRecord(g, bad));
    CHECK_FALSE(verifyRecord(cycleGraph(4), rec));
}

TEST_CASE("certification verdicts")
{
    const Graph k10 = completeGraph(10);
    CHECK((certifyContractible(k10, dismantle(k10), 3).verdict == Verdict::CertifiedContractible));

    const Graph c4 = cycleGraph(4);
    const auto refuted = certifyContractible(c4, dismantle(c4), 3);
    CHECK((refuted.verdict == Verdict::Refuted));
    REQUIRE(refuted.coreProfile);
    CHECK(refuted.coreProfile->betti.at(1) == 1);

    // The 16-cell boundary is a flag 3-sphere; below dimension 3 it looks like a point.
    const Graph s3 = crossPolytopeGraph(4);
    const auto rec = dismantle(s3);
    CHECK_FALSE(rec.complete);
    const auto inc = certifyContractible(s3, rec, 2);
    CHECK((inc.verdict == Verdict::Inconclusive));
    CHECK((certifyContractible(s3, rec, 4).verdict == Verdict::Refuted));
    CHECK((certifyContractible(s3, rec, 4, 10).verdict == Verdict::Inconclusive));
    CHECK(toString(Verdict::Refuted) == "refuted");
}

TEST_CASE("the core keeps the homology of the whole graph")
{
    // A 6-cycle with pendant trees: the core is the cycle.
    std::vector<Edge> e;
    for (int i = 0; i < 6; ++i) e.emplace_back(i, (i + 1) % 6);
    e.emplace_back(0, 6);
    e.emplace_back(6, 7);
    e.emplace_back(3, 8);
    const Graph g(9, e);
    const auto rec = dismantle(g);
    CHECK(rec.residual.size() == 6);
    const auto cert = certifyContractible(g, rec, 3);
    CHECK((cert.verdict == Verdict::Refuted));
    CHECK(cert.coreSize == 6);
}

TEST_CASE("record JSON round trip")
{
    const Graph g = testing::randomGeometric(2, 40, 0.3, 9);
    const auto rec = dismantle(g);
    CHECK(recordFromJson(toJson(rec)) == rec);
}

TEST_CASE("pursuit on small graphs")
{
    const Graph k2 = completeGraph(2);
    const auto t = pursue(k2, dismantle(k2), RobberStrategy::GreedyEscape);
    CHECK(t.captured);
    CHECK(t.turns <= 1);

    // Lowest-id order leaves the center 5 as the cop's start.
    const Graph star = starGraph(5, 5);
    const auto rec = dismantle(star, RemovalOrder::LowestId);
    REQUIRE(rec.residual == std::vector<VertexId>{5});
    for (auto robber : {RobberStrategy::GreedyEscape, RobberStrategy::UniformRandom}) {
        const auto p = pursue(star, rec, robber, 3);
        CHECK(p.captured);
        CHECK(p.turns <= 1);
    }
    const Graph c4 = cycleGraph(4);
    CHECK_THROWS(pursue(c4, dismantle(c4), RobberStrategy::GreedyEscape));
}

TEST_CASE("pursuit transcripts are legal and end in capture")
{
    std::mt19937_64 gen(55);
    int games = 0;
    while (games < 60) {
        const int n = 2 + static_cast<int>(gen() % 150);
        const Graph g = testing::randomGeometric(2, n, 0.25, gen());
        const auto rec = dismantle(g);
        if (!rec.complete) continue;
        ++games;
        for (auto robber : {RobberStrategy::GreedyEscape, RobberStrategy::UniformRandom}) {
            const auto t = pursue(g, rec, robber, gen());
            REQUIRE(t.captured);
            CHECK(t.turns <= g.size());
            for (std::size_t i = 1; i < t.copPositions.size(); ++i) {
                const auto a = t.copPositions[i - 1], b = t.copPositions[i];
                CHECK((a == b || g.adjacency(a).test(static_cast<std::size_t>(b))));
            }
            for (std::size_t i = 1; i < t.robberPositions.size(); ++i) {
                const auto a = t.robberPositions[i - 1], b = t.robberPositions[i];
                CHECK((a == b || g.adjacency(a).test(static_cast<std::size_t>(b))));
            }
            const auto last = t.copPositions.back(), prey = t.robberPositions.back();
            CHECK((last == prey || g.adjacency(last).test(static_cast<std::size_t>(prey))));
        }
    }
}
