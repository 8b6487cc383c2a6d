#include "vrlab/dismantle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

#include "vrlab/error.hpp"
#include "vrlab/rng.hpp"

namespace vrlab {

namespace {

// Working state of a dismantling: closed neighborhoods restricted to the
// surviving vertices, plus the current dominator of every dominated vertex.
class Dismantler {
public:
    explicit Dismantler(const Graph& g) : g_(g), closed_(g.size()), dominator_(g.size(), -1), alive_(g.size())
    {
        alive_.setAll();
        for (std::size_t v = 0; v < g.size(); ++v) closed_[v] = closedNeighborhoodBits(g, static_cast<VertexId>(v));
    }

    VertexId findDominator(VertexId v) const
    {
        const DynamicBitset& nv = closed_[static_cast<std::size_t>(v)];
        VertexId found = -1;
        for (VertexId w : g_.neighbors(v)) {
            if (!alive_.test(static_cast<std::size_t>(w))) continue;
            if (nv.isSubsetOf(closed_[static_cast<std::size_t>(w)])) {
                found = w;
                break;
            }
        }
        return found;
    }

    // Removes v and returns the surviving neighbors whose status must be re-derived.
    std::vector<VertexId> remove(VertexId v)
    {
        alive_.reset(static_cast<std::size_t>(v));
        std::vector<VertexId> touched;
        for (VertexId u : g_.neighbors(v)) {
            if (!alive_.test(static_cast<std::size_t>(u))) continue;
            closed_[static_cast<std::size_t>(u)].reset(static_cast<std::size_t>(v));
            // A dominator other than v keeps dominating u after v leaves.
            const VertexId d = dominator_[static_cast<std::size_t>(u)];
            if (d == -1 || d == v) touched.push_back(u);
        }
        dominator_[static_cast<std::size_t>(v)] = -1;
        return touched;
    }

    VertexId& dominator(VertexId v) { return dominator_[static_cast<std::size_t>(v)]; }
    const DynamicBitset& alive() const { return alive_; }

private:
    const Graph& g_;
    std::vector<DynamicBitset> closed_;
    std::vector<VertexId> dominator_;
    DynamicBitset alive_;
};

// Set of dominated vertices supporting lowest-id and uniform random extraction.
class Candidates {
public:
    explicit Candidates(std::size_t n) : pos_(n, npos) {}

    void insert(VertexId v)
    {
        if (pos_[static_cast<std::size_t>(v)] != npos) return;
        pos_[static_cast<std::size_t>(v)] = items_.size();
        items_.push_back(v);
        ordered_.insert(v);
    }
    void erase(VertexId v)
    {
        const std::size_t p = pos_[static_cast<std::size_t>(v)];
        if (p == npos) return;
        const VertexId last = items_.back();
        items_[p] = last;
        pos_[static_cast<std::size_t>(last)] = p;
        items_.pop_back();
        pos_[static_cast<std::size_t>(v)] = npos;
        ordered_.erase(v);
    }
    bool empty() const { return items_.empty(); }
    VertexId lowest() const { return *ordered_.begin(); }
    VertexId random(Rng& rng) const { return items_[rng.below(items_.size())]; }

private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> pos_;
    std::vector<VertexId> items_;
    std::set<VertexId> ordered_;
};

std::vector<int> bfsDistances(const Graph& g, VertexId src)
{
    std::vector<int> dist(g.size(), std::numeric_limits<int>::max());
    std::deque<VertexId> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u))
            if (dist[static_cast<std::size_t>(w)] == std::numeric_limits<int>::max()) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

}  // namespace

namespace {

EliminationRecord dismantleEager(const Graph& g, RemovalOrder order, std::uint64_t seed)
{
    const std::size_t n = g.size();
    Dismantler state(g);
    Candidates dominated(n);
    for (std::size_t v = 0; v < n; ++v) {
        const VertexId w = state.findDominator(static_cast<VertexId>(v));
        state.dominator(static_cast<VertexId>(v)) = w;
        if (w != -1) dominated.insert(static_cast<VertexId>(v));
    }

    EliminationRecord rec;
    rec.vertexCount = n;
    Rng rng(seed);
    std::size_t remaining = n;
    while (remaining > 1 && !dominated.empty()) {
        const VertexId v = order == RemovalOrder::LowestId ? dominated.lowest() : dominated.random(rng);
        rec.steps.push_back({v, state.dominator(v)});
        dominated.erase(v);
        for (VertexId u : state.remove(v)) {
            const VertexId w = state.findDominator(u);
            state.dominator(u) = w;
            if (w != -1) dominated.insert(u);
            else dominated.erase(u);
        }
        --remaining;
    }
    state.alive().forEach([&](std::size_t v) { rec.residual.push_back(static_cast<VertexId>(v)); });
    return rec;
}

EliminationRecord dismantleWorklist(const Graph& g)
{
    enum class Status : std::uint8_t { Suspect, Dominated, Clear };
    const std::size_t n = g.size();
    Dismantler state(g);
    std::vector<Status> status(n, Status::Suspect);
    std::vector<VertexId> suspects;
    std::vector<VertexId> dominated;
    suspects.reserve(n);
    for (std::size_t v = n; v-- > 0;) suspects.push_back(static_cast<VertexId>(v));

    EliminationRecord rec;
    rec.vertexCount = n;
    std::size_t remaining = n;
    while (remaining > 1) {
        if (!dominated.empty()) {
            const VertexId v = dominated.back();
            dominated.pop_back();
            if (!state.alive().test(static_cast<std::size_t>(v)) || status[static_cast<std::size_t>(v)] != Status::Dominated)
                continue;
            rec.steps.push_back({v, state.dominator(v)});
            for (VertexId u : state.remove(v)) {
                if (status[static_cast<std::size_t>(u)] == Status::Suspect) continue;
                status[static_cast<std::size_t>(u)] = Status::Suspect;
                suspects.push_back(u);
            }
            --remaining;
            continue;
        }
        if (suspects.empty()) break;
        const VertexId u = suspects.back();
        suspects.pop_back();
        if (!state.alive().test(static_cast<std::size_t>(u)) || status[static_cast<std::size_t>(u)] != Status::Suspect) continue;
        const VertexId w = state.findDominator(u);
        state.dominator(u) = w;
        if (w != -1) {
            status[static_cast<std::size_t>(u)] = Status::Dominated;
            dominated.push_back(u);
        } else {
            status[static_cast<std::size_t>(u)] = Status::Clear;
        }
    }
    state.alive().forEach([&](std::size_t v) { rec.residual.push_back(static_cast<VertexId>(v)); });
    return rec;
}

}  // namespace

EliminationRecord dismantle(const Graph& g, RemovalOrder order, std::uint64_t seed)
{
    if (g.size() == 0) throw PreconditionError("dismantle: graph is empty");
    EliminationRecord rec = order == RemovalOrder::Worklist ? dismantleWorklist(g) : dismantleEager(g, order, seed);
    rec.complete = rec.residual.size() == 1;
    return rec;
}

bool isCopwin(const Graph& g)
{
    return dismantle(g).complete;
}

bool verifyRecord(const Graph& g, const EliminationRecord& rec)
{
    const std::size_t n = g.size();
    if (rec.vertexCount != n) return false;
    DynamicBitset alive(n);
    alive.setAll();
    for (const auto& step : rec.steps) {
        const auto v = static_cast<std::size_t>(step.removed);
        const auto w = static_cast<std::size_t>(step.dominator);
        if (step.removed < 0 || step.dominator < 0 || v >= n || w >= n || v == w) return false;
        if (!alive.test(v) || !alive.test(w)) return false;
        if (!closedNeighborhoodBits(g, step.removed).isSubsetOf(closedNeighborhoodBits(g, step.dominator), alive)) return false;
        alive.reset(v);
    }
    std::vector<VertexId> left;
    alive.forEach([&](std::size_t v) { left.push_back(static_cast<VertexId>(v)); });
    return left == rec.residual && rec.complete == (left.size() == 1);
}

std::string toString(Verdict v)
{
    switch (v) {
    case Verdict::CertifiedContractible:
        return "certified-contractible";
    case Verdict::Refuted:
        return "refuted";
    case Verdict::Inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

Certification certifyContractible(const Graph& g, const EliminationRecord& rec, int dimCap, std::size_t oracleBudget)
{
    Certification out;
    out.coreSize = rec.residual.size();
    if (rec.complete) {
        out.verdict = Verdict::CertifiedContractible;
        out.evidence = "dismantled to a single vertex in " + std::to_string(rec.steps.size()) + " steps";
        return out;
    }
    const Graph core = g.induced(rec.residual);
    try {
        const auto complex = enumerateCliques(core, dimCap, oracleBudget);
        out.coreProfile = bettiProfile(complex);
    } catch (const ComplexBudgetExceeded& e) {
        out.verdict = Verdict::Inconclusive;
        out.evidence = std::string("homology oracle over budget: ") + e.what();
        return out;
    }
    if (hasNontrivialReducedHomology(*out.coreProfile)) {
        out.verdict = Verdict::Refuted;
        out.evidence = "nonzero reduced GF(2) Betti number on the residual core";
    } else {
        out.verdict = Verdict::Inconclusive;
        out.evidence = out.coreProfile->truncated ? "core not dismantlable; truncated Betti profile is point-like"
                                                  : "core not dismantlable; Betti profile is point-like";
    }
    return out;
}

PursuitTranscript pursue(const Graph& g, const EliminationRecord& rec, RobberStrategy robber, std::uint64_t seed)
{
    if (!rec.complete) throw PreconditionError("pursue: elimination record is not complete (graph not cop-win)");
    if (rec.vertexCount != g.size()) throw PreconditionError("pursue: record does not match graph");
    const std::size_t n = g.size();
    const std::size_t levels = rec.steps.size();

    // removedAt[v]: index of the step deleting v; mapsTo[v]: its dominator.
    std::vector<std::size_t> removedAt(n, levels);
    std::vector<VertexId> mapsTo(n, -1);
    for (std::size_t i = 0; i < levels; ++i) {
        removedAt[static_cast<std::size_t>(rec.steps[i].removed)] = i;
        mapsTo[static_cast<std::size_t>(rec.steps[i].removed)] = rec.steps[i].dominator;
    }
    // Image of x under the composite retraction onto G_k (first k deletions applied).
    auto shadow = [&](std::size_t k, VertexId x) {
        while (removedAt[static_cast<std::size_t>(x)] < k) x = mapsTo[static_cast<std::size_t>(x)];
        return x;
    };
    auto movable = [&](VertexId from, VertexId to) { return from == to || g.hasEdge(from, to); };

    Rng rng(seed);
    PursuitTranscript t;
    VertexId cop = rec.residual.front();
    VertexId rob = cop;
    if (n > 1) {
        if (robber == RobberStrategy::GreedyEscape) {
            const auto dist = bfsDistances(g, cop);
            for (std::size_t v = 0; v < n; ++v)
                if (dist[v] > dist[static_cast<std::size_t>(rob)]) rob = static_cast<VertexId>(v);
        } else {
            rob = static_cast<VertexId>(rng.below(n - 1));
            if (rob >= cop) ++rob;
        }
    }
    t.copPositions.push_back(cop);
    t.robberPositions.push_back(rob);

    std::size_t level = levels;
    auto descend = [&] {
        while (level > 0 && shadow(level - 1, rob) == cop) --level;
    };
    descend();

    while (cop != rob) {
        if (t.turns > n) throw std::logic_error("pursue: retract strategy exceeded |V| moves");
        VertexId next;
        if (movable(cop, rob)) {
            next = rob;
        } else {
            next = shadow(level - 1, rob);
            --level;
        }
        if (!movable(cop, next)) throw std::logic_error("pursue: shadow left the cop's closed neighborhood");
        cop = next;
        ++t.turns;
        t.copPositions.push_back(cop);
        if (cop == rob) break;
        descend();

        const auto nb = g.neighbors(rob);
        if (robber == RobberStrategy::GreedyEscape) {
            const auto dist = bfsDistances(g, cop);
            VertexId best = rob;
            for (VertexId w : nb)
                if (w != cop && dist[static_cast<std::size_t>(w)] > dist[static_cast<std::size_t>(best)]) best = w;
            rob = best;
        } else {
            std::vector<VertexId> options{rob};
            for (VertexId w : nb)
                if (w != cop) options.push_back(w);
            rob = options[rng.below(options.size())];
        }
        t.robberPositions.push_back(rob);
        descend();
    }
    t.captured = cop == rob;
    return t;
}

nlohmann::json toJson(const EliminationRecord& rec)
{
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : rec.steps) steps.push_back({s.removed, s.dominator});
    return {{"vertex_count", rec.vertexCount}, {"steps", steps}, {"residual", rec.residual}, {"complete", rec.complete}};
}

EliminationRecord recordFromJson(const nlohmann::json& j)
{
    EliminationRecord rec;
    rec.vertexCount = j.at("vertex_count").get<std::size_t>();
    for (const auto& s : j.at("steps")) rec.steps.push_back({s.at(0).get<VertexId>(), s.at(1).get<VertexId>()});
    rec.residual = j.at("residual").get<std::vector<VertexId>>();
    rec.complete = j.at("complete").get<bool>();
    return rec;
}

nlohmann::json toJson(const PursuitTranscript& t)
{
    return {{"cop_moves", t.copPositions}, {"robber_moves", t.robberPositions}, {"captured", t.captured}, {"turns", t.turns}};
}

nlohmann::json toJson(const Certification& c)
{
    nlohmann::json j = {{"verdict", toString(c.verdict)}, {"core_size", c.coreSize}, {"evidence", c.evidence}};
    j["core_profile"] = c.coreProfile ? toJson(*c.coreProfile) : nlohmann::json(nullptr);
    return j;
}

}  // namespace vrlab
