#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vrlab/complex.hpp"
#include "vrlab/proximity.hpp"

namespace vrlab {

/// One deletion: N[removed] ⊆ N[dominator] in the graph induced on the
/// vertices still present at that point.
struct EliminationStep {
    VertexId removed = -1;
    VertexId dominator = -1;

    bool operator==(const EliminationStep&) const = default;
};

/// Dominated-vertex dismantling of a graph; a certificate of contractibility
/// when complete.
struct EliminationRecord {
    std::size_t vertexCount = 0;
    std::vector<EliminationStep> steps;
    std::vector<VertexId> residual;
    bool complete = false;

    bool operator==(const EliminationRecord&) const = default;
};

enum class RemovalOrder {
    /// Re-examine only vertices whose neighborhood changed, most recent first,
    /// and only when no known dominated vertex is left.
    Worklist,
    LowestId,  ///< always delete the lowest-id dominated vertex
    Random,    ///< delete a uniformly random dominated vertex (seeded)
};

/// Delete dominated vertices until none is left.
EliminationRecord dismantle(const Graph& g, RemovalOrder order = RemovalOrder::Worklist, std::uint64_t seed = 0);

bool isCopwin(const Graph& g);

/// Replay `record` against g and confirm every witness and the residual.
bool verifyRecord(const Graph& g, const EliminationRecord& record);

enum class Verdict { CertifiedContractible, Refuted, Inconclusive };

std::string toString(Verdict v);

struct Certification {
    Verdict verdict = Verdict::Inconclusive;
    /// Homology of the clique complex of the residual core, when computed.
    std::optional<BettiProfile> coreProfile;
    std::size_t coreSize = 0;
    std::string evidence;
};

/// Complete record ⇒ certified contractible. Otherwise the homology oracle runs
/// on the residual core (same homotopy type as the full complex): nonzero
/// reduced Betti ⇒ refuted, anything else ⇒ inconclusive.
Certification certifyContractible(const Graph& g, const EliminationRecord& record, int dimCap,
                                  std::size_t oracleBudget = kDefaultSimplexBudget);

enum class RobberStrategy {
    GreedyEscape,   ///< step to the vertex of N[robber] farthest from the cop
    UniformRandom,  ///< step to a uniform vertex of N[robber] other than the cop's
};

struct PursuitTranscript {
    std::vector<VertexId> copPositions;
    std::vector<VertexId> robberPositions;
    bool captured = false;
    /// Number of cop moves played.
    std::size_t turns = 0;
};

/// Play the game with the cop following the retraction G → G_k induced by the
/// elimination order. Requires record.complete.
PursuitTranscript pursue(const Graph& g, const EliminationRecord& record, RobberStrategy robber, std::uint64_t seed = 0);

nlohmann::json toJson(const EliminationRecord& record);
EliminationRecord recordFromJson(const nlohmann::json& j);
nlohmann::json toJson(const PursuitTranscript& t);
nlohmann::json toJson(const Certification& c);

}  // namespace vrlab
