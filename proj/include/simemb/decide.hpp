#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "simemb/core.hpp"
#include "simemb/graph.hpp"
#include "simemb/structures.hpp"

namespace simemb {

enum class Verdict { Yes, No, Unknown };
enum class Certificate { None, ExhaustedSearch, NonPlanarSubdivisionCore };

std::string_view to_string(Verdict v);
std::string_view to_string(Certificate c);

inline constexpr std::int64_t kDefaultBudget = 1'000'000;

struct StrongDecision {
    Verdict verdict = Verdict::Unknown;
    std::optional<SupportGraph> witness;
    Certificate certificate = Certificate::None;
    /// Core graph on the blocks of one partition when the certificate is
    /// NonPlanarSubdivisionCore.
    std::optional<SimpleGraph> core;
    std::int64_t budget_spent = 0;
};

struct HierarchyReport {
    bool weak = true;
    bool full = false;
    StrongDecision strong;
};

bool decide_weak(const PartitionPair& pair);
bool decide_full(const PartitionPair& pair);

/// Returns a non-planar core whose 1-subdivision is an induced subgraph of the
/// block intersection graph, or nothing.
std::optional<SimpleGraph> subdivision_negative_certificate(const PartitionPair& pair);

/// Planar support derived from a planar embedding of the bipartite map, or
/// nothing if the bipartite map is not planar.
std::optional<SupportGraph> support_from_bipartite_map(const PartitionPair& pair);

/// Exhaustive search over unions of one spanning tree per block. Never uses
/// the certificate or the bipartite-map shortcut. budget < 0 means unbounded.
StrongDecision spanning_tree_search(const PartitionPair& pair, std::int64_t budget = kDefaultBudget);

/// Certificate, then bipartite-map shortcut, then spanning_tree_search.
StrongDecision decide_strong(const PartitionPair& pair, std::int64_t budget = kDefaultBudget);

/// Tries every subset of candidate_edges(pair). Throws TooLarge when there are
/// more than max_edges candidates.
bool decide_strong_bruteforce(const PartitionPair& pair, int max_edges = 22);

HierarchyReport classify(const PartitionPair& pair, std::int64_t budget = kDefaultBudget);

}  // namespace simemb
