#pragma once

#include <functional>

#include "hedonic/game_classes.hpp"
#include "hedonic/stability.hpp"

namespace hedonic {

/// Default exhaustive-scan ceiling for a concept: checks that enumerate
/// candidate partitions per partition get one player less headroom.
int oracle_cap(StabilityConcept c);

/// Every partition satisfying the concept, in enumeration order.
std::vector<Partition> all_stable(const PreferenceProfile& profile, StabilityConcept c,
                                  std::optional<int> cap_override = std::nullopt);

/// Early-exit existence query; candidates are tried largest size vector
/// first, since stable partitions tend to sit high in that order.
bool exists_stable(const PreferenceProfile& profile, StabilityConcept c,
                   std::optional<int> cap_override = std::nullopt);

struct OracleReport {
    std::string game_id;
    int n = 0;
    struct ConceptEntry {
        StabilityConcept tag;
        std::vector<Partition> stable;
        double seconds = 0.0;
    };
    std::vector<ConceptEntry> entries;
    double total_seconds = 0.0;
};

/// Full scan over all ten concepts with per-concept timing.
OracleReport survey_stability(const PreferenceProfile& profile, std::string game_id,
                              std::optional<int> cap_override = std::nullopt);

/// A seeded slice of one random family; seed s gets n_min + (s-1) % span
/// players, so a budget sweeps sizes round-robin.
struct FamilySpec {
    RandomKind kind;
    int n_min = 0;
    int n_max = 0;
};

using GamePredicate = std::function<bool(const GameSpec&, const PreferenceProfile&)>;

/// First game (by seed, 1..budget) of the family satisfying the predicate.
std::optional<GameSpec> search_counterexample(const FamilySpec& family, const GamePredicate& predicate,
                                              int budget);

}  // namespace hedonic
