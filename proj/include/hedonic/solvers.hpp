#pragma once

#include "hedonic/core.hpp"
#include "hedonic/stability.hpp"

namespace hedonic {

/// Directed edges i -> j for j a member of i's unique choice set inside the
/// context, listed for every member i of the context.
struct NeighborRelation {
    Coalition context;
    std::vector<std::pair<PlayerId, PlayerId>> edges;
};

/// Requires unique choice sets for the context's members (PreconditionError
/// otherwise).
NeighborRelation neighbor_relation(const PreferenceProfile& profile, Coalition context);

/// Players reachable from `start` along chains of choice-set membership
/// inside `context`. Throws PreconditionError when a visited player has
/// several best subsets of the context.
Coalition connected_component(const PreferenceProfile& profile, PlayerId start, Coalition context);

struct TcaRound {
    int round = 0;          // 1-based
    Coalition remaining;    // players still unassigned at the start
    PlayerId selected = 0;  // lowest-index player with the smallest component
    Coalition component;    // extracted block
};

struct TcaTrace {
    std::vector<TcaRound> rounds;
};

struct TcaResult {
    Partition partition;
    TcaTrace trace;
};

/// Repeatedly extracts the smallest connected component of the remaining
/// players (ties to the lowest index). Requires a top responsive profile.
TcaResult top_covering(const PreferenceProfile& profile, int cap = kRestrictionCap);

/// True when every player's best subset of the full player set sits inside
/// the player's block.
bool top_choices_contained(const PreferenceProfile& profile, const Partition& p);

enum class DynamicsMode { IndividualStability, StrongIndividualStability };

struct DynamicsStep {
    Partition from;
    Coalition movers;
    Partition to;
};

struct DynamicsTrace {
    std::vector<DynamicsStep> steps;
    std::vector<SizeVector> potentials;  // one per visited partition
};

struct DynamicsResult {
    Partition partition;
    DynamicsTrace trace;
};

/// Runs myopic deviations from the all-singletons partition until none is
/// admissible. Requires a bottom responsive profile. Scheduling is
/// deterministic: mover sets smallest-first (ascending mask within a size),
/// single-player targets in canonical block order with the empty coalition
/// last, candidate partitions in enumeration order; the first admissible
/// deviation is taken. Every step grows the size vector, so the step count
/// never exceeds the number of integer partitions of n.
DynamicsResult deviation_dynamics(const PreferenceProfile& profile, DynamicsMode mode,
                                  int cap = kGroupSearchCap);

/// Number of integer partitions of n: the hard ceiling on dynamics steps.
long integer_partition_count(int n);

/// Largest individually-rational-by-singleton-avoidance partition in the
/// size-vector order: among partitions where each player's unique worst
/// subset of the own block is the singleton, returns the first maximal one
/// in enumeration order. Requires strong bottom responsiveness and mutual
/// avoid sets.
Partition find_gdot_maximal_ir(const PreferenceProfile& profile, int cap = kEnumerationCap);

}  // namespace hedonic
