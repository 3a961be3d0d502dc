#pragma once

#include <array>
#include <string_view>

#include "hedonic/core.hpp"

namespace hedonic {

enum class StabilityConcept { IR, Perfect, NS, IS, Core, StrictCore, PO, SNS, SSNS, SIS };

inline constexpr std::array<StabilityConcept, 10> kAllConcepts = {
    StabilityConcept::IR,   StabilityConcept::Perfect, StabilityConcept::NS,  StabilityConcept::IS,
    StabilityConcept::Core, StabilityConcept::StrictCore, StabilityConcept::PO, StabilityConcept::SNS,
    StabilityConcept::SSNS, StabilityConcept::SIS};

std::string_view concept_tag(StabilityConcept c);
std::optional<StabilityConcept> concept_from_tag(std::string_view tag);  // case-insensitive

enum class WitnessKind { SingleMove, GroupMove, BlockingCoalition, ParetoDominator };

/// Self-validating evidence for an unstable verdict. `successor` always holds
/// a full partition so the violation can be replayed with compare() alone:
///   SingleMove / GroupMove   reachable(partition, successor, movers) holds
///                            and the movers gain as the concept demands
///   BlockingCoalition        movers is the (weakly) blocking coalition and
///                            successor carves it out of the partition
///   ParetoDominator          successor weakly improves every player and
///                            movers lists the strict gainers
/// `focal` names one player whose strict gain certifies the violation.
struct DeviationWitness {
    WitnessKind kind;
    Coalition movers;
    Partition successor;
    std::optional<PlayerId> focal;
};

struct StabilityVerdict {
    bool stable = false;
    std::optional<DeviationWitness> witness;
};

std::string witness_text(const DeviationWitness& w);

/// True when the move from `from` to `to` only regroups players in `movers`:
/// any two players outside `movers` are together in `to` exactly when they
/// are together in `from`. Requires non-empty movers and to != from.
bool reachable(const Partition& from, const Partition& to, Coalition movers);

StabilityVerdict is_individually_rational(const PreferenceProfile& profile, const Partition& p);
StabilityVerdict is_perfect(const PreferenceProfile& profile, const Partition& p);
StabilityVerdict is_nash_stable(const PreferenceProfile& profile, const Partition& p);
StabilityVerdict is_individually_stable(const PreferenceProfile& profile, const Partition& p);
StabilityVerdict is_core_stable(const PreferenceProfile& profile, const Partition& p);
StabilityVerdict is_strict_core_stable(const PreferenceProfile& profile, const Partition& p);

/// The remaining checks enumerate candidate partitions and honor `cap`.
StabilityVerdict is_pareto_optimal(const PreferenceProfile& profile, const Partition& p,
                                   int cap = kGroupSearchCap);
StabilityVerdict is_strong_nash_stable(const PreferenceProfile& profile, const Partition& p,
                                       int cap = kGroupSearchCap);
StabilityVerdict is_strict_strong_nash_stable(const PreferenceProfile& profile, const Partition& p,
                                              int cap = kGroupSearchCap);
StabilityVerdict is_strong_individually_stable(const PreferenceProfile& profile, const Partition& p,
                                               int cap = kGroupSearchCap);

StabilityVerdict check_stability(const PreferenceProfile& profile, const Partition& p, StabilityConcept c,
                                 int cap = kGroupSearchCap);

/// One implication edge of the stability lattice, e.g. SNS => NS.
struct HierarchyEdge {
    StabilityConcept antecedent;
    StabilityConcept consequent;
};

const std::vector<HierarchyEdge>& hierarchy_edges();

struct HierarchyViolation {
    Partition partition;
    StabilityConcept antecedent;
    StabilityConcept consequent;
};

/// Evaluates all ten concepts on every partition of the profile's player set
/// and reports each broken implication edge. Empty result = lattice sound.
std::vector<HierarchyViolation> check_hierarchy(const PreferenceProfile& profile, int cap = kHierarchyCap);

namespace detail {
/// Group-search internals shared with the solvers and the oracle; `universe`
/// must be all_partitions(n) in enumeration order.
StabilityVerdict pareto_optimal_in(const PreferenceProfile&, const Partition&, const std::vector<Partition>& universe);
StabilityVerdict strong_nash_in(const PreferenceProfile&, const Partition&, const std::vector<Partition>& universe);
StabilityVerdict strict_strong_nash_in(const PreferenceProfile&, const Partition&,
                                       const std::vector<Partition>& universe);
StabilityVerdict strong_individually_stable_in(const PreferenceProfile&, const Partition&,
                                               const std::vector<Partition>& universe);
StabilityVerdict check_stability_in(const PreferenceProfile&, const Partition&, StabilityConcept,
                                    const std::vector<Partition>& universe);
}  // namespace detail

}  // namespace hedonic
