#pragma once

#include "hedonic/core.hpp"

namespace hedonic {

/// Best coalitions for a player inside a fixed context: the subsets of
/// `context` containing `player` that the player weakly prefers to every
/// other such subset. Ascending by mask.
struct ChoiceSetResult {
    PlayerId player;
    Coalition context;
    std::vector<Coalition> maximizers;
};

/// Worst coalitions for a player inside a fixed context, mirroring
/// ChoiceSetResult at the bottom of the order.
struct AvoidSetResult {
    PlayerId player;
    Coalition context;
    std::vector<Coalition> minimizers;
};

/// Locates the first failure in the canonical scan order: players ascending,
/// contexts (and context pairs) ascending by mask. Condition numbers:
///   top responsiveness      1 = several best subsets, 2 = better choice set
///                           must lift the context, 3 = equal choice sets must
///                           rank the smaller context higher
///   bottom responsiveness   1 = strictly worse avoid sets must sink the
///                           context, 2 = shared avoid set + larger context
///                           must rank weakly higher
///   strong bottom           3 = several worst subsets
///   mutuality (top/bottom)  4 = one-sided choice/avoid membership, with
///                           `other` naming the partner
struct RestrictionWitness {
    int condition = 0;
    PlayerId player = 0;
    std::optional<PlayerId> other;
    Coalition context;
    std::optional<Coalition> second;
};

struct RestrictionVerdict {
    bool holds = false;
    std::optional<RestrictionWitness> witness;
};

std::string restriction_witness_text(const RestrictionWitness& w);

ChoiceSetResult choice_sets(const PreferenceProfile& profile, PlayerId player, Coalition context);
AvoidSetResult avoid_sets(const PreferenceProfile& profile, PlayerId player, Coalition context);

RestrictionVerdict is_top_responsive(const PreferenceProfile& profile, int cap = kRestrictionCap);

/// Requires a top responsive profile (PreconditionError otherwise). Checks
/// that choice-set membership between any two players is always two-sided.
RestrictionVerdict is_mutual_top(const PreferenceProfile& profile, int cap = kRestrictionCap);

RestrictionVerdict is_bottom_responsive(const PreferenceProfile& profile, int cap = kRestrictionCap);

/// Bottom responsiveness plus a unique avoid set in every context.
RestrictionVerdict is_strong_bottom_responsive(const PreferenceProfile& profile, int cap = kRestrictionCap);

/// Requires a strong bottom responsive profile (PreconditionError otherwise).
RestrictionVerdict is_mutual_bottom(const PreferenceProfile& profile, int cap = kRestrictionCap);

}  // namespace hedonic
