#include "hedonic/stability.hpp"

#include <algorithm>
#include <cctype>

namespace hedonic {

namespace {

constexpr std::array<std::string_view, 10> kTags = {"IR", "PERFECT", "NS", "IS", "C",
                                                    "SC", "PO",      "SNS", "SSNS", "SIS"};

void require_same_game(const PreferenceProfile& profile, const Partition& p, const char* what) {
    if (profile.player_count() != p.player_count()) {
        throw std::invalid_argument(std::string(what) + ": partition and profile cover different player sets");
    }
}

void require_group_cap(const PreferenceProfile& profile, int cap, const char* what) {
    if (profile.player_count() > cap) {
        throw CapacityError(std::string(what) + ": n = " + std::to_string(profile.player_count()) +
                            " exceeds cap " + std::to_string(cap) + " (pass a larger cap to override)");
    }
}

StabilityVerdict stable() { return StabilityVerdict{true, std::nullopt}; }

StabilityVerdict unstable(DeviationWitness w) { return StabilityVerdict{false, std::move(w)}; }

/// Single-player moves in canonical order: players ascending, target blocks
/// in canonical block order, the empty coalition last. Calls fn(i, target)
/// until it returns true; target empty means "i becomes a singleton".
template <typename Fn>
bool scan_single_moves(const PreferenceProfile& profile, const Partition& p, Fn&& fn) {
    const int n = profile.player_count();
    for (PlayerId i = 1; i <= n; ++i) {
        const Coalition own = p.block_of(i);
        for (const Coalition& target : p.blocks()) {
            if (target == own) continue;
            if (fn(i, target)) return true;
        }
        if (own.size() > 1 && fn(i, Coalition())) return true;
    }
    return false;
}

}  // namespace

std::string_view concept_tag(StabilityConcept c) { return kTags[static_cast<size_t>(c)]; }

std::optional<StabilityConcept> concept_from_tag(std::string_view tag) {
    std::string upper(tag);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    for (size_t k = 0; k < kTags.size(); ++k) {
        if (upper == kTags[k]) return kAllConcepts[k];
    }
    if (upper == "CORE") return StabilityConcept::Core;
    return std::nullopt;
}

std::string witness_text(const DeviationWitness& w) {
    switch (w.kind) {
        case WitnessKind::SingleMove:
        case WitnessKind::GroupMove:
            return "H=" + w.movers.to_text() + " -> " + w.successor.to_text();
        case WitnessKind::BlockingCoalition:
            return "S=" + w.movers.to_text();
        case WitnessKind::ParetoDominator:
            return "dominator=" + w.successor.to_text();
    }
    return {};
}

bool reachable(const Partition& from, const Partition& to, Coalition movers) {
    if (from.player_count() != to.player_count()) {
        throw std::invalid_argument("reachable: partitions over different player sets");
    }
    if (movers.empty()) throw std::invalid_argument("reachable: empty mover set");
    if (!movers.subset_of(Coalition::full(from.player_count()))) {
        throw std::invalid_argument("reachable: movers outside {1..n}");
    }
    if (from == to) throw std::invalid_argument("reachable: partitions are identical");
    const int n = from.player_count();
    for (PlayerId i = 1; i <= n; ++i) {
        if (movers.contains(i)) continue;
        for (PlayerId j = i + 1; j <= n; ++j) {
            if (movers.contains(j)) continue;
            const bool before = from.block_index(i) == from.block_index(j);
            const bool after = to.block_index(i) == to.block_index(j);
            if (before != after) return false;
        }
    }
    return true;
}

StabilityVerdict is_individually_rational(const PreferenceProfile& profile, const Partition& p) {
    require_same_game(profile, p, "is_individually_rational");
    const int n = profile.player_count();
    for (PlayerId i = 1; i <= n; ++i) {
        if (profile.tier(i, Coalition::single(i)) < profile.tier(i, p.block_of(i))) {
            return unstable({WitnessKind::SingleMove, Coalition::single(i), p.moved(i, Coalition()), i});
        }
    }
    return stable();
}

StabilityVerdict is_perfect(const PreferenceProfile& profile, const Partition& p) {
    require_same_game(profile, p, "is_perfect");
    const int n = profile.player_count();
    for (PlayerId i = 1; i <= n; ++i) {
        const int current = profile.tier(i, p.block_of(i));
        for (const Coalition& s : coalitions_containing(i, n)) {
            if (profile.tier(i, s) < current) {
                return unstable({WitnessKind::BlockingCoalition, s, p.carved(s), i});
            }
        }
    }
    return stable();
}

StabilityVerdict is_nash_stable(const PreferenceProfile& profile, const Partition& p) {
    require_same_game(profile, p, "is_nash_stable");
    StabilityVerdict verdict = stable();
    scan_single_moves(profile, p, [&](PlayerId i, Coalition target) {
        if (profile.tier(i, target.with(i)) < profile.tier(i, p.block_of(i))) {
            verdict = unstable({WitnessKind::SingleMove, Coalition::single(i), p.moved(i, target), i});
            return true;
        }
        return false;
    });
    return verdict;
}

StabilityVerdict is_individually_stable(const PreferenceProfile& profile, const Partition& p) {
    require_same_game(profile, p, "is_individually_stable");
    StabilityVerdict verdict = stable();
    scan_single_moves(profile, p, [&](PlayerId i, Coalition target) {
        if (profile.tier(i, target.with(i)) >= profile.tier(i, p.block_of(i))) return false;
        for (PlayerId j : target.members()) {
            if (profile.tier(j, target.with(i)) > profile.tier(j, target)) return false;
        }
        verdict = unstable({WitnessKind::SingleMove, Coalition::single(i), p.moved(i, target), i});
        return true;
    });
    return verdict;
}

StabilityVerdict is_core_stable(const PreferenceProfile& profile, const Partition& p) {
    require_same_game(profile, p, "is_core_stable");
    const int n = profile.player_count();
    const std::uint32_t full = Coalition::full(n).mask();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const Coalition s(mask);
        bool blocks = true;
        for (PlayerId i : s.members()) {
            if (profile.tier(i, s) >= profile.tier(i, p.block_of(i))) {
                blocks = false;
                break;
            }
        }
        if (blocks) {
            return unstable({WitnessKind::BlockingCoalition, s, p.carved(s), s.min_member()});
        }
    }
    return stable();
}

StabilityVerdict is_strict_core_stable(const PreferenceProfile& profile, const Partition& p) {
    require_same_game(profile, p, "is_strict_core_stable");
    const int n = profile.player_count();
    const std::uint32_t full = Coalition::full(n).mask();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const Coalition s(mask);
        bool weakly_blocks = true;
        std::optional<PlayerId> strict;
        for (PlayerId i : s.members()) {
            const int now = profile.tier(i, p.block_of(i));
            const int then = profile.tier(i, s);
            if (then > now) {
                weakly_blocks = false;
                break;
            }
            if (then < now && !strict) strict = i;
        }
        if (weakly_blocks && strict) {
            return unstable({WitnessKind::BlockingCoalition, s, p.carved(s), *strict});
        }
    }
    return stable();
}

namespace detail {

StabilityVerdict pareto_optimal_in(const PreferenceProfile& profile, const Partition& p,
                                   const std::vector<Partition>& universe) {
    const int n = profile.player_count();
    for (const Partition& q : universe) {
        if (q == p) continue;
        Coalition strict;
        bool dominates = true;
        for (PlayerId i = 1; i <= n && dominates; ++i) {
            const int now = profile.tier(i, p.block_of(i));
            const int then = profile.tier(i, q.block_of(i));
            if (then > now) dominates = false;
            else if (then < now) strict = strict.with(i);
        }
        if (dominates && !strict.empty()) {
            return unstable({WitnessKind::ParetoDominator, strict, q, strict.min_member()});
        }
    }
    return stable();
}

/// Shared scan for the three group concepts: mover sets ascending by mask,
/// candidate partitions in enumeration order, first admissible pair wins.
///   all_strict   every mover must strictly gain
///   consent      every member of a mover's new block must weakly gain
///   need_strict  some mover must strictly gain (with all weakly gaining)
StabilityVerdict group_deviation_scan(const PreferenceProfile& profile, const Partition& p,
                                      const std::vector<Partition>& universe, bool all_strict, bool consent,
                                      WitnessKind kind) {
    const int n = profile.player_count();
    const std::uint32_t full = Coalition::full(n).mask();
    std::vector<int> current(n + 1);
    for (PlayerId i = 1; i <= n; ++i) current[i] = profile.tier(i, p.block_of(i));

    for (std::uint32_t h = 1; h <= full; ++h) {
        const Coalition movers(h);
        for (const Partition& q : universe) {
            if (q == p || !reachable(p, q, movers)) continue;
            bool ok = true;
            std::optional<PlayerId> strict;
            for (PlayerId i : movers.members()) {
                const int then = profile.tier(i, q.block_of(i));
                if (all_strict ? then >= current[i] : then > current[i]) {
                    ok = false;
                    break;
                }
                if (then < current[i] && !strict) strict = i;
            }
            if (!ok || !strict) continue;
            if (consent) {
                for (PlayerId i : movers.members()) {
                    for (PlayerId j : q.block_of(i).members()) {
                        if (profile.tier(j, q.block_of(j)) > current[j]) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
            if (ok) return unstable({kind, movers, q, strict});
        }
    }
    return stable();
}

StabilityVerdict strong_nash_in(const PreferenceProfile& profile, const Partition& p,
                                const std::vector<Partition>& universe) {
    return group_deviation_scan(profile, p, universe, true, false, WitnessKind::GroupMove);
}

StabilityVerdict strict_strong_nash_in(const PreferenceProfile& profile, const Partition& p,
                                       const std::vector<Partition>& universe) {
    return group_deviation_scan(profile, p, universe, false, false, WitnessKind::GroupMove);
}

StabilityVerdict strong_individually_stable_in(const PreferenceProfile& profile, const Partition& p,
                                               const std::vector<Partition>& universe) {
    return group_deviation_scan(profile, p, universe, true, true, WitnessKind::GroupMove);
}

StabilityVerdict check_stability_in(const PreferenceProfile& profile, const Partition& p, StabilityConcept c,
                                    const std::vector<Partition>& universe) {
    switch (c) {
        case StabilityConcept::IR: return is_individually_rational(profile, p);
        case StabilityConcept::Perfect: return is_perfect(profile, p);
        case StabilityConcept::NS: return is_nash_stable(profile, p);
        case StabilityConcept::IS: return is_individually_stable(profile, p);
        case StabilityConcept::Core: return is_core_stable(profile, p);
        case StabilityConcept::StrictCore: return is_strict_core_stable(profile, p);
        case StabilityConcept::PO: return pareto_optimal_in(profile, p, universe);
        case StabilityConcept::SNS: return strong_nash_in(profile, p, universe);
        case StabilityConcept::SSNS: return strict_strong_nash_in(profile, p, universe);
        case StabilityConcept::SIS: return strong_individually_stable_in(profile, p, universe);
    }
    throw std::invalid_argument("check_stability: unknown concept");
}

}  // namespace detail

StabilityVerdict is_pareto_optimal(const PreferenceProfile& profile, const Partition& p, int cap) {
    require_same_game(profile, p, "is_pareto_optimal");
    require_group_cap(profile, cap, "is_pareto_optimal");
    return detail::pareto_optimal_in(profile, p, all_partitions(profile.player_count(), cap));
}

StabilityVerdict is_strong_nash_stable(const PreferenceProfile& profile, const Partition& p, int cap) {
    require_same_game(profile, p, "is_strong_nash_stable");
    require_group_cap(profile, cap, "is_strong_nash_stable");
    return detail::strong_nash_in(profile, p, all_partitions(profile.player_count(), cap));
}

StabilityVerdict is_strict_strong_nash_stable(const PreferenceProfile& profile, const Partition& p, int cap) {
    require_same_game(profile, p, "is_strict_strong_nash_stable");
    require_group_cap(profile, cap, "is_strict_strong_nash_stable");
    return detail::strict_strong_nash_in(profile, p, all_partitions(profile.player_count(), cap));
}

StabilityVerdict is_strong_individually_stable(const PreferenceProfile& profile, const Partition& p, int cap) {
    require_same_game(profile, p, "is_strong_individually_stable");
    require_group_cap(profile, cap, "is_strong_individually_stable");
    return detail::strong_individually_stable_in(profile, p, all_partitions(profile.player_count(), cap));
}

StabilityVerdict check_stability(const PreferenceProfile& profile, const Partition& p, StabilityConcept c,
                                 int cap) {
    switch (c) {
        case StabilityConcept::PO:
        case StabilityConcept::SNS:
        case StabilityConcept::SSNS:
        case StabilityConcept::SIS: {
            require_same_game(profile, p, "check_stability");
            require_group_cap(profile, cap, "check_stability");
            return detail::check_stability_in(profile, p, c, all_partitions(profile.player_count(), cap));
        }
        default: {
            static const std::vector<Partition> empty;
            return detail::check_stability_in(profile, p, c, empty);
        }
    }
}

const std::vector<HierarchyEdge>& hierarchy_edges() {
    static const std::vector<HierarchyEdge> edges = {
        {StabilityConcept::Perfect, StabilityConcept::SSNS},
        {StabilityConcept::SSNS, StabilityConcept::SNS},
        {StabilityConcept::SSNS, StabilityConcept::StrictCore},
        {StabilityConcept::SNS, StabilityConcept::NS},
        {StabilityConcept::SNS, StabilityConcept::SIS},
        {StabilityConcept::StrictCore, StabilityConcept::SIS},
        {StabilityConcept::StrictCore, StabilityConcept::PO},
        {StabilityConcept::SIS, StabilityConcept::IS},
        {StabilityConcept::SIS, StabilityConcept::Core},
        {StabilityConcept::NS, StabilityConcept::IS},
        {StabilityConcept::IS, StabilityConcept::IR},
        {StabilityConcept::Core, StabilityConcept::IR},
    };
    return edges;
}

std::vector<HierarchyViolation> check_hierarchy(const PreferenceProfile& profile, int cap) {
    require_group_cap(profile, cap, "check_hierarchy");
    const std::vector<Partition> universe = all_partitions(profile.player_count(), cap);
    std::vector<HierarchyViolation> violations;
    for (const Partition& p : universe) {
        std::array<bool, 10> verdicts{};
        for (size_t k = 0; k < kAllConcepts.size(); ++k) {
            verdicts[k] = detail::check_stability_in(profile, p, kAllConcepts[k], universe).stable;
        }
        auto value = [&](StabilityConcept c) { return verdicts[static_cast<size_t>(c)]; };
        for (const HierarchyEdge& edge : hierarchy_edges()) {
            if (value(edge.antecedent) && !value(edge.consequent)) {
                violations.push_back({p, edge.antecedent, edge.consequent});
            }
        }
    }
    return violations;
}

}  // namespace hedonic
