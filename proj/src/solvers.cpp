#include "hedonic/solvers.hpp"

#include <algorithm>

#include "hedonic/restrictions.hpp"

namespace hedonic {

namespace {

/// Unique best subset of `context` containing `player`; PreconditionError on
/// a tie for the top.
Coalition unique_choice(const PreferenceProfile& profile, PlayerId player, Coalition context) {
    const ChoiceSetResult r = choice_sets(profile, player, context);
    if (r.maximizers.size() != 1) {
        throw PreconditionError("player " + std::to_string(player) + " has " +
                                std::to_string(r.maximizers.size()) + " best subsets of {" +
                                context.to_text() + "}; choice sets must be unique");
    }
    return r.maximizers.front();
}

struct Deviation {
    Coalition movers;
    Partition successor;
};

/// First admissible single-player move: strict gain for the mover, no loss
/// for the joined block. Players ascending, targets in canonical block
/// order, the empty coalition last.
std::optional<Deviation> find_single_deviation(const PreferenceProfile& profile, const Partition& p) {
    const int n = profile.player_count();
    for (PlayerId i = 1; i <= n; ++i) {
        const Coalition own = p.block_of(i);
        const int current = profile.tier(i, own);
        for (const Coalition& target : p.blocks()) {
            if (target == own) continue;
            if (profile.tier(i, target.with(i)) >= current) continue;
            bool consent = true;
            for (PlayerId j : target.members()) {
                if (profile.tier(j, target.with(i)) > profile.tier(j, target)) {
                    consent = false;
                    break;
                }
            }
            if (consent) return Deviation{Coalition::single(i), p.moved(i, target)};
        }
        if (own.size() > 1 && profile.tier(i, Coalition::single(i)) < current) {
            return Deviation{Coalition::single(i), p.moved(i, Coalition())};
        }
    }
    return std::nullopt;
}

/// First admissible group move in the strong-individual sense: every mover
/// gains strictly and every member of a mover's new block consents. Mover
/// sets smallest-first (ascending mask within a size), candidates in
/// enumeration order. Single movers reuse the target scan above.
std::optional<Deviation> find_group_deviation(const PreferenceProfile& profile, const Partition& p,
                                              const std::vector<Partition>& universe) {
    if (auto single = find_single_deviation(profile, p)) return single;

    const int n = profile.player_count();
    const std::uint32_t full = Coalition::full(n).mask();
    for (int size = 2; size <= n; ++size) {
        for (std::uint32_t h = 1; h <= full; ++h) {
            if (std::popcount(h) != size) continue;
            const Coalition movers(h);
            for (const Partition& q : universe) {
                if (q == p || !reachable(p, q, movers)) continue;
                bool ok = true;
                for (PlayerId i : movers.members()) {
                    if (profile.tier(i, q.block_of(i)) >= profile.tier(i, p.block_of(i))) {
                        ok = false;
                        break;
                    }
                }
                for (PlayerId i : movers.members()) {
                    if (!ok) break;
                    for (PlayerId j : q.block_of(i).members()) {
                        if (profile.tier(j, q.block_of(j)) > profile.tier(j, p.block_of(j))) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok) return Deviation{movers, q};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

NeighborRelation neighbor_relation(const PreferenceProfile& profile, Coalition context) {
    if (!context.subset_of(Coalition::full(profile.player_count()))) {
        throw std::invalid_argument("neighbor_relation: context outside {1..n}");
    }
    NeighborRelation rel;
    rel.context = context;
    for (PlayerId i : context.members()) {
        for (PlayerId j : unique_choice(profile, i, context).members()) {
            rel.edges.emplace_back(i, j);
        }
    }
    return rel;
}

Coalition connected_component(const PreferenceProfile& profile, PlayerId start, Coalition context) {
    if (!context.contains(start)) {
        throw std::invalid_argument("connected_component: start player not in context");
    }
    Coalition visited = Coalition::single(start);
    std::vector<PlayerId> frontier = {start};
    while (!frontier.empty()) {
        const PlayerId k = frontier.back();
        frontier.pop_back();
        for (PlayerId j : unique_choice(profile, k, context).members()) {
            if (!visited.contains(j)) {
                visited = visited.with(j);
                frontier.push_back(j);
            }
        }
    }
    return visited;
}

TcaResult top_covering(const PreferenceProfile& profile, int cap) {
    const RestrictionVerdict top = is_top_responsive(profile, cap);
    if (!top.holds) {
        throw PreconditionError("top_covering: profile is not top responsive (" +
                                restriction_witness_text(*top.witness) + ")");
    }
    const int n = profile.player_count();
    TcaResult result{Partition::grand(0), {}};
    std::vector<Coalition> blocks;
    Coalition remaining = Coalition::full(n);
    int round = 1;
    while (!remaining.empty()) {
        PlayerId selected = 0;
        Coalition component;
        for (PlayerId i : remaining.members()) {
            const Coalition cc = connected_component(profile, i, remaining);
            if (selected == 0 || cc.size() < component.size()) {
                selected = i;
                component = cc;
            }
        }
        result.trace.rounds.push_back({round, remaining, selected, component});
        blocks.push_back(component);
        remaining = remaining.minus(component);
        ++round;
    }
    result.partition = Partition(n, std::move(blocks));
    return result;
}

bool top_choices_contained(const PreferenceProfile& profile, const Partition& p) {
    const int n = profile.player_count();
    const Coalition everyone = Coalition::full(n);
    for (PlayerId i = 1; i <= n; ++i) {
        if (!unique_choice(profile, i, everyone).subset_of(p.block_of(i))) return false;
    }
    return true;
}

long integer_partition_count(int n) {
    if (n < 0) throw std::invalid_argument("integer_partition_count: negative n");
    std::vector<long> count(n + 1, 0);
    count[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int total = part; total <= n; ++total) count[total] += count[total - part];
    }
    return count[n];
}

DynamicsResult deviation_dynamics(const PreferenceProfile& profile, DynamicsMode mode, int cap) {
    const RestrictionVerdict bottom = is_bottom_responsive(profile);
    if (!bottom.holds) {
        throw PreconditionError("deviation_dynamics: profile is not bottom responsive (" +
                                restriction_witness_text(*bottom.witness) + ")");
    }
    const int n = profile.player_count();
    std::vector<Partition> universe;
    if (mode == DynamicsMode::StrongIndividualStability) {
        universe = all_partitions(n, cap);  // group moves need the full candidate list
    }

    DynamicsResult result{Partition::singletons(n), {}};
    result.trace.potentials.push_back(size_vector(result.partition));
    const long guard = integer_partition_count(n) + 1;
    long steps = 0;
    for (;;) {
        std::optional<Deviation> dev =
            mode == DynamicsMode::IndividualStability
                ? find_single_deviation(profile, result.partition)
                : find_group_deviation(profile, result.partition, universe);
        if (!dev) break;
        if (++steps > guard) {
            throw std::logic_error("deviation_dynamics: step guard exceeded; the potential argument no "
                                   "longer applies to this profile");
        }
        result.trace.steps.push_back({result.partition, dev->movers, dev->successor});
        result.partition = dev->successor;
        result.trace.potentials.push_back(size_vector(result.partition));
    }
    return result;
}

Partition find_gdot_maximal_ir(const PreferenceProfile& profile, int cap) {
    const RestrictionVerdict strong = is_strong_bottom_responsive(profile);
    if (!strong.holds) {
        throw PreconditionError("find_gdot_maximal_ir: profile is not strong bottom responsive (" +
                                restriction_witness_text(*strong.witness) + ")");
    }
    const RestrictionVerdict mutual = is_mutual_bottom(profile);
    if (!mutual.holds) {
        throw PreconditionError("find_gdot_maximal_ir: avoid sets are not mutual (" +
                                restriction_witness_text(*mutual.witness) + ")");
    }

    const int n = profile.player_count();
    std::optional<Partition> best;
    PartitionEnumerator en(n, cap);
    while (auto p = en.next()) {
        bool admissible = true;
        for (const Coalition& block : p->blocks()) {
            for (PlayerId i : block.members()) {
                const auto avoid = avoid_sets(profile, i, block);
                if (avoid.minimizers.size() != 1 || avoid.minimizers.front() != Coalition::single(i)) {
                    admissible = false;
                    break;
                }
            }
            if (!admissible) break;
        }
        if (!admissible) continue;
        if (!best || gdot_compare(*p, *best) == GdotOrder::Greater) best = std::move(*p);
    }
    return *best;  // the all-singletons partition is always admissible
}

}  // namespace hedonic
