#include "hedonic/restrictions.hpp"

#include <algorithm>

namespace hedonic {

namespace {

void require_restriction_cap(const PreferenceProfile& profile, int cap, const char* what) {
    const int n = profile.player_count();
    if (n > cap) {
        throw CapacityError(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap) + " (pass a larger cap to override)");
    }
}

void require_member_context(const PreferenceProfile& profile, PlayerId player, Coalition context, const char* what) {
    const int n = profile.player_count();
    if (player < 1 || player > n) throw std::invalid_argument(std::string(what) + ": player out of range");
    if (!context.subset_of(Coalition::full(n))) {
        throw std::invalid_argument(std::string(what) + ": context outside {1..n}");
    }
    if (!context.contains(player)) {
        throw std::invalid_argument(std::string(what) + ": player " + std::to_string(player) +
                                    " not in context {" + context.to_text() + "}");
    }
}

std::vector<Coalition> extreme_subsets(const PreferenceProfile& profile, PlayerId player, Coalition context,
                                       bool best) {
    const std::uint32_t bit = 1u << (player - 1);
    const std::uint32_t ctx = context.mask();
    int extreme = 0;
    bool first = true;
    std::vector<Coalition> out;
    for (std::uint32_t sub = ctx;; sub = (sub - 1) & ctx) {
        if (sub & bit) {
            const int t = profile.tier(player, Coalition(sub));
            if (first || (best ? t < extreme : t > extreme)) {
                extreme = t;
                out.clear();
                first = false;
            }
            if (t == extreme) out.push_back(Coalition(sub));
        }
        if (sub == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Per-player table of the unique best subset for every context containing
/// the player. `unique` is false exactly when some context has several best
/// subsets, and `first_ambiguous` names the lowest such context.
struct ChoiceTable {
    bool unique = true;
    Coalition first_ambiguous;
    std::vector<std::uint32_t> choice;  // indexed by context mask
    std::vector<int> choice_tier;
};

ChoiceTable build_choice_table(const PreferenceProfile& profile, PlayerId player) {
    const int n = profile.player_count();
    const std::uint32_t bit = 1u << (player - 1);
    const std::uint32_t full = Coalition::full(n).mask();
    ChoiceTable table;
    table.choice.assign(std::size_t(1) << n, 0);
    table.choice_tier.assign(std::size_t(1) << n, 0);
    for (std::uint32_t ctx = bit; ctx <= full; ++ctx) {
        if (!(ctx & bit)) continue;
        int best_tier = 0;
        std::uint32_t best = 0;
        int count = 0;
        for (std::uint32_t sub = ctx;; sub = (sub - 1) & ctx) {
            if (sub & bit) {
                const int t = profile.tier(player, Coalition(sub));
                if (count == 0 || t < best_tier) {
                    best_tier = t;
                    best = sub;
                    count = 1;
                } else if (t == best_tier) {
                    ++count;
                    best = std::min(best, sub);
                }
            }
            if (sub == 0) break;
        }
        if (count > 1 && table.unique) {
            table.unique = false;
            table.first_ambiguous = Coalition(ctx);
        }
        table.choice[ctx] = best;
        table.choice_tier[ctx] = best_tier;
    }
    return table;
}

/// Avoid-set analogue; minimizer lists are kept because bottom
/// responsiveness quantifies over every representative.
struct AvoidTable {
    std::vector<std::vector<std::uint32_t>> avoid;  // ascending masks per context
    std::vector<int> avoid_tier;
};

AvoidTable build_avoid_table(const PreferenceProfile& profile, PlayerId player) {
    const int n = profile.player_count();
    const std::uint32_t bit = 1u << (player - 1);
    const std::uint32_t full = Coalition::full(n).mask();
    AvoidTable table;
    table.avoid.assign(std::size_t(1) << n, {});
    table.avoid_tier.assign(std::size_t(1) << n, 0);
    for (std::uint32_t ctx = bit; ctx <= full; ++ctx) {
        if (!(ctx & bit)) continue;
        int worst_tier = 0;
        bool first = true;
        auto& mins = table.avoid[ctx];
        for (std::uint32_t sub = ctx;; sub = (sub - 1) & ctx) {
            if (sub & bit) {
                const int t = profile.tier(player, Coalition(sub));
                if (first || t > worst_tier) {
                    worst_tier = t;
                    mins.clear();
                    first = false;
                }
                if (t == worst_tier) mins.push_back(sub);
            }
            if (sub == 0) break;
        }
        std::sort(mins.begin(), mins.end());
        table.avoid_tier[ctx] = worst_tier;
    }
    return table;
}

std::vector<std::uint32_t> contexts_of(const PreferenceProfile& profile, PlayerId player) {
    const int n = profile.player_count();
    const std::uint32_t bit = 1u << (player - 1);
    const std::uint32_t full = Coalition::full(n).mask();
    std::vector<std::uint32_t> out;
    out.reserve(std::size_t(1) << (n - 1));
    for (std::uint32_t ctx = bit; ctx <= full; ++ctx) {
        if (ctx & bit) out.push_back(ctx);
    }
    return out;
}

RestrictionVerdict violation(RestrictionWitness w) {
    return RestrictionVerdict{false, std::move(w)};
}

bool shares_element(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return true;
        if (*ia < *ib) ++ia;
        else ++ib;
    }
    return false;
}

}  // namespace

std::string restriction_witness_text(const RestrictionWitness& w) {
    std::string out = "condition " + std::to_string(w.condition) + ": player " + std::to_string(w.player);
    if (w.other) out += ", player " + std::to_string(*w.other);
    out += ", X=" + w.context.to_text();
    if (w.second) out += ", Y=" + w.second->to_text();
    return out;
}

ChoiceSetResult choice_sets(const PreferenceProfile& profile, PlayerId player, Coalition context) {
    require_member_context(profile, player, context, "choice_sets");
    return ChoiceSetResult{player, context, extreme_subsets(profile, player, context, true)};
}

AvoidSetResult avoid_sets(const PreferenceProfile& profile, PlayerId player, Coalition context) {
    require_member_context(profile, player, context, "avoid_sets");
    return AvoidSetResult{player, context, extreme_subsets(profile, player, context, false)};
}

RestrictionVerdict is_top_responsive(const PreferenceProfile& profile, int cap) {
    require_restriction_cap(profile, cap, "is_top_responsive");
    const int n = profile.player_count();
    for (PlayerId i = 1; i <= n; ++i) {
        const ChoiceTable table = build_choice_table(profile, i);
        if (!table.unique) {
            return violation({1, i, std::nullopt, table.first_ambiguous, std::nullopt});
        }
        const auto ctxs = contexts_of(profile, i);
        for (std::uint32_t x : ctxs) {
            for (std::uint32_t y : ctxs) {
                if (table.choice_tier[x] < table.choice_tier[y] &&
                    !(profile.tier(i, Coalition(x)) < profile.tier(i, Coalition(y)))) {
                    return violation({2, i, std::nullopt, Coalition(x), Coalition(y)});
                }
                const bool strict_subset = x != y && (x & y) == x;
                if (table.choice[x] == table.choice[y] && strict_subset &&
                    !(profile.tier(i, Coalition(x)) < profile.tier(i, Coalition(y)))) {
                    return violation({3, i, std::nullopt, Coalition(x), Coalition(y)});
                }
            }
        }
    }
    return RestrictionVerdict{true, std::nullopt};
}

RestrictionVerdict is_mutual_top(const PreferenceProfile& profile, int cap) {
    const RestrictionVerdict top = is_top_responsive(profile, cap);
    if (!top.holds) {
        throw PreconditionError("is_mutual_top: profile is not top responsive (" +
                                restriction_witness_text(*top.witness) + ")");
    }
    const int n = profile.player_count();
    std::vector<ChoiceTable> tables;
    tables.reserve(n);
    for (PlayerId i = 1; i <= n; ++i) tables.push_back(build_choice_table(profile, i));

    const std::uint32_t full = Coalition::full(n).mask();
    for (PlayerId i = 1; i <= n; ++i) {
        for (PlayerId j = i + 1; j <= n; ++j) {
            const std::uint32_t pair = (1u << (i - 1)) | (1u << (j - 1));
            for (std::uint32_t ctx = pair; ctx <= full; ++ctx) {
                if ((ctx & pair) != pair) continue;
                const bool i_in_j = (tables[j - 1].choice[ctx] >> (i - 1)) & 1u;
                const bool j_in_i = (tables[i - 1].choice[ctx] >> (j - 1)) & 1u;
                if (i_in_j != j_in_i) {
                    return violation({4, i, j, Coalition(ctx), std::nullopt});
                }
            }
        }
    }
    return RestrictionVerdict{true, std::nullopt};
}

RestrictionVerdict is_bottom_responsive(const PreferenceProfile& profile, int cap) {
    require_restriction_cap(profile, cap, "is_bottom_responsive");
    const int n = profile.player_count();
    for (PlayerId i = 1; i <= n; ++i) {
        const AvoidTable table = build_avoid_table(profile, i);
        const auto ctxs = contexts_of(profile, i);
        for (std::uint32_t x : ctxs) {
            for (std::uint32_t y : ctxs) {
                // Every representative of Av(i,X) strictly above every one of
                // Av(i,Y) forces X above Y.
                bool all_above = true;
                for (std::uint32_t xr : table.avoid[x]) {
                    for (std::uint32_t yr : table.avoid[y]) {
                        if (!(profile.tier(i, Coalition(xr)) < profile.tier(i, Coalition(yr)))) {
                            all_above = false;
                            break;
                        }
                    }
                    if (!all_above) break;
                }
                if (all_above && !(profile.tier(i, Coalition(x)) < profile.tier(i, Coalition(y)))) {
                    return violation({1, i, std::nullopt, Coalition(x), Coalition(y)});
                }
                if (std::popcount(x) >= std::popcount(y) && shares_element(table.avoid[x], table.avoid[y]) &&
                    profile.tier(i, Coalition(x)) > profile.tier(i, Coalition(y))) {
                    return violation({2, i, std::nullopt, Coalition(x), Coalition(y)});
                }
            }
        }
    }
    return RestrictionVerdict{true, std::nullopt};
}

RestrictionVerdict is_strong_bottom_responsive(const PreferenceProfile& profile, int cap) {
    const RestrictionVerdict bottom = is_bottom_responsive(profile, cap);
    if (!bottom.holds) return bottom;
    const int n = profile.player_count();
    for (PlayerId i = 1; i <= n; ++i) {
        const AvoidTable table = build_avoid_table(profile, i);
        for (std::uint32_t ctx : contexts_of(profile, i)) {
            if (table.avoid[ctx].size() > 1) {
                return violation({3, i, std::nullopt, Coalition(ctx), std::nullopt});
            }
        }
    }
    return RestrictionVerdict{true, std::nullopt};
}

RestrictionVerdict is_mutual_bottom(const PreferenceProfile& profile, int cap) {
    const RestrictionVerdict strong = is_strong_bottom_responsive(profile, cap);
    if (!strong.holds) {
        throw PreconditionError("is_mutual_bottom: profile is not strong bottom responsive (" +
                                restriction_witness_text(*strong.witness) + ")");
    }
    const int n = profile.player_count();
    std::vector<AvoidTable> tables;
    tables.reserve(n);
    for (PlayerId i = 1; i <= n; ++i) tables.push_back(build_avoid_table(profile, i));

    const std::uint32_t full = Coalition::full(n).mask();
    for (PlayerId i = 1; i <= n; ++i) {
        for (PlayerId j = i + 1; j <= n; ++j) {
            const std::uint32_t pair = (1u << (i - 1)) | (1u << (j - 1));
            for (std::uint32_t ctx = pair; ctx <= full; ++ctx) {
                if ((ctx & pair) != pair) continue;
                const bool i_in_j = (tables[j - 1].avoid[ctx].front() >> (i - 1)) & 1u;
                const bool j_in_i = (tables[i - 1].avoid[ctx].front() >> (j - 1)) & 1u;
                if (i_in_j != j_in_i) {
                    return violation({4, i, j, Coalition(ctx), std::nullopt});
                }
            }
        }
    }
    return RestrictionVerdict{true, std::nullopt};
}

}  // namespace hedonic
