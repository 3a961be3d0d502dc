#include "hedonic/oracle.hpp"

#include <algorithm>
#include <chrono>

namespace hedonic {

namespace {

bool enumerates_partitions(StabilityConcept c) {
    return c == StabilityConcept::PO || c == StabilityConcept::SNS || c == StabilityConcept::SSNS ||
           c == StabilityConcept::SIS;
}

void require_oracle_cap(const PreferenceProfile& profile, int cap, const char* what) {
    const int n = profile.player_count();
    if (n > cap) {
        throw CapacityError(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap) + "; roughly B(n) * 2^n * n comparisons ahead, override the "
                            "cap to run anyway");
    }
}

}  // namespace

int oracle_cap(StabilityConcept c) {
    return enumerates_partitions(c) ? kEnumerationCap - 1 : kEnumerationCap;
}

std::vector<Partition> all_stable(const PreferenceProfile& profile, StabilityConcept c,
                                  std::optional<int> cap_override) {
    const int cap = cap_override.value_or(oracle_cap(c));
    require_oracle_cap(profile, cap, "all_stable");
    const std::vector<Partition> universe = all_partitions(profile.player_count(), cap);
    std::vector<Partition> stable;
    for (const Partition& p : universe) {
        if (detail::check_stability_in(profile, p, c, universe).stable) stable.push_back(p);
    }
    return stable;
}

bool exists_stable(const PreferenceProfile& profile, StabilityConcept c, std::optional<int> cap_override) {
    const int cap = cap_override.value_or(oracle_cap(c));
    require_oracle_cap(profile, cap, "exists_stable");
    std::vector<Partition> universe = all_partitions(profile.player_count(), cap);
    std::vector<const Partition*> order;
    order.reserve(universe.size());
    for (const Partition& p : universe) order.push_back(&p);
    std::stable_sort(order.begin(), order.end(), [](const Partition* a, const Partition* b) {
        return gdot_compare(*a, *b) == GdotOrder::Greater;
    });
    for (const Partition* p : order) {
        if (detail::check_stability_in(profile, *p, c, universe).stable) return true;
    }
    return false;
}

OracleReport survey_stability(const PreferenceProfile& profile, std::string game_id,
                              std::optional<int> cap_override) {
    OracleReport report;
    report.game_id = std::move(game_id);
    report.n = profile.player_count();
    const auto begin = std::chrono::steady_clock::now();
    for (StabilityConcept c : kAllConcepts) {
        const auto start = std::chrono::steady_clock::now();
        OracleReport::ConceptEntry entry{c, all_stable(profile, c, cap_override), 0.0};
        entry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.entries.push_back(std::move(entry));
    }
    report.total_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    return report;
}

std::optional<GameSpec> search_counterexample(const FamilySpec& family, const GamePredicate& predicate,
                                              int budget) {
    if (family.n_min < 1 || family.n_max < family.n_min) {
        throw std::invalid_argument("search_counterexample: bad player range");
    }
    if (budget < 1) throw std::invalid_argument("search_counterexample: budget must be positive");
    const int span = family.n_max - family.n_min + 1;
    for (int seed = 1; seed <= budget; ++seed) {
        const int n = family.n_min + (seed - 1) % span;
        GameSpec game = random_game(family.kind, n, static_cast<std::uint64_t>(seed));
        if (predicate(game, game.to_profile())) return game;
    }
    return std::nullopt;
}

}  // namespace hedonic
