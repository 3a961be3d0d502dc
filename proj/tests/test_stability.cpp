#include <doctest.h>

#include "hedonic/game_classes.hpp"
#include "hedonic/game_file.hpp"
#include "hedonic/stability.hpp"

using namespace hedonic;

namespace {

Coalition C(std::initializer_list<PlayerId> members) { return Coalition::of(members); }

int tier_of(const PreferenceProfile& profile, PlayerId i, const Partition& p) {
    return profile.tier(i, p.block_of(i));
}

/// Re-derives the violated condition from the witness alone; any failure
/// here means a checker fabricated or mislabeled its evidence.
void replay_witness(const PreferenceProfile& profile, const Partition& p, StabilityConcept c,
                    const DeviationWitness& w) {
    switch (w.kind) {
        case WitnessKind::SingleMove:
        case WitnessKind::GroupMove: {
            REQUIRE(reachable(p, w.successor, w.movers));
            bool some_strict = false;
            for (PlayerId i : w.movers.members()) {
                const int now = tier_of(profile, i, p);
                const int then = tier_of(profile, i, w.successor);
                if (c == StabilityConcept::SSNS) CHECK(then <= now);
                else CHECK(then < now);
                some_strict = some_strict || then < now;
            }
            CHECK(some_strict);
            REQUIRE(w.focal.has_value());
            CHECK(tier_of(profile, *w.focal, w.successor) < tier_of(profile, *w.focal, p));
            if (c == StabilityConcept::IS || c == StabilityConcept::SIS) {
                for (PlayerId i : w.movers.members()) {
                    for (PlayerId j : w.successor.block_of(i).members()) {
                        CHECK(tier_of(profile, j, w.successor) <= tier_of(profile, j, p));
                    }
                }
            }
            break;
        }
        case WitnessKind::BlockingCoalition: {
            CHECK(w.successor == p.carved(w.movers));
            REQUIRE(w.focal.has_value());
            CHECK(w.movers.contains(*w.focal));
            if (c == StabilityConcept::Perfect) {
                CHECK(profile.tier(*w.focal, w.movers) < tier_of(profile, *w.focal, p));
                break;
            }
            for (PlayerId i : w.movers.members()) {
                const int now = tier_of(profile, i, p);
                if (c == StabilityConcept::Core) CHECK(profile.tier(i, w.movers) < now);
                else CHECK(profile.tier(i, w.movers) <= now);
            }
            CHECK(profile.tier(*w.focal, w.movers) < tier_of(profile, *w.focal, p));
            break;
        }
        case WitnessKind::ParetoDominator: {
            REQUIRE(!w.movers.empty());
            const int n = profile.player_count();
            for (PlayerId i = 1; i <= n; ++i) {
                const int now = tier_of(profile, i, p);
                const int then = tier_of(profile, i, w.successor);
                CHECK(then <= now);
                CHECK((then < now) == w.movers.contains(i));
            }
            break;
        }
    }
}

}  // namespace

TEST_SUITE_BEGIN("stability");

TEST_CASE("concept tags round-trip case-insensitively") {
    for (StabilityConcept c : kAllConcepts) {
        CHECK(concept_from_tag(concept_tag(c)) == c);
    }
    CHECK(concept_from_tag("sns") == StabilityConcept::SNS);
    CHECK(concept_from_tag("core") == StabilityConcept::Core);
    CHECK(concept_from_tag("Sc") == StabilityConcept::StrictCore);
    CHECK(!concept_from_tag("nash").has_value());
}

TEST_CASE("reachable preserves non-mover grouping") {
    Partition p = Partition::parse("1,2|3,4", 4);
    CHECK(reachable(p, Partition::parse("1,4|2,3", 4), C({2, 4})));
    CHECK(reachable(Partition::grand(3), Partition::parse("1|2,3", 3), C({1})));
    CHECK(!reachable(Partition::grand(3), Partition::parse("1|2,3", 3), C({3})));
    CHECK(!reachable(p, Partition::parse("1,3|2,4", 4), C({2})));
    CHECK_THROWS_AS(reachable(p, p, C({1})), std::invalid_argument);
    CHECK_THROWS_AS(reachable(p, Partition::parse("1,4|2,3", 4), Coalition()), std::invalid_argument);
    CHECK_THROWS_AS(reachable(p, Partition::parse("1,2|3", 3), C({3})), std::invalid_argument);
}

TEST_CASE("individual rationality flags players preferring solitude") {
    PreferenceProfile prop2 = bundled_game("prop2").to_profile();
    StabilityVerdict v = is_individually_rational(prop2, Partition::parse("1,3|2,4", 4));
    REQUIRE(!v.stable);
    CHECK(v.witness->movers == C({1}));
    CHECK(v.witness->successor.to_text() == "1|2,4|3");
    CHECK(is_individually_rational(prop2, Partition::singletons(4)).stable);
    CHECK(is_individually_rational(bundled_game("example1").to_profile(), Partition::grand(3)).stable);
}

TEST_CASE("no partition of example1 is perfect") {
    PreferenceProfile p = bundled_game("example1").to_profile();
    for (const Partition& q : all_partitions(3)) {
        CHECK(!is_perfect(p, q).stable);
    }
    StabilityVerdict v = is_perfect(p, Partition::parse("1,2|3", 3));
    REQUIRE(!v.stable);
    CHECK(v.witness->movers == C({1, 2, 3}));
    CHECK(v.witness->focal == 2);

    // a unanimous grand-coalition game has a perfect partition
    PreferenceProfile grand_top = profile_from_tier_lists(
        2, {{{C({1, 2})}, {C({1})}}, {{C({1, 2})}, {C({2})}}}, false);
    CHECK(is_perfect(grand_top, Partition::grand(2)).stable);
    CHECK(!is_perfect(grand_top, Partition::singletons(2)).stable);
}

TEST_CASE("nash stability of the prop2 partitions") {
    PreferenceProfile p = bundled_game("prop2").to_profile();
    CHECK(is_nash_stable(p, Partition::parse("1,2|3,4", 4)).stable);
    CHECK(is_nash_stable(p, Partition::parse("1,4|2,3", 4)).stable);

    StabilityVerdict v = is_nash_stable(p, Partition::singletons(4));
    REQUIRE(!v.stable);
    CHECK(v.witness->movers == C({1}));
    CHECK(v.witness->successor.to_text() == "1,2|3|4");

    CHECK(!is_nash_stable(p, Partition::parse("1,3|2,4", 4)).stable);
}

TEST_CASE("individual stability needs target consent") {
    PreferenceProfile p = bundled_game("example2").to_profile();
    CHECK(is_individually_stable(p, Partition::parse("1,3|2", 3)).stable);

    StabilityVerdict v = is_individually_stable(p, Partition::singletons(3));
    REQUIRE(!v.stable);
    CHECK(v.witness->movers == C({1}));
    CHECK(v.witness->successor.to_text() == "1,3|2");
    CHECK(witness_text(*v.witness) == "H=1 -> 1,3|2");
}

TEST_CASE("core and strict core scans over the prop2 game") {
    PreferenceProfile p = bundled_game("prop2").to_profile();
    CHECK(is_core_stable(p, Partition::parse("1,2|3,4", 4)).stable);
    CHECK(is_strict_core_stable(p, Partition::parse("1,2|3,4", 4)).stable);
    CHECK(is_strict_core_stable(p, Partition::parse("1,4|2,3", 4)).stable);

    StabilityVerdict v = is_core_stable(p, Partition::parse("1,2|3|4", 4));
    REQUIRE(!v.stable);
    CHECK(v.witness->movers == C({2, 3}));
    CHECK(witness_text(*v.witness) == "S=2,3");
    // the pair {3,4} strictly blocks as well; the scan just meets {2,3} first
    CHECK(p.compare(3, C({3, 4}), C({3})) == PreferenceOrder::StrictlyPrefers);
    CHECK(p.compare(4, C({3, 4}), C({4})) == PreferenceOrder::StrictlyPrefers);
}

TEST_CASE("a weakly blocking pair spoils the strict core of prop3") {
    PreferenceProfile p = bundled_game("prop3").to_profile();
    StabilityVerdict v = is_strict_core_stable(p, Partition::parse("1,2|3,4", 4));
    REQUIRE(!v.stable);
    CHECK(v.witness->movers == C({1, 4}));
    CHECK(v.witness->focal == 4);
    CHECK(is_core_stable(p, Partition::parse("1,2|3,4", 4)).stable);
}

TEST_CASE("pareto optimality of the prop3 partitions") {
    PreferenceProfile p = bundled_game("prop3").to_profile();
    StabilityVerdict v = is_pareto_optimal(p, Partition::parse("1,2|3,4", 4));
    REQUIRE(!v.stable);
    CHECK(v.witness->successor == Partition::parse("2,3|1,4", 4));
    CHECK(v.witness->movers == C({4}));
    CHECK(witness_text(*v.witness) == "dominator=1,4|2,3");
    CHECK(is_pareto_optimal(p, Partition::parse("1,4|2,3", 4)).stable);

    PreferenceProfile solo = profile_from_tier_lists(1, {{{C({1})}}}, false);
    CHECK(is_pareto_optimal(solo, Partition::grand(1)).stable);
}

TEST_CASE("strong nash stability of the prop2 and prop3 partitions") {
    PreferenceProfile prop2 = bundled_game("prop2").to_profile();
    StabilityVerdict v = is_strong_nash_stable(prop2, Partition::parse("1,2|3,4", 4));
    REQUIRE(!v.stable);
    CHECK(v.witness->movers == C({2, 4}));
    CHECK(v.witness->successor == Partition::parse("1,4|2,3", 4));
    CHECK(witness_text(*v.witness) == "H=2,4 -> 1,4|2,3");

    StabilityVerdict back = is_strong_nash_stable(prop2, Partition::parse("1,4|2,3", 4));
    REQUIRE(!back.stable);
    CHECK(back.witness->movers == C({1, 3}));
    CHECK(back.witness->successor == Partition::parse("1,2|3,4", 4));

    PreferenceProfile prop3 = bundled_game("prop3").to_profile();
    CHECK(is_strong_nash_stable(prop3, Partition::parse("1,2|3,4", 4)).stable);
}

TEST_CASE("strict strong nash stability tightens strong nash stability") {
    PreferenceProfile prop3 = bundled_game("prop3").to_profile();
    StabilityVerdict v = is_strict_strong_nash_stable(prop3, Partition::parse("1,2|3,4", 4));
    REQUIRE(!v.stable);
    CHECK(v.witness->movers == C({1, 4}));
    CHECK(v.witness->successor.to_text() == "1,3|2,4");

    PreferenceProfile example1 = bundled_game("example1").to_profile();
    CHECK(is_strict_strong_nash_stable(example1, Partition::grand(3)).stable);

    PreferenceProfile prop2 = bundled_game("prop2").to_profile();
    CHECK(!is_strict_strong_nash_stable(prop2, Partition::parse("1,2|3,4", 4)).stable);
}

TEST_CASE("strong individual stability of the example2 partitions") {
    PreferenceProfile p = bundled_game("example2").to_profile();
    CHECK(is_strong_individually_stable(p, Partition::parse("1,3|2", 3)).stable);

    StabilityVerdict v = is_strong_individually_stable(p, Partition::singletons(3));
    REQUIRE(!v.stable);
    CHECK(v.witness->movers == C({1}));
    CHECK(v.witness->successor.to_text() == "1,3|2");
}

TEST_CASE("witnesses replay against the profile for every bundled game") {
    for (const std::string& name : bundled_names()) {
        PreferenceProfile profile = bundled_game(name).to_profile();
        const int n = profile.player_count();
        for (const Partition& p : all_partitions(n)) {
            for (StabilityConcept c : kAllConcepts) {
                StabilityVerdict v = check_stability(profile, p, c);
                CHECK(v.stable == !v.witness.has_value());
                if (v.witness) replay_witness(profile, p, c, *v.witness);
            }
        }
    }
}

TEST_CASE("witnesses replay on random games of every kind") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        for (RandomKind kind : {RandomKind::Explicit, RandomKind::Ashg, RandomKind::Friends,
                                RandomKind::SymmetricEnemies, RandomKind::BhedonicStrict}) {
            PreferenceProfile profile = random_game(kind, 4, seed).to_profile();
            for (const Partition& p : all_partitions(4)) {
                for (StabilityConcept c : kAllConcepts) {
                    StabilityVerdict v = check_stability(profile, p, c);
                    if (v.witness) replay_witness(profile, p, c, *v.witness);
                }
            }
        }
    }
}

TEST_CASE("the stability lattice holds on bundled and random games") {
    for (const std::string& name : bundled_names()) {
        CHECK(check_hierarchy(bundled_game(name).to_profile()).empty());
    }
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PreferenceProfile p = random_game(RandomKind::Explicit, 4, seed).to_profile();
        CHECK(check_hierarchy(p).empty());
    }
}

TEST_CASE("group checks enforce the enumeration cap") {
    AshgMatrix m{9, std::vector<std::vector<int>>(9, std::vector<int>(9, 1))};
    for (int i = 0; i < 9; ++i) m.values[i][i] = 0;
    PreferenceProfile p = ashg_to_profile(m);
    Partition grand = Partition::grand(9);
    CHECK_THROWS_AS(is_strong_nash_stable(p, grand), CapacityError);
    CHECK_THROWS_AS(is_pareto_optimal(p, grand), CapacityError);
    CHECK_THROWS_AS(check_hierarchy(p), CapacityError);
    CHECK(is_nash_stable(p, grand).stable);  // single-move checks stay open

    PreferenceProfile small = bundled_game("example1").to_profile();
    CHECK_THROWS_AS(is_nash_stable(small, Partition::grand(4)), std::invalid_argument);
}

TEST_SUITE_END();
