#include <doctest.h>

#include "hedonic/game_classes.hpp"
#include "hedonic/game_file.hpp"
#include "hedonic/solvers.hpp"

using namespace hedonic;

namespace {

Coalition C(std::initializer_list<PlayerId> members) { return Coalition::of(members); }

FriendsGraph two_camp_graph() {
    return {5, {C({2}), C({1, 3}), C({2}), C({5}), C({4})}};
}

EnemiesGraph all_hostile(int n) { return {n, std::vector<Coalition>(n)}; }

EnemiesGraph all_friendly(int n) {
    EnemiesGraph g{n, {}};
    for (PlayerId i = 1; i <= n; ++i) g.adjacency.push_back(Coalition::full(n).without(i));
    return g;
}

void check_strictly_increasing(const std::vector<SizeVector>& potentials) {
    for (std::size_t k = 1; k < potentials.size(); ++k) {
        CHECK(gdot_compare(potentials[k], potentials[k - 1]) == GdotOrder::Greater);
    }
}

}  // namespace

TEST_SUITE_BEGIN("solvers");

TEST_CASE("neighbor relation lists choice-set memberships") {
    PreferenceProfile p = bundled_game("example1").to_profile();
    NeighborRelation rel = neighbor_relation(p, Coalition::full(3));
    std::vector<std::pair<PlayerId, PlayerId>> expected = {
        {1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
    CHECK(rel.edges == expected);
    CHECK(neighbor_relation(p, C({2})).edges == std::vector<std::pair<PlayerId, PlayerId>>{{2, 2}});
    CHECK_THROWS_AS(neighbor_relation(p, C({5})), std::invalid_argument);
}

TEST_CASE("connected components follow choice-set chains") {
    PreferenceProfile p = bundled_game("example1").to_profile();
    CHECK(connected_component(p, 1, Coalition::full(3)) == Coalition::full(3));
    CHECK(connected_component(p, 2, C({2})) == C({2}));
    CHECK_THROWS_AS(connected_component(p, 1, C({2, 3})), std::invalid_argument);

    PreferenceProfile tied = profile_from_tier_lists(
        2, {{{C({1}), C({1, 2})}}, {{C({1, 2})}, {C({2})}}}, false);
    CHECK_THROWS_AS(connected_component(tied, 1, Coalition::full(2)), PreconditionError);
}

TEST_CASE("top covering gathers example1 into the grand coalition") {
    TcaResult r = top_covering(bundled_game("example1").to_profile());
    CHECK(r.partition == Partition::grand(3));
    REQUIRE(r.trace.rounds.size() == 1);
    CHECK(r.trace.rounds[0].round == 1);
    CHECK(r.trace.rounds[0].remaining == Coalition::full(3));
    CHECK(r.trace.rounds[0].selected == 1);
    CHECK(r.trace.rounds[0].component == Coalition::full(3));

    PreferenceProfile solo = profile_from_tier_lists(1, {{{C({1})}}}, false);
    CHECK(top_covering(solo).partition == Partition::grand(1));
}

TEST_CASE("top covering extracts the smallest camp first") {
    PreferenceProfile p = ashg_to_profile(friends_game(two_camp_graph()));
    TcaResult r = top_covering(p);
    CHECK(r.partition == Partition::parse("1,2,3|4,5", 5));
    REQUIRE(r.trace.rounds.size() == 2);
    CHECK(r.trace.rounds[0].selected == 4);
    CHECK(r.trace.rounds[0].component == C({4, 5}));
    CHECK(r.trace.rounds[1].remaining == C({1, 2, 3}));
    CHECK(r.trace.rounds[1].selected == 1);
    CHECK(top_choices_contained(p, r.partition));
    CHECK(!top_choices_contained(p, Partition::singletons(5)));
}

TEST_CASE("top covering refuses profiles without top responsiveness") {
    PreferenceProfile p = bundled_game("example2").to_profile();
    CHECK_THROWS_WITH_AS(top_covering(p), doctest::Contains("not top responsive"), PreconditionError);
}

TEST_CASE("top covering output survives the group stability checks") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PreferenceProfile friends =
            random_game(RandomKind::SymmetricFriends, 5, seed).to_profile();
        TcaResult r = top_covering(friends);
        CHECK(is_strict_strong_nash_stable(friends, r.partition).stable);
        CHECK(top_choices_contained(friends, r.partition));

        PreferenceProfile bh = random_game(RandomKind::BhedonicStrict, 5, seed).to_profile();
        CHECK(is_strict_core_stable(bh, top_covering(bh).partition).stable);
    }
}

TEST_CASE("deviation dynamics walks example2 to its stable pair") {
    PreferenceProfile p = bundled_game("example2").to_profile();
    for (DynamicsMode mode :
         {DynamicsMode::IndividualStability, DynamicsMode::StrongIndividualStability}) {
        DynamicsResult r = deviation_dynamics(p, mode);
        CHECK(r.partition == Partition::parse("1,3|2", 3));
        REQUIRE(r.trace.steps.size() == 1);
        CHECK(r.trace.steps[0].from == Partition::singletons(3));
        CHECK(r.trace.steps[0].movers == C({1}));
        CHECK(r.trace.steps[0].to == Partition::parse("1,3|2", 3));
        check_strictly_increasing(r.trace.potentials);
    }
}

TEST_CASE("deviation dynamics grows a friendly society one joiner at a time") {
    PreferenceProfile p = ashg_to_profile(enemies_game(all_friendly(4)));
    DynamicsResult r = deviation_dynamics(p, DynamicsMode::IndividualStability);
    CHECK(r.partition == Partition::grand(4));
    REQUIRE(r.trace.steps.size() == 3);
    CHECK(r.trace.steps[0].movers == C({1}));
    CHECK(r.trace.steps[1].movers == C({3}));
    CHECK(r.trace.steps[2].movers == C({4}));
    CHECK(r.trace.steps[1].from == Partition::parse("1,2|3|4", 4));
    REQUIRE(r.trace.potentials.size() == 4);
    check_strictly_increasing(r.trace.potentials);

    PreferenceProfile hostile = ashg_to_profile(enemies_game(all_hostile(3)));
    DynamicsResult h = deviation_dynamics(hostile, DynamicsMode::StrongIndividualStability);
    CHECK(h.partition == Partition::singletons(3));
    CHECK(h.trace.steps.empty());
}

TEST_CASE("deviation dynamics terminates at a stable partition on random hostility") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        for (RandomKind kind : {RandomKind::Enemies, RandomKind::SymmetricEnemies}) {
            PreferenceProfile p = random_game(kind, 5, seed).to_profile();
            DynamicsResult is = deviation_dynamics(p, DynamicsMode::IndividualStability);
            CHECK(is_individually_stable(p, is.partition).stable);
            CHECK(std::ssize(is.trace.steps) <= integer_partition_count(5));
            check_strictly_increasing(is.trace.potentials);

            DynamicsResult sis = deviation_dynamics(p, DynamicsMode::StrongIndividualStability);
            CHECK(is_strong_individually_stable(p, sis.partition).stable);
            check_strictly_increasing(sis.trace.potentials);
        }
    }
}

TEST_CASE("deviation dynamics refuses profiles without bottom responsiveness") {
    PreferenceProfile p = bundled_game("example1").to_profile();
    CHECK_THROWS_WITH_AS(deviation_dynamics(p, DynamicsMode::IndividualStability),
                         doctest::Contains("not bottom responsive"), PreconditionError);
}

TEST_CASE("integer partition counts") {
    const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 0; n <= 9; ++n) CHECK(integer_partition_count(n) == expected[n]);
    CHECK(integer_partition_count(20) == 627);
    CHECK_THROWS_AS(integer_partition_count(-1), std::invalid_argument);
}

TEST_CASE("the size-vector-maximal solitude-averse partition") {
    CHECK(find_gdot_maximal_ir(bundled_game("example2").to_profile()) ==
          Partition::parse("1,3|2", 3));
    CHECK(find_gdot_maximal_ir(ashg_to_profile(enemies_game(all_hostile(3)))) ==
          Partition::singletons(3));
    CHECK(find_gdot_maximal_ir(ashg_to_profile(enemies_game(all_friendly(3)))) ==
          Partition::grand(3));
}

TEST_CASE("the size-vector-maximal search output is strong nash stable") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PreferenceProfile p = random_game(RandomKind::SymmetricEnemies, 5, seed).to_profile();
        Partition best = find_gdot_maximal_ir(p);
        CHECK(is_strong_nash_stable(p, best).stable);
    }
}

TEST_CASE("the size-vector-maximal search checks its preconditions") {
    CHECK_THROWS_WITH_AS(find_gdot_maximal_ir(bundled_game("example1").to_profile()),
                         doctest::Contains("not strong bottom responsive"), PreconditionError);
    AshgMatrix lopsided{2, {{0, 1}, {-2, 0}}};
    CHECK_THROWS_WITH_AS(find_gdot_maximal_ir(ashg_to_profile(lopsided)),
                         doctest::Contains("not mutual"), PreconditionError);
}

TEST_SUITE_END();
