#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "hedonic/core.hpp"

namespace hedonic {

/// Additively separable game: player i values coalition S at the sum of
/// values[i-1][j-1] over the other members j. Diagonal entries must be zero.
struct AshgMatrix {
    int n = 0;
    std::vector<std::vector<int>> values;

    int value(PlayerId i, PlayerId j) const { return values[i - 1][j - 1]; }
};

/// adjacency[i-1] holds i's friends as a coalition mask (never including i).
struct FriendsGraph {
    int n = 0;
    std::vector<Coalition> adjacency;
};

/// adjacency[i-1] holds the players i does NOT consider enemies.
struct EnemiesGraph {
    int n = 0;
    std::vector<Coalition> adjacency;
};

/// order[i-1] ranks all of {1..n} (including i itself) best-first, strictly.
struct BRanking {
    int n = 0;
    std::vector<std::vector<PlayerId>> order;
};

/// Per-player tier listings, most preferred first. With tail_completion the
/// unlisted coalitions of a player form one indifference class strictly
/// below everything listed.
struct ExplicitGame {
    int n = 0;
    std::vector<std::vector<std::vector<Coalition>>> tiers;
    bool tail_completion = false;
};

enum class GameKind { Explicit, Ashg, Friends, Enemies, Bhedonic };

std::string_view game_kind_tag(GameKind k);

/// A game in whichever representation it was given, expandable on demand.
struct GameSpec {
    std::string name;
    std::variant<ExplicitGame, AshgMatrix, FriendsGraph, EnemiesGraph, BRanking> payload;

    GameKind kind() const;
    int player_count() const;
    PreferenceProfile to_profile() const;
};

PreferenceProfile ashg_to_profile(const AshgMatrix& m, int cap = kPlayerCap);
bool is_symmetric(const AshgMatrix& m);
bool is_strict_ashg(const AshgMatrix& m);

/// Appreciation-of-friends values: +n for a friend, -1 otherwise.
AshgMatrix friends_game(const FriendsGraph& g);
/// Aversion-to-enemies values: +1 for a non-enemy, -n otherwise.
AshgMatrix enemies_game(const EnemiesGraph& g);

/// Coalitions compare by the best-ranked other member (the player itself for
/// a singleton), then smaller coalitions first; equal best and equal size
/// land in one indifference class.
PreferenceProfile bhedonic_to_profile(const BRanking& r, int cap = kPlayerCap);

enum class RandomKind {
    Explicit,
    Ashg,
    SymmetricAshg,
    Friends,
    SymmetricFriends,
    Enemies,
    SymmetricEnemies,
    BhedonicStrict,
};

std::string_view random_kind_tag(RandomKind k);
std::optional<RandomKind> random_kind_from_tag(std::string_view tag);

/// Deterministic in (kind, n, seed) across platforms.
GameSpec random_game(RandomKind kind, int n, std::uint64_t seed);

}  // namespace hedonic
