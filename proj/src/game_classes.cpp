#include "hedonic/game_classes.hpp"

#include <algorithm>
#include <random>

namespace hedonic {

namespace {

void require_cap(int n, int cap, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": need at least one player");
    if (n > cap) {
        throw CapacityError(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap) + " (pass a larger cap to override)");
    }
}

void validate_matrix(const AshgMatrix& m, const char* what) {
    if (m.n < 1 || static_cast<int>(m.values.size()) != m.n) {
        throw std::invalid_argument(std::string(what) + ": matrix shape does not match n");
    }
    for (int i = 0; i < m.n; ++i) {
        if (static_cast<int>(m.values[i].size()) != m.n) {
            throw std::invalid_argument(std::string(what) + ": matrix shape does not match n");
        }
        if (m.values[i][i] != 0) {
            throw std::invalid_argument(std::string(what) + ": self-value of player " + std::to_string(i + 1) +
                                        " must be zero");
        }
    }
}

void validate_graph(int n, const std::vector<Coalition>& adjacency, const char* what) {
    if (n < 1 || static_cast<int>(adjacency.size()) != n) {
        throw std::invalid_argument(std::string(what) + ": adjacency shape does not match n");
    }
    for (int i = 1; i <= n; ++i) {
        const Coalition row = adjacency[i - 1];
        if (!row.subset_of(Coalition::full(n))) {
            throw std::invalid_argument(std::string(what) + ": adjacency of player " + std::to_string(i) +
                                        " outside {1..n}");
        }
        if (row.contains(i)) {
            throw std::invalid_argument(std::string(what) + ": player " + std::to_string(i) +
                                        " adjacent to itself");
        }
    }
}

/// Dense tiers from per-coalition scores, higher score = better.
std::vector<std::vector<int>> tiers_from_scores(
    int n, const std::vector<std::vector<long>>& score_by_player) {
    std::vector<std::vector<int>> tables(n, std::vector<int>(std::size_t(1) << n, PreferenceProfile::kUnsetTier));
    for (int pi = 0; pi < n; ++pi) {
        const std::uint32_t bit = 1u << pi;
        std::vector<long> distinct;
        const std::uint32_t full = Coalition::full(n).mask();
        for (std::uint32_t mask = bit; mask <= full; ++mask) {
            if (mask & bit) distinct.push_back(score_by_player[pi][mask]);
        }
        std::sort(distinct.begin(), distinct.end(), std::greater<long>());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (std::uint32_t mask = bit; mask <= full; ++mask) {
            if (!(mask & bit)) continue;
            const long score = score_by_player[pi][mask];
            const auto at = std::lower_bound(distinct.begin(), distinct.end(), score, std::greater<long>());
            tables[pi][mask] = static_cast<int>(at - distinct.begin());
        }
    }
    return tables;
}

/// Seed mixing so (kind, n, seed) picks one reproducible stream. Draws use
/// plain modulo on the raw engine output; the slight bias is irrelevant here
/// and keeps results identical across standard libraries.
std::mt19937 make_engine(RandomKind kind, int n, std::uint64_t seed) {
    const std::uint64_t mix = seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(kind) * 0x100000001B3ull +
                              static_cast<std::uint64_t>(n);
    return std::mt19937(static_cast<std::uint32_t>(mix ^ (mix >> 32)));
}

std::uint32_t draw(std::mt19937& rng, std::uint32_t bound) { return rng() % bound; }

}  // namespace

std::string_view game_kind_tag(GameKind k) {
    switch (k) {
        case GameKind::Explicit: return "explicit";
        case GameKind::Ashg: return "ashg";
        case GameKind::Friends: return "friends";
        case GameKind::Enemies: return "enemies";
        case GameKind::Bhedonic: return "bhedonic";
    }
    return {};
}

GameKind GameSpec::kind() const {
    return static_cast<GameKind>(payload.index());
}

int GameSpec::player_count() const {
    return std::visit([](const auto& g) { return g.n; }, payload);
}

PreferenceProfile GameSpec::to_profile() const {
    struct Expand {
        PreferenceProfile operator()(const ExplicitGame& g) const {
            return profile_from_tier_lists(g.n, g.tiers, g.tail_completion);
        }
        PreferenceProfile operator()(const AshgMatrix& m) const { return ashg_to_profile(m); }
        PreferenceProfile operator()(const FriendsGraph& g) const { return ashg_to_profile(friends_game(g)); }
        PreferenceProfile operator()(const EnemiesGraph& g) const { return ashg_to_profile(enemies_game(g)); }
        PreferenceProfile operator()(const BRanking& r) const { return bhedonic_to_profile(r); }
    };
    return std::visit(Expand{}, payload);
}

PreferenceProfile ashg_to_profile(const AshgMatrix& m, int cap) {
    validate_matrix(m, "ashg_to_profile");
    require_cap(m.n, cap, "ashg_to_profile");
    const int n = m.n;
    std::vector<std::vector<long>> scores(n, std::vector<long>(std::size_t(1) << n, 0));
    for (int pi = 0; pi < n; ++pi) {
        const std::uint32_t bit = 1u << pi;
        const std::uint32_t full = Coalition::full(n).mask();
        for (std::uint32_t mask = bit; mask <= full; ++mask) {
            if (!(mask & bit)) continue;
            long total = 0;
            for (std::uint32_t rest = mask & ~bit; rest != 0; rest &= rest - 1) {
                total += m.values[pi][std::countr_zero(rest)];
            }
            scores[pi][mask] = total;
        }
    }
    return PreferenceProfile(n, tiers_from_scores(n, scores));
}

bool is_symmetric(const AshgMatrix& m) {
    validate_matrix(m, "is_symmetric");
    for (int i = 0; i < m.n; ++i) {
        for (int j = i + 1; j < m.n; ++j) {
            if (m.values[i][j] != m.values[j][i]) return false;
        }
    }
    return true;
}

bool is_strict_ashg(const AshgMatrix& m) {
    validate_matrix(m, "is_strict_ashg");
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) {
            if (i != j && m.values[i][j] == 0) return false;
        }
    }
    return true;
}

AshgMatrix friends_game(const FriendsGraph& g) {
    validate_graph(g.n, g.adjacency, "friends_game");
    AshgMatrix m{g.n, std::vector<std::vector<int>>(g.n, std::vector<int>(g.n, 0))};
    for (int i = 1; i <= g.n; ++i) {
        for (int j = 1; j <= g.n; ++j) {
            if (i != j) m.values[i - 1][j - 1] = g.adjacency[i - 1].contains(j) ? g.n : -1;
        }
    }
    return m;
}

AshgMatrix enemies_game(const EnemiesGraph& g) {
    validate_graph(g.n, g.adjacency, "enemies_game");
    AshgMatrix m{g.n, std::vector<std::vector<int>>(g.n, std::vector<int>(g.n, 0))};
    for (int i = 1; i <= g.n; ++i) {
        for (int j = 1; j <= g.n; ++j) {
            if (i != j) m.values[i - 1][j - 1] = g.adjacency[i - 1].contains(j) ? 1 : -g.n;
        }
    }
    return m;
}

PreferenceProfile bhedonic_to_profile(const BRanking& r, int cap) {
    if (r.n < 1 || static_cast<int>(r.order.size()) != r.n) {
        throw std::invalid_argument("bhedonic_to_profile: ranking shape does not match n");
    }
    require_cap(r.n, cap, "bhedonic_to_profile");
    const int n = r.n;
    std::vector<std::vector<int>> rank(n, std::vector<int>(n + 1, 0));
    for (int pi = 0; pi < n; ++pi) {
        if (static_cast<int>(r.order[pi].size()) != n) {
            throw std::invalid_argument("bhedonic_to_profile: ranking of player " + std::to_string(pi + 1) +
                                        " must list all players");
        }
        std::vector<bool> seen(n + 1, false);
        for (int pos = 0; pos < n; ++pos) {
            const PlayerId j = r.order[pi][pos];
            if (j < 1 || j > n || seen[j]) {
                throw std::invalid_argument("bhedonic_to_profile: ranking of player " + std::to_string(pi + 1) +
                                            " is not a strict order over {1..n}");
            }
            seen[j] = true;
            rank[pi][j] = pos;  // 0 = best
        }
    }

    // Score = better best-ranked member first, then smaller coalition. The
    // player stands in for the empty set when alone.
    std::vector<std::vector<long>> scores(n, std::vector<long>(std::size_t(1) << n, 0));
    for (int pi = 0; pi < n; ++pi) {
        const std::uint32_t bit = 1u << pi;
        const std::uint32_t full = Coalition::full(n).mask();
        for (std::uint32_t mask = bit; mask <= full; ++mask) {
            if (!(mask & bit)) continue;
            int best = rank[pi][pi + 1];
            if (mask != bit) {
                best = n;
                for (std::uint32_t rest = mask & ~bit; rest != 0; rest &= rest - 1) {
                    best = std::min(best, rank[pi][std::countr_zero(rest) + 1]);
                }
            }
            scores[pi][mask] = -(static_cast<long>(best) * (n + 1) + std::popcount(mask));
        }
    }
    return PreferenceProfile(n, tiers_from_scores(n, scores));
}

std::string_view random_kind_tag(RandomKind k) {
    switch (k) {
        case RandomKind::Explicit: return "explicit";
        case RandomKind::Ashg: return "ashg";
        case RandomKind::SymmetricAshg: return "symmetric-ashg";
        case RandomKind::Friends: return "friends";
        case RandomKind::SymmetricFriends: return "symmetric-friends";
        case RandomKind::Enemies: return "enemies";
        case RandomKind::SymmetricEnemies: return "symmetric-enemies";
        case RandomKind::BhedonicStrict: return "bhedonic-strict";
    }
    return {};
}

std::optional<RandomKind> random_kind_from_tag(std::string_view tag) {
    for (int k = 0; k <= static_cast<int>(RandomKind::BhedonicStrict); ++k) {
        if (tag == random_kind_tag(static_cast<RandomKind>(k))) return static_cast<RandomKind>(k);
    }
    return std::nullopt;
}

GameSpec random_game(RandomKind kind, int n, std::uint64_t seed) {
    require_cap(n, kPlayerCap, "random_game");
    std::mt19937 rng = make_engine(kind, n, seed);
    const std::string name =
        std::string(random_kind_tag(kind)) + "-n" + std::to_string(n) + "-s" + std::to_string(seed);

    switch (kind) {
        case RandomKind::Explicit: {
            // Uniform tiers over a range half the coalition count keeps a
            // healthy mix of strict preference and indifference.
            ExplicitGame g{n, {}, false};
            const std::uint32_t range = std::max(2u, (1u << (n - 1)) / 2);
            std::vector<std::vector<std::vector<Coalition>>> tiers(n);
            for (PlayerId i = 1; i <= n; ++i) {
                std::vector<std::vector<Coalition>> classes(range);
                for (const Coalition& s : coalitions_containing(i, n)) {
                    classes[draw(rng, range)].push_back(s);
                }
                std::erase_if(classes, [](const auto& c) { return c.empty(); });
                tiers[i - 1] = std::move(classes);
            }
            g.tiers = std::move(tiers);
            return GameSpec{name, std::move(g)};
        }
        case RandomKind::Ashg:
        case RandomKind::SymmetricAshg: {
            AshgMatrix m{n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    if (kind == RandomKind::SymmetricAshg && j < i) {
                        m.values[i][j] = m.values[j][i];
                    } else {
                        m.values[i][j] = static_cast<int>(draw(rng, 11)) - 5;
                    }
                }
            }
            return GameSpec{name, std::move(m)};
        }
        case RandomKind::Friends:
        case RandomKind::SymmetricFriends:
        case RandomKind::Enemies:
        case RandomKind::SymmetricEnemies: {
            const bool symmetric = kind == RandomKind::SymmetricFriends || kind == RandomKind::SymmetricEnemies;
            std::vector<Coalition> adj(n);
            for (int i = 1; i <= n; ++i) {
                for (int j = symmetric ? i + 1 : 1; j <= n; ++j) {
                    if (i == j) continue;
                    if (draw(rng, 2) == 1) {
                        adj[i - 1] = adj[i - 1].with(j);
                        if (symmetric) adj[j - 1] = adj[j - 1].with(i);
                    }
                }
            }
            if (kind == RandomKind::Friends || kind == RandomKind::SymmetricFriends) {
                return GameSpec{name, FriendsGraph{n, std::move(adj)}};
            }
            return GameSpec{name, EnemiesGraph{n, std::move(adj)}};
        }
        case RandomKind::BhedonicStrict: {
            // Every companion beats staying alone: the player itself always
            // ranks last. Rankings with the self above another player can
            // rank a context below a subset sharing its choice set, which
            // breaks top responsiveness.
            BRanking r{n, {}};
            r.order.assign(n, {});
            for (int i = 0; i < n; ++i) {
                std::vector<PlayerId> order;
                for (int j = 1; j <= n; ++j) {
                    if (j != i + 1) order.push_back(j);
                }
                for (int j = n - 2; j > 0; --j) {
                    std::swap(order[j], order[draw(rng, static_cast<std::uint32_t>(j + 1))]);
                }
                order.push_back(i + 1);
                r.order[i] = std::move(order);
            }
            return GameSpec{name, std::move(r)};
        }
    }
    throw std::invalid_argument("random_game: unknown kind");
}

}  // namespace hedonic
