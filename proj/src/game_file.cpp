#include "hedonic/game_file.hpp"

#include <fstream>

namespace hedonic {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw ParseError("field '" + field + "': " + message);
}

int read_n(const json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer()) fail("n", "missing or not an integer");
    const int n = j["n"].get<int>();
    if (n < 1 || n > kPlayerCap) fail("n", "must be in 1.." + std::to_string(kPlayerCap));
    return n;
}

Coalition read_coalition(const json& entry, int n, const std::string& field) {
    if (!entry.is_array() || entry.empty()) fail(field, "coalition must be a non-empty array of player ids");
    Coalition s;
    for (const json& m : entry) {
        if (!m.is_number_integer()) fail(field, "player id must be an integer");
        const int i = m.get<int>();
        if (i < 1 || i > n) fail(field, "player " + std::to_string(i) + " out of range");
        if (s.contains(i)) fail(field, "player " + std::to_string(i) + " repeated");
        s = s.with(i);
    }
    return s;
}

ExplicitGame read_explicit(const json& j, int n) {
    ExplicitGame g{n, {}, false};
    if (j.contains("tail")) {
        if (!j["tail"].is_string() || j["tail"].get<std::string>() != "bottom") {
            fail("tail", "only the value \"bottom\" is supported");
        }
        g.tail_completion = true;
    }
    if (!j.contains("preferences") || !j["preferences"].is_array() ||
        static_cast<int>(j["preferences"].size()) != n) {
        fail("preferences", "must list one tier array per player");
    }
    for (int pi = 0; pi < n; ++pi) {
        const json& listing = j["preferences"][pi];
        const std::string field = "preferences[" + std::to_string(pi) + "]";
        if (!listing.is_array()) fail(field, "must be an array of indifference classes");
        std::vector<std::vector<Coalition>> classes;
        for (const json& cls : listing) {
            if (!cls.is_array() || cls.empty()) fail(field, "indifference class must be a non-empty array");
            std::vector<Coalition> members;
            for (const json& c : cls) members.push_back(read_coalition(c, n, field));
            classes.push_back(std::move(members));
        }
        g.tiers.push_back(std::move(classes));
    }
    return g;
}

AshgMatrix read_ashg(const json& j, int n) {
    if (!j.contains("values") || !j["values"].is_array() || static_cast<int>(j["values"].size()) != n) {
        fail("values", "must be an n x n integer matrix");
    }
    AshgMatrix m{n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
    for (int i = 0; i < n; ++i) {
        const json& row = j["values"][i];
        if (!row.is_array() || static_cast<int>(row.size()) != n) fail("values", "must be an n x n integer matrix");
        for (int k = 0; k < n; ++k) {
            if (!row[k].is_number_integer()) fail("values", "entries must be integers");
            m.values[i][k] = row[k].get<int>();
        }
        if (m.values[i][i] != 0) fail("values", "diagonal must be zero");
    }
    return m;
}

std::vector<Coalition> read_adjacency(const json& j, int n) {
    if (!j.contains("adjacency") || !j["adjacency"].is_array() ||
        static_cast<int>(j["adjacency"].size()) != n) {
        fail("adjacency", "must list one neighbor array per player");
    }
    std::vector<Coalition> adj(n);
    for (int i = 0; i < n; ++i) {
        const json& row = j["adjacency"][i];
        const std::string field = "adjacency[" + std::to_string(i) + "]";
        if (!row.is_array()) fail(field, "must be an array of player ids");
        for (const json& m : row) {
            if (!m.is_number_integer()) fail(field, "player id must be an integer");
            const int k = m.get<int>();
            if (k < 1 || k > n) fail(field, "player " + std::to_string(k) + " out of range");
            if (k == i + 1) fail(field, "player adjacent to itself");
            adj[i] = adj[i].with(k);
        }
    }
    return adj;
}

BRanking read_rankings(const json& j, int n) {
    if (!j.contains("rankings") || !j["rankings"].is_array() ||
        static_cast<int>(j["rankings"].size()) != n) {
        fail("rankings", "must list one strict ranking per player");
    }
    BRanking r{n, {}};
    for (int i = 0; i < n; ++i) {
        const json& row = j["rankings"][i];
        const std::string field = "rankings[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            fail(field, "must rank all players");
        }
        std::vector<PlayerId> order;
        for (const json& m : row) {
            if (!m.is_number_integer()) fail(field, "player id must be an integer");
            order.push_back(m.get<int>());
        }
        r.order.push_back(std::move(order));
    }
    return r;
}

json coalition_to_json(Coalition s) {
    json out = json::array();
    for (PlayerId i : s.members()) out.push_back(i);
    return out;
}

}  // namespace

GameSpec game_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("game file must be a JSON object");
    if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != 1) {
        fail("version", "expected 1");
    }
    if (!j.contains("kind") || !j["kind"].is_string()) fail("kind", "missing or not a string");
    const std::string kind = j["kind"].get<std::string>();
    const int n = read_n(j);

    GameSpec game;
    if (j.contains("name")) {
        if (!j["name"].is_string()) fail("name", "must be a string");
        game.name = j["name"].get<std::string>();
    }
    if (kind == "explicit") {
        game.payload = read_explicit(j, n);
    } else if (kind == "ashg") {
        game.payload = read_ashg(j, n);
    } else if (kind == "friends") {
        game.payload = FriendsGraph{n, read_adjacency(j, n)};
    } else if (kind == "enemies") {
        game.payload = EnemiesGraph{n, read_adjacency(j, n)};
    } else if (kind == "bhedonic") {
        game.payload = read_rankings(j, n);
    } else {
        fail("kind", "unknown kind '" + kind + "'");
    }

    try {
        game.to_profile();  // surface validation problems at load time
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return game;
}

json game_to_json(const GameSpec& game) {
    json j;
    j["version"] = 1;
    j["kind"] = std::string(game_kind_tag(game.kind()));
    j["n"] = game.player_count();
    if (!game.name.empty()) j["name"] = game.name;

    struct Emit {
        json& j;
        void operator()(const ExplicitGame& g) const {
            if (g.tail_completion) j["tail"] = "bottom";
            json players = json::array();
            for (const auto& listing : g.tiers) {
                json classes = json::array();
                for (const auto& cls : listing) {
                    json coalitions = json::array();
                    for (const Coalition& s : cls) coalitions.push_back(coalition_to_json(s));
                    classes.push_back(std::move(coalitions));
                }
                players.push_back(std::move(classes));
            }
            j["preferences"] = std::move(players);
        }
        void operator()(const AshgMatrix& m) const { j["values"] = m.values; }
        void operator()(const FriendsGraph& g) const { emit_adjacency(g.adjacency); }
        void operator()(const EnemiesGraph& g) const { emit_adjacency(g.adjacency); }
        void operator()(const BRanking& r) const { j["rankings"] = r.order; }
        void emit_adjacency(const std::vector<Coalition>& adj) const {
            json rows = json::array();
            for (const Coalition& row : adj) rows.push_back(coalition_to_json(row));
            j["adjacency"] = std::move(rows);
        }
    };
    std::visit(Emit{j}, game.payload);
    return j;
}

GameSpec load_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return game_from_json(j);
}

void save_game(const GameSpec& game, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << game_to_json(game).dump(2) << '\n';
}

const std::vector<std::string>& bundled_names() {
    static const std::vector<std::string> names = {"example1", "example2", "prop2", "prop3"};
    return names;
}

GameSpec bundled_game(const std::string& name) {
    auto C = [](std::initializer_list<PlayerId> members) { return Coalition::of(members); };
    if (name == "example1") {
        ExplicitGame g{3,
                       {
                           {{C({1, 2})}, {C({1, 2, 3})}, {C({1})}, {C({1, 3})}},
                           {{C({1, 2, 3})}, {C({1, 2}), C({2, 3})}, {C({2})}},
                           {{C({2, 3})}, {C({1, 2, 3})}, {C({3})}, {C({1, 3})}},
                       },
                       false};
        return GameSpec{"example1", std::move(g)};
    }
    if (name == "example2") {
        ExplicitGame g{3,
                       {
                           {{C({1, 3})}, {C({1})}, {C({1, 2, 3})}, {C({1, 2})}},
                           {{C({2, 3})}, {C({2})}, {C({1, 2, 3})}, {C({1, 2})}},
                           {{C({1, 2, 3})}, {C({1, 3}), C({2, 3})}, {C({3})}},
                       },
                       false};
        return GameSpec{"example2", std::move(g)};
    }
    if (name == "prop2") {
        ExplicitGame g{4,
                       {
                           {{C({1, 2})}, {C({1, 4})}, {C({1})}},
                           {{C({2, 3})}, {C({1, 2})}, {C({2})}},
                           {{C({3, 4})}, {C({2, 3})}, {C({3})}},
                           {{C({1, 4})}, {C({3, 4})}, {C({4})}},
                       },
                       true};
        return GameSpec{"prop2", std::move(g)};
    }
    if (name == "prop3") {
        ExplicitGame g{4,
                       {
                           {{C({1, 2}), C({1, 3}), C({1, 4})}},
                           {{C({1, 2}), C({2, 3}), C({2, 4})}},
                           {{C({2, 3}), C({3, 4})}},
                           {{C({1, 4}), C({2, 4})}, {C({3, 4})}},
                       },
                       true};
        return GameSpec{"prop3", std::move(g)};
    }
    throw std::invalid_argument("bundled_game: unknown name '" + name + "' (expected example1, example2, "
                                "prop2 or prop3)");
}

}  // namespace hedonic
