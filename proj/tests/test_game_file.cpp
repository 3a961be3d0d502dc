#include <doctest.h>

#include <filesystem>

#include "hedonic/game_file.hpp"

using namespace hedonic;
using nlohmann::json;

TEST_SUITE_BEGIN("game_file");

TEST_CASE("bundled games round-trip through disk") {
    const auto dir = std::filesystem::temp_directory_path();
    for (const std::string& name : bundled_names()) {
        GameSpec game = bundled_game(name);
        const std::string path = (dir / (name + ".game.json")).string();
        save_game(game, path);
        GameSpec back = load_game(path);
        CHECK(game_to_json(back) == game_to_json(game));
        CHECK(back.name == game.name);
        std::filesystem::remove(path);
    }
    CHECK(bundled_names().size() == 4);
    CHECK_THROWS_AS(bundled_game("nope"), std::invalid_argument);
    CHECK_THROWS_AS(load_game("/nonexistent/game.json"), ParseError);
}

TEST_CASE("a tail marker completes partial listings from below") {
    json j = {{"version", 1},
              {"kind", "explicit"},
              {"n", 2},
              {"name", "tiny"},
              {"tail", "bottom"},
              {"preferences", {{{{1, 2}}}, {{{2}}, {{1, 2}}}}}};
    GameSpec game = game_from_json(j);
    PreferenceProfile p = game.to_profile();
    CHECK(p.compare(1, Coalition::of({1, 2}), Coalition::of({1})) ==
          PreferenceOrder::StrictlyPrefers);
    CHECK(p.compare(2, Coalition::of({2}), Coalition::of({1, 2})) ==
          PreferenceOrder::StrictlyPrefers);

    j.erase("tail");
    CHECK_THROWS_AS(game_from_json(j), ParseError);  // listings must then be complete
}

TEST_CASE("malformed documents raise parse errors naming the field") {
    const json good = game_to_json(bundled_game("example1"));

    json bad = good;
    bad["version"] = 2;
    CHECK_THROWS_WITH_AS(game_from_json(bad), doctest::Contains("version"), ParseError);

    bad = good;
    bad["kind"] = "mystery";
    CHECK_THROWS_WITH_AS(game_from_json(bad), doctest::Contains("kind"), ParseError);

    bad = good;
    bad.erase("n");
    CHECK_THROWS_WITH_AS(game_from_json(bad), doctest::Contains("n"), ParseError);

    bad = good;
    bad["preferences"][0][0][0] = {2};  // player 1 listing a coalition without player 1
    CHECK_THROWS_AS(game_from_json(bad), ParseError);
}

TEST_CASE("matrix and graph payloads are validated on load") {
    json ashg = {{"version", 1},
                 {"kind", "ashg"},
                 {"n", 2},
                 {"name", "m"},
                 {"values", {{0, 1}, {2, 5}}}};
    CHECK_THROWS_WITH_AS(game_from_json(ashg), doctest::Contains("diagonal"), ParseError);
    ashg["values"] = {{0, 1, 3}, {2, 0, 1}};
    CHECK_THROWS_AS(game_from_json(ashg), ParseError);

    json friends = {{"version", 1},
                    {"kind", "friends"},
                    {"n", 2},
                    {"name", "g"},
                    {"adjacency", {{1, 2}, {1}}}};
    CHECK_THROWS_AS(game_from_json(friends), ParseError);  // self-friendship

    json ranking = {{"version", 1},
                    {"kind", "bhedonic"},
                    {"n", 3},
                    {"name", "r"},
                    {"rankings", {{2, 2, 1}, {1, 3, 2}, {1, 2, 3}}}};
    CHECK_THROWS_AS(game_from_json(ranking), ParseError);
}

TEST_SUITE_END();
