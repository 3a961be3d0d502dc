#pragma once

#include <json.hpp>

#include "hedonic/game_classes.hpp"

namespace hedonic {

/// On-disk game format, version 1. Common fields: "version", "kind", "n",
/// optional "name". Payload by kind:
///   explicit   "preferences": per player an array of indifference classes
///              (best first), each class an array of coalitions, each
///              coalition an ascending array of player ids; optional
///              "tail": "bottom" completes a partial listing
///   ashg       "values": n x n integer matrix, zero diagonal
///   friends    "adjacency": per player the ascending list of friends
///   enemies    "adjacency": per player the ascending list of non-enemies
///   bhedonic   "rankings": per player all of {1..n}, best first, strict
GameSpec game_from_json(const nlohmann::json& j);
nlohmann::json game_to_json(const GameSpec& game);

GameSpec load_game(const std::string& path);
void save_game(const GameSpec& game, const std::string& path);

/// Names accepted by bundled_game: example1, example2, prop2, prop3.
const std::vector<std::string>& bundled_names();

/// Small games wired into the library:
///   example1   three players, top responsive with mutual choice sets, no
///              perfect partition
///   example2   three players, strong bottom responsive with mutual avoid
///              sets
///   prop2      four players with cyclic pair preferences; strict-core
///              stable partitions exist but no strong Nash stable one
///   prop3      four players where a strong Nash stable partition is
///              Pareto dominated
GameSpec bundled_game(const std::string& name);

}  // namespace hedonic
