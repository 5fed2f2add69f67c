#pragma once

#include <string>

#include <json.hpp>

#include "lazygame/game.hpp"

namespace lazygame {

// Game document, format 1:
//   {
//     "format": 1,
//     "players": ["a", "b"],
//     "outcomes": ["x", "y"],
//     "tree": {"player": "a", "children": [{"outcome": "x"}, ...]},
//     "preferences": {"a": [["x", "y"], ...]},
//     "payoffs": {"a": {"0.0": "3/2", ...}}        // optional, keyed by leaf path
//   }
// Leaf paths are dot-joined child indices from the root ("" for a leaf root).
GameInstance game_from_json(const nlohmann::json& doc);
nlohmann::json game_to_json(const GameInstance& g);

// Profile document: an object mapping internal vertex ids (as strings) to
// child indices, e.g. {"0": 1, "3": 0}.
StrategyProfile profile_from_json(const nlohmann::json& doc, const GameTree& tree);
nlohmann::json profile_to_json(const GameTree& tree, const StrategyProfile& s);

GameInstance parse_game_text(const std::string& text);
GameInstance load_game(const std::string& path);
StrategyProfile load_profile(const std::string& path, const GameTree& tree);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

std::string leaf_path(const GameTree& tree, VertexId leaf);

}  // namespace lazygame
