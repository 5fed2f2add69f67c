#include "lazygame/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace lazygame {

using nlohmann::json;

namespace {

const json& require_field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw FormatError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::vector<std::string> string_list(const json& value, const char* what) {
    if (!value.is_array()) throw FormatError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& item : value) {
        if (!item.is_string()) throw FormatError(std::string(what) + " entries must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::int32_t lookup(const std::vector<std::string>& names, const std::string& name,
                    const char* what) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        throw FormatError(std::string("unknown ") + what + " \"" + name + "\"");
    }
    return static_cast<std::int32_t>(it - names.begin());
}

TreeSpec tree_spec_from_json(const json& node, const std::vector<std::string>& players,
                             const std::vector<std::string>& outcomes) {
    if (!node.is_object()) throw FormatError("tree node must be an object");
    if (node.contains("outcome")) {
        const auto& o = node["outcome"];
        if (!o.is_string()) throw FormatError("leaf outcome must be a string");
        return TreeSpec::leaf(lookup(outcomes, o.get<std::string>(), "outcome"));
    }
    if (!node.contains("player") || !node.contains("children")) {
        throw FormatError("tree node needs either \"outcome\" or \"player\"+\"children\"");
    }
    const auto& p = node["player"];
    if (!p.is_string()) throw FormatError("node player must be a string");
    const auto& kids = node["children"];
    if (!kids.is_array() || kids.empty()) {
        throw FormatError("internal node needs a nonempty children array");
    }
    std::vector<TreeSpec> children;
    for (const auto& kid : kids) children.push_back(tree_spec_from_json(kid, players, outcomes));
    return TreeSpec::internal(lookup(players, p.get<std::string>(), "player"),
                              std::move(children));
}

json tree_to_json(const GameInstance& g, VertexId v) {
    const auto& node = g.tree.node(v);
    json out;
    if (node.is_leaf()) {
        out["outcome"] = g.outcome_names[static_cast<std::size_t>(node.outcome)];
        return out;
    }
    out["player"] = g.player_names[static_cast<std::size_t>(node.owner)];
    json kids = json::array();
    for (VertexId child : node.children) kids.push_back(tree_to_json(g, child));
    out["children"] = std::move(kids);
    return out;
}

}  // namespace

std::string leaf_path(const GameTree& tree, VertexId leaf) {
    std::vector<std::int32_t> indices;
    VertexId v = leaf;
    while (tree.node(v).parent >= 0) {
        VertexId parent = tree.node(v).parent;
        const auto& kids = tree.node(parent).children;
        auto it = std::find(kids.begin(), kids.end(), v);
        indices.push_back(static_cast<std::int32_t>(it - kids.begin()));
        v = parent;
    }
    std::string out;
    for (std::size_t i = indices.size(); i-- > 0;) {
        out += std::to_string(indices[i]);
        if (i) out.push_back('.');
    }
    return out;
}

GameInstance game_from_json(const json& doc) {
    if (!doc.is_object()) throw FormatError("game document must be an object");
    const json& format = require_field(doc, "format");
    if (!format.is_number_integer() || format.get<int>() != 1) {
        throw FormatError("unsupported game format version");
    }

    GameInstance g;
    g.player_names = string_list(require_field(doc, "players"), "players");
    g.outcome_names = string_list(require_field(doc, "outcomes"), "outcomes");
    g.tree = GameTree::build(
        tree_spec_from_json(require_field(doc, "tree"), g.player_names, g.outcome_names));

    g.preferences.assign(g.player_names.size(), std::nullopt);
    const json& prefs = require_field(doc, "preferences");
    if (!prefs.is_object()) throw FormatError("preferences must be an object");
    for (const auto& [name, pair_list] : prefs.items()) {
        PlayerId p = lookup(g.player_names, name, "player");
        if (!pair_list.is_array()) throw FormatError("preference entry must be an array of pairs");
        std::vector<std::pair<OutcomeId, OutcomeId>> pairs;
        for (const auto& item : pair_list) {
            if (!item.is_array() || item.size() != 2) {
                throw FormatError("preference pair must be a two-element array");
            }
            pairs.emplace_back(lookup(g.outcome_names, item[0].get<std::string>(), "outcome"),
                               lookup(g.outcome_names, item[1].get<std::string>(), "outcome"));
        }
        g.preferences[static_cast<std::size_t>(p)] = PreferenceRelation::make(p, std::move(pairs));
    }

    if (doc.contains("payoffs")) {
        const json& payoffs = doc["payoffs"];
        if (!payoffs.is_object()) throw FormatError("payoffs must be an object");
        std::map<std::string, VertexId> by_path;
        for (VertexId leaf : g.tree.leaves()) by_path[leaf_path(g.tree, leaf)] = leaf;

        std::vector<std::vector<Rational>> table(
            g.player_names.size(),
            std::vector<Rational>(static_cast<std::size_t>(g.tree.leaf_count())));
        std::vector<std::vector<bool>> seen(
            g.player_names.size(),
            std::vector<bool>(static_cast<std::size_t>(g.tree.leaf_count()), false));
        for (const auto& [name, row] : payoffs.items()) {
            PlayerId p = lookup(g.player_names, name, "player");
            if (!row.is_object()) throw FormatError("payoff row must be an object");
            for (const auto& [path, value] : row.items()) {
                auto it = by_path.find(path);
                if (it == by_path.end()) {
                    throw FormatError("payoff references unknown leaf path \"" + path + "\"");
                }
                if (!value.is_string()) throw FormatError("payoff values must be rational strings");
                std::size_t leaf_rank =
                    static_cast<std::size_t>(g.tree.node(it->second).leaf_rank);
                try {
                    table[static_cast<std::size_t>(p)][leaf_rank] =
                        Rational::parse(value.get<std::string>());
                } catch (const std::invalid_argument& e) {
                    throw FormatError(std::string("bad payoff value: ") + e.what());
                }
                seen[static_cast<std::size_t>(p)][leaf_rank] = true;
            }
        }
        for (std::size_t p = 0; p < seen.size(); ++p) {
            for (std::size_t l = 0; l < seen[p].size(); ++l) {
                if (!seen[p][l]) {
                    throw FormatError("payoffs missing for player \"" + g.player_names[p] +
                                      "\" at leaf path \"" +
                                      leaf_path(g.tree, g.tree.leaves()[l]) + "\"");
                }
            }
        }
        g.payoffs = std::move(table);
    }
    return g;
}

json game_to_json(const GameInstance& g) {
    json doc;
    doc["format"] = 1;
    doc["players"] = g.player_names;
    doc["outcomes"] = g.outcome_names;
    doc["tree"] = tree_to_json(g, g.tree.root());

    json prefs = json::object();
    for (PlayerId p = 0; p < g.player_count(); ++p) {
        if (!g.preferences[static_cast<std::size_t>(p)]) continue;
        json pair_list = json::array();
        for (const auto& [x, y] : g.preferences[static_cast<std::size_t>(p)]->pairs) {
            pair_list.push_back({g.outcome_names[static_cast<std::size_t>(x)],
                                 g.outcome_names[static_cast<std::size_t>(y)]});
        }
        prefs[g.player_names[static_cast<std::size_t>(p)]] = std::move(pair_list);
    }
    doc["preferences"] = std::move(prefs);

    if (g.payoffs) {
        json payoffs = json::object();
        for (PlayerId p = 0; p < g.player_count(); ++p) {
            json row = json::object();
            for (VertexId leaf : g.tree.leaves()) {
                std::size_t leaf_rank = static_cast<std::size_t>(g.tree.node(leaf).leaf_rank);
                row[leaf_path(g.tree, leaf)] =
                    (*g.payoffs)[static_cast<std::size_t>(p)][leaf_rank].str();
            }
            payoffs[g.player_names[static_cast<std::size_t>(p)]] = std::move(row);
        }
        doc["payoffs"] = std::move(payoffs);
    }
    return doc;
}

StrategyProfile profile_from_json(const json& doc, const GameTree& tree) {
    if (!doc.is_object()) throw FormatError("profile document must be an object");
    std::vector<std::int32_t> choices(static_cast<std::size_t>(tree.internal_count()), -1);
    for (const auto& [key, value] : doc.items()) {
        VertexId v = -1;
        try {
            std::size_t used = 0;
            v = std::stoi(key, &used);
            if (used != key.size()) v = -1;
        } catch (const std::exception&) {
            v = -1;
        }
        if (v < 0 || v >= tree.size()) {
            throw FormatError("profile key \"" + key + "\" is not a vertex id");
        }
        const auto& node = tree.node(v);
        if (node.is_leaf()) throw FormatError("profile key " + key + " names a leaf");
        if (!value.is_number_integer()) throw FormatError("profile choices must be integers");
        choices[static_cast<std::size_t>(node.internal_rank)] = value.get<std::int32_t>();
    }
    for (VertexId v : tree.internal_vertices()) {
        if (choices[static_cast<std::size_t>(tree.node(v).internal_rank)] < 0) {
            throw FormatError("profile has no choice for vertex " + std::to_string(v));
        }
    }
    return StrategyProfile(std::move(choices));
}

json profile_to_json(const GameTree& tree, const StrategyProfile& s) {
    json doc = json::object();
    for (VertexId v : tree.internal_vertices()) {
        doc[std::to_string(v)] = s.choices()[static_cast<std::size_t>(tree.node(v).internal_rank)];
    }
    return doc;
}

GameInstance parse_game_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("JSON parse error: ") + e.what());
    }
    return game_from_json(doc);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("cannot write " + path);
}

GameInstance load_game(const std::string& path) { return parse_game_text(read_text_file(path)); }

StrategyProfile load_profile(const std::string& path, const GameTree& tree) {
    json doc;
    try {
        doc = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("JSON parse error: ") + e.what());
    }
    return profile_from_json(doc, tree);
}

}  // namespace lazygame
