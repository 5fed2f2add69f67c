#include "lazygame/game.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lazygame {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

std::string format_diagnostics(const std::vector<Diagnostic>& diags) {
    std::ostringstream out;
    for (std::size_t i = 0; i < diags.size(); ++i) {
        const Diagnostic& d = diags[i];
        if (i) out << "; ";
        out << (d.severity == Diagnostic::Severity::kError ? "error: " : "warning: ") << d.message;
        if (d.vertex >= 0) out << " [vertex " << d.vertex << "]";
        if (d.player >= 0) out << " [player " << d.player << "]";
    }
    return out.str();
}

bool diagnostics_ok(const std::vector<Diagnostic>& diags) {
    return std::none_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
        return d.severity == Diagnostic::Severity::kError;
    });
}

ValidationError::ValidationError(std::vector<Diagnostic> diags)
    : Error(format_diagnostics(diags)), diagnostics(std::move(diags)) {}

ValidationError::ValidationError(std::string message, VertexId vertex, PlayerId player)
    : ValidationError(std::vector<Diagnostic>{
          Diagnostic{Diagnostic::Severity::kError, std::move(message), vertex, player}}) {}

CyclicPreferenceError::CyclicPreferenceError(PlayerId player_in, std::vector<OutcomeId> cycle_in)
    : Error("cyclic preference for player " + std::to_string(player_in)),
      player(player_in),
      cycle(std::move(cycle_in)) {}

// ---------------------------------------------------------------------------
// Game tree
// ---------------------------------------------------------------------------

TreeSpec TreeSpec::leaf(OutcomeId o) {
    TreeSpec s;
    s.outcome = o;
    return s;
}

TreeSpec TreeSpec::internal(PlayerId p, std::vector<TreeSpec> kids) {
    TreeSpec s;
    s.owner = p;
    s.children = std::move(kids);
    return s;
}

GameTree GameTree::build(const TreeSpec& spec) {
    GameTree tree;
    tree.add_subtree(spec, -1);
    for (VertexId v = 0; v < tree.size(); ++v) {
        Node& n = tree.nodes_[static_cast<std::size_t>(v)];
        if (n.is_leaf()) {
            n.leaf_rank = static_cast<std::int32_t>(tree.leaves_.size());
            tree.leaves_.push_back(v);
        } else {
            n.internal_rank = static_cast<std::int32_t>(tree.internals_.size());
            tree.internals_.push_back(v);
            tree.min_players_ = std::max(tree.min_players_, n.owner + 1);
        }
    }
    return tree;
}

VertexId GameTree::add_subtree(const TreeSpec& spec, VertexId parent) {
    const bool leaf = spec.children.empty();
    if (leaf && spec.outcome < 0) throw FormatError("leaf node without outcome");
    if (!leaf && spec.owner < 0) throw FormatError("internal node without owner");

    VertexId id = static_cast<VertexId>(nodes_.size());
    nodes_.push_back(Node{parent, leaf ? -1 : spec.owner, leaf ? spec.outcome : -1, {}, -1, -1});
    for (const TreeSpec& child : spec.children) {
        VertexId child_id = add_subtree(child, id);
        nodes_[static_cast<std::size_t>(id)].children.push_back(child_id);
    }
    return id;
}

// ---------------------------------------------------------------------------
// Strategy profiles
// ---------------------------------------------------------------------------

StrategyProfile StrategyProfile::uniform(const GameTree& tree, std::int32_t child_index) {
    return StrategyProfile(
        std::vector<std::int32_t>(static_cast<std::size_t>(tree.internal_count()), child_index));
}

std::int32_t StrategyProfile::choice_at(const GameTree& tree, VertexId v) const {
    const auto& node = tree.node(v);
    if (node.internal_rank < 0) throw ValidationError("choice requested at leaf", v);
    std::size_t rank = static_cast<std::size_t>(node.internal_rank);
    if (rank >= choices_.size()) throw ValidationError("profile missing choice", v);
    return choices_[rank];
}

void StrategyProfile::set_choice(const GameTree& tree, VertexId v, std::int32_t child_index) {
    const auto& node = tree.node(v);
    if (node.internal_rank < 0) throw ValidationError("choice assigned at leaf", v);
    choices_[static_cast<std::size_t>(node.internal_rank)] = child_index;
}

std::string StrategyProfile::key() const {
    std::string out;
    for (std::size_t i = 0; i < choices_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(choices_[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Preferences
// ---------------------------------------------------------------------------

bool PreferenceRelation::prefers(OutcomeId worse, OutcomeId better) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(worse, better));
}

PreferenceRelation PreferenceRelation::make(PlayerId player,
                                            std::vector<std::pair<OutcomeId, OutcomeId>> pairs) {
    for (const auto& [x, y] : pairs) {
        if (x == y) {
            throw ValidationError("reflexive pair in preference relation (trivial cycle)", -1,
                                  player);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return PreferenceRelation{player, std::move(pairs)};
}

PreferenceRelation PreferenceRelation::total_order(PlayerId player,
                                                   const std::vector<OutcomeId>& ascending) {
    std::vector<std::pair<OutcomeId, OutcomeId>> pairs;
    for (std::size_t i = 0; i < ascending.size(); ++i) {
        for (std::size_t j = i + 1; j < ascending.size(); ++j) {
            pairs.emplace_back(ascending[i], ascending[j]);
        }
    }
    return make(player, std::move(pairs));
}

PreferenceRelation PreferenceRelation::full_relation(PlayerId player, std::int32_t outcome_count) {
    std::vector<std::pair<OutcomeId, OutcomeId>> pairs;
    for (OutcomeId x = 0; x < outcome_count; ++x) {
        for (OutcomeId y = 0; y < outcome_count; ++y) {
            if (x != y) pairs.emplace_back(x, y);
        }
    }
    return make(player, std::move(pairs));
}

namespace {

std::vector<std::vector<OutcomeId>> adjacency(const PreferenceRelation& p,
                                              std::int32_t outcome_count) {
    std::vector<std::vector<OutcomeId>> adj(static_cast<std::size_t>(outcome_count));
    for (const auto& [x, y] : p.pairs) {
        if (x < 0 || x >= outcome_count || y < 0 || y >= outcome_count) {
            throw ValidationError("preference pair references unknown outcome", -1, p.player);
        }
        adj[static_cast<std::size_t>(x)].push_back(y);
    }
    return adj;
}

}  // namespace

std::optional<std::vector<OutcomeId>> detect_preference_cycle(const PreferenceRelation& p,
                                                              std::int32_t outcome_count) {
    auto adj = adjacency(p, outcome_count);
    // Iterative three-color DFS; the stack slice gives the witness.
    enum : std::uint8_t { kWhite, kGray, kBlack };
    std::vector<std::uint8_t> color(static_cast<std::size_t>(outcome_count), kWhite);
    std::vector<OutcomeId> stack;

    // (vertex, next edge index) frames.
    std::vector<std::pair<OutcomeId, std::size_t>> frames;
    for (OutcomeId start = 0; start < outcome_count; ++start) {
        if (color[static_cast<std::size_t>(start)] != kWhite) continue;
        frames.emplace_back(start, 0);
        color[static_cast<std::size_t>(start)] = kGray;
        stack.push_back(start);
        while (!frames.empty()) {
            auto& [v, next] = frames.back();
            const auto& edges = adj[static_cast<std::size_t>(v)];
            if (next == edges.size()) {
                color[static_cast<std::size_t>(v)] = kBlack;
                stack.pop_back();
                frames.pop_back();
                continue;
            }
            OutcomeId w = edges[next++];
            if (w == v) return std::vector<OutcomeId>{v};  // reflexive pair
            if (color[static_cast<std::size_t>(w)] == kGray) {
                auto it = std::find(stack.begin(), stack.end(), w);
                return std::vector<OutcomeId>(it, stack.end());
            }
            if (color[static_cast<std::size_t>(w)] == kWhite) {
                color[static_cast<std::size_t>(w)] = kGray;
                stack.push_back(w);
                frames.emplace_back(w, 0);
            }
        }
    }
    return std::nullopt;
}

PreferenceAnalysis analyze_preference(const PreferenceRelation& p, std::int32_t outcome_count) {
    PreferenceAnalysis result;
    if (auto cycle = detect_preference_cycle(p, outcome_count)) {
        result.is_acyclic = false;
        result.cycle = *cycle;
        return result;
    }
    auto adj = adjacency(p, outcome_count);
    // h(a,o): longest chain in the raw digraph with maximum o; singletons count 1.
    std::vector<std::int32_t> indegree(static_cast<std::size_t>(outcome_count), 0);
    for (OutcomeId x = 0; x < outcome_count; ++x) {
        for (OutcomeId y : adj[static_cast<std::size_t>(x)]) {
            ++indegree[static_cast<std::size_t>(y)];
        }
    }
    std::vector<OutcomeId> order;
    for (OutcomeId o = 0; o < outcome_count; ++o) {
        if (indegree[static_cast<std::size_t>(o)] == 0) order.push_back(o);
    }
    result.outcome_height.assign(static_cast<std::size_t>(outcome_count), 1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        OutcomeId x = order[i];
        for (OutcomeId y : adj[static_cast<std::size_t>(x)]) {
            auto& hy = result.outcome_height[static_cast<std::size_t>(y)];
            hy = std::max(hy, result.outcome_height[static_cast<std::size_t>(x)] + 1);
            if (--indegree[static_cast<std::size_t>(y)] == 0) order.push_back(y);
        }
    }
    result.height = 1;
    for (std::int32_t h : result.outcome_height) result.height = std::max(result.height, h);
    if (outcome_count == 0) result.height = 1;
    return result;
}

PreferenceHeight preference_height(const PreferenceRelation& p, std::int32_t outcome_count) {
    PreferenceAnalysis analysis = analyze_preference(p, outcome_count);
    if (!analysis.is_acyclic) throw CyclicPreferenceError(p.player, analysis.cycle);
    return PreferenceHeight{analysis.height, analysis.outcome_height};
}

// ---------------------------------------------------------------------------
// Game instance
// ---------------------------------------------------------------------------

PlayerId GameInstance::player_index(const std::string& name) const {
    for (std::size_t i = 0; i < player_names.size(); ++i) {
        if (player_names[i] == name) return static_cast<PlayerId>(i);
    }
    return -1;
}

OutcomeId GameInstance::outcome_index(const std::string& name) const {
    for (std::size_t i = 0; i < outcome_names.size(); ++i) {
        if (outcome_names[i] == name) return static_cast<OutcomeId>(i);
    }
    return -1;
}

PreferenceRelation GameInstance::preference_of(PlayerId p) const {
    if (p >= 0 && static_cast<std::size_t>(p) < preferences.size() && preferences[p]) {
        return *preferences[p];
    }
    return PreferenceRelation{p, {}};
}

// ---------------------------------------------------------------------------
// Plays and validation
// ---------------------------------------------------------------------------

Play induced_play_from(const GameTree& tree, const StrategyProfile& s, VertexId v) {
    Play play;
    while (true) {
        play.path.push_back(v);
        const auto& node = tree.node(v);
        if (node.is_leaf()) {
            play.outcome = node.outcome;
            return play;
        }
        std::size_t rank = static_cast<std::size_t>(node.internal_rank);
        if (rank >= s.choices().size()) {
            throw ValidationError("profile has no choice at vertex", v);
        }
        std::int32_t choice = s.choices()[rank];
        if (choice < 0 || static_cast<std::size_t>(choice) >= node.children.size()) {
            throw ValidationError("profile choice " + std::to_string(choice) +
                                      " out of range at vertex",
                                  v);
        }
        v = node.children[static_cast<std::size_t>(choice)];
    }
}

Play induced_play(const GameTree& tree, const StrategyProfile& s) {
    if (static_cast<std::int32_t>(s.choices().size()) != tree.internal_count()) {
        throw ValidationError("profile has " + std::to_string(s.choices().size()) +
                                  " choices, tree has " + std::to_string(tree.internal_count()) +
                                  " internal vertices",
                              -1);
    }
    return induced_play_from(tree, s, tree.root());
}

std::vector<Diagnostic> validate_profile(const GameTree& tree, const StrategyProfile& s) {
    std::vector<Diagnostic> diags;
    if (static_cast<std::int32_t>(s.choices().size()) != tree.internal_count()) {
        diags.push_back({Diagnostic::Severity::kError,
                         "profile has " + std::to_string(s.choices().size()) +
                             " choices but the tree has " +
                             std::to_string(tree.internal_count()) + " internal vertices",
                         -1, -1});
        return diags;
    }
    for (VertexId v : tree.internal_vertices()) {
        const auto& node = tree.node(v);
        std::int32_t choice = s.choices()[static_cast<std::size_t>(node.internal_rank)];
        if (choice < 0 || static_cast<std::size_t>(choice) >= node.children.size()) {
            diags.push_back({Diagnostic::Severity::kError,
                             "choice " + std::to_string(choice) + " out of range (vertex has " +
                                 std::to_string(node.children.size()) + " children)",
                             v, node.owner});
        }
    }
    return diags;
}

std::vector<Diagnostic> validate_instance(const GameInstance& g) {
    std::vector<Diagnostic> diags;
    const std::int32_t players = g.player_count();
    const std::int32_t outcomes = g.outcome_count();

    for (VertexId v = 0; v < g.tree.size(); ++v) {
        const auto& node = g.tree.node(v);
        if (node.is_leaf()) {
            if (node.outcome < 0 || node.outcome >= outcomes) {
                diags.push_back({Diagnostic::Severity::kError, "leaf outcome id out of range", v,
                                 -1});
            }
            continue;
        }
        if (node.owner < 0 || node.owner >= players) {
            diags.push_back({Diagnostic::Severity::kError, "vertex owner id out of range", v,
                             node.owner});
        }
        if (node.children.size() == 1) {
            diags.push_back({Diagnostic::Severity::kWarning,
                             "internal vertex has a single child (inert for improvement)", v,
                             node.owner});
        }
    }

    std::vector<bool> owns(static_cast<std::size_t>(std::max(players, 1)), false);
    for (VertexId v : g.tree.internal_vertices()) {
        PlayerId owner = g.tree.node(v).owner;
        if (owner >= 0 && owner < players) owns[static_cast<std::size_t>(owner)] = true;
    }

    if (static_cast<std::int32_t>(g.preferences.size()) != players) {
        diags.push_back({Diagnostic::Severity::kError,
                         "preference table size differs from player count", -1, -1});
    }
    for (PlayerId p = 0; p < players; ++p) {
        const bool has_entry =
            static_cast<std::size_t>(p) < g.preferences.size() && g.preferences[p].has_value();
        if (!has_entry) {
            if (owns[static_cast<std::size_t>(p)]) {
                diags.push_back({Diagnostic::Severity::kError,
                                 "player owns vertices but has no preference entry", -1, p});
            }
            continue;
        }
        const PreferenceRelation& rel = *g.preferences[p];
        for (const auto& [x, y] : rel.pairs) {
            if (x < 0 || x >= outcomes || y < 0 || y >= outcomes) {
                diags.push_back({Diagnostic::Severity::kError,
                                 "preference pair references unknown outcome", -1, p});
            } else if (x == y) {
                diags.push_back({Diagnostic::Severity::kError,
                                 "reflexive pair (" + g.outcome_names[static_cast<std::size_t>(x)] +
                                     ", " + g.outcome_names[static_cast<std::size_t>(x)] +
                                     ") in preference relation",
                                 -1, p});
            }
        }
    }

    if (g.payoffs) {
        if (static_cast<std::int32_t>(g.payoffs->size()) != players) {
            diags.push_back({Diagnostic::Severity::kError,
                             "payoff table does not cover every player", -1, -1});
        } else {
            for (PlayerId p = 0; p < players; ++p) {
                if (static_cast<std::int32_t>((*g.payoffs)[static_cast<std::size_t>(p)].size()) !=
                    g.tree.leaf_count()) {
                    diags.push_back({Diagnostic::Severity::kError,
                                     "payoff table does not cover every leaf", -1, p});
                }
            }
        }
    }
    return diags;
}

void require_valid(const GameInstance& g) {
    auto diags = validate_instance(g);
    if (!diagnostics_ok(diags)) throw ValidationError(std::move(diags));
}

}  // namespace lazygame
