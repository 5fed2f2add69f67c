#include "lazygame/convert.hpp"

#include <algorithm>

namespace lazygame {

bool can_convert(const GameTree& tree, const StrategyProfile& s, const StrategyProfile& t,
                 PlayerId a) {
    for (VertexId v : tree.internal_vertices()) {
        const auto& node = tree.node(v);
        std::size_t rank = static_cast<std::size_t>(node.internal_rank);
        if (s.choices()[rank] != t.choices()[rank] && node.owner != a) return false;
    }
    return true;
}

bool can_lazily_convert(const GameTree& tree, const StrategyProfile& s, const StrategyProfile& t,
                        PlayerId a) {
    Play target_play = induced_play(tree, t);
    std::vector<bool> on_path(static_cast<std::size_t>(tree.size()), false);
    for (VertexId v : target_play.path) on_path[static_cast<std::size_t>(v)] = true;

    for (VertexId v : tree.internal_vertices()) {
        const auto& node = tree.node(v);
        std::size_t rank = static_cast<std::size_t>(node.internal_rank);
        if (s.choices()[rank] == t.choices()[rank]) continue;
        if (node.owner != a) return false;
        if (!on_path[static_cast<std::size_t>(v)]) return false;
    }
    return true;
}

namespace {

void collect_targets(const GameTree& tree, const StrategyProfile& s, PlayerId a, VertexId v,
                     std::vector<VertexId>& path, std::vector<LazyMove>& out) {
    path.push_back(v);
    const auto& node = tree.node(v);
    if (node.is_leaf()) {
        LazyMove move;
        move.mover = a;
        move.source = s;
        move.target = s;
        move.target_play.path = path;
        move.target_play.outcome = node.outcome;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            const auto& step_node = tree.node(path[i]);
            if (step_node.owner != a) continue;
            auto it = std::find(step_node.children.begin(), step_node.children.end(), path[i + 1]);
            std::int32_t choice = static_cast<std::int32_t>(it - step_node.children.begin());
            if (move.target.choice_at(tree, path[i]) != choice) {
                move.target.set_choice(tree, path[i], choice);
                move.changed_vertices.push_back(path[i]);
            }
        }
        out.push_back(std::move(move));
    } else if (node.owner == a) {
        for (VertexId child : node.children) collect_targets(tree, s, a, child, path, out);
    } else {
        std::int32_t choice = s.choices()[static_cast<std::size_t>(node.internal_rank)];
        collect_targets(tree, s, a, node.children[static_cast<std::size_t>(choice)], path, out);
    }
    path.pop_back();
}

}  // namespace

std::vector<LazyMove> lazy_targets(const GameTree& tree, const StrategyProfile& s, PlayerId a) {
    auto diags = validate_profile(tree, s);
    if (!diagnostics_ok(diags)) throw ValidationError(std::move(diags));
    std::vector<LazyMove> out;
    std::vector<VertexId> path;
    collect_targets(tree, s, a, tree.root(), path, out);
    return out;  // preorder DFS already yields ascending target leaf ids
}

std::vector<LazyMove> lazy_improvements(const GameInstance& g, const StrategyProfile& s,
                                        PlayerId a) {
    const PreferenceRelation pref = g.preference_of(a);
    const OutcomeId current = induced_play(g.tree, s).outcome;
    std::vector<LazyMove> out;
    for (LazyMove& move : lazy_targets(g.tree, s, a)) {
        if (pref.prefers(current, move.target_play.outcome)) out.push_back(std::move(move));
    }
    return out;
}

bool is_nash(const GameInstance& g, const StrategyProfile& s) {
    for (PlayerId a = 0; a < g.player_count(); ++a) {
        if (!lazy_improvements(g, s, a).empty()) return false;
    }
    return true;
}

std::vector<FullMove> full_improvements(const GameInstance& g, const StrategyProfile& s,
                                        PlayerId a, std::size_t cap) {
    auto diags = validate_profile(g.tree, s);
    if (!diagnostics_ok(diags)) throw ValidationError(std::move(diags));

    std::vector<VertexId> owned;
    for (VertexId v : g.tree.internal_vertices()) {
        if (g.tree.node(v).owner == a) owned.push_back(v);
    }
    std::size_t combos = 1;
    for (VertexId v : owned) {
        combos *= g.tree.node(v).children.size();
        if (combos > cap) {
            throw EngineError("deviation space exceeds cap (" + std::to_string(cap) + ")");
        }
    }

    const PreferenceRelation pref = g.preference_of(a);
    const OutcomeId current = induced_play(g.tree, s).outcome;

    std::vector<FullMove> out;
    StrategyProfile candidate = s;
    std::vector<std::int32_t> digits(owned.size(), 0);
    for (std::size_t n = 0; n < combos; ++n) {
        for (std::size_t i = 0; i < owned.size(); ++i) {
            candidate.set_choice(g.tree, owned[i], digits[i]);
        }
        Play play = induced_play(g.tree, candidate);
        if (pref.prefers(current, play.outcome)) {
            out.push_back(FullMove{a, candidate, std::move(play)});
        }
        // odometer, least significant digit last
        for (std::size_t i = owned.size(); i-- > 0;) {
            std::int32_t arity =
                static_cast<std::int32_t>(g.tree.node(owned[i]).children.size());
            if (++digits[i] < arity) break;
            digits[i] = 0;
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const FullMove& lhs, const FullMove& rhs) {
        if (lhs.target_play.leaf() != rhs.target_play.leaf()) {
            return lhs.target_play.leaf() < rhs.target_play.leaf();
        }
        return lhs.target.choices() < rhs.target.choices();
    });
    return out;
}

}  // namespace lazygame
