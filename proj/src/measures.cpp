#include "lazygame/measures.hpp"

#include <limits>

namespace lazygame {

namespace {

void checked_increment(std::int64_t& slot, std::int64_t amount) {
    if (slot > std::numeric_limits<std::int64_t>::max() - amount) {
        throw EngineError("avoided-outcome count overflow");
    }
    slot += amount;
}

// Returns the outcome induced below v and accumulates avoided counts.
OutcomeId avoided_below(const GameTree& tree, const StrategyProfile& s, VertexId v,
                        AvoidedOutcomeTable& table) {
    const auto& node = tree.node(v);
    if (node.is_leaf()) return node.outcome;

    std::int32_t chosen = s.choices()[static_cast<std::size_t>(node.internal_rank)];
    OutcomeId chosen_outcome = -1;
    for (std::size_t j = 0; j < node.children.size(); ++j) {
        OutcomeId child_outcome = avoided_below(tree, s, node.children[j], table);
        if (static_cast<std::int32_t>(j) == chosen) {
            chosen_outcome = child_outcome;
        } else {
            checked_increment(table.delta[static_cast<std::size_t>(node.owner)]
                                         [static_cast<std::size_t>(child_outcome)],
                              1);
        }
    }
    return chosen_outcome;
}

}  // namespace

std::int64_t AvoidedOutcomeTable::row_sum(PlayerId a) const {
    std::int64_t total = 0;
    for (std::int64_t count : delta[static_cast<std::size_t>(a)]) {
        checked_increment(total, count);
    }
    return total;
}

std::vector<std::int64_t> game_avoided(const GameTree& tree, std::int32_t player_count) {
    std::vector<std::int64_t> result(static_cast<std::size_t>(player_count), 0);
    for (VertexId v : tree.internal_vertices()) {
        const auto& node = tree.node(v);
        checked_increment(result[static_cast<std::size_t>(node.owner)],
                          static_cast<std::int64_t>(node.children.size()) - 1);
    }
    return result;
}

AvoidedOutcomeTable profile_avoided(const GameTree& tree, const StrategyProfile& s,
                                    std::int32_t player_count, std::int32_t outcome_count) {
    auto diags = validate_profile(tree, s);
    if (!diagnostics_ok(diags)) throw ValidationError(std::move(diags));
    AvoidedOutcomeTable table;
    table.delta.assign(static_cast<std::size_t>(player_count),
                       std::vector<std::int64_t>(static_cast<std::size_t>(outcome_count), 0));
    avoided_below(tree, s, tree.root(), table);
    return table;
}

std::int64_t potential_value(const AvoidedOutcomeTable& table, PlayerId a,
                             const std::vector<std::int32_t>& outcome_height) {
    std::int64_t value = 0;
    const auto& row = table.delta[static_cast<std::size_t>(a)];
    for (std::size_t o = 0; o < row.size(); ++o) {
        checked_increment(value, static_cast<std::int64_t>(outcome_height[o] - 1) * row[o]);
    }
    return value;
}

PotentialValue potential(const GameInstance& g, const StrategyProfile& s, PlayerId a) {
    PreferenceHeight heights = preference_height(g.preference_of(a), g.outcome_count());
    AvoidedOutcomeTable table = profile_avoided(g.tree, s, g.player_count(), g.outcome_count());

    PotentialValue result;
    result.player = a;
    result.value = potential_value(table, a, heights.per_outcome);
    result.bound = static_cast<std::int64_t>(heights.height - 1) *
                   game_avoided(g.tree, g.player_count())[static_cast<std::size_t>(a)];
    if (result.value < 0 || result.value > result.bound) {
        throw EngineError("potential out of range: M=" + std::to_string(result.value) +
                          " bound=" + std::to_string(result.bound));
    }
    return result;
}

}  // namespace lazygame
