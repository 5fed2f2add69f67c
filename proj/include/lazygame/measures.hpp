#pragma once

#include <cstdint>
#include <vector>

#include "lazygame/game.hpp"

namespace lazygame {

// delta(s, a, o): how often player a avoids outcome o in profile s. Dense
// over players x outcomes; absent combinations read 0.
struct AvoidedOutcomeTable {
    std::vector<std::vector<std::int64_t>> delta;  // [player][outcome]

    std::int64_t at(PlayerId a, OutcomeId o) const {
        return delta[static_cast<std::size_t>(a)][static_cast<std::size_t>(o)];
    }
    std::int64_t row_sum(PlayerId a) const;
    bool operator==(const AvoidedOutcomeTable&) const = default;
};

// Delta(g, a): per player, the number of choices available at her vertices
// minus the number of vertices she owns.
std::vector<std::int64_t> game_avoided(const GameTree& tree, std::int32_t player_count);

AvoidedOutcomeTable profile_avoided(const GameTree& tree, const StrategyProfile& s,
                                    std::int32_t player_count, std::int32_t outcome_count);

struct PotentialValue {
    PlayerId player = -1;
    std::int64_t value = 0;
    std::int64_t bound = 0;  // (h - 1) * Delta(g, a)
};

// M(s, a) = sum over outcomes of (h(a,o) - 1) * delta(s, a, o). Decreases by
// h(a, v(s')) - h(a, v(s)) at each of a's lazy improvement steps and is
// untouched by other players' lazy conversions. Throws CyclicPreferenceError
// when a's preference has a cycle.
PotentialValue potential(const GameInstance& g, const StrategyProfile& s, PlayerId a);

// Same value, with the per-outcome heights precomputed by the caller.
std::int64_t potential_value(const AvoidedOutcomeTable& table, PlayerId a,
                             const std::vector<std::int32_t>& outcome_height);

inline std::int32_t eq_indicator(OutcomeId x, OutcomeId y) { return x == y ? 1 : 0; }

}  // namespace lazygame
