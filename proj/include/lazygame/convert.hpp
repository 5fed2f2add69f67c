#pragma once

#include <vector>

#include "lazygame/game.hpp"

namespace lazygame {

// A lazy conversion step: every changed vertex is owned by the mover and lies
// on the play induced by the target profile. Canonical per target leaf: the
// mover's on-path vertices follow the path, all off-path choices are
// inherited from the source untouched.
struct LazyMove {
    PlayerId mover = -1;
    StrategyProfile source;
    StrategyProfile target;
    Play target_play;
    std::vector<VertexId> changed_vertices;  // ascending
};

// An unrestricted unilateral deviation, for the cycle-exhibit engine and the
// brute-force oracles.
struct FullMove {
    PlayerId mover = -1;
    StrategyProfile target;
    Play target_play;
};

// True iff s and t agree at every vertex not owned by a.
bool can_convert(const GameTree& tree, const StrategyProfile& s, const StrategyProfile& t,
                 PlayerId a);

// True iff every vertex where s and t differ is owned by a and lies on the
// play induced by t.
bool can_lazily_convert(const GameTree& tree, const StrategyProfile& s, const StrategyProfile& t,
                        PlayerId a);

// One move per leaf reachable from the root along a path on which every
// vertex not owned by a follows s. Includes the identity move. Ordered by
// target leaf id; move <-> reachable leaf is a bijection.
std::vector<LazyMove> lazy_targets(const GameTree& tree, const StrategyProfile& s, PlayerId a);

// lazy_targets filtered to moves whose outcome a strictly prefers to the
// current one. The identity move drops out by strictness.
std::vector<LazyMove> lazy_improvements(const GameInstance& g, const StrategyProfile& s,
                                        PlayerId a);

// True iff no player has a lazy improvement, which coincides with having no
// improving unilateral deviation at all.
bool is_nash(const GameInstance& g, const StrategyProfile& s);

// Every improving unilateral deviation of a, ordered by (target leaf id,
// lexicographic choice vector). Throws EngineError when the deviation count
// exceeds the cap.
std::vector<FullMove> full_improvements(const GameInstance& g, const StrategyProfile& s,
                                        PlayerId a, std::size_t cap = (1u << 20));

}  // namespace lazygame
