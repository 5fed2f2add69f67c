#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lazygame/convert.hpp"
#include "lazygame/game.hpp"
#include "lazygame/rational.hpp"

namespace lazygame {

// ---------------------------------------------------------------------------
// Schedulers
// ---------------------------------------------------------------------------

struct ScriptEntry {
    PlayerId player = -1;
    VertexId target_leaf = -1;
    bool operator==(const ScriptEntry&) const = default;
};

enum class SchedulerKind {
    kRoundRobinFirstMove,
    kRoundRobinBestMove,
    kSeededRandom,
    kFixedScript,
};

// Deterministic given kind + seed/script; selects only moves offered by the
// engine's improvement enumeration.
struct Scheduler {
    SchedulerKind kind = SchedulerKind::kRoundRobinFirstMove;
    std::uint64_t seed = 0;
    std::vector<ScriptEntry> script;

    static Scheduler round_robin_first();
    static Scheduler round_robin_best();
    static Scheduler seeded_random(std::uint64_t seed);
    static Scheduler fixed_script(std::vector<ScriptEntry> script);

    std::string describe() const;
};

// ---------------------------------------------------------------------------
// Traces
// ---------------------------------------------------------------------------

struct MoveRecord {
    PlayerId mover = -1;
    VertexId target_leaf = -1;
    std::vector<VertexId> changed_vertices;
};

struct TraceStep {
    std::int64_t index = 0;
    // Exactly one mover for the sequential engines; one entry per moving
    // player for the synchronous engine.
    std::vector<MoveRecord> movers;
    OutcomeId pre_outcome = -1;
    OutcomeId post_outcome = -1;
    // M(s, a) before/after, for every player with an acyclic declared
    // preference. Omitted in epsilon mode.
    std::map<PlayerId, std::int64_t> m_before;
    std::map<PlayerId, std::int64_t> m_after;
};

enum class TerminalKind {
    kTerminal,         // no player has an improving move
    kCycle,            // a profile repeated
    kBudgetExhausted,  // step/round budget or script consumed first
};

struct CycleWitness {
    std::int64_t first_index = 0;  // step index where the repeated profile first appeared
    std::int64_t length = 0;
};

struct ImprovementTrace {
    std::string engine;
    std::vector<TraceStep> steps;
    TerminalKind terminal_kind = TerminalKind::kTerminal;
    std::optional<CycleWitness> cycle;  // first repeat seen, if any
    StrategyProfile initial;
    StrategyProfile final_profile;
    std::vector<std::int64_t> per_player_counts;  // moves per player
    std::int64_t rounds = -1;                     // synchronous engine only

    std::int64_t step_count() const { return static_cast<std::int64_t>(steps.size()); }
};

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

struct TerminationBounds {
    // (h_a - 1) * Delta(g, a) per player; disengaged for cyclic preferences.
    std::vector<std::optional<std::int64_t>> per_player;
    // (h - 1) * (l - 1); disengaged unless every declared preference is acyclic.
    std::optional<std::int64_t> global;
    bool all_acyclic = false;
};

TerminationBounds compute_bounds(const GameInstance& g);

// ---------------------------------------------------------------------------
// Engines
// ---------------------------------------------------------------------------

// Sequential lazy improvement. Stops at the first terminal profile, repeated
// profile, or once max_steps steps ran. max_steps defaults to the proven
// global bound plus one when all preferences are acyclic (hitting it then
// raises EngineError); otherwise it is required.
ImprovementTrace run_lazy(const GameInstance& g, const StrategyProfile& s0, const Scheduler& sched,
                          std::optional<std::int64_t> max_steps = std::nullopt);

// Lazy improvement with cyclic ("nature") players present: a repeated profile
// is recorded as a cycle witness but the run continues to the budget, and
// every acyclic player's step count is checked against her bound.
ImprovementTrace run_lazy_with_nature(const GameInstance& g, const StrategyProfile& s0,
                                      const Scheduler& sched, std::int64_t max_steps);

// Better-response over unrestricted convertibility; exhibits cycles where the
// lazy engine terminates. Stops at the first repeated profile.
ImprovementTrace run_full_improvement(const GameInstance& g, const StrategyProfile& s0,
                                      const Scheduler& sched, std::int64_t max_steps);

// Each round every player with an improving lazy move applies her best one
// against the current profile; all changes land simultaneously. Requires
// acyclic preferences and enough totality to make "best" unambiguous.
// Terminates within 2^n rounds (n internal vertices).
ImprovementTrace run_synchronous_best_response(const GameInstance& g, const StrategyProfile& s0,
                                               std::optional<std::int64_t> max_rounds = std::nullopt);

// Lazy improvement where a move counts as improving iff it raises the mover's
// payoff by strictly more than epsilon (exact rational comparison).
ImprovementTrace run_epsilon_lazy(const GameInstance& g, const StrategyProfile& s0,
                                  const Rational& epsilon, const Scheduler& sched,
                                  std::optional<std::int64_t> max_steps = std::nullopt);

// True iff no unilateral deviation improves any player's payoff by more than
// epsilon. Deviations reach exactly the leaves that lazy targets reach, so
// this is linear in the tree.
bool is_epsilon_nash(const GameInstance& g, const StrategyProfile& s, const Rational& epsilon);

// Epsilon-improving lazy moves of one player; empty iff she is epsilon-stable.
std::vector<LazyMove> epsilon_improvements(const GameInstance& g, const StrategyProfile& s,
                                           PlayerId a, const Rational& epsilon);

// Applies one simultaneous batch of lazy moves given as (player, target leaf)
// pairs, validating that each is an improving lazy move against s.
StrategyProfile apply_synchronous_moves(const GameInstance& g, const StrategyProfile& s,
                                        const std::vector<ScriptEntry>& moves);

}  // namespace lazygame
