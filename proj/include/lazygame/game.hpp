#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lazygame/rational.hpp"

namespace lazygame {

using PlayerId = std::int32_t;   // index into GameInstance::player_names
using OutcomeId = std::int32_t;  // index into GameInstance::outcome_names
using VertexId = std::int32_t;   // preorder index into GameTree::nodes

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural problems in an input document: bad JSON shape, unknown names,
// unsupported format version.
struct FormatError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct EngineError : Error {
    using Error::Error;
};

struct OracleError : Error {
    using Error::Error;
};

struct Diagnostic {
    enum class Severity { kError, kWarning };
    Severity severity = Severity::kError;
    std::string message;
    VertexId vertex = -1;  // -1 when the finding is not tied to a vertex
    PlayerId player = -1;
};

std::string format_diagnostics(const std::vector<Diagnostic>& diags);
bool diagnostics_ok(const std::vector<Diagnostic>& diags);  // true iff no error-severity entry

struct ValidationError : Error {
    explicit ValidationError(std::vector<Diagnostic> diags);
    ValidationError(std::string message, VertexId vertex, PlayerId player = -1);
    std::vector<Diagnostic> diagnostics;
};

// Raised where an operation needs an acyclic preference; carries one witness.
struct CyclicPreferenceError : Error {
    CyclicPreferenceError(PlayerId player, std::vector<OutcomeId> cycle);
    PlayerId player;
    std::vector<OutcomeId> cycle;
};

// ---------------------------------------------------------------------------
// Game tree
// ---------------------------------------------------------------------------

// Recursive literal used by fixtures, generators and the JSON reader.
struct TreeSpec {
    PlayerId owner = -1;    // >= 0 for internal nodes
    OutcomeId outcome = -1; // >= 0 for leaves
    std::vector<TreeSpec> children;

    static TreeSpec leaf(OutcomeId o);
    static TreeSpec internal(PlayerId p, std::vector<TreeSpec> kids);
};

// Finite rooted tree. Vertex ids are assigned by preorder traversal (root is
// 0, children in document order), so ids are stable across serialization.
class GameTree {
public:
    struct Node {
        VertexId parent = -1;
        PlayerId owner = -1;            // -1 for leaves
        OutcomeId outcome = -1;         // -1 for internal vertices
        std::vector<VertexId> children; // empty for leaves
        std::int32_t internal_rank = -1; // dense preorder index among internal vertices
        std::int32_t leaf_rank = -1;     // dense preorder index among leaves

        bool is_leaf() const { return children.empty(); }
        bool operator==(const Node&) const = default;
    };

    static GameTree build(const TreeSpec& spec);

    const Node& node(VertexId v) const { return nodes_[static_cast<std::size_t>(v)]; }
    VertexId root() const { return 0; }
    std::int32_t size() const { return static_cast<std::int32_t>(nodes_.size()); }
    std::int32_t leaf_count() const { return static_cast<std::int32_t>(leaves_.size()); }
    std::int32_t internal_count() const { return static_cast<std::int32_t>(internals_.size()); }
    const std::vector<VertexId>& internal_vertices() const { return internals_; }
    const std::vector<VertexId>& leaves() const { return leaves_; }

    // Highest player id owning a vertex, plus one. The instance may declare more.
    std::int32_t min_player_count() const { return min_players_; }

    bool operator==(const GameTree& o) const { return nodes_ == o.nodes_; }

private:
    VertexId add_subtree(const TreeSpec& spec, VertexId parent);

    std::vector<Node> nodes_;
    std::vector<VertexId> internals_;
    std::vector<VertexId> leaves_;
    std::int32_t min_players_ = 0;
};

// ---------------------------------------------------------------------------
// Strategy profiles and plays
// ---------------------------------------------------------------------------

// Total choice map: one child index per internal vertex, stored densely by
// internal rank. Value-comparable; two profiles are equal iff all choices are.
class StrategyProfile {
public:
    StrategyProfile() = default;
    explicit StrategyProfile(std::vector<std::int32_t> choices) : choices_(std::move(choices)) {}

    // Every internal vertex picks the child with the given index.
    static StrategyProfile uniform(const GameTree& tree, std::int32_t child_index = 0);

    const std::vector<std::int32_t>& choices() const { return choices_; }
    std::int32_t choice_at(const GameTree& tree, VertexId v) const;
    void set_choice(const GameTree& tree, VertexId v, std::int32_t child_index);

    // Canonical encoding, e.g. "0,1,0"; used for cycle detection and labels.
    std::string key() const;

    bool operator==(const StrategyProfile&) const = default;

private:
    std::vector<std::int32_t> choices_;
};

struct Play {
    std::vector<VertexId> path;  // root .. leaf
    OutcomeId outcome = -1;

    VertexId leaf() const { return path.back(); }
    bool operator==(const Play&) const = default;
};

// ---------------------------------------------------------------------------
// Preferences
// ---------------------------------------------------------------------------

// Strict preference stored extensionally as a set of ordered pairs (x, y)
// meaning x is worse than y. Not assumed transitive: chains and heights are
// paths in this raw digraph, not in its transitive closure.
struct PreferenceRelation {
    PlayerId player = -1;
    std::vector<std::pair<OutcomeId, OutcomeId>> pairs;  // sorted, deduplicated

    bool prefers(OutcomeId worse, OutcomeId better) const;

    // Validating factory: sorts, dedups, and rejects reflexive pairs (a
    // reflexive pair is a trivial cycle).
    static PreferenceRelation make(PlayerId player,
                                   std::vector<std::pair<OutcomeId, OutcomeId>> pairs);
    // x0 < x1 < ... < xn with all implied pairs.
    static PreferenceRelation total_order(PlayerId player, const std::vector<OutcomeId>& ascending);
    // All ordered pairs over distinct outcomes; cyclic by construction ("nature").
    static PreferenceRelation full_relation(PlayerId player, std::int32_t outcome_count);

    bool operator==(const PreferenceRelation&) const = default;
};

struct PreferenceAnalysis {
    bool is_acyclic = true;
    std::vector<OutcomeId> cycle;       // witness when cyclic: x0 < x1 < ... < x0
    std::int32_t height = 0;            // h: maximal chain cardinality (acyclic only)
    std::vector<std::int32_t> outcome_height;  // h(a,o); 1 for isolated outcomes
};

PreferenceAnalysis analyze_preference(const PreferenceRelation& p, std::int32_t outcome_count);

// Returns a witness cycle iff the relation digraph has one. A reflexive pair
// yields the singleton witness [x].
std::optional<std::vector<OutcomeId>> detect_preference_cycle(const PreferenceRelation& p,
                                                              std::int32_t outcome_count);

struct PreferenceHeight {
    std::int32_t height = 0;
    std::vector<std::int32_t> per_outcome;
};

// Throws CyclicPreferenceError when the relation has a cycle.
PreferenceHeight preference_height(const PreferenceRelation& p, std::int32_t outcome_count);

// ---------------------------------------------------------------------------
// Game instance
// ---------------------------------------------------------------------------

struct GameInstance {
    GameTree tree;
    std::vector<std::string> player_names;
    std::vector<std::string> outcome_names;
    // By player id; disengaged when the input declared no entry for the player.
    std::vector<std::optional<PreferenceRelation>> preferences;
    // payoffs[player][leaf_rank]; present only for the epsilon-threshold mode.
    std::optional<std::vector<std::vector<Rational>>> payoffs;

    std::int32_t player_count() const { return static_cast<std::int32_t>(player_names.size()); }
    std::int32_t outcome_count() const { return static_cast<std::int32_t>(outcome_names.size()); }

    PlayerId player_index(const std::string& name) const;    // -1 when absent
    OutcomeId outcome_index(const std::string& name) const;  // -1 when absent

    // Empty relation when the player has no declared entry.
    PreferenceRelation preference_of(PlayerId p) const;

    bool operator==(const GameInstance&) const = default;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// The unique root-to-leaf path following the profile's choices.
// Throws ValidationError (naming the vertex) on a missing/overflowing choice.
Play induced_play(const GameTree& tree, const StrategyProfile& s);

// Play of the subtree rooted at v under the same profile.
Play induced_play_from(const GameTree& tree, const StrategyProfile& s, VertexId v);

std::vector<Diagnostic> validate_profile(const GameTree& tree, const StrategyProfile& s);

// Checks every instance invariant; diagnostics list each violation with the
// offending vertex/player. Warnings (e.g. 1-child vertices) do not fail it.
std::vector<Diagnostic> validate_instance(const GameInstance& g);

// Throws ValidationError when validate_instance reports any error.
void require_valid(const GameInstance& g);

}  // namespace lazygame
