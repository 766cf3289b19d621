#pragma once

// Disjunctive and conjunctive hierarchical games given by level sizes n and
// prefix thresholds k.

#include <optional>
#include <string>
#include <vector>

#include "hiergame/multiset.hpp"

namespace hiergame {

enum class HierKind { disjunctive, conjunctive };

std::string to_string(HierKind kind);
HierKind parse_hier_kind(const std::string& text);

/// A hierarchical game H(n, k). Construction enforces positive sizes,
/// positive thresholds, the kind's monotonicity of k (strict for
/// disjunctive, strict up to m-1 then non-strict for conjunctive) and
/// non-degeneracy: the empty coalition loses and the full one wins.
class HierSpec {
public:
    HierSpec(HierKind kind, std::vector<int> n, std::vector<int> k);

    HierKind kind() const { return kind_; }
    const std::vector<int>& n() const { return n_; }
    const std::vector<int>& k() const { return k_; }
    std::size_t levels() const { return n_.size(); }
    Multiset universe() const { return Multiset(n_); }

    bool operator==(const HierSpec&) const = default;

private:
    HierKind kind_;
    std::vector<int> n_;
    std::vector<int> k_;
};

std::ostream& operator<<(std::ostream& os, const HierSpec& spec);

bool hier_is_winning(const HierSpec& spec, const Coalition& x);

ExplicitGame realize(const HierSpec& spec);

struct CanonReport {
    explicit CanonReport(HierSpec normalized) : normalized_spec(std::move(normalized)) {}

    bool canonical = false;
    bool condition_a = false;             ///< k_1 <= n_1
    std::vector<bool> condition_b;        ///< k_i < k_{i-1} + n_i, one per middle level
    bool condition_last = true;           ///< conjunctive only: k_m < k_{m-1} + n_m
    bool dummy_last_level = false;
    bool passer_first_level = false;      ///< a lone level-1 player wins (disjunctive: k_1 = 1)
    bool blocker_first_level = false;     ///< level-1 players are vetoes (conjunctive: k_1 = n_1)
    HierSpec normalized_spec;
};

/// Checks the canonicity conditions. For disjunctive specs the last
/// threshold is clamped to k_{m-1} + n_m in `normalized_spec` when the last
/// level is dummy.
CanonReport canon_check(const HierSpec& spec);

/// n_i > 1 for every middle level.
bool middle_levels_nontrivial(const HierSpec& spec);

struct CanonicalForm {
    HierSpec spec;
    std::vector<std::size_t> level_map;  ///< original level -> canonical level
};

/// Merges levels that are equivalent in the realized game and rederives the
/// thresholds of the equal canonical game of the same kind.
CanonicalForm canonicalize_semantic(const HierSpec& spec);

/// Recovers canonical thresholds of `kind` for a game whose levels are
/// pairwise inequivalent and ordered by decreasing desirability; nullopt if
/// the game is not hierarchical of that kind.
std::optional<HierSpec> recognize_hierarchical(const ExplicitGame& game, HierKind kind);

/// The unique shift-maximal losing coalition {1^{k1-1}, 2^{k2-k1}, ...} of a
/// canonical disjunctive spec with neither passers nor dummies.
Coalition shift_maximal_losing(const HierSpec& spec);

struct ShiftExtremal {
    std::vector<Coalition> shift_min_winning;
    std::vector<Coalition> shift_max_losing;
};

/// Requires a complete game whose levels are ordered 1 >= 2 >= ... >= m by
/// desirability; shifts move one player from a level to a later level.
ShiftExtremal shift_extremal(const ExplicitGame& game);

}  // namespace hiergame
