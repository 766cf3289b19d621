#pragma once

// Exhaustive check, over every complete game on a small universe, that a
// unique shift-maximal losing coalition characterizes disjunctive
// hierarchical games and a unique shift-minimal winning coalition
// characterizes conjunctive ones.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hiergame/multiset.hpp"

namespace hiergame {

struct StructuralReport {
    explicit StructuralReport(Multiset u) : universe(std::move(u)) {}

    Multiset universe;
    std::size_t games = 0;     ///< non-degenerate monotone games
    std::size_t complete = 0;
    std::size_t unique_shift_max_losing = 0;
    std::size_t disjunctive_hierarchical = 0;
    std::size_t unique_shift_min_winning = 0;
    std::size_t conjunctive_hierarchical = 0;
    std::vector<std::string> violations;
    /// A complete game with several shift-maximal losing coalitions.
    std::optional<std::string> non_hierarchical_witness;

    bool ok() const { return violations.empty(); }
};

/// The game with its levels permuted so that level i of the result is level
/// order[i] of the input.
ExplicitGame permute_levels(const ExplicitGame& game, const std::vector<std::size_t>& order);

/// Compressed form of a complete game with levels sorted by decreasing
/// desirability.
ExplicitGame desirability_ordered(const ExplicitGame& game);

StructuralReport run_structural(const Multiset& universe);

nlohmann::ordered_json structural_json(const StructuralReport& report);
std::string structural_text(const StructuralReport& report);

}  // namespace hiergame
