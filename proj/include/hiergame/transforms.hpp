#pragma once

#include <string>
#include <vector>

#include "hiergame/hierarchy.hpp"
#include "hiergame/multiset.hpp"

namespace hiergame {

/// G* : X wins iff the complement of X loses in G.
ExplicitGame dual_explicit(const ExplicitGame& game);

/// k*_i = (n_1 + ... + n_i) - k_i + 1.
std::vector<int> k_star(const std::vector<int>& n, const std::vector<int>& k);

/// The dual of a canonical hierarchical game: the other kind with k*.
/// Disjunctive specs are clamped first when the last level is dummy.
HierSpec dual_spec(const HierSpec& spec);

enum class MinorKind { subgame, reduced };

std::string to_string(MinorKind kind);

/// Removal of the players in `removed`. A subgame keeps the coalitions of
/// the remaining players that win on their own; a reduced game keeps those
/// that win together with all of `removed`.
struct MinorStep {
    MinorKind kind;
    Coalition removed;
};

/// Levels emptied by the removal are dropped from the resulting universe.
/// Throws std::invalid_argument when `removed` does not fit or would remove
/// every player.
ExplicitGame minor(const ExplicitGame& game, const MinorStep& step);

/// Levels of the source universe that survive `step`, in order.
std::vector<std::size_t> surviving_levels(const Multiset& universe, const MinorStep& step);

struct NamedMinor {
    std::string name;  ///< "cut_tail", "cut_head" or "remove_one:<level, 1-based>"
    HierSpec spec;
    MinorStep step;
};

/// Minors of a canonical disjunctive game that are again hierarchical:
/// dropping the last level, collapsing the first level into the second, and
/// removing one player of a level whose threshold gap exceeds one.
std::vector<NamedMinor> named_minors(const HierSpec& spec);

/// The two-level subgame on thresholds (k_i, k_{i+1}), obtained by cutting
/// tails and then heads. `level` is 0-based and must be below m - 1.
HierSpec consecutive_pair_minor(const HierSpec& spec, std::size_t level);

}  // namespace hiergame
