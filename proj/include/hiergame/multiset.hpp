#pragma once

// Games on multisets of players: a universe of m levels with n_i players
// each, coalitions given by per-level counts, and monotone games stored in
// antichain form together with a dense winning table over the coalition
// lattice.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hiergame {

/// Thrown when an operation would enumerate more coalitions than allowed.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Enumeration cap; HIERGAME_ENUM_CAP overrides the default of 10^7.
std::uint64_t enumeration_cap();

struct Coalition {
    std::vector<int> counts;

    Coalition() = default;
    explicit Coalition(std::vector<int> c) : counts(std::move(c)) {}

    std::size_t levels() const { return counts.size(); }
    int size() const;
    int operator[](std::size_t i) const { return counts[i]; }

    auto operator<=>(const Coalition&) const = default;
};

/// Submultiset order: a[i] <= b[i] for every level.
bool is_submultiset(const Coalition& a, const Coalition& b);

std::ostream& operator<<(std::ostream& os, const Coalition& c);

class Multiset {
public:
    Multiset() = default;
    explicit Multiset(std::vector<int> counts);

    std::size_t levels() const { return counts_.size(); }
    int count(std::size_t level) const { return counts_.at(level); }
    const std::vector<int>& counts() const { return counts_; }
    int total() const;

    /// Number of coalitions, prod(n_i + 1), saturating at UINT64_MAX.
    std::uint64_t lattice_size() const;

    bool contains(const Coalition& c) const;
    Coalition full() const { return Coalition(counts_); }
    Coalition empty() const { return Coalition(std::vector<int>(counts_.size(), 0)); }
    Coalition complement(const Coalition& c) const;

    bool operator==(const Multiset&) const = default;

private:
    std::vector<int> counts_;
};

/// Mixed-radix numbering of the coalitions of a universe, level 0 least
/// significant. Construction checks the enumeration cap.
class CoalitionLattice {
public:
    explicit CoalitionLattice(const Multiset& universe);

    std::size_t size() const { return size_; }
    std::size_t index(const Coalition& c) const;
    Coalition coalition(std::size_t index) const;
    std::size_t stride(std::size_t level) const { return strides_[level]; }
    const Multiset& universe() const { return universe_; }

    /// Visits every coalition in increasing index order.
    void for_each(const std::function<void(const Coalition&, std::size_t)>& fn) const;

private:
    Multiset universe_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 0;
};

/// A monotone simple game on a multiset, held as the antichain of minimal
/// winning coalitions plus a dense winning table.
class ExplicitGame {
public:
    /// Dominated members of `min_winning` are dropped.
    ExplicitGame(Multiset universe, std::vector<Coalition> min_winning);

    /// Builds the game whose winning coalitions satisfy `pred`. Throws
    /// std::invalid_argument if `pred` is not monotone.
    static ExplicitGame from_predicate(const Multiset& universe,
                                       const std::function<bool(const Coalition&)>& pred);

    const Multiset& universe() const { return universe_; }
    std::size_t levels() const { return universe_.levels(); }
    const std::vector<Coalition>& min_winning() const { return min_winning_; }

    bool is_winning(const Coalition& x) const;
    bool winning_at(std::size_t index) const { return winning_[index]; }
    const CoalitionLattice& lattice() const { return lattice_; }

    bool operator==(const ExplicitGame& other) const {
        return universe_ == other.universe_ && min_winning_ == other.min_winning_;
    }

private:
    ExplicitGame(Multiset universe, CoalitionLattice lattice, std::vector<bool> table);

    Multiset universe_;
    CoalitionLattice lattice_;
    std::vector<Coalition> min_winning_;
    std::vector<bool> winning_;
};

bool is_winning(const ExplicitGame& game, const Coalition& x);

/// Losing coalitions that are maximal under the submultiset order.
std::vector<Coalition> maximal_losing(const ExplicitGame& game);

enum class LevelRelation { equivalent, strictly_above, strictly_below, incomparable };

std::string to_string(LevelRelation r);

/// Isbell desirability of a player of level i against one of level j.
LevelRelation level_relation(const ExplicitGame& game, std::size_t i, std::size_t j);

bool is_complete(const ExplicitGame& game);

struct SpecialPlayers {
    std::vector<std::size_t> dummies;
    std::vector<std::size_t> passers;
    std::vector<std::size_t> blockers;
};

SpecialPlayers special_players(const ExplicitGame& game);

/// The game with equivalent levels merged into one. `level_map[i]` is the
/// merged level of original level i; merged levels appear in order of first
/// occurrence.
struct CompressedGame {
    ExplicitGame game;
    std::vector<std::size_t> level_map;
};

CompressedGame compress(const ExplicitGame& game);

/// Enumerates every monotone game on `universe` (every antichain of the
/// coalition lattice), including the two degenerate ones.
void for_each_monotone_game(const Multiset& universe,
                            const std::function<void(const ExplicitGame&)>& fn);

}  // namespace hiergame
