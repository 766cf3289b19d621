#pragma once

// Ground-truth weightedness and rough weightedness of explicit games by
// exact feasibility of the separation inequalities.

#include <optional>
#include <string>
#include <vector>

#include "hiergame/multiset.hpp"
#include "hiergame/rational.hpp"

namespace hiergame {

/// Quota and per-level weights [q; w_1, ..., w_m].
struct RoughCert {
    Rational quota;
    std::vector<Rational> weights;

    bool operator==(const RoughCert&) const = default;
};

std::ostream& operator<<(std::ostream& os, const RoughCert& cert);

Rational weight_of(const std::vector<Rational>& weights, const Coalition& x);

enum class RepresentationMode { weighted, rough };

/// Constraints w.x >= bound (minimal winning side) and w.x <= bound
/// (maximal losing side), plus the implicit w >= 0.
struct SeparationSystem {
    struct Constraint {
        Coalition coalition;
        Rational bound;
    };
    std::vector<Constraint> ge_constraints;
    std::vector<Constraint> le_constraints;
};

/// The q = 1 rough system: minimal winning >= 1, maximal losing <= 1.
SeparationSystem rough_separation_system(const ExplicitGame& game);

/// Weighted certificate with losing coalitions at most q - 1, or nullopt.
std::optional<RoughCert> oracle_weighted(const ExplicitGame& game);

/// Rough certificate: first with q = 1, else q = 0 on a passer level.
std::optional<RoughCert> oracle_rough(const ExplicitGame& game);

/// Checks the representation against every coalition of the game.
bool verify_representation(const ExplicitGame& game, const RoughCert& cert,
                           RepresentationMode mode);

enum class Sense { minimize, maximize };

/// Optimum of objective.w over the q = 1 rough polytope; nullopt when the
/// objective is unbounded. Throws std::domain_error if the polytope is empty.
std::optional<Rational> extremal_weight(const ExplicitGame& game,
                                        const std::vector<Rational>& objective, Sense sense);

enum class GameClass { weighted, rough_not_weighted, not_rough };

std::string to_string(GameClass c);

struct OracleVerdict {
    GameClass game_class;
    std::optional<RoughCert> certificate;
};

OracleVerdict oracle_classify(const ExplicitGame& game);

}  // namespace hiergame
