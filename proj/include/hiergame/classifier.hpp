#pragma once

// Closed-form classification of hierarchical games as weighted, roughly
// weighted but not weighted, or not roughly weighted, with certificates.
//
// Case identifiers name the structural situation that decided the verdict.
// Disjunctive and conjunctive games share identifiers: a conjunctive case is
// the dual image of the disjunctive case of the same name (passer top level
// becomes blocker top level, and so on).

#include <optional>
#include <string>
#include <vector>

#include "hiergame/hierarchy.hpp"
#include "hiergame/lp_oracle.hpp"

namespace hiergame {

enum class CaseId {
    // weighted
    single_level,            ///< m = 1
    adjacent_thresholds,     ///< m = 2, k_2 = k_1 + 1
    saturated_second_level,  ///< m = 2, n_2 = k_2 - k_1 + 1
    trivial_top,             ///< m in {2,3}, passer (blocker) top level
    dummy_bottom,            ///< weighted or rough through the dummy-free truncation
    // roughly weighted, not weighted
    rough_trivial_top,       ///< passer (blocker) top level, any m
    two_level_2_4,           ///< k = (2,4), n_2 >= 4
    two_level_gap_2,         ///< k = (k,k+2), k > 2, n_2 = 4
    three_level_2_3_4,       ///< k = (2,3,4)
    consecutive_narrow,      ///< k = (k,k+1,k+2), k > 2, n = (n_1,2,2)
    consecutive_wide,        ///< k = (k,k+1,k+2), k > 2, n = (n_1,n_2,2), n_2 >= 3
    sized_tail,              ///< k = (k,k+1,k_3), n_3 = k_3 - k >= 3
    none,
};

std::string to_string(CaseId c);
CaseId parse_case_id(const std::string& text);
bool is_weighted_case(CaseId c);

struct WeightedMatch {
    bool weighted = false;
    CaseId matched = CaseId::none;
};

/// Case list for weightedness. Requires a canonical spec; a dummy last
/// level is clamped first.
WeightedMatch classify_weighted(const HierSpec& spec);

struct Verdict {
    HierKind kind = HierKind::disjunctive;
    GameClass game_class = GameClass::not_rough;
    CaseId matched = CaseId::none;
    /// Cases met while descending through dummy truncations; the last one
    /// decided the verdict.
    std::vector<CaseId> case_path;
    std::optional<RoughCert> certificate;
    /// Conjunctive only: whether the literal conjunctive case list agrees
    /// with the verdict derived through the dual disjunctive game.
    std::optional<bool> literal_conjunctive_agrees;
    /// Conjunctive only: whether the direct conjunctive weighted case list
    /// agrees with the dual disjunctive one.
    std::optional<bool> weighted_dual_agrees;

    std::string case_tag() const;
};

/// Full classification. Requires a canonical spec. Certificates for
/// weighted verdicts come from the exact oracle.
Verdict classify_rough(const HierSpec& spec);

/// Certificate for a spec already known to fall under `matched`. Weighted
/// cases delegate to the oracle; rough cases use closed-form weights.
RoughCert synthesize_certificate(const HierSpec& spec, CaseId matched);

/// Literal reading of the conjunctive roughly-weighted case list, without
/// routing through duality. Exposed for cross-checking.
std::optional<CaseId> literal_conjunctive_rough_case(const HierSpec& spec);

/// [w(P) - q; w] represents the dual of a game represented by [q; w];
/// the result is rescaled to quota 1 when the new quota is positive.
RoughCert dual_rough_certificate(const Multiset& universe, const RoughCert& cert);

}  // namespace hiergame
