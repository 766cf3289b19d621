#pragma once

// Grid sweeps cross-checking the classifier against the oracle.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hiergame/classifier.hpp"

namespace hiergame {

struct SweepGrid {
    HierKind kind = HierKind::disjunctive;
    int levels = 2;
    int nmax = 3;
    std::optional<int> kmax;  ///< defaults to the total number of players
};

/// Canonical specs of the grid in lexicographic (n, k) order. Disjunctive
/// specs whose last threshold exceeds the clamp are left out as duplicates.
std::vector<HierSpec> sweep_specs(const SweepGrid& grid);

struct SweepRecord {
    HierSpec spec;
    bool dummy_last_level = false;
    bool passer_first_level = false;
    bool blocker_first_level = false;
    Verdict verdict;
    OracleVerdict oracle;
    bool certificate_verified = false;
    bool agree = false;
    double seconds = 0;
};

struct SweepReport {
    SweepGrid grid;
    std::vector<SweepRecord> records;
    std::vector<std::string> skipped;

    std::size_t disagreements() const;
    /// Conjunctive records where the literal case list disagrees (reported, not failed).
    std::size_t literal_disagreements() const;
    std::size_t count(GameClass c) const;
};

/// Checks one spec: classifier verdict, certificate and oracle class.
SweepRecord check_spec(const HierSpec& spec);

SweepReport run_sweep(const SweepGrid& grid);

nlohmann::ordered_json sweep_json(const SweepReport& report, bool timings);
std::string sweep_table(const SweepReport& report, bool timings);

}  // namespace hiergame
