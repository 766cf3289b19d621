#include "hiergame/hierarchy.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hiergame {

std::string to_string(HierKind kind)
{
    return kind == HierKind::disjunctive ? "disjunctive" : "conjunctive";
}

HierKind parse_hier_kind(const std::string& text)
{
    if (text == "disjunctive") {
        return HierKind::disjunctive;
    }
    if (text == "conjunctive") {
        return HierKind::conjunctive;
    }
    throw std::invalid_argument("unknown hierarchical kind '" + text + "'");
}

namespace {

bool prefix_test(HierKind kind, const std::vector<int>& k, const std::vector<int>& counts)
{
    int prefix = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        prefix += counts[i];
        bool met = prefix >= k[i];
        if (kind == HierKind::disjunctive && met) {
            return true;
        }
        if (kind == HierKind::conjunctive && !met) {
            return false;
        }
    }
    return kind == HierKind::conjunctive;
}

}  // namespace

HierSpec::HierSpec(HierKind kind, std::vector<int> n, std::vector<int> k)
    : kind_(kind), n_(std::move(n)), k_(std::move(k))
{
    if (n_.empty() || n_.size() != k_.size()) {
        throw std::invalid_argument("n and k must be non-empty and of equal length");
    }
    for (std::size_t i = 0; i < n_.size(); ++i) {
        if (n_[i] < 1) {
            throw std::invalid_argument("level sizes must be positive");
        }
        if (k_[i] < 1) {
            throw std::invalid_argument("thresholds must be positive");
        }
    }
    const std::size_t m = k_.size();
    for (std::size_t i = 1; i < m; ++i) {
        bool last = i + 1 == m;
        bool ok = (kind_ == HierKind::conjunctive && last) ? k_[i - 1] <= k_[i]
                                                            : k_[i - 1] < k_[i];
        if (!ok) {
            throw std::invalid_argument("thresholds violate the required ordering");
        }
    }
    if (!prefix_test(kind_, k_, n_)) {
        throw std::invalid_argument("degenerate game: the full coalition loses");
    }
}

std::ostream& operator<<(std::ostream& os, const HierSpec& spec)
{
    os << (spec.kind() == HierKind::disjunctive ? "H_exists" : "H_forall") << "((";
    for (std::size_t i = 0; i < spec.levels(); ++i) {
        os << (i ? "," : "") << spec.n()[i];
    }
    os << "),(";
    for (std::size_t i = 0; i < spec.levels(); ++i) {
        os << (i ? "," : "") << spec.k()[i];
    }
    return os << "))";
}

bool hier_is_winning(const HierSpec& spec, const Coalition& x)
{
    if (!spec.universe().contains(x)) {
        throw std::invalid_argument("coalition does not fit the hierarchical universe");
    }
    return prefix_test(spec.kind(), spec.k(), x.counts);
}

ExplicitGame realize(const HierSpec& spec)
{
    return ExplicitGame::from_predicate(spec.universe(), [&](const Coalition& x) {
        return prefix_test(spec.kind(), spec.k(), x.counts);
    });
}

CanonReport canon_check(const HierSpec& spec)
{
    const auto& n = spec.n();
    const auto& k = spec.k();
    const std::size_t m = spec.levels();

    std::vector<int> clamped = k;
    bool dummy = false;
    if (m >= 2) {
        if (spec.kind() == HierKind::disjunctive) {
            dummy = k[m - 1] >= k[m - 2] + n[m - 1];
            if (dummy) {
                clamped[m - 1] = k[m - 2] + n[m - 1];
            }
        } else {
            dummy = k[m - 2] == k[m - 1];
        }
    }

    CanonReport report(HierSpec(spec.kind(), n, clamped));
    report.condition_a = k[0] <= n[0];
    for (std::size_t i = 1; i + 1 < m; ++i) {
        report.condition_b.push_back(k[i] < k[i - 1] + n[i]);
    }
    if (spec.kind() == HierKind::conjunctive && m >= 2) {
        report.condition_last = k[m - 1] < k[m - 2] + n[m - 1];
    }
    report.dummy_last_level = dummy;

    Coalition single = spec.universe().empty();
    single.counts[0] = 1;
    report.passer_first_level = hier_is_winning(spec, single);
    Coalition all_but_one = spec.universe().full();
    all_but_one.counts[0] -= 1;
    report.blocker_first_level = !hier_is_winning(spec, all_but_one);

    report.canonical = report.condition_a && report.condition_last &&
                       std::all_of(report.condition_b.begin(), report.condition_b.end(),
                                   [](bool b) { return b; });
    return report;
}

bool middle_levels_nontrivial(const HierSpec& spec)
{
    for (std::size_t i = 1; i + 1 < spec.levels(); ++i) {
        if (spec.n()[i] <= 1) {
            return false;
        }
    }
    return true;
}

namespace {

// Smallest s such that the coalition of size s packed into the lowest of
// levels 0..top wins; 0 if none does.
int bottom_heavy_threshold(const ExplicitGame& game, std::size_t top)
{
    const auto& u = game.universe();
    int capacity = 0;
    for (std::size_t l = 0; l <= top; ++l) {
        capacity += u.count(l);
    }
    for (int s = 1; s <= capacity; ++s) {
        Coalition x = u.empty();
        int left = s;
        for (std::size_t l = top + 1; l-- > 0 && left > 0;) {
            int take = std::min(left, u.count(l));
            x.counts[l] = take;
            left -= take;
        }
        if (game.is_winning(x)) {
            return s;
        }
    }
    return 0;
}

std::optional<HierSpec> recognize_disjunctive(const ExplicitGame& game)
{
    std::vector<int> k;
    for (std::size_t i = 0; i < game.levels(); ++i) {
        int t = bottom_heavy_threshold(game, i);
        if (t == 0) {
            return std::nullopt;
        }
        k.push_back(t);
    }
    try {
        HierSpec spec(HierKind::disjunctive, game.universe().counts(), k);
        auto report = canon_check(spec);
        if (!report.canonical || realize(report.normalized_spec) != game) {
            return std::nullopt;
        }
        return report.normalized_spec;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace

std::optional<HierSpec> recognize_hierarchical(const ExplicitGame& game, HierKind kind)
{
    if (kind == HierKind::disjunctive) {
        return recognize_disjunctive(game);
    }
    const auto& u = game.universe();
    auto dual = ExplicitGame::from_predicate(
        u, [&](const Coalition& x) { return !game.is_winning(u.complement(x)); });
    auto disj = recognize_disjunctive(dual);
    if (!disj) {
        return std::nullopt;
    }
    std::vector<int> k;
    int prefix = 0;
    for (std::size_t i = 0; i < u.levels(); ++i) {
        prefix += u.count(i);
        k.push_back(prefix - disj->k()[i] + 1);
    }
    try {
        HierSpec spec(HierKind::conjunctive, u.counts(), k);
        if (!canon_check(spec).canonical || realize(spec) != game) {
            return std::nullopt;
        }
        return spec;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

CanonicalForm canonicalize_semantic(const HierSpec& spec)
{
    auto game = realize(spec);
    auto compressed = compress(game);
    for (std::size_t i = 1; i < compressed.level_map.size(); ++i) {
        if (compressed.level_map[i] < compressed.level_map[i - 1]) {
            throw std::logic_error("hierarchical levels merged out of order");
        }
    }
    auto canonical = recognize_hierarchical(compressed.game, spec.kind());
    if (!canonical) {
        throw std::logic_error("compressed hierarchical game has no canonical form");
    }
    return {*canonical, compressed.level_map};
}

Coalition shift_maximal_losing(const HierSpec& spec)
{
    if (spec.kind() != HierKind::disjunctive) {
        throw std::invalid_argument("shift_maximal_losing needs a disjunctive spec");
    }
    auto report = canon_check(spec);
    if (!report.canonical) {
        throw std::invalid_argument("shift_maximal_losing needs a canonical spec");
    }
    if (report.passer_first_level) {
        throw std::invalid_argument("shift_maximal_losing needs a spec without passers");
    }
    if (report.dummy_last_level) {
        throw std::invalid_argument("shift_maximal_losing needs a spec without dummies");
    }
    const auto& k = spec.k();
    Coalition m(std::vector<int>(k.size(), 0));
    m.counts[0] = k[0] - 1;
    for (std::size_t i = 1; i < k.size(); ++i) {
        m.counts[i] = k[i] - k[i - 1];
    }
    return m;
}

ShiftExtremal shift_extremal(const ExplicitGame& game)
{
    for (std::size_t i = 0; i + 1 < game.levels(); ++i) {
        if (level_relation(game, i, i + 1) != LevelRelation::strictly_above) {
            throw std::invalid_argument(
                "shift_extremal needs a complete game with strictly ordered levels");
        }
    }
    if (!is_complete(game)) {
        throw std::invalid_argument("shift_extremal needs a complete game");
    }
    const auto& u = game.universe();
    const auto& lat = game.lattice();
    const std::size_t m = u.levels();
    ShiftExtremal out;
    lat.for_each([&](const Coalition& c, std::size_t idx) {
        if (game.winning_at(idx)) {
            for (std::size_t i = 0; i < m; ++i) {
                if (c[i] > 0 && game.winning_at(idx - lat.stride(i))) {
                    return;
                }
            }
            // every shift i -> j (i < j) must lose
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = i + 1; j < m; ++j) {
                    if (c[i] > 0 && c[j] < u.count(j) &&
                        game.winning_at(idx - lat.stride(i) + lat.stride(j))) {
                        return;
                    }
                }
            }
            out.shift_min_winning.push_back(c);
        } else {
            for (std::size_t i = 0; i < m; ++i) {
                if (c[i] < u.count(i) && !game.winning_at(idx + lat.stride(i))) {
                    return;
                }
            }
            // no losing coalition shifts onto c: every reverse shift must win
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = i + 1; j < m; ++j) {
                    if (c[j] > 0 && c[i] < u.count(i) &&
                        !game.winning_at(idx + lat.stride(i) - lat.stride(j))) {
                        return;
                    }
                }
            }
            out.shift_max_losing.push_back(c);
        }
    });
    return out;
}

}  // namespace hiergame
