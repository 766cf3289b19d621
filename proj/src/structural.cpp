#include "hiergame/structural.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hiergame/hierarchy.hpp"

namespace hiergame {

namespace {

std::string describe(const ExplicitGame& game)
{
    std::ostringstream os;
    os << "universe " << Coalition{game.universe().counts()} << " min_winning";
    for (const auto& c : game.min_winning()) {
        os << ' ' << c;
    }
    return os.str();
}

bool degenerate(const ExplicitGame& game)
{
    return game.min_winning().empty() || game.is_winning(game.universe().empty());
}

}  // namespace

ExplicitGame permute_levels(const ExplicitGame& game, const std::vector<std::size_t>& order)
{
    const auto m = game.levels();
    if (order.size() != m) {
        throw std::invalid_argument("permutation has the wrong length");
    }
    auto apply = [&](const std::vector<int>& counts) {
        std::vector<int> out(m);
        for (std::size_t i = 0; i < m; ++i) {
            out[i] = counts.at(order[i]);
        }
        return out;
    };
    std::vector<Coalition> min_winning;
    for (const auto& c : game.min_winning()) {
        min_winning.push_back(Coalition{apply(c.counts)});
    }
    return ExplicitGame(Multiset(apply(game.universe().counts())), std::move(min_winning));
}

ExplicitGame desirability_ordered(const ExplicitGame& game)
{
    auto compressed = compress(game).game;
    std::vector<std::size_t> order(compressed.levels());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            auto r = level_relation(compressed, order[i], order[j]);
            if (r == LevelRelation::incomparable) {
                throw std::invalid_argument("game is not complete");
            }
            if (r == LevelRelation::strictly_below) {
                std::swap(order[i], order[j]);
            }
        }
    }
    return permute_levels(compressed, order);
}

StructuralReport run_structural(const Multiset& universe)
{
    StructuralReport report(universe);
    for_each_monotone_game(universe, [&](const ExplicitGame& game) {
        if (degenerate(game)) {
            return;
        }
        ++report.games;
        if (!is_complete(game)) {
            return;
        }
        ++report.complete;
        auto ordered = desirability_ordered(game);
        auto extremal = shift_extremal(ordered);
        bool unique_max = extremal.shift_max_losing.size() == 1;
        bool unique_min = extremal.shift_min_winning.size() == 1;
        bool disj = recognize_hierarchical(ordered, HierKind::disjunctive).has_value();
        bool conj = recognize_hierarchical(ordered, HierKind::conjunctive).has_value();
        report.unique_shift_max_losing += unique_max;
        report.unique_shift_min_winning += unique_min;
        report.disjunctive_hierarchical += disj;
        report.conjunctive_hierarchical += conj;
        if (unique_max != disj) {
            report.violations.push_back(describe(game) + ": unique shift-maximal losing " +
                                        (unique_max ? "yes" : "no") + ", disjunctive hierarchical " +
                                        (disj ? "yes" : "no"));
        }
        if (unique_min != conj) {
            report.violations.push_back(describe(game) + ": unique shift-minimal winning " +
                                        (unique_min ? "yes" : "no") + ", conjunctive hierarchical " +
                                        (conj ? "yes" : "no"));
        }
        if (!report.non_hierarchical_witness && extremal.shift_max_losing.size() > 1 && !disj) {
            report.non_hierarchical_witness = describe(game);
        }
    });
    return report;
}

nlohmann::ordered_json structural_json(const StructuralReport& r)
{
    using json = nlohmann::ordered_json;
    json j{{"universe", r.universe.counts()},
           {"games", r.games},
           {"complete", r.complete},
           {"unique_shift_max_losing", r.unique_shift_max_losing},
           {"disjunctive_hierarchical", r.disjunctive_hierarchical},
           {"unique_shift_min_winning", r.unique_shift_min_winning},
           {"conjunctive_hierarchical", r.conjunctive_hierarchical},
           {"violations", r.violations},
           {"ok", r.ok()}};
    j["non_hierarchical_witness"] =
        r.non_hierarchical_witness ? json(*r.non_hierarchical_witness) : json(nullptr);
    return j;
}

std::string structural_text(const StructuralReport& r)
{
    std::ostringstream os;
    os << "universe                  " << Coalition{r.universe.counts()} << '\n'
       << "monotone games            " << r.games << '\n'
       << "complete                  " << r.complete << '\n'
       << "unique shift-max losing   " << r.unique_shift_max_losing << '\n'
       << "disjunctive hierarchical  " << r.disjunctive_hierarchical << '\n'
       << "unique shift-min winning  " << r.unique_shift_min_winning << '\n'
       << "conjunctive hierarchical  " << r.conjunctive_hierarchical << '\n';
    if (r.non_hierarchical_witness) {
        os << "witness                   " << *r.non_hierarchical_witness << '\n';
    }
    for (const auto& v : r.violations) {
        os << "VIOLATION " << v << '\n';
    }
    os << (r.ok() ? "equivalences hold" : "equivalences FAIL") << '\n';
    return os.str();
}

}  // namespace hiergame
