#include <algorithm>
#include <cstdlib>

#include "doctest.h"

#include "brute.hpp"
#include "hiergame/hierarchy.hpp"
#include "hiergame/multiset.hpp"

using namespace hiergame;

namespace {

Coalition C(std::vector<int> v)
{
    return Coalition(std::move(v));
}

std::vector<brute::Counts> as_counts(const std::vector<Coalition>& cs)
{
    std::vector<brute::Counts> out;
    for (const auto& c : cs) {
        out.push_back(c.counts);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<brute::Counts> sorted(std::vector<brute::Counts> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

brute::Pred pred_of(const ExplicitGame& g)
{
    return [&g](const brute::Counts& x) { return g.is_winning(Coalition(x)); };
}

}  // namespace

TEST_CASE("multiset validation")
{
    CHECK_THROWS_AS(Multiset(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(Multiset({2, 0}), std::invalid_argument);
    Multiset u({2, 3});
    CHECK(u.total() == 5);
    CHECK(u.lattice_size() == 12);
    CHECK(u.contains(C({2, 0})));
    CHECK_FALSE(u.contains(C({3, 0})));
    CHECK_FALSE(u.contains(C({1})));
    CHECK(u.complement(C({1, 2})) == C({1, 1}));
}

TEST_CASE("lattice indexing is a bijection in mixed radix")
{
    CoalitionLattice lat(Multiset({2, 1, 3}));
    REQUIRE(lat.size() == 24);
    std::size_t expect = 0;
    lat.for_each([&](const Coalition& c, std::size_t idx) {
        CHECK(idx == expect++);
        CHECK(lat.index(c) == idx);
        CHECK(lat.coalition(idx) == c);
    });
    CHECK(lat.index(C({1, 0, 0})) == 1);
    CHECK(lat.index(C({0, 1, 0})) == 3);
    CHECK(lat.index(C({0, 0, 1})) == 6);
}

TEST_CASE("enumeration cap")
{
    CHECK_THROWS_AS(CoalitionLattice(Multiset({100000, 1000})), CapExceeded);
    ::setenv("HIERGAME_ENUM_CAP", "10", 1);
    CHECK(enumeration_cap() == 10);
    CHECK_THROWS_AS(CoalitionLattice(Multiset({2, 3})), CapExceeded);
    CHECK_NOTHROW(CoalitionLattice(Multiset({1, 4})));
    ::unsetenv("HIERGAME_ENUM_CAP");
    CHECK(enumeration_cap() == kDefaultEnumerationCap);
}

TEST_CASE("is_winning examples")
{
    ExplicitGame g(Multiset({2, 2}), {C({2, 0})});
    CHECK(g.is_winning(C({2, 0})));
    CHECK_FALSE(g.is_winning(C({0, 0})));
    CHECK_THROWS_AS(g.is_winning(C({1})), std::invalid_argument);

    ExplicitGame h(Multiset({2, 2}), {C({1, 1})});
    CHECK_FALSE(h.is_winning(C({0, 2})));
    brute::each_counts({2, 2}, [&](const brute::Counts& x) {
        CHECK(h.is_winning(Coalition(x)) == (x[0] >= 1 && x[1] >= 1));
    });
}

TEST_CASE("min_winning is normalized to an antichain")
{
    ExplicitGame g(Multiset({3}), {C({2}), C({3}), C({2})});
    REQUIRE(g.min_winning().size() == 1);
    CHECK(g.min_winning()[0] == C({2}));
    ExplicitGame a(Multiset({2, 2}), {C({1, 1}), C({2, 0})});
    ExplicitGame b(Multiset({2, 2}), {C({2, 0}), C({1, 1}), C({2, 2})});
    CHECK(a == b);
}

TEST_CASE("from_predicate rejects non-monotone predicates")
{
    auto g = ExplicitGame::from_predicate(Multiset({3}), [](const Coalition& x) { return x[0] >= 2; });
    CHECK(g.min_winning() == std::vector<Coalition>{C({2})});
    CHECK_THROWS_AS(ExplicitGame::from_predicate(Multiset({3}),
                                                 [](const Coalition& x) { return x[0] == 1; }),
                    std::invalid_argument);
}

TEST_CASE("maximal_losing examples")
{
    CHECK(maximal_losing(ExplicitGame(Multiset({3}), {C({2})})) == std::vector<Coalition>{C({1})});
    CHECK(maximal_losing(ExplicitGame(Multiset({2, 2}), {C({2, 0}), C({0, 2})})) ==
          std::vector<Coalition>{C({1, 1})});
    CHECK(maximal_losing(ExplicitGame(Multiset({1}), {C({1})})) == std::vector<Coalition>{C({0})});
}

TEST_CASE("antichains, monotonicity and partition against brute force")
{
    for (const auto& n : std::vector<brute::Counts>{{2, 2}, {1, 2, 2}, {3, 1}, {2, 1, 1, 1}}) {
        Multiset u(n);
        std::size_t seen = 0;
        for_each_monotone_game(u, [&](const ExplicitGame& g) {
            ++seen;
            auto wins = pred_of(g);
            CHECK(as_counts(g.min_winning()) == sorted(brute::minimal_winning(n, wins)));
            CHECK(as_counts(maximal_losing(g)) == sorted(brute::maximal_losing(n, wins)));
            brute::each_counts(n, [&](const brute::Counts& x) {
                bool above_min = false;
                for (const auto& w : g.min_winning()) {
                    above_min = above_min || brute::contained(w.counts, x);
                }
                bool below_max = false;
                for (const auto& l : maximal_losing(g)) {
                    below_max = below_max || brute::contained(x, l.counts);
                }
                CHECK(above_min != below_max);
                CHECK(above_min == wins(x));
                for (std::size_t i = 0; i < n.size(); ++i) {
                    if (x[i] < n[i]) {
                        auto y = x;
                        ++y[i];
                        CHECK((!wins(x) || wins(y)));
                    }
                }
            });
        });
        CHECK(seen > 2);
    }
}

TEST_CASE("monotone game enumeration counts antichains")
{
    // antichains of a chain of length 4 (including the empty antichain): 5
    std::size_t chain = 0;
    for_each_monotone_game(Multiset({3}), [&](const ExplicitGame&) { ++chain; });
    CHECK(chain == 5);
    // antichains of the 3x3 grid poset: C(6,3) = 20
    std::size_t grid = 0;
    for_each_monotone_game(Multiset({2, 2}), [&](const ExplicitGame&) { ++grid; });
    CHECK(grid == 20);
    // Boolean lattice on 3 elements: Dedekind number 20
    std::size_t cube = 0;
    for_each_monotone_game(Multiset({1, 1, 1}), [&](const ExplicitGame&) { ++cube; });
    CHECK(cube == 20);
}

TEST_CASE("level_relation examples")
{
    auto h = realize(HierSpec(HierKind::disjunctive, {3, 3, 3}, {2, 3, 5}));
    CHECK(level_relation(h, 0, 1) == LevelRelation::strictly_above);
    CHECK(level_relation(h, 1, 0) == LevelRelation::strictly_below);
    CHECK(level_relation(h, 1, 2) == LevelRelation::strictly_above);

    // one unit of each level must be present: a spare level-1 player helps
    // only a level-2 newcomer and vice versa, so the levels are incomparable
    ExplicitGame both(Multiset({2, 2}), {C({1, 1})});
    CHECK(level_relation(both, 0, 1) == LevelRelation::incomparable);
    CHECK_FALSE(is_complete(both));

    ExplicitGame pairs(Multiset({2, 2}), {C({2, 0}), C({0, 2})});
    CHECK(level_relation(pairs, 0, 1) == LevelRelation::incomparable);
    CHECK_FALSE(is_complete(pairs));

    ExplicitGame majority(Multiset({2, 2}), {C({2, 0}), C({1, 1}), C({0, 2})});
    CHECK(level_relation(majority, 0, 1) == LevelRelation::equivalent);
    CHECK(is_complete(majority));

    ExplicitGame one_level(Multiset({4}), {C({3})});
    CHECK(is_complete(one_level));

    ExplicitGame four(Multiset({1, 1, 1, 1}), {C({1, 1, 0, 0}), C({0, 0, 1, 1})});
    CHECK(level_relation(four, 0, 2) == LevelRelation::incomparable);
    CHECK_FALSE(is_complete(four));
}

TEST_CASE("level_relation agrees with Isbell's relation on flat players")
{
    for (const auto& n : std::vector<brute::Counts>{{2, 2}, {1, 2, 1}, {2, 1, 1}}) {
        Multiset u(n);
        for_each_monotone_game(u, [&](const ExplicitGame& g) {
            auto wins = pred_of(g);
            auto flat = brute::flatten(n);
            for (std::size_t i = 0; i < n.size(); ++i) {
                for (std::size_t j = 0; j < n.size(); ++j) {
                    if (i == j) {
                        continue;
                    }
                    std::size_t a = std::find(flat.levels.begin(), flat.levels.end(), i) - flat.levels.begin();
                    std::size_t b = std::find(flat.levels.begin(), flat.levels.end(), j) - flat.levels.begin();
                    int expect = brute::isbell(n, wins, a, b);
                    auto r = level_relation(g, i, j);
                    switch (expect) {
                    case 0: CHECK(r == LevelRelation::equivalent); break;
                    case 1: CHECK(r == LevelRelation::strictly_above); break;
                    case -1: CHECK(r == LevelRelation::strictly_below); break;
                    default: CHECK(r == LevelRelation::incomparable); break;
                    }
                }
            }
        });
    }
}

TEST_CASE("hierarchical games are complete")
{
    for (int k2 = 3; k2 <= 5; ++k2) {
        CHECK(is_complete(realize(HierSpec(HierKind::disjunctive, {2, 3}, {2, k2}))));
        CHECK(is_complete(realize(HierSpec(HierKind::conjunctive, {2, 3}, {1, k2}))));
    }
}

TEST_CASE("special players")
{
    auto passers = special_players(realize(HierSpec(HierKind::disjunctive, {2, 2}, {1, 2})));
    CHECK(passers.passers == std::vector<std::size_t>{0});

    auto dummies = special_players(realize(HierSpec(HierKind::disjunctive, {2, 2}, {2, 4})));
    CHECK(dummies.dummies == std::vector<std::size_t>{1});
    CHECK(dummies.passers.empty());

    auto unsc = special_players(realize(HierSpec(HierKind::conjunctive, {5, 10}, {5, 9})));
    CHECK(unsc.blockers == std::vector<std::size_t>{0});
    CHECK(unsc.dummies.empty());
}

TEST_CASE("compress merges equivalent levels")
{
    ExplicitGame g(Multiset({1, 2, 1}), {C({1, 1, 0}), C({0, 1, 1}), C({1, 0, 1})});
    auto cg = compress(g);
    // levels 1 and 3 are interchangeable; two level-2 players do not win
    CHECK(cg.level_map == std::vector<std::size_t>{0, 1, 0});
    CHECK(cg.game.universe().counts() == std::vector<int>{2, 2});
    brute::each_counts({1, 2, 1}, [&](const brute::Counts& x) {
        CHECK(g.is_winning(Coalition(x)) == cg.game.is_winning(C({x[0] + x[2], x[1]})));
    });
}
