#include "doctest.h"

#include "hiergame/classifier.hpp"
#include "hiergame/transforms.hpp"
#include "sweep_specs.hpp"

using namespace hiergame;

namespace {

constexpr auto D = HierKind::disjunctive;
constexpr auto K = HierKind::conjunctive;

Rational R(long p, long q = 1)
{
    return Rational(p, q);
}

RoughCert cert(Rational q, std::vector<Rational> w)
{
    return RoughCert{std::move(q), std::move(w)};
}

RepresentationMode mode_of(GameClass c)
{
    return c == GameClass::weighted ? RepresentationMode::weighted : RepresentationMode::rough;
}

std::vector<HierSpec> grid()
{
    std::vector<HierSpec> out;
    for (auto kind : {D, K}) {
        for (int m = 1; m <= 3; ++m) {
            for (auto& s : testgrid::canonical_specs(kind, m, 4)) {
                out.push_back(s);
            }
        }
        for (auto& s : testgrid::canonical_specs(kind, 4, 3)) {
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("weighted examples")
{
    auto v = classify_rough(HierSpec(D, {3, 3}, {2, 3}));
    CHECK(v.game_class == GameClass::weighted);
    CHECK(v.matched == CaseId::adjacent_thresholds);
    CHECK(v.case_tag() == "weighted/adjacent_thresholds");
    REQUIRE(v.certificate);
    CHECK(verify_representation(realize(HierSpec(D, {3, 3}, {2, 3})), *v.certificate,
                                RepresentationMode::weighted));

    HierSpec unsc(K, {5, 10}, {5, 9});
    auto u = classify_rough(unsc);
    CHECK(u.game_class == GameClass::weighted);
    CHECK(u.matched == CaseId::trivial_top);
    CHECK(u.weighted_dual_agrees == true);
    REQUIRE(u.certificate);
    CHECK(verify_representation(realize(unsc), *u.certificate, RepresentationMode::weighted));

    CHECK(classify_weighted(HierSpec(D, {5}, {3})).matched == CaseId::single_level);
    CHECK(classify_weighted(HierSpec(D, {2, 3}, {1, 3})).matched == CaseId::saturated_second_level);
    CHECK_FALSE(classify_weighted(HierSpec(D, {2, 4}, {2, 4})).weighted);
}

TEST_CASE("rough examples")
{
    auto t = classify_rough(HierSpec(D, {2, 4}, {2, 4}));
    CHECK(t.game_class == GameClass::rough_not_weighted);
    CHECK(t.matched == CaseId::two_level_2_4);
    CHECK(t.certificate == cert(R(1), {R(1, 2), R(1, 4)}));

    auto ex = classify_rough(HierSpec(D, {3, 3, 3}, {2, 3, 5}));
    CHECK(ex.game_class == GameClass::rough_not_weighted);
    CHECK(ex.case_tag() == "rough/sized_tail");
    CHECK(ex.certificate == cert(R(1), {R(1, 2), R(1, 2), R(0)}));

    auto narrow = classify_rough(HierSpec(D, {3, 2, 2}, {3, 4, 5}));
    CHECK(narrow.matched == CaseId::consecutive_narrow);
    CHECK(narrow.certificate == cert(R(1), {R(1, 3), R(1, 3), R(0)}));

    auto passer = classify_rough(HierSpec(D, {1, 4, 5}, {1, 3, 6}));
    CHECK(passer.game_class == GameClass::rough_not_weighted);
    CHECK(passer.matched == CaseId::rough_trivial_top);
    CHECK(passer.certificate == cert(R(0), {R(1), R(0), R(0)}));

    HierSpec conj(K, {3, 3, 3}, {2, 4, 5});
    CHECK(dual_spec(conj) == HierSpec(D, {3, 3, 3}, {2, 3, 5}));
    auto c = classify_rough(conj);
    CHECK(c.kind == K);
    CHECK(c.game_class == GameClass::rough_not_weighted);
    CHECK(c.matched == CaseId::sized_tail);
    REQUIRE(c.certificate);
    CHECK(*c.certificate == cert(R(1), {R(1, 4), R(1, 4), R(0)}));
    CHECK(verify_representation(realize(conj), *c.certificate, RepresentationMode::rough));
    CHECK(c.literal_conjunctive_agrees.has_value());

    auto five = classify_rough(HierSpec(D, {2, 2, 2, 2, 2}, {2, 3, 4, 5, 6}));
    CHECK(five.game_class == GameClass::not_rough);
    CHECK(five.matched == CaseId::none);
    CHECK_FALSE(five.certificate.has_value());
    CHECK(five.case_tag() == "none");
}

TEST_CASE("dummy levels")
{
    // last level is dummy: k_3 = k_2 + n_3
    HierSpec s(D, {3, 3, 2}, {2, 3, 5});
    REQUIRE(canon_check(s).canonical);
    auto v = classify_rough(s);
    CHECK(v.game_class == GameClass::weighted);
    CHECK(v.case_tag() == "dummy_bottom>weighted/adjacent_thresholds");
    REQUIRE(v.certificate);
    CHECK(v.certificate->weights[2] == 0);
    CHECK(verify_representation(realize(s), *v.certificate, RepresentationMode::weighted));

    HierSpec r(D, {2, 4, 1}, {2, 4, 5});
    REQUIRE(canon_check(r).canonical);
    auto rv = classify_rough(r);
    CHECK(rv.game_class == GameClass::rough_not_weighted);
    CHECK(rv.case_tag() == "dummy_bottom>rough/two_level_2_4");
    CHECK(rv.certificate == cert(R(1), {R(1, 2), R(1, 4), R(0)}));
}

TEST_CASE("case tags and errors")
{
    for (auto c : {CaseId::single_level, CaseId::adjacent_thresholds, CaseId::saturated_second_level,
                   CaseId::trivial_top, CaseId::dummy_bottom, CaseId::rough_trivial_top,
                   CaseId::two_level_2_4, CaseId::two_level_gap_2, CaseId::three_level_2_3_4,
                   CaseId::consecutive_narrow, CaseId::consecutive_wide, CaseId::sized_tail,
                   CaseId::none}) {
        CHECK(parse_case_id(to_string(c)) == c);
    }
    CHECK(is_weighted_case(CaseId::trivial_top));
    CHECK_FALSE(is_weighted_case(CaseId::rough_trivial_top));
    CHECK_THROWS_AS(parse_case_id("rough/bogus"), std::invalid_argument);

    HierSpec not_canonical(D, {2, 1, 2}, {2, 3, 4});
    REQUIRE_FALSE(canon_check(not_canonical).canonical);
    CHECK_THROWS_AS(classify_rough(not_canonical), std::invalid_argument);
    CHECK_THROWS_AS(classify_weighted(not_canonical), std::invalid_argument);
    CHECK_THROWS_AS(synthesize_certificate(HierSpec(D, {3, 3}, {2, 4}), CaseId::none),
                    std::invalid_argument);
    CHECK_THROWS_AS(synthesize_certificate(HierSpec(D, {3, 3}, {2, 4}), CaseId::sized_tail),
                    std::invalid_argument);
    CHECK_THROWS_AS(literal_conjunctive_rough_case(HierSpec(D, {3, 3}, {2, 4})),
                    std::invalid_argument);
}

TEST_CASE("dual certificates")
{
    Multiset u({3, 3, 3});
    CHECK(dual_rough_certificate(u, cert(R(1), {R(1, 2), R(1, 2), R(0)})) ==
          cert(R(1), {R(1, 4), R(1, 4), R(0)}));
    // passer becomes blocker: new quota w(P) - 0
    CHECK(dual_rough_certificate(Multiset({1, 2}), cert(R(0), {R(1), R(0)})) ==
          cert(R(1), {R(1), R(0)}));
}

TEST_CASE("classifier against the oracle")
{
    int rough = 0;
    for (const auto& s : grid()) {
        INFO(s);
        auto g = realize(s);
        auto v = classify_rough(s);
        auto o = oracle_classify(g);
        CHECK(v.game_class == o.game_class);
        if (v.game_class == GameClass::not_rough) {
            CHECK_FALSE(v.certificate.has_value());
            continue;
        }
        REQUIRE(v.certificate);
        CHECK(verify_representation(g, *v.certificate, mode_of(v.game_class)));
        if (s.kind() == K) {
            CHECK(v.weighted_dual_agrees == true);
        }
        if (v.game_class != GameClass::rough_not_weighted) {
            continue;
        }
        ++rough;
        const auto& w = v.certificate->weights;
        // rough but not weighted: some minimal winning and some maximal
        // losing coalition sit exactly on the quota
        bool winning_tight = false;
        for (const auto& c : g.min_winning()) {
            winning_tight = winning_tight || weight_of(w, c) == v.certificate->quota;
        }
        bool losing_tight = false;
        for (const auto& c : maximal_losing(g)) {
            losing_tight = losing_tight || weight_of(w, c) == v.certificate->quota;
        }
        CHECK(winning_tight);
        CHECK(losing_tight);
        if (s.kind() == D && v.case_path.size() == 1 && v.matched != CaseId::rough_trivial_top) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                CHECK(w[i] >= w[i + 1]);
                CHECK(w[i] > 0);
            }
        }
    }
    CHECK(rough > 20);
}
