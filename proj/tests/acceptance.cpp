// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hiergame/classifier.hpp"
#include "hiergame/structural.hpp"
#include "hiergame/transforms.hpp"
#include "sweep_specs.hpp"

using namespace hiergame;

namespace {

constexpr auto D = HierKind::disjunctive;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string first_failure;

    void fail(const std::string& what)
    {
        if (pass) {
            first_failure = what;
        }
        pass = false;
    }
};

std::string str(const HierSpec& s)
{
    std::ostringstream os;
    os << s;
    return os.str();
}

// canonical, already normalized specs only (drops clamped duplicates)
std::vector<HierSpec> grid(HierKind kind, int m, int nmax)
{
    std::vector<HierSpec> out;
    for (auto& s : testgrid::canonical_specs(kind, m, nmax)) {
        if (canon_check(s).normalized_spec == s) {
            out.push_back(s);
        }
    }
    return out;
}

bool plain(const HierSpec& s)
{
    auto r = canon_check(s);
    return !r.passer_first_level && !r.dummy_last_level;
}

// shift-maximal losing coalition of a dummy-free disjunctive spec
std::vector<Rational> m_coefficients(const HierSpec& s)
{
    std::vector<Rational> out;
    int prev = 1;
    for (int k : s.k()) {
        out.emplace_back(k - prev);
        prev = k;
    }
    return out;
}

const std::vector<HierSpec>& two_level()
{
    static const auto specs = grid(D, 2, 6);
    return specs;
}

const std::vector<HierSpec>& three_level()
{
    static const auto specs = grid(D, 3, 4);
    return specs;
}

Outcome criterion1()
{
    Outcome o;
    std::size_t rough = 0;
    for (const auto& s : two_level()) {
        auto v = classify_rough(s);
        auto oc = oracle_classify(realize(s)).game_class;
        if (v.game_class != oc) {
            o.fail("class mismatch on " + str(s));
        }
        const auto& n = s.n();
        const auto& k = s.k();
        bool listed = (k[0] == 2 && k[1] == 4 && n[0] >= 2 && n[1] >= 4) ||
                      (k[0] > 2 && k[1] == k[0] + 2 && n[0] >= k[0] && n[1] == 4);
        bool is_rough = oc == GameClass::rough_not_weighted;
        rough += is_rough;
        if (is_rough != listed) {
            o.fail("rough set differs from the two-level list at " + str(s));
        }
    }
    o.detail = std::to_string(two_level().size()) + " specs, " + std::to_string(rough) + " rough";
    return o;
}

Outcome criterion2()
{
    Outcome o;
    const std::set<CaseId> allowed{CaseId::three_level_2_3_4, CaseId::consecutive_narrow,
                                   CaseId::consecutive_wide, CaseId::sized_tail};
    std::size_t rough = 0;
    for (const auto& s : three_level()) {
        auto v = classify_rough(s);
        auto oc = oracle_classify(realize(s)).game_class;
        if (v.game_class != oc) {
            o.fail("class mismatch on " + str(s));
        }
        if (v.game_class == GameClass::rough_not_weighted && plain(s)) {
            ++rough;
            if (!allowed.count(v.matched)) {
                o.fail("unexpected case " + to_string(v.matched) + " on " + str(s));
            }
        }
    }
    o.detail = std::to_string(three_level().size()) + " specs, " + std::to_string(rough) +
               " rough without passers or dummies";
    return o;
}

Outcome criterion3()
{
    Outcome o;
    std::size_t checked = 0;
    for (const auto* specs : {&two_level(), &three_level()}) {
        for (const auto& s : *specs) {
            auto original = classify_rough(s).game_class;
            auto d = dual_spec(s);
            auto dual_game = dual_explicit(realize(s));
            if (realize(d) != dual_game) {
                o.fail("dual spec does not realize the dual game for " + str(s));
            }
            auto v = classify_rough(d);
            if (v.game_class != original) {
                o.fail("dual class differs for " + str(s));
            }
            if (oracle_rough(dual_game).has_value() != (original != GameClass::not_rough) ||
                oracle_classify(dual_game).game_class != original) {
                o.fail("oracle on the dual game differs for " + str(s));
            }
            if (v.certificate) {
                auto mode = v.game_class == GameClass::weighted ? RepresentationMode::weighted
                                                                : RepresentationMode::rough;
                if (!verify_representation(dual_game, *v.certificate, mode)) {
                    o.fail("dual certificate fails for " + str(s));
                }
            }
            ++checked;
        }
    }
    o.detail = std::to_string(checked) + " duals";
    return o;
}

Outcome criterion4()
{
    Outcome o;
    auto g = realize(HierSpec(D, {3, 3, 3}, {2, 3, 5}));
    auto top = extremal_weight(g, {Rational(0), Rational(0), Rational(1)}, Sense::maximize);
    if (!top || *top != 0) {
        o.fail("max w3 is " + (top ? to_string(*top) : std::string("unbounded")));
    }
    RoughCert cert{Rational(1), {Rational(1, 2), Rational(1, 2), Rational(0)}};
    if (!verify_representation(g, cert, RepresentationMode::rough)) {
        o.fail("[1;1/2,1/2,0] does not verify");
    }
    o.detail = "max w3 = " + (top ? to_string(*top) : std::string("unbounded"));
    return o;
}

Outcome criterion5()
{
    Outcome o;
    std::size_t checked = 0;
    auto check = [&](const std::vector<HierSpec>& specs) {
        for (const auto& s : specs) {
            if (!plain(s) || classify_rough(s).game_class != GameClass::rough_not_weighted) {
                continue;
            }
            auto low = extremal_weight(realize(s), m_coefficients(s), Sense::minimize);
            if (!low || *low != 1) {
                o.fail("min w(M) is not 1 for " + str(s));
            }
            ++checked;
        }
    };
    check(two_level());
    check(three_level());
    o.detail = std::to_string(checked) + " rough specs";
    return o;
}

Outcome criterion6()
{
    Outcome o;
    std::size_t checked = 0;
    for (int m : {4, 5}) {
        for (const auto& s : grid(D, m, 3)) {
            if (!plain(s)) {
                continue;
            }
            ++checked;
            if (classify_rough(s).game_class != GameClass::not_rough) {
                o.fail("classifier finds " + str(s) + " roughly weighted");
            }
            if (oracle_rough(realize(s))) {
                o.fail("oracle finds " + str(s) + " roughly weighted");
            }
        }
    }
    o.detail = std::to_string(checked) + " specs";
    return o;
}

Outcome criterion7()
{
    Outcome o;
    std::size_t games = 0;
    std::size_t universes = 0;
    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; a + b <= 6; ++b) {
            auto report = run_structural(Multiset({a, b}));
            ++universes;
            games += report.complete;
            if (!report.ok()) {
                o.fail("violation on {1^" + std::to_string(a) + ",2^" + std::to_string(b) +
                       "}: " + report.violations.front());
            }
            if (report.unique_shift_max_losing != report.disjunctive_hierarchical ||
                report.unique_shift_min_winning != report.conjunctive_hierarchical) {
                o.fail("counts differ on {1^" + std::to_string(a) + ",2^" + std::to_string(b) + "}");
            }
        }
    }
    o.detail = std::to_string(universes) + " universes, " + std::to_string(games) + " complete games";
    return o;
}

Outcome criterion8()
{
    Outcome o;
    std::vector<HierSpec> pool;
    for (auto kind : {HierKind::disjunctive, HierKind::conjunctive}) {
        for (int m = 1; m <= 3; ++m) {
            for (auto& s : grid(kind, m, 3)) {
                pool.push_back(s);
            }
        }
    }
    std::mt19937 rng(8);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::size_t transfers = 0;
    for (int sample = 0; sample < 200; ++sample) {
        const auto& s = pool[pick(rng)];
        auto g = realize(s);
        auto gd = dual_explicit(g);
        if (dual_explicit(gd) != g || dual_spec(dual_spec(s)) != s) {
            o.fail("dual is not an involution on " + str(s));
        }
        auto v = classify_rough(s);

        std::vector<Coalition> subsets;
        CoalitionLattice(g.universe()).for_each([&](const Coalition& a, std::size_t) {
            if (a != g.universe().full()) {
                subsets.push_back(a);
            }
        });
        std::uniform_int_distribution<std::size_t> pick_a(0, subsets.size() - 1);
        const auto& a = subsets[pick_a(rng)];
        if (dual_explicit(minor(g, {MinorKind::subgame, a})) != minor(gd, {MinorKind::reduced, a})) {
            o.fail("(G_A)* differs from (G*)^A on " + str(s));
        }
        if (!v.certificate || v.game_class == GameClass::not_rough) {
            continue;
        }
        const auto& cert = *v.certificate;
        std::vector<Rational> w;
        bool positive = false;
        for (auto l : surviving_levels(g.universe(), {MinorKind::subgame, a})) {
            w.push_back(cert.weights[l]);
            positive = positive || cert.weights[l] > 0;
        }
        if (!positive) {
            continue;
        }
        Rational rest = cert.quota - weight_of(cert.weights, a);
        RoughCert sub{cert.quota, w};
        RoughCert red{rest > 0 ? rest : Rational(0), w};
        if (!verify_representation(minor(g, {MinorKind::subgame, a}), sub, RepresentationMode::rough) ||
            !verify_representation(minor(g, {MinorKind::reduced, a}), red, RepresentationMode::rough)) {
            o.fail("transferred certificate fails on " + str(s));
        }
        ++transfers;
    }
    o.detail = "200 samples, " + std::to_string(transfers) + " certificate transfers";
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"two-level cross-check and rough list", criterion1},
        {"three-level cross-check and rough cases", criterion2},
        {"conjunctive duals", criterion3},
        {"forced zero weight on H_exists((3,3,3),(2,3,5))", criterion4},
        {"w(M) = 1 on rough specs", criterion5},
        {"four and five levels are not roughly weighted", criterion6},
        {"shift-maximal losing structure", criterion7},
        {"duality and minor algebra", criterion8},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu: %s (%s; %.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), o.detail.c_str(), secs,
                    o.pass ? "" : " first failure: ", o.first_failure.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
