#include "hiergame/classifier.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "hiergame/transforms.hpp"

namespace hiergame {

namespace {

constexpr std::array<std::pair<CaseId, const char*>, 13> kCaseNames{{
    {CaseId::single_level, "weighted/single_level"},
    {CaseId::adjacent_thresholds, "weighted/adjacent_thresholds"},
    {CaseId::saturated_second_level, "weighted/saturated_second_level"},
    {CaseId::trivial_top, "weighted/trivial_top"},
    {CaseId::dummy_bottom, "dummy_bottom"},
    {CaseId::rough_trivial_top, "rough/trivial_top"},
    {CaseId::two_level_2_4, "rough/two_level_2_4"},
    {CaseId::two_level_gap_2, "rough/two_level_gap_2"},
    {CaseId::three_level_2_3_4, "rough/three_level_2_3_4"},
    {CaseId::consecutive_narrow, "rough/consecutive_narrow"},
    {CaseId::consecutive_wide, "rough/consecutive_wide"},
    {CaseId::sized_tail, "rough/sized_tail"},
    {CaseId::none, "none"},
}};

HierSpec require_canonical(const HierSpec& spec)
{
    auto report = canon_check(spec);
    if (!report.canonical) {
        throw std::invalid_argument("classification needs a canonical spec");
    }
    return report.normalized_spec;
}

bool has_dummy_tail(const HierSpec& s)
{
    const auto m = s.levels();
    if (m < 2) {
        return false;
    }
    const auto& k = s.k();
    return s.kind() == HierKind::disjunctive ? k[m - 1] == k[m - 2] + s.n()[m - 1]
                                             : k[m - 2] == k[m - 1];
}

HierSpec truncation(const HierSpec& s)
{
    return HierSpec(s.kind(), std::vector<int>(s.n().begin(), s.n().end() - 1),
                    std::vector<int>(s.k().begin(), s.k().end() - 1));
}

// Two-level tests shared by both kinds.
CaseId two_level_weighted(int n2, int k1, int k2)
{
    if (k2 == k1 + 1) {
        return CaseId::adjacent_thresholds;
    }
    if (n2 == k2 - k1 + 1) {
        return CaseId::saturated_second_level;
    }
    return CaseId::none;
}

CaseId weighted_case_no_dummy_rule(const HierSpec& s)
{
    const auto m = s.levels();
    const auto& n = s.n();
    const auto& k = s.k();
    if (m == 1) {
        return CaseId::single_level;
    }
    if (m == 2) {
        if (auto c = two_level_weighted(n[1], k[0], k[1]); c != CaseId::none) {
            return c;
        }
    }
    if (m == 2 || m == 3) {
        if (s.kind() == HierKind::disjunctive && k[0] == 1) {
            // a passer top level: the rest must be weighted on its own,
            // which is the game on levels 2..m with thresholds k_2..k_m
            if (m == 2 || two_level_weighted(n[2], k[1], k[2]) != CaseId::none) {
                return CaseId::trivial_top;
            }
        }
        if (s.kind() == HierKind::conjunctive && k[0] == n[0]) {
            if (m == 2 || two_level_weighted(n[2], k[1] - k[0], k[2] - k[0]) != CaseId::none) {
                return CaseId::trivial_top;
            }
        }
    }
    return CaseId::none;
}

CaseId weighted_case(const HierSpec& s)
{
    if (auto c = weighted_case_no_dummy_rule(s); c != CaseId::none) {
        return c;
    }
    const auto m = s.levels();
    if (m >= 2 && m <= 4 && has_dummy_tail(s) &&
        weighted_case_no_dummy_rule(truncation(s)) != CaseId::none) {
        return CaseId::dummy_bottom;
    }
    return CaseId::none;
}

// Roughly weighted, not weighted, disjunctive; dummy-free leaf cases only.
CaseId disjunctive_rough_leaf(const HierSpec& s)
{
    const auto m = s.levels();
    const auto& n = s.n();
    const auto& k = s.k();
    if (k[0] == 1) {
        return CaseId::rough_trivial_top;
    }
    if (m == 2) {
        if (k[0] == 2 && k[1] == 4 && n[0] >= 2 && n[1] >= 4) {
            return CaseId::two_level_2_4;
        }
        if (k[1] == k[0] + 2 && k[0] > 2 && n[0] >= k[0] && n[1] == 4) {
            return CaseId::two_level_gap_2;
        }
    }
    if (m == 3) {
        if (k[0] == 2 && k[1] == 3 && k[2] == 4 && ((n[1] == 2 && n[2] >= 3) || n[2] == 2)) {
            return CaseId::three_level_2_3_4;
        }
        if (k[1] == k[0] + 1 && k[2] == k[0] + 2 && k[0] > 2 && k[0] <= n[0] && n[2] == 2) {
            return n[1] == 2 ? CaseId::consecutive_narrow : CaseId::consecutive_wide;
        }
        if (k[1] == k[0] + 1 && k[0] >= 2 && k[0] <= n[0] && n[2] == k[2] - k[0] && n[2] >= 3) {
            return CaseId::sized_tail;
        }
    }
    return CaseId::none;
}

Verdict classify_disjunctive(const HierSpec& s)
{
    Verdict v;
    v.kind = HierKind::disjunctive;
    if (auto w = weighted_case(s); w != CaseId::none) {
        v.game_class = GameClass::weighted;
        v.matched = w;
        v.case_path = {w};
        if (w == CaseId::dummy_bottom) {
            v.case_path.push_back(weighted_case_no_dummy_rule(truncation(s)));
        }
        v.certificate = synthesize_certificate(s, w);
        return v;
    }
    if (auto leaf = disjunctive_rough_leaf(s); leaf != CaseId::none) {
        v.game_class = GameClass::rough_not_weighted;
        v.matched = leaf;
        v.case_path = {leaf};
        v.certificate = synthesize_certificate(s, leaf);
        return v;
    }
    if (has_dummy_tail(s)) {
        auto inner = classify_disjunctive(truncation(s));
        if (inner.game_class != GameClass::not_rough) {
            v.game_class = inner.game_class;
            v.matched = CaseId::dummy_bottom;
            v.case_path = {CaseId::dummy_bottom};
            v.case_path.insert(v.case_path.end(), inner.case_path.begin(), inner.case_path.end());
            v.certificate = inner.certificate;
            v.certificate->weights.emplace_back(0);
            return v;
        }
    }
    return v;
}

RoughCert closed_form(const std::vector<Rational>& weights)
{
    return RoughCert{Rational(1), weights};
}

}  // namespace

std::string to_string(CaseId c)
{
    for (const auto& [id, name] : kCaseNames) {
        if (id == c) {
            return name;
        }
    }
    return "none";
}

CaseId parse_case_id(const std::string& text)
{
    for (const auto& [id, name] : kCaseNames) {
        if (text == name) {
            return id;
        }
    }
    throw std::invalid_argument("unknown case tag '" + text + "'");
}

bool is_weighted_case(CaseId c)
{
    switch (c) {
    case CaseId::single_level:
    case CaseId::adjacent_thresholds:
    case CaseId::saturated_second_level:
    case CaseId::trivial_top:
        return true;
    default:
        return false;
    }
}

std::string Verdict::case_tag() const
{
    std::string tag;
    for (auto c : case_path) {
        tag += (tag.empty() ? "" : ">") + to_string(c);
    }
    return tag.empty() ? to_string(matched) : tag;
}

WeightedMatch classify_weighted(const HierSpec& spec)
{
    auto s = require_canonical(spec);
    auto c = weighted_case(s);
    return {c != CaseId::none, c};
}

RoughCert dual_rough_certificate(const Multiset& universe, const RoughCert& cert)
{
    Rational quota = weight_of(cert.weights, universe.full()) - cert.quota;
    RoughCert out{quota, cert.weights};
    if (quota > 0) {
        for (auto& w : out.weights) {
            w /= quota;
        }
        out.quota = 1;
    }
    return out;
}

RoughCert synthesize_certificate(const HierSpec& spec, CaseId matched)
{
    auto s = require_canonical(spec);
    if (matched == CaseId::none) {
        throw std::invalid_argument("no certificate for an unmatched case");
    }
    if (is_weighted_case(matched) ||
        (matched == CaseId::dummy_bottom && weighted_case(s) == CaseId::dummy_bottom)) {
        auto cert = oracle_weighted(realize(s));
        if (!cert) {
            throw std::logic_error("weighted case without a weighted representation");
        }
        return *cert;
    }
    if (s.kind() == HierKind::conjunctive) {
        auto dual = dual_spec(s);
        return dual_rough_certificate(s.universe(), synthesize_certificate(dual, matched));
    }

    const auto& n = s.n();
    const auto& k = s.k();
    const auto m = s.levels();
    auto need_levels = [&](std::size_t levels) {
        if (m != levels) {
            throw std::invalid_argument("case " + to_string(matched) + " needs " +
                                        std::to_string(levels) + " levels");
        }
    };
    const Rational inv_k1(1, k[0]);
    switch (matched) {
    case CaseId::rough_trivial_top: {
        std::vector<Rational> w(m, Rational(0));
        w[0] = 1;
        return RoughCert{Rational(0), w};
    }
    case CaseId::two_level_2_4:
        need_levels(2);
        return closed_form({Rational(1, 2), Rational(1, 4)});
    case CaseId::two_level_gap_2:
        need_levels(2);
        return closed_form({inv_k1, Rational(1, 2 * k[0])});
    case CaseId::three_level_2_3_4:
        need_levels(3);
        if (n[2] == 2) {
            return closed_form({Rational(1, 2), Rational(1, 2), Rational(0)});
        }
        return closed_form({Rational(1, 2), Rational(1, 4), Rational(1, 4)});
    case CaseId::consecutive_narrow:
    case CaseId::consecutive_wide:
    case CaseId::sized_tail:
        need_levels(3);
        return closed_form({inv_k1, inv_k1, Rational(0)});
    case CaseId::dummy_bottom: {
        if (!has_dummy_tail(s)) {
            throw std::invalid_argument("dummy_bottom case needs a dummy last level");
        }
        auto inner = classify_disjunctive(truncation(s));
        if (!inner.certificate) {
            throw std::invalid_argument("truncation is not roughly weighted");
        }
        auto cert = *inner.certificate;
        cert.weights.emplace_back(0);
        return cert;
    }
    default:
        break;
    }
    throw std::invalid_argument("no certificate rule for case " + to_string(matched));
}

std::optional<CaseId> literal_conjunctive_rough_case(const HierSpec& spec)
{
    auto s = require_canonical(spec);
    if (s.kind() != HierKind::conjunctive) {
        throw std::invalid_argument("literal conjunctive case list needs a conjunctive spec");
    }
    const auto m = s.levels();
    const auto& n = s.n();
    const auto& k = s.k();
    if (k[0] == n[0]) {
        return CaseId::rough_trivial_top;
    }
    if (m == 2) {
        if (k[0] == n[0] - 1 && k[1] == n[0] + n[1] - 3 && n[0] >= 2 && n[1] >= 4) {
            return CaseId::two_level_2_4;
        }
        if (k[1] == k[0] + 2 && k[0] >= 1 && k[0] < n[0] - 1 && n[1] == 4) {
            return CaseId::two_level_gap_2;
        }
    }
    if (m == 3) {
        if (k[0] == n[0] - 1 && k[1] == n[0] && k[2] == n[0] + n[2] - 1 && n[1] == 2 &&
            n[0] >= 2 && n[2] >= 3) {
            return CaseId::three_level_2_3_4;
        }
        if (k[1] == k[0] + 1 && k[2] == k[0] + 2 && k[0] >= 1 && k[0] < n[0] - 1 && n[1] == 2 &&
            n[2] == 2) {
            return CaseId::consecutive_narrow;
        }
        // taken as written: n = (n_1, n_2, 2) together with n_3 >= 3
        if (k[2] == k[1] + 1 && n[2] == 2 && k[1] - k[0] == n[1] - 1 && k[0] >= 1 &&
            k[0] < n[0] - 1 && n[2] >= 3) {
            return CaseId::consecutive_wide;
        }
        if (k[2] == k[1] + 1 && k[0] >= 1 && k[0] <= n[0] - 1 && n[1] >= 3) {
            return CaseId::sized_tail;
        }
    }
    if (has_dummy_tail(s) && literal_conjunctive_rough_case(truncation(s))) {
        return CaseId::dummy_bottom;
    }
    return std::nullopt;
}

Verdict classify_rough(const HierSpec& spec)
{
    auto s = require_canonical(spec);
    if (s.kind() == HierKind::disjunctive) {
        return classify_disjunctive(s);
    }

    auto direct = weighted_case(s);
    auto dual_verdict = classify_disjunctive(dual_spec(s));

    Verdict v;
    v.kind = HierKind::conjunctive;
    v.game_class = dual_verdict.game_class;
    v.case_path = dual_verdict.case_path;
    v.matched = dual_verdict.matched;
    v.weighted_dual_agrees = (direct != CaseId::none) == (dual_verdict.game_class == GameClass::weighted);
    if (v.game_class == GameClass::weighted) {
        if (direct != CaseId::none) {
            v.matched = direct;
            v.case_path = {direct};
            if (direct == CaseId::dummy_bottom) {
                v.case_path.push_back(weighted_case_no_dummy_rule(truncation(s)));
            }
        }
        v.certificate = oracle_weighted(realize(s));
        return v;
    }
    if (dual_verdict.certificate) {
        v.certificate = dual_rough_certificate(s.universe(), *dual_verdict.certificate);
    }
    bool literal_rough = literal_conjunctive_rough_case(s).has_value();
    v.literal_conjunctive_agrees = literal_rough == (v.game_class == GameClass::rough_not_weighted);
    return v;
}

}  // namespace hiergame
