#include "hiergame/transforms.hpp"

#include <stdexcept>

namespace hiergame {

ExplicitGame dual_explicit(const ExplicitGame& game)
{
    const auto& u = game.universe();
    return ExplicitGame::from_predicate(
        u, [&](const Coalition& x) { return !game.is_winning(u.complement(x)); });
}

std::vector<int> k_star(const std::vector<int>& n, const std::vector<int>& k)
{
    if (n.size() != k.size()) {
        throw std::invalid_argument("k_star: n and k differ in length");
    }
    std::vector<int> out(k.size());
    int prefix = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        prefix += n[i];
        out[i] = prefix - k[i] + 1;
    }
    return out;
}

HierSpec dual_spec(const HierSpec& spec)
{
    auto report = canon_check(spec);
    if (!report.canonical) {
        throw std::invalid_argument("dual_spec needs a canonical spec");
    }
    const auto& s = report.normalized_spec;
    auto kind = s.kind() == HierKind::disjunctive ? HierKind::conjunctive : HierKind::disjunctive;
    return HierSpec(kind, s.n(), k_star(s.n(), s.k()));
}

std::string to_string(MinorKind kind)
{
    return kind == MinorKind::subgame ? "subgame" : "reduced";
}

std::vector<std::size_t> surviving_levels(const Multiset& universe, const MinorStep& step)
{
    if (!universe.contains(step.removed)) {
        throw std::invalid_argument("removed players exceed the level multiplicities");
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < universe.levels(); ++i) {
        if (universe.count(i) > step.removed[i]) {
            kept.push_back(i);
        }
    }
    if (kept.empty()) {
        throw std::invalid_argument("minor would remove every player");
    }
    return kept;
}

ExplicitGame minor(const ExplicitGame& game, const MinorStep& step)
{
    const auto& u = game.universe();
    auto kept = surviving_levels(u, step);
    std::vector<int> counts;
    for (auto l : kept) {
        counts.push_back(u.count(l) - step.removed[l]);
    }
    Multiset rest(counts);
    return ExplicitGame::from_predicate(rest, [&](const Coalition& x) {
        Coalition full = step.kind == MinorKind::reduced ? step.removed : u.empty();
        for (std::size_t j = 0; j < kept.size(); ++j) {
            full.counts[kept[j]] += x[j];
        }
        return game.is_winning(full);
    });
}

namespace {

std::optional<HierSpec> canonical_or_none(HierKind kind, std::vector<int> n, std::vector<int> k)
{
    try {
        HierSpec s(kind, std::move(n), std::move(k));
        auto report = canon_check(s);
        if (!report.canonical) {
            return std::nullopt;
        }
        return report.normalized_spec;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::optional<NamedMinor> cut_tail(const HierSpec& s)
{
    const std::size_t m = s.levels();
    if (m < 2) {
        return std::nullopt;
    }
    std::vector<int> n(s.n().begin(), s.n().end() - 1);
    std::vector<int> k(s.k().begin(), s.k().end() - 1);
    auto spec = canonical_or_none(HierKind::disjunctive, n, k);
    if (!spec) {
        return std::nullopt;
    }
    Coalition a = s.universe().empty();
    a.counts[m - 1] = s.n()[m - 1];
    return NamedMinor{"cut_tail", *spec, {MinorKind::subgame, a}};
}

std::optional<NamedMinor> cut_head(const HierSpec& s)
{
    const std::size_t m = s.levels();
    if (m < 2) {
        return std::nullopt;
    }
    std::vector<int> n(s.n().begin() + 1, s.n().end());
    std::vector<int> k(s.k().begin() + 1, s.k().end());
    n[0] += s.k()[0] - 1;
    auto spec = canonical_or_none(HierKind::disjunctive, n, k);
    if (!spec) {
        return std::nullopt;
    }
    Coalition a = s.universe().empty();
    a.counts[0] = s.n()[0] - s.k()[0] + 1;
    return NamedMinor{"cut_head", *spec, {MinorKind::subgame, a}};
}

}  // namespace

std::vector<NamedMinor> named_minors(const HierSpec& spec)
{
    if (spec.kind() != HierKind::disjunctive) {
        throw std::invalid_argument("named_minors needs a disjunctive spec");
    }
    auto report = canon_check(spec);
    if (!report.canonical) {
        throw std::invalid_argument("named_minors needs a canonical spec");
    }
    const auto& s = report.normalized_spec;
    std::vector<NamedMinor> out;
    if (auto t = cut_tail(s)) {
        out.push_back(*t);
    }
    if (auto h = cut_head(s)) {
        out.push_back(*h);
    }
    const auto& n = s.n();
    const auto& k = s.k();
    for (std::size_t i = 0; i < s.levels(); ++i) {
        int below = i == 0 ? 0 : k[i - 1];
        if (k[i] <= below + 1 || n[i] < 2) {
            continue;
        }
        std::vector<int> n2 = n;
        std::vector<int> k2 = k;
        n2[i] -= 1;
        for (std::size_t j = i; j < k2.size(); ++j) {
            k2[j] -= 1;
        }
        auto reduced = canonical_or_none(HierKind::disjunctive, n2, k2);
        if (!reduced) {
            continue;
        }
        Coalition a = s.universe().empty();
        a.counts[i] = 1;
        out.push_back({"remove_one:" + std::to_string(i + 1), *reduced, {MinorKind::reduced, a}});
    }
    return out;
}

HierSpec consecutive_pair_minor(const HierSpec& spec, std::size_t level)
{
    if (level + 1 >= spec.levels()) {
        throw std::invalid_argument("consecutive_pair_minor: level out of range");
    }
    HierSpec current = canon_check(spec).normalized_spec;
    while (current.levels() > level + 2) {
        auto t = cut_tail(current);
        if (!t) {
            throw std::invalid_argument("consecutive_pair_minor: tail cut not hierarchical");
        }
        current = t->spec;
    }
    for (std::size_t i = 0; i < level; ++i) {
        auto h = cut_head(current);
        if (!h) {
            throw std::invalid_argument("consecutive_pair_minor: head cut not hierarchical");
        }
        current = h->spec;
    }
    return current;
}

}  // namespace hiergame
