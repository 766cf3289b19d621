#include "hiergame/lp_oracle.hpp"

#include <ostream>
#include <stdexcept>

#include "hiergame/fourier_motzkin.hpp"
#include "hiergame/simplex.hpp"

namespace hiergame {

std::ostream& operator<<(std::ostream& os, const RoughCert& cert)
{
    os << '[' << to_string(cert.quota) << ';';
    for (std::size_t i = 0; i < cert.weights.size(); ++i) {
        os << (i ? "," : "") << to_string(cert.weights[i]);
    }
    return os << ']';
}

Rational weight_of(const std::vector<Rational>& weights, const Coalition& x)
{
    if (weights.size() != x.levels()) {
        throw std::invalid_argument("weight vector does not match the coalition");
    }
    Rational total = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        total += weights[i] * x[i];
    }
    return total;
}

namespace {

// Past this many rows elimination hands over to the simplex.
constexpr std::size_t kEliminationBudget = 2000;

std::optional<std::vector<Rational>> feasible_point(const fm::LinearSystem& sys)
{
    try {
        return fm::find_point(sys, kEliminationBudget);
    } catch (const fm::BudgetExceeded&) {
        return simplex::find_point(sys);
    }
}

fm::Interval range_of(const fm::LinearSystem& sys, const std::vector<Rational>& objective)
{
    try {
        return fm::objective_range(sys, objective, kEliminationBudget);
    } catch (const fm::BudgetExceeded&) {
        return simplex::objective_range(sys, objective);
    }
}

std::vector<Rational> as_row(const Coalition& c, std::size_t width)
{
    std::vector<Rational> row(width, Rational(0));
    for (std::size_t i = 0; i < c.levels(); ++i) {
        row[i] = c[i];
    }
    return row;
}

void add_nonnegativity(fm::LinearSystem& sys, std::size_t weights)
{
    for (std::size_t i = 0; i < weights; ++i) {
        std::vector<Rational> row(sys.variables(), Rational(0));
        row[i] = 1;
        sys.add_ge(row, 0);
    }
}

fm::LinearSystem rough_system(const ExplicitGame& game)
{
    const std::size_t m = game.levels();
    fm::LinearSystem sys(m);
    add_nonnegativity(sys, m);
    auto sep = rough_separation_system(game);
    for (const auto& c : sep.ge_constraints) {
        sys.add_ge(as_row(c.coalition, m), c.bound);
    }
    for (const auto& c : sep.le_constraints) {
        sys.add_le(as_row(c.coalition, m), c.bound);
    }
    return sys;
}

}  // namespace

SeparationSystem rough_separation_system(const ExplicitGame& game)
{
    SeparationSystem sep;
    for (const auto& c : game.min_winning()) {
        sep.ge_constraints.push_back({c, Rational(1)});
    }
    for (const auto& c : maximal_losing(game)) {
        sep.le_constraints.push_back({c, Rational(1)});
    }
    return sep;
}

std::optional<RoughCert> oracle_weighted(const ExplicitGame& game)
{
    // variables w_1..w_m, q
    const std::size_t m = game.levels();
    fm::LinearSystem sys(m + 1);
    add_nonnegativity(sys, m);
    for (const auto& c : game.min_winning()) {
        auto row = as_row(c, m + 1);
        row[m] = -1;
        sys.add_ge(row, 0);
    }
    for (const auto& c : maximal_losing(game)) {
        auto row = as_row(c, m + 1);
        row[m] = -1;
        sys.add_le(row, -1);
    }
    auto point = feasible_point(sys);
    if (!point) {
        return std::nullopt;
    }
    RoughCert cert;
    cert.quota = (*point)[m];
    cert.weights.assign(point->begin(), point->begin() + static_cast<std::ptrdiff_t>(m));
    return cert;
}

std::optional<RoughCert> oracle_rough(const ExplicitGame& game)
{
    if (auto point = feasible_point(rough_system(game))) {
        return RoughCert{Rational(1), *point};
    }
    const auto& u = game.universe();
    for (std::size_t i = 0; i < u.levels(); ++i) {
        Coalition single = u.empty();
        single.counts[i] = 1;
        if (game.is_winning(single)) {
            std::vector<Rational> w(u.levels(), Rational(0));
            w[i] = 1;
            return RoughCert{Rational(0), w};
        }
    }
    return std::nullopt;
}

bool verify_representation(const ExplicitGame& game, const RoughCert& cert,
                           RepresentationMode mode)
{
    if (cert.weights.size() != game.levels()) {
        throw std::invalid_argument("certificate has the wrong number of weights");
    }
    bool all_zero = cert.quota == 0;
    for (const auto& w : cert.weights) {
        if (w < 0) {
            return false;
        }
        all_zero = all_zero && w == 0;
    }
    if (cert.quota < 0) {
        return false;
    }
    if (mode == RepresentationMode::rough && all_zero) {
        return false;
    }
    bool ok = true;
    game.lattice().for_each([&](const Coalition& x, std::size_t idx) {
        if (!ok) {
            return;
        }
        Rational w = weight_of(cert.weights, x);
        bool wins = game.winning_at(idx);
        if (mode == RepresentationMode::weighted) {
            ok = wins == (w >= cert.quota);
        } else {
            ok = !(w < cert.quota && wins) && !(w > cert.quota && !wins);
        }
    });
    return ok;
}

std::optional<Rational> extremal_weight(const ExplicitGame& game,
                                        const std::vector<Rational>& objective, Sense sense)
{
    if (objective.size() != game.levels()) {
        throw std::invalid_argument("objective has the wrong number of coefficients");
    }
    auto range = range_of(rough_system(game), objective);
    if (range.empty) {
        throw std::domain_error("rough representation polytope with quota 1 is empty");
    }
    return sense == Sense::minimize ? range.lower : range.upper;
}

std::string to_string(GameClass c)
{
    switch (c) {
    case GameClass::weighted: return "weighted";
    case GameClass::rough_not_weighted: return "rough_not_weighted";
    case GameClass::not_rough: return "not_rough";
    }
    return "?";
}

OracleVerdict oracle_classify(const ExplicitGame& game)
{
    if (auto w = oracle_weighted(game)) {
        return {GameClass::weighted, w};
    }
    if (auto r = oracle_rough(game)) {
        return {GameClass::rough_not_weighted, r};
    }
    return {GameClass::not_rough, std::nullopt};
}

}  // namespace hiergame
