#include "hiergame/fourier_motzkin.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hiergame::fm {

namespace {

using Row = LinearSystem::Row;

void make_primitive(Row& row)
{
    Integer g = abs(row.bound);
    for (const auto& c : row.coeffs) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g > 1) {
        for (auto& c : row.coeffs) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
        mpz_divexact(row.bound.get_mpz_t(), row.bound.get_mpz_t(), g.get_mpz_t());
    }
}

Row integral_row(const std::vector<Rational>& coeffs, const Rational& bound)
{
    Integer lcm = 1;
    auto fold = [&](const Rational& q) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    };
    for (const auto& c : coeffs) {
        fold(c);
    }
    fold(bound);
    Row row;
    for (const auto& c : coeffs) {
        Rational scaled = c * lcm;
        row.coeffs.push_back(scaled.get_num());
    }
    Rational b = bound * lcm;
    row.bound = b.get_num();
    make_primitive(row);
    return row;
}

std::size_t popcount(const std::vector<std::uint64_t>& bits)
{
    std::size_t n = 0;
    for (auto w : bits) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

bool is_constant(const Row& row)
{
    return std::all_of(row.coeffs.begin(), row.coeffs.end(), [](const Integer& c) { return c == 0; });
}

struct Stage {
    std::size_t variable;
    std::vector<Row> rows;  // the system before `variable` was eliminated
};

struct Projection {
    bool feasible = true;
    std::vector<Stage> stages;
    std::vector<Row> remaining;  // rows over the kept variables only
};

bool history_subset(const Row& a, const Row& b)
{
    for (std::size_t w = 0; w < a.history.size(); ++w) {
        if ((a.history[w] & ~b.history[w]) != 0) {
            return false;
        }
    }
    return true;
}

// a makes b redundant without breaking the history bookkeeping
bool dominates(const Row& a, const Row& b)
{
    return a.bound <= b.bound && history_subset(a, b);
}

// Drops tautologies, detects contradictions and removes rows dominated by a
// row with the same coefficients. Returns false on a contradiction.
bool tidy(std::vector<Row>& rows)
{
    std::map<std::vector<Integer>, std::vector<std::size_t>> seen;
    std::vector<Row> out;
    std::vector<bool> alive;
    out.reserve(rows.size());
    for (auto& row : rows) {
        if (is_constant(row)) {
            if (row.bound < 0) {
                return false;
            }
            continue;
        }
        auto& group = seen[row.coeffs];
        bool redundant = false;
        for (auto idx : group) {
            if (alive[idx] && dominates(out[idx], row)) {
                redundant = true;
                break;
            }
        }
        if (redundant) {
            continue;
        }
        for (auto idx : group) {
            if (alive[idx] && dominates(row, out[idx])) {
                alive[idx] = false;
            }
        }
        group.push_back(out.size());
        out.push_back(std::move(row));
        alive.push_back(true);
    }
    std::vector<Row> kept;
    kept.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (alive[i]) {
            kept.push_back(std::move(out[i]));
        }
    }
    rows = std::move(kept);
    return true;
}

Projection project(std::vector<Row> rows, std::size_t variables, const std::vector<bool>& keep,
                   std::size_t budget)
{
    Projection result;
    if (!tidy(rows)) {
        result.feasible = false;
        return result;
    }
    std::vector<bool> done = keep;
    std::size_t eliminated = 0;
    for (;;) {
        // cheapest variable to eliminate next
        std::size_t best = variables;
        long long best_cost = 0;
        for (std::size_t v = 0; v < variables; ++v) {
            if (done[v]) {
                continue;
            }
            long long pos = 0;
            long long neg = 0;
            for (const auto& r : rows) {
                pos += r.coeffs[v] > 0;
                neg += r.coeffs[v] < 0;
            }
            long long cost = pos * neg - pos - neg;
            if (best == variables || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        if (best == variables) {
            break;
        }
        const std::size_t v = best;
        done[v] = true;
        ++eliminated;
        result.stages.push_back({v, rows});

        std::vector<const Row*> pos;
        std::vector<const Row*> neg;
        std::vector<Row> next;
        for (const auto& r : rows) {
            if (r.coeffs[v] > 0) {
                pos.push_back(&r);
            } else if (r.coeffs[v] < 0) {
                neg.push_back(&r);
            } else {
                next.push_back(r);
            }
        }
        for (const Row* p : pos) {
            for (const Row* q : neg) {
                std::vector<std::uint64_t> hist(p->history.size());
                for (std::size_t w = 0; w < hist.size(); ++w) {
                    hist[w] = p->history[w] | q->history[w];
                }
                if (popcount(hist) > eliminated + 1) {
                    continue;
                }
                Integer a = p->coeffs[v];
                Integer b = -q->coeffs[v];
                Row combined;
                combined.coeffs.resize(variables);
                for (std::size_t j = 0; j < variables; ++j) {
                    combined.coeffs[j] = b * p->coeffs[j] + a * q->coeffs[j];
                }
                combined.coeffs[v] = 0;
                combined.bound = b * p->bound + a * q->bound;
                combined.history = std::move(hist);
                make_primitive(combined);
                next.push_back(std::move(combined));
                if (budget != 0 && next.size() > 2 * budget) {
                    throw BudgetExceeded();
                }
            }
        }
        if (!tidy(next)) {
            result.feasible = false;
            return result;
        }
        if (budget != 0 && next.size() > budget) {
            throw BudgetExceeded();
        }
        rows = std::move(next);
    }
    result.remaining = std::move(rows);
    return result;
}

// Bounds on variable v from rows where every other variable is fixed.
Interval bounds_for(const std::vector<Row>& rows, std::size_t v,
                    const std::vector<std::optional<Rational>>& values)
{
    Interval iv;
    for (const auto& r : rows) {
        if (r.coeffs[v] == 0) {
            continue;
        }
        Rational rest = r.bound;
        for (std::size_t j = 0; j < r.coeffs.size(); ++j) {
            if (j == v || r.coeffs[j] == 0) {
                continue;
            }
            if (!values[j]) {
                throw std::logic_error("back-substitution reached an unfixed variable");
            }
            rest -= Rational(r.coeffs[j]) * *values[j];
        }
        Rational limit = rest / Rational(r.coeffs[v]);
        if (r.coeffs[v] > 0) {
            if (!iv.upper || limit < *iv.upper) {
                iv.upper = limit;
            }
        } else {
            if (!iv.lower || limit > *iv.lower) {
                iv.lower = limit;
            }
        }
    }
    iv.empty = iv.lower && iv.upper && *iv.lower > *iv.upper;
    return iv;
}

std::vector<Row> input_rows(const LinearSystem& system)
{
    std::vector<Row> rows = system.rows();
    const std::size_t words = (rows.size() + 63) / 64;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].history.assign(words, 0);
        rows[i].history[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return rows;
}

}  // namespace

void LinearSystem::add_le(const std::vector<Rational>& coeffs, const Rational& bound)
{
    if (coeffs.size() != variables_) {
        throw std::invalid_argument("constraint arity does not match the system");
    }
    rows_.push_back(integral_row(coeffs, bound));
}

void LinearSystem::add_ge(const std::vector<Rational>& coeffs, const Rational& bound)
{
    std::vector<Rational> neg;
    neg.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        neg.push_back(-c);
    }
    add_le(neg, -bound);
}

void LinearSystem::add_eq(const std::vector<Rational>& coeffs, const Rational& bound)
{
    add_le(coeffs, bound);
    add_ge(coeffs, bound);
}

std::optional<std::vector<Rational>> find_point(const LinearSystem& system, std::size_t row_budget)
{
    const std::size_t n = system.variables();
    auto proj = project(input_rows(system), n, std::vector<bool>(n, false), row_budget);
    if (!proj.feasible) {
        return std::nullopt;
    }
    std::vector<std::optional<Rational>> values(n);
    for (auto it = proj.stages.rbegin(); it != proj.stages.rend(); ++it) {
        auto iv = bounds_for(it->rows, it->variable, values);
        if (iv.empty) {
            throw std::logic_error("Fourier-Motzkin back-substitution found an empty range");
        }
        Rational pick = 0;
        if (iv.lower) {
            pick = *iv.lower;
        } else if (iv.upper && *iv.upper < 0) {
            pick = *iv.upper;
        }
        values[it->variable] = pick;
    }
    std::vector<Rational> out;
    out.reserve(n);
    for (auto& v : values) {
        out.push_back(v.value_or(Rational(0)));
    }
    return out;
}

Interval objective_range(const LinearSystem& system, const std::vector<Rational>& objective,
                         std::size_t row_budget)
{
    const std::size_t n = system.variables();
    if (objective.size() != n) {
        throw std::invalid_argument("objective arity does not match the system");
    }
    LinearSystem augmented(n + 1);
    for (const auto& r : system.rows()) {
        std::vector<Rational> c;
        for (const auto& a : r.coeffs) {
            c.emplace_back(a);
        }
        c.emplace_back(0);
        augmented.add_le(c, Rational(r.bound));
    }
    std::vector<Rational> link = objective;
    link.emplace_back(-1);
    augmented.add_eq(link, 0);

    std::vector<bool> keep(n + 1, false);
    keep[n] = true;
    auto proj = project(input_rows(augmented), n + 1, keep, row_budget);
    Interval iv;
    if (!proj.feasible) {
        iv.empty = true;
        return iv;
    }
    std::vector<std::optional<Rational>> values(n + 1);
    iv = bounds_for(proj.remaining, n, values);
    return iv;
}

}  // namespace hiergame::fm
