#include "hiergame/simplex.hpp"

#include <stdexcept>

namespace hiergame::simplex {

namespace {

struct Outcome {
    enum Status { optimal, dual_infeasible, primal_infeasible } status = optimal;
    Rational value;
    std::vector<Rational> point;
};

// max c.x s.t. A x <= b, solved as min b.y s.t. A^T y = c, y >= 0.
// x is read back from the simplex multipliers of the final basis.
class DualTableau {
public:
    DualTableau(const fm::LinearSystem& system, const std::vector<Rational>& c)
        : vars_(system.variables()), rows_(system.size())
    {
        const auto& input = system.rows();
        cols_ = rows_ + vars_;
        t_.assign(vars_, std::vector<Rational>(cols_ + 1, Rational(0)));
        sign_.assign(vars_, 1);
        for (std::size_t r = 0; r < vars_; ++r) {
            sign_[r] = c[r] < 0 ? -1 : 1;
            for (std::size_t i = 0; i < rows_; ++i) {
                t_[r][i] = sign_[r] * Rational(input[i].coeffs[r]);
            }
            t_[r][rows_ + r] = 1;
            t_[r][cols_] = sign_[r] * c[r];
        }
        cost_.assign(cols_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            cost_[i] = Rational(input[i].bound);
        }
        basis_.resize(vars_);
        for (std::size_t r = 0; r < vars_; ++r) {
            basis_[r] = rows_ + r;
        }
    }

    Outcome run()
    {
        // phase one: drive the artificials out
        std::vector<Rational> phase1(cols_, Rational(0));
        for (std::size_t r = 0; r < vars_; ++r) {
            phase1[rows_ + r] = 1;
        }
        bool started = true;
        for (std::size_t r = 0; r < vars_; ++r) {
            started = started && t_[r][cols_] == 0;
        }
        if (!started && !optimize(phase1, cols_)) {
            throw std::logic_error("phase one of the simplex cannot be unbounded");
        }
        if (objective_value(phase1) != 0) {
            return {Outcome::dual_infeasible, {}, {}};
        }
        drive_out_artificials();
        if (!optimize(cost_, rows_)) {
            return {Outcome::primal_infeasible, {}, {}};
        }
        Outcome out;
        out.value = objective_value(cost_);
        auto d = reduced_costs(cost_);
        out.point.resize(vars_);
        for (std::size_t r = 0; r < vars_; ++r) {
            out.point[r] = -sign_[r] * d[rows_ + r];
        }
        return out;
    }

private:
    // Artificials left basic at level zero would otherwise turn positive in
    // phase two. Rows with no real entry are redundant and stay put.
    void drive_out_artificials()
    {
        for (std::size_t r = 0; r < vars_; ++r) {
            if (basis_[r] < rows_) {
                continue;
            }
            for (std::size_t j = 0; j < rows_; ++j) {
                if (t_[r][j] != 0) {
                    pivot(r, j);
                    break;
                }
            }
        }
    }

    std::vector<Rational> reduced_costs(const std::vector<Rational>& cost) const
    {
        std::vector<Rational> d = cost;
        for (std::size_t r = 0; r < vars_; ++r) {
            const Rational& cb = cost[basis_[r]];
            if (cb == 0) {
                continue;
            }
            for (std::size_t j = 0; j < cols_; ++j) {
                if (t_[r][j] != 0) {
                    d[j] -= cb * t_[r][j];
                }
            }
        }
        return d;
    }

    Rational objective_value(const std::vector<Rational>& cost) const
    {
        Rational v = 0;
        for (std::size_t r = 0; r < vars_; ++r) {
            v += cost[basis_[r]] * t_[r][cols_];
        }
        return v;
    }

    // Columns at index >= `enterable` never enter. False when unbounded.
    bool optimize(const std::vector<Rational>& cost, std::size_t enterable)
    {
        for (;;) {
            auto d = reduced_costs(cost);
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < enterable; ++j) {
                if (d[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols_) {
                return true;
            }
            std::size_t leave = vars_;
            Rational best;
            for (std::size_t r = 0; r < vars_; ++r) {
                if (t_[r][enter] <= 0) {
                    continue;
                }
                Rational ratio = t_[r][cols_] / t_[r][enter];
                if (leave == vars_ || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == vars_) {
                return false;
            }
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col)
    {
        Rational p = t_[row][col];
        for (auto& v : t_[row]) {
            v /= p;
        }
        for (std::size_t r = 0; r < vars_; ++r) {
            if (r == row || t_[r][col] == 0) {
                continue;
            }
            Rational f = t_[r][col];
            for (std::size_t j = 0; j <= cols_; ++j) {
                if (t_[row][j] != 0) {
                    t_[r][j] -= f * t_[row][j];
                }
            }
        }
        basis_[row] = col;
    }

    std::size_t vars_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::vector<Rational>> t_;
    std::vector<int> sign_;
    std::vector<Rational> cost_;
    std::vector<std::size_t> basis_;
};

Outcome maximize(const fm::LinearSystem& system, const std::vector<Rational>& c)
{
    return DualTableau(system, c).run();
}

}  // namespace

std::optional<std::vector<Rational>> find_point(const fm::LinearSystem& system)
{
    if (system.variables() == 0) {
        for (const auto& r : system.rows()) {
            if (r.bound < 0) {
                return std::nullopt;
            }
        }
        return std::vector<Rational>{};
    }
    auto out = maximize(system, std::vector<Rational>(system.variables(), Rational(0)));
    if (out.status != Outcome::optimal) {
        return std::nullopt;
    }
    return out.point;
}

fm::Interval objective_range(const fm::LinearSystem& system, const std::vector<Rational>& objective)
{
    if (objective.size() != system.variables()) {
        throw std::invalid_argument("objective arity does not match the system");
    }
    fm::Interval iv;
    if (!simplex::find_point(system)) {
        iv.empty = true;
        return iv;
    }
    auto up = maximize(system, objective);
    if (up.status == Outcome::optimal) {
        iv.upper = up.value;
    }
    std::vector<Rational> neg;
    for (const auto& c : objective) {
        neg.push_back(-c);
    }
    auto down = maximize(system, neg);
    if (down.status == Outcome::optimal) {
        iv.lower = -down.value;
    }
    return iv;
}

}  // namespace hiergame::simplex
