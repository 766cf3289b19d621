#pragma once

// Exact Fourier-Motzkin elimination over the rationals. Rows are kept as
// primitive integer vectors; Chernikov's history bound discards redundant
// combinations.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hiergame/rational.hpp"

namespace hiergame::fm {

/// A system of linear inequalities sum_j a_j x_j <= b in a fixed number of
/// variables.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t variables) : variables_(variables) {}

    std::size_t variables() const { return variables_; }
    std::size_t size() const { return rows_.size(); }

    void add_le(const std::vector<Rational>& coeffs, const Rational& bound);
    void add_ge(const std::vector<Rational>& coeffs, const Rational& bound);
    void add_eq(const std::vector<Rational>& coeffs, const Rational& bound);

    struct Row {
        std::vector<Integer> coeffs;
        Integer bound;
        std::vector<std::uint64_t> history;  ///< bitset of contributing input rows
    };

    const std::vector<Row>& rows() const { return rows_; }

private:
    std::size_t variables_;
    std::vector<Row> rows_;
};

/// Thrown when an intermediate system grows past the caller's row budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("Fourier-Motzkin row budget exceeded") {}
};

/// A point of the polyhedron, or nullopt when it is empty. Variables are
/// fixed by back-substitution: the lower bound when there is one, else zero
/// if the upper bound allows it, else the upper bound. A nonzero budget caps
/// the rows of any intermediate system.
std::optional<std::vector<Rational>> find_point(const LinearSystem& system,
                                                std::size_t row_budget = 0);

struct Interval {
    bool empty = false;
    std::optional<Rational> lower;  ///< nullopt = unbounded below
    std::optional<Rational> upper;  ///< nullopt = unbounded above
};

/// Range of sum_j c_j x_j over the polyhedron.
Interval objective_range(const LinearSystem& system, const std::vector<Rational>& objective,
                         std::size_t row_budget = 0);

}  // namespace hiergame::fm
