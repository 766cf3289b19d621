#pragma once

// Exact simplex over the rationals, run on the dual of a system with few
// variables and many rows. Bland's rule; no floating point.

#include <optional>
#include <vector>

#include "hiergame/fourier_motzkin.hpp"

namespace hiergame::simplex {

/// A point of {x : A x <= b}, or nullopt when it is empty.
std::optional<std::vector<Rational>> find_point(const fm::LinearSystem& system);

/// Range of sum_j c_j x_j over the polyhedron.
fm::Interval objective_range(const fm::LinearSystem& system, const std::vector<Rational>& objective);

}  // namespace hiergame::simplex
