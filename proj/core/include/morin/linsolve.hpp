#pragma once

#include <cstddef>
#include <vector>

#include "morin/poly.hpp"

namespace morin {

/// Result of reducing an exact linear system A x = b.
struct LinearSolution {
    bool consistent = false;
    std::size_t rank = 0;
    // A particular solution with free variables set to zero; empty when
    // the system is inconsistent.
    std::vector<Rational> x;
    std::vector<std::size_t> free_columns;

    bool unique() const noexcept { return consistent && free_columns.empty(); }
};

/// Gauss-Jordan elimination over the rationals. `rows` holds the
/// coefficient rows, each of width `ncols`.
LinearSolution solve_linear(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, std::size_t ncols);

} // namespace morin
