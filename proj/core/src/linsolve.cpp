#include "morin/linsolve.hpp"

#include <stdexcept>

namespace morin {

LinearSolution solve_linear(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, std::size_t ncols)
{
    if (rows.size() != rhs.size())
        throw std::invalid_argument("solve_linear: row count and right-hand side differ");
    for (const auto& row : rows)
        if (row.size() != ncols)
            throw std::invalid_argument("solve_linear: ragged coefficient matrix");

    const std::size_t nrows = rows.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && rows[piv][c] == 0)
            ++piv;
        if (piv == nrows)
            continue;
        std::swap(rows[piv], rows[r]);
        std::swap(rhs[piv], rhs[r]);
        const Rational inv = 1 / rows[r][c];
        for (std::size_t k = c; k < ncols; ++k)
            rows[r][k] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            const Rational f = rows[i][c];
            for (std::size_t k = c; k < ncols; ++k)
                rows[i][k] -= f * rows[r][k];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }

    LinearSolution sol;
    sol.rank = r;
    sol.consistent = true;
    for (std::size_t i = r; i < nrows; ++i)
        if (rhs[i] != 0)
            sol.consistent = false;
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivot_col)
        is_pivot[c] = true;
    for (std::size_t c = 0; c < ncols; ++c)
        if (!is_pivot[c])
            sol.free_columns.push_back(c);
    if (!sol.consistent)
        return sol;
    sol.x.assign(ncols, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        sol.x[pivot_col[i]] = rhs[i];
    return sol;
}

} // namespace morin
