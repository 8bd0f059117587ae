#pragma once

// Brute-force reference implementations used only by the tests. None of
// them goes through the Jacobi-Trudi path of the library.

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <vector>

#include "morin/alphabet.hpp"
#include "morin/partition.hpp"
#include "morin/poly.hpp"
#include "morin/schur.hpp"

namespace oracle {

using morin::Alphabet;
using morin::Partition;
using morin::Poly;
using morin::Rational;

// Leibniz expansion over all permutations.
inline Poly leibniz_det(const std::vector<std::vector<Poly>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return Poly(1L);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Poly total;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b])
                    ++inversions;
        Poly term(inversions % 2 == 0 ? 1L : -1L);
        for (std::size_t row = 0; row < n && !term.is_zero(); ++row)
            term *= m[row][perm[row]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Parts in English order: largest first, padded with zeros to n entries.
inline std::vector<int> english(const Partition& p, std::size_t n)
{
    std::vector<int> out(p.parts().rbegin(), p.parts().rend());
    out.resize(std::max(n, out.size()), 0);
    return out;
}

inline std::vector<Poly> variables(int n)
{
    std::vector<Poly> xs;
    for (int k = 1; k <= n; ++k)
        xs.push_back(Poly::var("x" + std::to_string(k)));
    return xs;
}

/// Alternant a_{lambda + delta}(x1..xN) = det(x_i^{lambda_j + N - j}).
inline Poly alternant(const Partition& p, int n)
{
    const auto xs = variables(n);
    const auto lam = english(p, static_cast<std::size_t>(n));
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = morin::pow(xs[i], static_cast<unsigned>(lam[j] + n - 1 - j));
    return leibniz_det(m);
}

inline Poly vandermonde(int n)
{
    const auto xs = variables(n);
    Poly v(1L);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            v *= xs[i] - xs[j];
    return v;
}

/// Sum over semistandard tableaux of shape p with entries 1..len(values),
/// weighted by prod values[entry - 1].
inline Rational tableau_sum(const Partition& p, const std::vector<Rational>& values)
{
    const auto rows = english(p, 0);
    const int nvals = static_cast<int>(values.size());
    std::vector<std::vector<int>> t;
    for (int len : rows)
        t.emplace_back(len, 0);
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = 0; c < rows[r]; ++c)
            cells.emplace_back(r, c);

    Rational total = 0;
    std::function<void(std::size_t, Rational)> fill = [&](std::size_t k, Rational w) {
        if (k == cells.size()) {
            total += w;
            return;
        }
        const auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, t[r][c - 1]);
        if (r > 0)
            lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= nvals; ++v) {
            t[r][c] = v;
            fill(k + 1, w * values[v - 1]);
        }
    };
    fill(0, Rational(1));
    return total;
}

/// Elementary symmetric e_j of integer values, by subset enumeration.
inline long elementary(const std::vector<long>& values, int j)
{
    const std::size_t n = values.size();
    long total = 0;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != j)
            continue;
        long prod = 1;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (1U << k))
                prod *= values[k];
        total += prod;
    }
    return total;
}

/// Complete symmetric h_k of polynomial letters, by enumerating multisets.
inline Poly complete_h(const std::vector<Poly>& letters, int k)
{
    if (k < 0)
        return {};
    if (k == 0)
        return Poly(1L);
    Poly total;
    std::function<void(std::size_t, int, Poly)> rec = [&](std::size_t from, int left, Poly acc) {
        if (left == 0) {
            total += acc;
            return;
        }
        for (std::size_t a = from; a < letters.size(); ++a)
            rec(a, left - 1, acc * letters[a]);
    };
    rec(0, k, Poly(1L));
    return total;
}

/// Elementary symmetric e_k of polynomial letters, by subset enumeration.
inline Poly elementary_e(const std::vector<Poly>& letters, int k)
{
    if (k < 0)
        return {};
    Poly total;
    const std::size_t n = letters.size();
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != k)
            continue;
        Poly prod(1L);
        for (std::size_t a = 0; a < n; ++a)
            if (mask & (1U << a))
                prod *= letters[a];
        total += prod;
    }
    return total;
}

inline std::vector<Poly> letter_polys(const Alphabet& a)
{
    std::vector<Poly> out;
    for (const auto& l : a.letters())
        out.push_back(l.as_poly());
    return out;
}

/// S_k(A - B) = sum_{a+b=k} h_a(A) (-1)^b e_b(B).
inline Poly complete_difference(const morin::DiffArg& arg, int k)
{
    const auto plus = letter_polys(arg.plus);
    const auto minus = letter_polys(arg.minus);
    Poly total;
    for (int b = 0; b <= k; ++b) {
        Poly term = complete_h(plus, k - b) * elementary_e(minus, b);
        if (b % 2 == 1)
            term = -term;
        total += term;
    }
    return total;
}

/// Skew Schur S_{lambda/mu}(A - B) = det(S_{lambda_i - mu_j - i + j}),
/// English indexing, with the complete functions from complete_difference
/// and the determinant by Leibniz.
inline Poly skew_schur(const Partition& outer, const Partition& inner, const morin::DiffArg& arg)
{
    const std::size_t n = outer.length();
    const auto lam = english(outer, n);
    const auto mu = english(inner, n);
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = complete_difference(arg, lam[i] - mu[j] - static_cast<int>(i) + static_cast<int>(j));
    return leibniz_det(m);
}

/// F(A, m, n) with every coefficient S_I(A) counted by semistandard tableaux.
inline morin::SchurExpansion F_by_tableaux(const std::vector<long>& a, int n)
{
    const int m = static_cast<int>(a.size());
    std::vector<Rational> values(a.begin(), a.end());
    morin::SchurExpansion out;
    for (const auto& inner : morin::partitions_in_rectangle(m, n)) {
        const auto parts = inner.padded(static_cast<std::size_t>(m));
        std::vector<int> target;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            target.push_back(n - *it);
        target.push_back(n + inner.weight());
        out.add(Partition(std::move(target)), tableau_sum(inner, values));
    }
    return out;
}

} // namespace oracle
