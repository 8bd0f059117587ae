#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "morin/alphabet.hpp"
#include "morin/partition.hpp"
#include "morin/poly.hpp"

namespace morin {

/// Complete functions S_0..S_d of a difference argument, read off the
/// generating series prod_b (1 - b z) / prod_a (1 - a z).
struct CompleteSeries {
    DiffArg arg;
    std::vector<Poly> values;

    // S_i, with S_i = 0 for i < 0 or beyond the computed range is an error.
    const Poly& operator[](int i) const;
    int max_degree() const noexcept { return static_cast<int>(values.size()) - 1; }
};

CompleteSeries complete_series(const DiffArg& arg, int max_degree);

using PolyMatrix = std::vector<std::vector<Poly>>;

// Laplace expansion memoized over column subsets; division free.
Poly determinant_cofactor(const PolyMatrix& m);
// Fraction-free Bareiss elimination with exact polynomial division.
Poly determinant_bareiss(PolyMatrix m);
// Cofactor expansion up to 5x5, Bareiss above.
Poly determinant(const PolyMatrix& m);

/// S_I(A - B) as the determinant |S_{i_p + p - q}(A - B)|.
Poly schur(const Partition& p, const DiffArg& arg);
Poly schur(const Partition& p, const CompleteSeries& series);

// The Jacobi-Trudi matrix of p over a precomputed series.
PolyMatrix jacobi_trudi_matrix(const Partition& p, const CompleteSeries& series);

/// S_{(n^m)/I}(arg), through the 180-degree rotation of the complement:
/// S_{(n - i_m, ..., n - i_1)}(arg). Throws ShapeError unless I fits in (n^m).
Poly schur_skew_rectangle(int m, int n, const Partition& inner, const DiffArg& arg);

/// prod over a in A, b in B of (a - b).
Poly resultant(const Alphabet& a, const Alphabet& b);

/// A finite linear combination of Schur functions. Zero coefficients are
/// never stored.
class SchurExpansion {
public:
    SchurExpansion() = default;
    SchurExpansion(std::initializer_list<std::pair<Partition, long>> terms);

    const std::map<Partition, Rational>& coeffs() const noexcept { return coeffs_; }
    bool empty() const noexcept { return coeffs_.empty(); }
    std::size_t size() const noexcept { return coeffs_.size(); }
    Rational coeff(const Partition& p) const;

    void add(const Partition& p, const Rational& c);
    SchurExpansion& operator+=(const SchurExpansion& other);
    friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
    SchurExpansion operator-() const;
    friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) { return a += -b; }

    bool operator==(const SchurExpansion&) const = default;

    // Weight shared by every term; -1 when terms of different weights occur
    // or the expansion is empty.
    int homogeneous_weight() const;

    // Terms in DisplayOrder.
    std::vector<std::pair<Partition, Rational>> sorted_terms() const;

    /// "S_{222} + 5 S_{123} - 2 S_{6}" in DisplayOrder; "0" when empty.
    std::string to_string() const;
    /// Same, with terms grouped by h-part (1-part first) for parameter r.
    /// Partitions without the row (r) come last.
    std::string to_string_by_h(int r) const;

private:
    std::map<Partition, Rational> coeffs_;
};

/// Evaluates several partitions at one argument, sharing the complete series.
class SchurEvaluator {
public:
    explicit SchurEvaluator(DiffArg arg);

    const DiffArg& arg() const noexcept { return arg_; }
    Poly schur(const Partition& p);
    Poly eval(const SchurExpansion& e);

private:
    void ensure(int degree);

    DiffArg arg_;
    CompleteSeries series_;
};

Poly eval_expansion(const SchurExpansion& e, const DiffArg& arg);

// --- identity grids ---------------------------------------------------------

/// Outcome of one batch of exact identity checks.
struct IdentityReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// S_I((A+C) - (B+C)) == S_I(A - B) on random alphabets with at most
/// `max_card` letters per side and every partition of weight <= max_weight.
IdentityReport check_cancellation(int max_card, int max_weight, std::uint64_t seed, int trials = 4);
/// Both forms of the conjugation identity, same grid.
IdentityReport check_duality(int max_card, int max_weight, std::uint64_t seed, int trials = 4);
/// S_I(A - B) vanishes outside the (|A|,|B|)-hook, exhaustively over
/// cardinalities <= max_card and partitions of weight <= max_weight.
IdentityReport check_vanishing(int max_card, int max_weight);
/// S_{(J, I + n^m)}(A_m - B_n) == S_I(A) R(A,B) S_J(-B) for m, n <= max_card.
IdentityReport check_factorization(int max_card, int max_part = 2);
/// R(A_m, B_n) == S_{(n^m)}(A - B) == sum_I S_I(A) S_{(n^m)/I}(-B).
IdentityReport check_rectangle(int max_card);

} // namespace morin
