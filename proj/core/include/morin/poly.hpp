#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace morin {

using Integer = mpz_class;
using Rational = mpq_class;

/// A formal variable. Names are interned in a process-wide table; the
/// interning order fixes the variable order used by monomial comparisons.
/// The usual names (x, x1.., b, b1.., y1..) are pre-declared so output is
/// independent of which computation touched a variable first.
class VarId {
public:
    explicit VarId(std::string_view name);

    const std::string& name() const;
    std::uint32_t index() const noexcept { return index_; }

    bool operator==(const VarId&) const = default;
    auto operator<=>(const VarId&) const = default;

private:
    std::uint32_t index_;
};

// One lowercase letter followed by digits: x, x1, b12.
bool is_variable_name(std::string_view name);

/// Product of variable powers; zero exponents are never stored.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>; // (var index, exponent)

    Monomial() = default;
    static Monomial of(VarId v, std::uint32_t exponent = 1);

    std::span<const Factor> factors() const noexcept { return factors_; }
    std::uint32_t degree() const noexcept { return degree_; }
    std::uint32_t exponent(VarId v) const noexcept;
    bool is_one() const noexcept { return factors_.empty(); }

    Monomial operator*(const Monomial& other) const;
    // Exact quotient; false when `other` does not divide *this.
    bool divides(const Monomial& other) const noexcept;
    Monomial operator/(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;

    std::string to_string() const;

private:
    std::vector<Factor> factors_;
    std::uint32_t degree_ = 0;
};

/// Graded lexicographic order: higher total degree first, then the earlier
/// declared variable is more significant. `greater(a,b)` puts a before b in
/// the canonical (descending) term order.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse multivariate polynomial with exact rational coefficients, kept in
/// canonical form: terms sorted descending in graded lex order, no zero
/// coefficients.
class Poly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
        bool operator==(const Term&) const = default;
    };

    Poly() = default;
    Poly(long value); // NOLINT(google-explicit-constructor)
    Poly(const Rational& value); // NOLINT(google-explicit-constructor)
    explicit Poly(VarId v);
    static Poly var(std::string_view name) { return Poly(VarId(name)); }
    static Poly monomial(Monomial m, Rational coeff);
    static Poly from_terms(std::vector<Term> terms);

    std::span<const Term> terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    // Constant term (zero when absent).
    Rational constant() const;
    // Degree of the highest term; -1 for the zero polynomial.
    int degree() const noexcept;
    Rational coeff(const Monomial& m) const;
    const Term& leading() const { return terms_.front(); }
    std::vector<VarId> variables() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& q);
    Poly& operator-=(const Poly& q);
    Poly& operator*=(const Poly& q);
    friend Poly operator+(Poly p, const Poly& q) { return p += q; }
    friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
    friend Poly operator*(const Poly& p, const Poly& q);

    bool operator==(const Poly&) const = default;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly neg(const Poly& p);
Poly pow(const Poly& p, unsigned e);

/// Simultaneous substitution; variables without a binding are left alone.
Poly substitute(const Poly& p, const std::map<VarId, Poly>& bindings);

/// Exact value at an integer point. Throws std::invalid_argument when the
/// point misses a variable of p.
Rational eval_at_integers(const Poly& p, const std::map<VarId, long>& point);

// Sum of the terms of total degree exactly d.
Poly graded_component(const Poly& p, unsigned d);

/// Exact quotient p / q. Throws NonExactDivision when q does not divide p.
Poly divide_exact(const Poly& p, const Poly& q);

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Renders a rational as "n" or "n/d".
std::string to_string(const Rational& q);

} // namespace morin
