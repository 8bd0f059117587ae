#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "morin/poly.hpp"

namespace morin {

/// One element of an alphabet: an integer linear form c + sum a_v v.
/// A letter is atomic however many variables it mentions, so the boxed
/// value [x1+x2] is a single letter, unlike the alphabet x1 + x2.
class Letter {
public:
    Letter() = default;
    Letter(long constant); // NOLINT(google-explicit-constructor)
    Letter(VarId v, long coeff = 1);
    Letter(long constant, std::map<VarId, long> coeffs);

    long constant() const noexcept { return constant_; }
    const std::map<VarId, long>& coeffs() const noexcept { return coeffs_; }
    bool is_constant() const noexcept { return coeffs_.empty(); }
    // A bare variable with coefficient one and no constant.
    bool is_plain_variable() const noexcept;

    Poly as_poly() const;

    Letter operator-() const;
    friend Letter operator+(const Letter& a, const Letter& b);
    // Throws DegreeOverflow when both factors mention variables.
    friend Letter operator*(const Letter& a, const Letter& b);

    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;

    // Linear-form text without brackets, e.g. "2*x1 - x2 + 3".
    std::string to_string() const;

private:
    long constant_ = 0;
    std::map<VarId, long> coeffs_;
};

/// A finite multiset of letters. Letter order carries no meaning; equality
/// compares the multisets.
class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t cardinality() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    Alphabet& operator+=(const Alphabet& other);
    friend Alphabet operator+(Alphabet a, const Alphabet& b) { return a += b; }

    bool operator==(const Alphabet& other) const;

private:
    std::vector<Letter> letters_;
};

/// The argument A - B of a symmetric function. No cancellation between the
/// two sides happens here.
struct DiffArg {
    Alphabet plus;
    Alphabet minus;

    bool operator==(const DiffArg&) const = default;
};

// n copies of the unit letter: the unboxed integer n.
Alphabet from_integer(int n);
// The one-letter alphabet [form].
Alphabet boxed(const Letter& form);
Alphabet scale(const Alphabet& a, const Letter& by);
Alphabet negate_letters(const Alphabet& a);

// Letters v1..vn for a variable stem, e.g. generic("b", 2) = b1 + b2.
Alphabet generic(const std::string& stem, int n);

// Renders "x - b1 - [2*x]"; the inverse of parse_diffarg.
std::string to_string(const Alphabet& a);
std::string to_string(const DiffArg& arg);

} // namespace morin
