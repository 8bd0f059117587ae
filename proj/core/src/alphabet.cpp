#include "morin/alphabet.hpp"

#include <algorithm>
#include <cstdlib>

#include "morin/errors.hpp"

namespace morin {

Letter::Letter(long constant) : constant_(constant) {}

Letter::Letter(VarId v, long coeff)
{
    if (coeff != 0)
        coeffs_.emplace(v, coeff);
}

Letter::Letter(long constant, std::map<VarId, long> coeffs) : constant_(constant), coeffs_(std::move(coeffs))
{
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

bool Letter::is_plain_variable() const noexcept
{
    return constant_ == 0 && coeffs_.size() == 1 && coeffs_.begin()->second == 1;
}

Poly Letter::as_poly() const
{
    Poly p(constant_);
    for (const auto& [v, c] : coeffs_)
        p += Poly::monomial(Monomial::of(v), Rational(c));
    return p;
}

Letter Letter::operator-() const
{
    Letter out = *this;
    out.constant_ = -constant_;
    for (auto& [v, c] : out.coeffs_)
        c = -c;
    return out;
}

Letter operator+(const Letter& a, const Letter& b)
{
    std::map<VarId, long> coeffs = a.coeffs_;
    for (const auto& [v, c] : b.coeffs_)
        coeffs[v] += c;
    return Letter(a.constant_ + b.constant_, std::move(coeffs));
}

Letter operator*(const Letter& a, const Letter& b)
{
    if (!a.is_constant() && !b.is_constant())
        throw DegreeOverflow("product of letters " + a.to_string() + " and " + b.to_string() + " is not linear");
    const Letter& form = a.is_constant() ? b : a;
    const long k = a.is_constant() ? a.constant_ : b.constant_;
    std::map<VarId, long> coeffs;
    for (const auto& [v, c] : form.coeffs_)
        coeffs.emplace(v, c * k);
    return Letter(form.constant_ * k, std::move(coeffs));
}

std::string Letter::to_string() const
{
    std::string s;
    auto append = [&s](long c, const std::string& var) {
        if (s.empty()) {
            if (c < 0)
                s += '-';
        } else {
            s += c < 0 ? " - " : " + ";
        }
        long mag = std::labs(c);
        if (var.empty())
            s += std::to_string(mag);
        else if (mag == 1)
            s += var;
        else
            s += std::to_string(mag) + '*' + var;
    };
    // variables in declaration order, constant last
    std::vector<std::pair<VarId, long>> sorted(coeffs_.begin(), coeffs_.end());
    for (const auto& [v, c] : sorted)
        append(c, v.name());
    if (constant_ != 0 || s.empty())
        append(constant_, "");
    return s;
}

Alphabet& Alphabet::operator+=(const Alphabet& other)
{
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
}

bool Alphabet::operator==(const Alphabet& other) const
{
    if (letters_.size() != other.letters_.size())
        return false;
    auto a = letters_;
    auto b = other.letters_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

Alphabet from_integer(int n)
{
    if (n < 0)
        throw std::invalid_argument("from_integer: negative letter count");
    return Alphabet(std::vector<Letter>(static_cast<std::size_t>(n), Letter(1)));
}

Alphabet boxed(const Letter& form)
{
    return Alphabet{form};
}

Alphabet scale(const Alphabet& a, const Letter& by)
{
    std::vector<Letter> out;
    out.reserve(a.cardinality());
    for (const auto& l : a.letters())
        out.push_back(l * by);
    return Alphabet(std::move(out));
}

Alphabet negate_letters(const Alphabet& a)
{
    std::vector<Letter> out;
    out.reserve(a.cardinality());
    for (const auto& l : a.letters())
        out.push_back(-l);
    return Alphabet(std::move(out));
}

Alphabet generic(const std::string& stem, int n)
{
    std::vector<Letter> out;
    for (int k = 1; k <= n; ++k)
        out.emplace_back(VarId(stem + std::to_string(k)));
    return Alphabet(std::move(out));
}

namespace {

// Letters of one side, unit letters folded into a single integer count.
std::vector<std::string> side_items(const Alphabet& a)
{
    std::vector<std::string> items;
    int units = 0;
    for (const auto& l : a.letters())
        if (l == Letter(1))
            ++units;
    bool units_emitted = false;
    for (const auto& l : a.letters()) {
        if (l == Letter(1)) {
            if (!units_emitted)
                items.push_back(std::to_string(units));
            units_emitted = true;
        } else if (l.is_plain_variable()) {
            items.push_back(l.to_string());
        } else {
            items.push_back('[' + l.to_string() + ']');
        }
    }
    return items;
}

} // namespace

std::string to_string(const Alphabet& a)
{
    auto items = side_items(a);
    if (items.empty())
        return "0";
    std::string s;
    for (const auto& item : items) {
        if (!s.empty())
            s += " + ";
        s += item;
    }
    return s;
}

std::string to_string(const DiffArg& arg)
{
    std::string s = arg.plus.empty() ? std::string() : to_string(arg.plus);
    for (const auto& item : side_items(arg.minus)) {
        s += s.empty() ? "-" : " - ";
        s += item;
    }
    return s.empty() ? "0" : s;
}

} // namespace morin
