#include "morin/poly.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "morin/errors.hpp"

namespace morin {

namespace {

class VarTable {
public:
    VarTable()
    {
        intern("x");
        for (int k = 1; k <= 9; ++k)
            intern("x" + std::to_string(k));
        intern("b");
        for (int k = 1; k <= 9; ++k)
            intern("b" + std::to_string(k));
        for (int k = 1; k <= 9; ++k)
            intern("y" + std::to_string(k));
    }

    std::uint32_t intern(std::string_view name)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = index_.find(std::string(name)); it != index_.end())
                return it->second;
        }
        std::unique_lock lock(mutex_);
        auto [it, inserted] = index_.emplace(std::string(name), static_cast<std::uint32_t>(names_.size()));
        if (inserted)
            names_.emplace_back(name);
        return it->second;
    }

    const std::string& name(std::uint32_t index) const
    {
        std::shared_lock lock(mutex_);
        return names_.at(index); // deque: references stay valid after growth
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::deque<std::string> names_;
};

VarTable& var_table()
{
    static VarTable table;
    return table;
}

void canonicalize(std::vector<Poly::Term>& terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Poly::Term& a, const Poly::Term& b) { return GrlexGreater{}(a.mono, b.mono); });
    std::size_t out = 0;
    for (std::size_t k = 0; k < terms.size();) {
        std::size_t j = k + 1;
        Rational c = terms[k].coeff;
        while (j < terms.size() && terms[j].mono == terms[k].mono)
            c += terms[j++].coeff;
        if (c != 0) {
            if (out != k)
                terms[out].mono = std::move(terms[k].mono);
            terms[out].coeff = std::move(c);
            ++out;
        }
        k = j;
    }
    terms.resize(out);
}

// Merge two canonical term lists, b scaled by `sign`.
std::vector<Poly::Term> merge(std::span<const Poly::Term> a, std::span<const Poly::Term> b, int sign)
{
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    GrlexGreater gt;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && gt(a[i].mono, b[j].mono))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || gt(b[j].mono, a[i].mono)) {
            out.push_back({b[j].mono, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
            ++j;
        } else {
            Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
            if (c != 0)
                out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

VarId::VarId(std::string_view name) : index_(0)
{
    if (!is_variable_name(name))
        throw std::invalid_argument("invalid variable name \"" + std::string(name) + "\"");
    index_ = var_table().intern(name);
}

const std::string& VarId::name() const
{
    return var_table().name(index_);
}

bool is_variable_name(std::string_view name)
{
    if (name.empty() || !std::islower(static_cast<unsigned char>(name.front())))
        return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

// --- Monomial ---------------------------------------------------------------

Monomial Monomial::of(VarId v, std::uint32_t exponent)
{
    Monomial m;
    if (exponent > 0) {
        m.factors_.emplace_back(v.index(), exponent);
        m.degree_ = exponent;
    }
    return m;
}

std::uint32_t Monomial::exponent(VarId v) const noexcept
{
    for (const auto& [var, e] : factors_)
        if (var == v.index())
            return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial m;
    m.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first))
            m.factors_.push_back(*a++);
        else if (a == factors_.end() || b->first < a->first)
            m.factors_.push_back(*b++);
        else {
            m.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    m.degree_ = degree_ + other.degree_;
    return m;
}

bool Monomial::divides(const Monomial& other) const noexcept
{
    // *this | other
    auto b = other.factors_.begin();
    for (const auto& [var, e] : factors_) {
        while (b != other.factors_.end() && b->first < var)
            ++b;
        if (b == other.factors_.end() || b->first != var || b->second < e)
            return false;
    }
    return true;
}

Monomial Monomial::operator/(const Monomial& other) const
{
    if (!other.divides(*this))
        throw NonExactDivision("monomial " + other.to_string() + " does not divide " + to_string());
    Monomial m;
    auto b = other.factors_.begin();
    for (const auto& [var, e] : factors_) {
        std::uint32_t sub = 0;
        if (b != other.factors_.end() && b->first == var)
            sub = (b++)->second;
        if (e > sub)
            m.factors_.emplace_back(var, e - sub);
    }
    m.degree_ = degree_ - other.degree_;
    return m;
}

std::string Monomial::to_string() const
{
    if (factors_.empty())
        return "1";
    std::string s;
    for (const auto& [var, e] : factors_) {
        if (!s.empty())
            s += '*';
        s += var_table().name(var);
        if (e > 1)
            s += '^' + std::to_string(e);
    }
    return s;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const noexcept
{
    if (a.degree() != b.degree())
        return a.degree() > b.degree();
    auto fa = a.factors();
    auto fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first != fb[i].first)
            return fa[i].first < fb[i].first; // a carries the more significant variable
        if (fa[i].second != fb[i].second)
            return fa[i].second > fb[i].second;
    }
    return i < fa.size() && i == fb.size();
}

// --- Poly -------------------------------------------------------------------

Poly::Poly(long value)
{
    if (value != 0)
        terms_.push_back({Monomial(), Rational(value)});
}

Poly::Poly(const Rational& value)
{
    if (value != 0)
        terms_.push_back({Monomial(), value});
}

Poly::Poly(VarId v)
{
    terms_.push_back({Monomial::of(v), Rational(1)});
}

Poly Poly::monomial(Monomial m, Rational coeff)
{
    Poly p;
    if (coeff != 0)
        p.terms_.push_back({std::move(m), std::move(coeff)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms)
{
    Poly p;
    canonicalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

bool Poly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational Poly::constant() const
{
    if (!terms_.empty() && terms_.back().mono.is_one())
        return terms_.back().coeff;
    return 0;
}

int Poly::degree() const noexcept
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

Rational Poly::coeff(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return GrlexGreater{}(t.mono, key); });
    if (it != terms_.end() && it->mono == m)
        return it->coeff;
    return 0;
}

std::vector<VarId> Poly::variables() const
{
    std::vector<std::uint32_t> idx;
    for (const auto& t : terms_)
        for (const auto& f : t.mono.factors())
            idx.push_back(f.first);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    std::vector<VarId> out;
    for (auto i : idx)
        out.emplace_back(var_table().name(i));
    return out;
}

Poly Poly::operator-() const
{
    Poly p = *this;
    for (auto& t : p.terms_)
        t.coeff = -t.coeff;
    return p;
}

Poly& Poly::operator+=(const Poly& q)
{
    if (q.is_zero())
        return *this;
    terms_ = merge(terms_, q.terms_, +1);
    return *this;
}

Poly& Poly::operator-=(const Poly& q)
{
    if (q.is_zero())
        return *this;
    terms_ = merge(terms_, q.terms_, -1);
    return *this;
}

Poly& Poly::operator*=(const Poly& q)
{
    *this = *this * q;
    return *this;
}

Poly operator*(const Poly& p, const Poly& q)
{
    if (p.is_zero() || q.is_zero())
        return {};
    if (q.is_constant()) {
        Poly out = p;
        const Rational& c = q.terms_.front().coeff;
        for (auto& t : out.terms_)
            t.coeff *= c;
        return out;
    }
    if (p.is_constant())
        return q * p;
    std::vector<Poly::Term> terms;
    terms.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& a : p.terms_)
        for (const auto& b : q.terms_)
            terms.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return Poly::from_terms(std::move(terms));
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                s += '-';
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        if (t.mono.is_one()) {
            s += morin::to_string(c);
        } else {
            if (c != 1)
                s += morin::to_string(c) + '*';
            s += t.mono.to_string();
        }
        first = false;
    }
    return s;
}

Poly add(const Poly& p, const Poly& q)
{
    return p + q;
}

Poly mul(const Poly& p, const Poly& q)
{
    return p * q;
}

Poly neg(const Poly& p)
{
    return -p;
}

Poly pow(const Poly& p, unsigned e)
{
    Poly result(1L);
    Poly base = p;
    while (e > 0) {
        if (e & 1U)
            result *= base;
        e >>= 1U;
        if (e > 0)
            base = base * base;
    }
    return result;
}

Poly substitute(const Poly& p, const std::map<VarId, Poly>& bindings)
{
    // powers of each bound variable are cached per call
    std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> powers;
    auto power_of = [&](std::uint32_t var, std::uint32_t e) -> const Poly& {
        auto key = std::make_pair(var, e);
        auto it = powers.find(key);
        if (it != powers.end())
            return it->second;
        VarId v(var_table().name(var));
        auto b = bindings.find(v);
        Poly base = b != bindings.end() ? b->second : Poly(v);
        return powers.emplace(key, pow(base, e)).first->second;
    };
    Poly out;
    for (const auto& t : p.terms()) {
        Poly term(t.coeff);
        for (const auto& [var, e] : t.mono.factors())
            term *= power_of(var, e);
        out += term;
    }
    return out;
}

Rational eval_at_integers(const Poly& p, const std::map<VarId, long>& point)
{
    Rational total = 0;
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (const auto& [var, e] : t.mono.factors()) {
            auto it = point.find(VarId(var_table().name(var)));
            if (it == point.end())
                throw std::invalid_argument("evaluation point misses variable " + var_table().name(var));
            Integer base = it->second;
            Integer powered;
            mpz_pow_ui(powered.get_mpz_t(), base.get_mpz_t(), e);
            v *= Rational(powered);
        }
        total += v;
    }
    return total;
}

Poly graded_component(const Poly& p, unsigned d)
{
    std::vector<Poly::Term> terms;
    for (const auto& t : p.terms())
        if (t.mono.degree() == d)
            terms.push_back(t);
    return Poly::from_terms(std::move(terms));
}

Poly divide_exact(const Poly& p, const Poly& q)
{
    if (q.is_zero())
        throw NonExactDivision("division by the zero polynomial");
    const auto& lead = q.leading();
    std::vector<Poly::Term> quotient;
    Poly rem = p;
    while (!rem.is_zero()) {
        const auto& top = rem.leading();
        if (!lead.mono.divides(top.mono))
            throw NonExactDivision("polynomial division is not exact");
        Poly::Term t{top.mono / lead.mono, top.coeff / lead.coeff};
        rem -= q * Poly::monomial(t.mono, t.coeff);
        quotient.push_back(std::move(t));
    }
    return Poly::from_terms(std::move(quotient));
}

std::ostream& operator<<(std::ostream& os, const Poly& p)
{
    return os << p.to_string();
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

} // namespace morin
