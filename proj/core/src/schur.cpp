#include "morin/schur.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <random>
#include <stdexcept>

#include "morin/errors.hpp"

namespace morin {

namespace {

const Poly& zero_poly()
{
    static const Poly z;
    return z;
}

} // namespace

const Poly& CompleteSeries::operator[](int i) const
{
    if (i < 0)
        return zero_poly();
    if (i > max_degree())
        throw std::out_of_range("complete function S_" + std::to_string(i) + " beyond computed degree " +
                                std::to_string(max_degree()));
    return values[static_cast<std::size_t>(i)];
}

CompleteSeries complete_series(const DiffArg& arg, int max_degree)
{
    if (max_degree < 0)
        throw std::invalid_argument("complete_series: negative degree");
    const auto d = static_cast<std::size_t>(max_degree);
    std::vector<Poly> s(d + 1);
    s[0] = Poly(1L);
    // multiply by 1/(1 - a z) for each a, then by (1 - b z) for each b
    for (const auto& a : arg.plus.letters()) {
        const Poly la = a.as_poly();
        for (std::size_t k = 1; k <= d; ++k)
            s[k] += la * s[k - 1];
    }
    for (const auto& b : arg.minus.letters()) {
        const Poly lb = b.as_poly();
        for (std::size_t k = d; k >= 1; --k)
            s[k] -= lb * s[k - 1];
    }
    return {arg, std::move(s)};
}

Poly determinant_cofactor(const PolyMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return Poly(1L);
    if (n > 20)
        throw std::invalid_argument("determinant_cofactor: matrix too large");
    // minor[mask]: determinant of the first popcount(mask) rows restricted to the columns in mask
    std::vector<Poly> minor(std::size_t{1} << n);
    minor[0] = Poly(1L);
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        const auto row = static_cast<std::size_t>(std::popcount(mask)) - 1;
        Poly acc;
        int pos = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1U << c)))
                continue;
            const Poly& sub = minor[mask & ~(1U << c)];
            if (!m[row][c].is_zero() && !sub.is_zero()) {
                Poly t = m[row][c] * sub;
                if ((static_cast<int>(row) + pos) % 2 == 0)
                    acc += t;
                else
                    acc -= t;
            }
            ++pos;
        }
        minor[mask] = std::move(acc);
    }
    return minor.back();
}

Poly determinant_bareiss(PolyMatrix m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return Poly(1L);
    Poly prev(1L);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k].is_zero())
                ++swap;
            if (swap == n)
                return {};
            std::swap(m[k], m[swap]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(num, prev);
            }
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

Poly determinant(const PolyMatrix& m)
{
    return m.size() <= 5 ? determinant_cofactor(m) : determinant_bareiss(m);
}

PolyMatrix jacobi_trudi_matrix(const Partition& p, const CompleteSeries& series)
{
    const std::size_t s = p.length();
    PolyMatrix m(s, std::vector<Poly>(s));
    for (std::size_t row = 0; row < s; ++row)
        for (std::size_t col = 0; col < s; ++col)
            m[row][col] = series[p.parts()[row] + static_cast<int>(row) - static_cast<int>(col)];
    return m;
}

Poly schur(const Partition& p, const CompleteSeries& series)
{
    return determinant(jacobi_trudi_matrix(p, series));
}

Poly schur(const Partition& p, const DiffArg& arg)
{
    if (p.empty())
        return Poly(1L);
    const int needed = p.largest() + static_cast<int>(p.length()) - 1;
    return schur(p, complete_series(arg, needed));
}

Poly schur_skew_rectangle(int m, int n, const Partition& inner, const DiffArg& arg)
{
    if (m < 0 || n < 0 || !contains(rectangle(m, n), inner) || (m == 0 && !inner.empty()))
        throw ShapeError("partition " + inner.to_string() + " is not contained in the rectangle (" +
                         std::to_string(n) + "^" + std::to_string(m) + ")");
    const auto parts = inner.padded(static_cast<std::size_t>(m));
    std::vector<int> complement;
    complement.reserve(parts.size());
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        complement.push_back(n - *it);
    return schur(Partition(std::move(complement)), arg);
}

Poly resultant(const Alphabet& a, const Alphabet& b)
{
    Poly r(1L);
    for (const auto& la : a.letters())
        for (const auto& lb : b.letters())
            r *= la.as_poly() - lb.as_poly();
    return r;
}

// --- SchurExpansion ---------------------------------------------------------

SchurExpansion::SchurExpansion(std::initializer_list<std::pair<Partition, long>> terms)
{
    for (const auto& [p, c] : terms)
        add(p, Rational(c));
}

Rational SchurExpansion::coeff(const Partition& p) const
{
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void SchurExpansion::add(const Partition& p, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& other)
{
    for (const auto& [p, c] : other.coeffs_)
        add(p, c);
    return *this;
}

SchurExpansion SchurExpansion::operator-() const
{
    SchurExpansion out = *this;
    for (auto& [p, c] : out.coeffs_)
        c = -c;
    return out;
}

int SchurExpansion::homogeneous_weight() const
{
    if (coeffs_.empty())
        return -1;
    const int w = coeffs_.begin()->first.weight();
    for (const auto& [p, c] : coeffs_)
        if (p.weight() != w)
            return -1;
    return w;
}

std::vector<std::pair<Partition, Rational>> SchurExpansion::sorted_terms() const
{
    std::vector<std::pair<Partition, Rational>> terms(coeffs_.begin(), coeffs_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return DisplayOrder{}(a.first, b.first); });
    return terms;
}

namespace {

std::string render_terms(const std::vector<std::pair<Partition, Rational>>& terms)
{
    if (terms.empty())
        return "0";
    std::string s;
    for (const auto& [p, c] : terms) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (mag != 1)
            s += to_string(mag) + ' ';
        s += "S_{" + p.to_string() + '}';
    }
    return s;
}

} // namespace

std::string SchurExpansion::to_string() const
{
    return render_terms(sorted_terms());
}

std::string SchurExpansion::to_string_by_h(int r) const
{
    auto terms = sorted_terms();
    std::stable_sort(terms.begin(), terms.end(), [r](const auto& a, const auto& b) {
        if (a.first.weight() != b.first.weight())
            return a.first.weight() < b.first.weight();
        return classify_h(a.first, r).value_or(INT_MAX) < classify_h(b.first, r).value_or(INT_MAX);
    });
    return render_terms(terms);
}

// --- evaluation -------------------------------------------------------------

SchurEvaluator::SchurEvaluator(DiffArg arg) : arg_(std::move(arg)), series_(complete_series(arg_, 0)) {}

void SchurEvaluator::ensure(int degree)
{
    if (degree > series_.max_degree())
        series_ = complete_series(arg_, degree);
}

Poly SchurEvaluator::schur(const Partition& p)
{
    if (p.empty())
        return Poly(1L);
    ensure(p.largest() + static_cast<int>(p.length()) - 1);
    return morin::schur(p, series_);
}

Poly SchurEvaluator::eval(const SchurExpansion& e)
{
    int needed = 0;
    for (const auto& [p, c] : e.coeffs())
        needed = std::max(needed, p.largest() + static_cast<int>(p.length()) - 1);
    ensure(needed);
    Poly total;
    for (const auto& [p, c] : e.coeffs())
        total += schur(p) * Poly(c);
    return total;
}

Poly eval_expansion(const SchurExpansion& e, const DiffArg& arg)
{
    SchurEvaluator ev(arg);
    return ev.eval(e);
}

// --- identity grids ---------------------------------------------------------

namespace {

class LetterSource {
public:
    LetterSource(std::uint64_t seed, int nvars) : rng_(seed), nvars_(nvars) {}

    // Random nonzero homogeneous linear form over x1..x_nvars.
    Letter letter()
    {
        std::uniform_int_distribution<long> coeff(-3, 3);
        for (;;) {
            std::map<VarId, long> c;
            for (int v = 1; v <= nvars_; ++v)
                c.emplace(VarId("x" + std::to_string(v)), coeff(rng_));
            Letter l(0, std::move(c));
            if (!l.is_constant())
                return l;
        }
    }

    Alphabet alphabet(int card)
    {
        std::vector<Letter> out;
        for (int k = 0; k < card; ++k)
            out.push_back(letter());
        return Alphabet(std::move(out));
    }

    int card(int max_card) { return std::uniform_int_distribution<int>(0, max_card)(rng_); }

private:
    std::mt19937_64 rng_;
    int nvars_;
};

std::vector<Partition> partitions_up_to(int max_weight)
{
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w)
        for (auto& p : partitions_of(w))
            out.push_back(std::move(p));
    return out;
}

std::string describe(const Partition& p, const DiffArg& arg)
{
    return "S_{" + p.to_string() + "}(" + to_string(arg) + ")";
}

} // namespace

IdentityReport check_cancellation(int max_card, int max_weight, std::uint64_t seed, int trials)
{
    IdentityReport report{"cancellation", 0, {}};
    LetterSource src(seed, 3);
    const auto parts = partitions_up_to(max_weight);
    for (int t = 0; t < trials; ++t) {
        Alphabet a = src.alphabet(src.card(max_card));
        Alphabet b = src.alphabet(src.card(max_card));
        Alphabet c = src.alphabet(std::max(1, src.card(max_card)));
        SchurEvaluator plain({a, b});
        SchurEvaluator padded({a + c, b + c});
        for (const auto& p : parts) {
            ++report.checked;
            if (plain.schur(p) != padded.schur(p))
                report.failures.push_back(describe(p, padded.arg()) + " != " + describe(p, plain.arg()));
        }
    }
    return report;
}

IdentityReport check_duality(int max_card, int max_weight, std::uint64_t seed, int trials)
{
    IdentityReport report{"duality", 0, {}};
    LetterSource src(seed, 3);
    const auto parts = partitions_up_to(max_weight);
    for (int t = 0; t < trials; ++t) {
        Alphabet a = src.alphabet(src.card(max_card));
        Alphabet b = src.alphabet(src.card(max_card));
        SchurEvaluator direct({a, b});
        SchurEvaluator swapped({b, a});
        SchurEvaluator starred({negate_letters(b), negate_letters(a)});
        for (const auto& p : parts) {
            ++report.checked;
            const Partition j = conjugate(p);
            Poly lhs = direct.schur(p);
            Poly sign_form = swapped.schur(j);
            if (p.weight() % 2 == 1)
                sign_form = -sign_form;
            if (lhs != sign_form)
                report.failures.push_back(describe(p, direct.arg()) + " != (-1)^|I| " + describe(j, swapped.arg()));
            if (lhs != starred.schur(j))
                report.failures.push_back(describe(p, direct.arg()) + " != " + describe(j, starred.arg()));
        }
    }
    return report;
}

IdentityReport check_vanishing(int max_card, int max_weight)
{
    IdentityReport report{"vanishing", 0, {}};
    LetterSource src(0x5eed, 3);
    const auto parts = partitions_up_to(max_weight);
    for (int m = 0; m <= max_card; ++m) {
        for (int n = 0; n <= max_card; ++n) {
            SchurEvaluator ev({src.alphabet(m), src.alphabet(n)});
            for (const auto& p : parts) {
                if (in_hook(p, m, n))
                    continue;
                ++report.checked;
                Poly v = ev.schur(p);
                if (!v.is_zero())
                    report.failures.push_back(describe(p, ev.arg()) + " = " + v.to_string() + " outside the (" +
                                              std::to_string(m) + "," + std::to_string(n) + ")-hook");
            }
        }
    }
    return report;
}

IdentityReport check_factorization(int max_card, int max_part)
{
    IdentityReport report{"factorization", 0, {}};
    LetterSource src(0xfac7, 2);
    for (int m = 1; m <= max_card; ++m) {
        for (int n = 1; n <= max_card; ++n) {
            const Alphabet a = src.alphabet(m);
            const Alphabet b = src.alphabet(n);
            const Poly res = resultant(a, b);
            SchurEvaluator on_a({a, {}});
            SchurEvaluator on_minus_b({{}, b});
            SchurEvaluator on_diff({a, b});
            for (const auto& i : partitions_in_rectangle(m, max_part)) {
                for (const auto& j : partitions_in_rectangle(max_part, n)) {
                    std::vector<int> glued(j.parts().begin(), j.parts().end());
                    for (int part : i.padded(static_cast<std::size_t>(m)))
                        glued.push_back(part + n);
                    const Partition g(glued);
                    ++report.checked;
                    if (on_diff.schur(g) != on_a.schur(i) * res * on_minus_b.schur(j))
                        report.failures.push_back(describe(g, on_diff.arg()) + " != S_{" + i.to_string() + "}(A) R(A,B) S_{" +
                                                  j.to_string() + "}(-B)");
                }
            }
        }
    }
    return report;
}

IdentityReport check_rectangle(int max_card)
{
    IdentityReport report{"rectangle", 0, {}};
    LetterSource src(0x4ec7, 3);
    for (int m = 1; m <= max_card; ++m) {
        for (int n = 1; n <= max_card; ++n) {
            const Alphabet a = src.alphabet(m);
            const Alphabet b = src.alphabet(n);
            const DiffArg diff{a, b};
            const Poly res = resultant(a, b);
            ++report.checked;
            if (schur(rectangle(m, n), diff) != res)
                report.failures.push_back("R(A,B) != " + describe(rectangle(m, n), diff));
            SchurEvaluator on_a({a, {}});
            Poly sum;
            for (const auto& i : partitions_in_rectangle(m, n))
                sum += on_a.schur(i) * schur_skew_rectangle(m, n, i, {{}, b});
            ++report.checked;
            if (sum != res)
                report.failures.push_back("sum_I S_I(A) S_{(n^m)/I}(-B) != R(A,B) for " + to_string(diff));
        }
    }
    return report;
}

} // namespace morin
