#include "morin/thom.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "morin/errors.hpp"
#include "morin/linsolve.hpp"

namespace morin {

namespace {

const VarId& var_x()
{
    static const VarId x("x");
    return x;
}

void require_positive(int value, const char* what)
{
    if (value < 1)
        throw std::invalid_argument(std::string(what) + " must be positive");
}

Integer factorial(int n)
{
    Integer f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

} // namespace

SchurExpansion F_general(const Alphabet& a, int m, int n)
{
    if (m < 0 || n < 1)
        throw std::invalid_argument("F_general: need m >= 0 and n >= 1");
    if (a.cardinality() != static_cast<std::size_t>(m))
        throw CardinalityMismatch("F_general: alphabet has " + std::to_string(a.cardinality()) + " letters, expected " +
                                  std::to_string(m));
    for (const auto& l : a.letters())
        if (!l.is_constant())
            throw std::invalid_argument("F_general: letter " + l.to_string() + " is not a number");

    SchurExpansion out;
    SchurEvaluator on_a(DiffArg{a, {}});
    for (const auto& inner : partitions_in_rectangle(m, n)) {
        const Poly c = on_a.schur(inner);
        if (c.is_zero())
            continue;
        const auto parts = inner.padded(static_cast<std::size_t>(m));
        std::vector<int> target;
        target.reserve(parts.size() + 1);
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            target.push_back(n - *it);
        target.push_back(n + inner.weight());
        out.add(Partition(std::move(target)), c.constant());
    }
    return out;
}

SchurExpansion F_ir(int i, int r)
{
    require_positive(i, "i");
    require_positive(r, "r");
    if (i == 1)
        return SchurExpansion{{Partition{r}, 1}};
    std::vector<Letter> letters;
    for (int k = 2; k <= i; ++k)
        letters.emplace_back(k);
    return F_general(Alphabet(std::move(letters)), i - 1, r);
}

Alphabet boxed_multiples(int i, VarId v)
{
    std::vector<Letter> letters;
    for (int k = 2; k <= i; ++k)
        letters.emplace_back(v, k);
    return Alphabet(std::move(letters));
}

CheckReport check_FBr(int i, int r)
{
    const Alphabet x{Letter(var_x())};
    const Alphabet b = generic("b", r);
    CheckReport rep;
    rep.name = "FBr(" + std::to_string(i) + "," + std::to_string(r) + ")";
    rep.lhs = eval_expansion(F_ir(i, r), DiffArg{x, b});
    rep.rhs = resultant(x + boxed_multiples(i, var_x()), b);
    rep.passed = rep.lhs == rep.rhs;
    return rep;
}

CheckReport check_CF(int i, int r, int p)
{
    require_positive(i, "i");
    require_positive(r, "r");
    if (p < 1 || p > i + 1)
        throw std::invalid_argument("check_CF: need 1 <= p <= i+1");
    const Alphabet x{Letter(var_x())};
    const Alphabet minus = generic("b", r - 1) + boxed(Letter(var_x(), p));
    CheckReport rep;
    rep.name = "CF(" + std::to_string(i) + "," + std::to_string(r) + "," + std::to_string(p) + ")";
    rep.lhs = eval_expansion(F_ir(i, r), DiffArg{x, minus});
    rep.rhs = p <= i ? Poly() : resultant(x + boxed_multiples(i, var_x()), minus);
    rep.passed = rep.lhs == rep.rhs;
    return rep;
}

Poly euler_Ai(int i, int k)
{
    require_positive(i, "i");
    const Poly x(var_x());
    Poly e = Poly(Rational(factorial(i))) * pow(x, static_cast<unsigned>(i));
    for (int j = 1; j <= k; ++j) {
        const Poly y = Poly::var("y" + std::to_string(j));
        for (int l = 1; l <= i; ++l)
            e *= y - Poly(static_cast<long>(l)) * x;
    }
    return e;
}

CheckReport check_fid(int i, int k)
{
    require_positive(i, "i");
    const Poly x(var_x());
    Poly lhs = Poly(Rational(factorial(i))) * pow(-x, static_cast<unsigned>(i));
    for (int j = 1; j <= k; ++j) {
        const Poly y = Poly::var("y" + std::to_string(j));
        for (int l = 1; l <= i; ++l)
            lhs *= Poly(static_cast<long>(l)) * x - y;
    }
    CheckReport rep;
    rep.name = "fid(" + std::to_string(i) + "," + std::to_string(k) + ")";
    rep.lhs = std::move(lhs);
    rep.rhs = resultant(Alphabet{Letter(var_x())} + boxed_multiples(i, var_x()),
                        generic("y", k) + boxed(Letter(var_x(), i + 1)));
    rep.passed = rep.lhs == rep.rhs;
    return rep;
}

// --- catalog ----------------------------------------------------------------

namespace catalog {

ProbeSpec a_probe(int p, int target, int r)
{
    require_positive(r, "r");
    if (p < 0 || p > target)
        throw std::invalid_argument("a_probe: need 0 <= p <= target");
    const Alphabet x{Letter(var_x())};
    const Alphabet minus = generic("b", r - 1) + boxed(Letter(var_x(), p + 1));
    ProbeSpec probe;
    probe.name = "A" + std::to_string(p) + "(" + std::to_string(r) + ")";
    probe.arg = DiffArg{x, minus};
    if (p == target)
        probe.rhs = resultant(x + boxed_multiples(target, var_x()), minus);
    return probe;
}

Alphabet d_alphabet()
{
    const VarId x1("x1"), x2("x2");
    return Alphabet{Letter(x1, 2), Letter(x2, 2), Letter(0, {{x1, 1}, {x2, 1}})};
}

ProbeSpec i22_probe()
{
    const VarId x1("x1"), x2("x2");
    return ProbeSpec{"I22(1)", DiffArg{generic("x", 2), Alphabet{Letter(x1, 2), Letter(x2, 2)}}, Poly()};
}

ProbeSpec iii22_probe()
{
    return ProbeSpec{"III22(2)", DiffArg{generic("x", 2), d_alphabet()}, Poly()};
}

std::vector<ProbeSpec> sigma1_probes(int i, int r)
{
    require_positive(i, "i");
    std::vector<ProbeSpec> out;
    for (int p = 0; p <= i; ++p)
        out.push_back(a_probe(p, i, r));
    return out;
}

bool covered(int i, int r)
{
    if (r < 1)
        return false;
    return i == 1 || i == 2 || (i == 3 && (r == 1 || r == 2)) || (i == 4 && r == 1);
}

std::vector<ProbeSpec> thom_probes(int i, int r)
{
    if (!covered(i, r))
        throw CatalogError("no classification data for A" + std::to_string(i) + "(" + std::to_string(r) +
                           "); covered: A1(r), A2(r), A3(1), A3(2), A4(1)");
    auto probes = sigma1_probes(i, r);
    // the extra Sigma^2 probe goes before the Euler equation of A_i
    if (i == 4 && r == 1)
        probes.insert(probes.end() - 1, i22_probe());
    if (i == 3 && r == 2)
        probes.insert(probes.end() - 1, iii22_probe());
    return probes;
}

} // namespace catalog

// --- restriction equations --------------------------------------------------

ThomResult verify_thom(const SchurExpansion& candidate, const std::vector<ProbeSpec>& probes, int r)
{
    ThomResult res;
    res.r = r;
    res.expansion = candidate;
    for (const auto& probe : probes) {
        ProbeOutcome out;
        out.name = probe.name;
        out.value = eval_expansion(candidate, probe.arg);
        out.residual = out.value - probe.rhs;
        out.passed = out.residual.is_zero();
        if (out.passed)
            res.verified.push_back(probe.name);
        res.outcomes.push_back(std::move(out));
    }
    try {
        res.rank = rank(candidate, r);
    } catch (const MissingRow&) {
        res.rank = 0;
    }
    return res;
}

std::vector<Partition> default_basis(int i, int r)
{
    std::vector<Partition> out;
    for (auto& p : partitions_of(i * r))
        if (p.largest() >= r)
            out.push_back(std::move(p));
    return out;
}

namespace {

struct System {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
};

// Appends one row per monomial of sum_k c_k values[k] == target.
void append_equations(System& sys, const std::vector<Poly>& values, const Poly& target)
{
    std::set<Monomial, GrlexGreater> monos;
    for (const auto& v : values)
        for (const auto& t : v.terms())
            monos.insert(t.mono);
    for (const auto& t : target.terms())
        monos.insert(t.mono);
    for (const auto& m : monos) {
        std::vector<Rational> row;
        row.reserve(values.size());
        for (const auto& v : values)
            row.push_back(v.coeff(m));
        sys.rows.push_back(std::move(row));
        sys.rhs.push_back(target.coeff(m));
    }
}

std::string list_partitions(const std::vector<Partition>& basis, const std::vector<std::size_t>& cols)
{
    std::string s;
    for (auto c : cols)
        s += (s.empty() ? "" : ", ") + std::string("S_{") + basis[c].to_string() + "}";
    return s;
}

} // namespace

ThomResult solve_thom(int i, int r, const std::vector<ProbeSpec>& probes, std::vector<Partition> basis)
{
    require_positive(i, "i");
    require_positive(r, "r");
    if (basis.empty())
        basis = default_basis(i, r);

    System sys;
    for (const auto& probe : probes) {
        SchurEvaluator ev(probe.arg);
        std::vector<Poly> values;
        values.reserve(basis.size());
        for (const auto& p : basis)
            values.push_back(ev.schur(p));
        append_equations(sys, values, probe.rhs);
    }
    const auto sol = solve_linear(std::move(sys.rows), std::move(sys.rhs), basis.size());
    const std::string label = "A" + std::to_string(i) + "(" + std::to_string(r) + ")";
    if (!sol.consistent)
        throw SolveError(SolveError::Kind::Inconsistent, label + ": restriction equations have no solution");
    if (!sol.unique())
        throw SolveError(SolveError::Kind::Underdetermined,
                         label + ": solution space has dimension " + std::to_string(sol.free_columns.size()) +
                             " (free: " + list_partitions(basis, sol.free_columns) + ")");

    SchurExpansion expansion;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (sol.x[k].get_den() != 1)
            throw SolveError(SolveError::Kind::NonIntegerSolution,
                             label + ": coefficient of S_{" + basis[k].to_string() + "} is " + to_string(sol.x[k]));
        expansion.add(basis[k], sol.x[k]);
    }
    ThomResult res = verify_thom(expansion, probes, r);
    res.singularity = "A" + std::to_string(i);
    res.unique = true;
    return res;
}

ThomResult solve_thom(int i, int r)
{
    return solve_thom(i, r, catalog::thom_probes(i, r));
}

std::map<Partition, Rational> h_part_correction(const SchurExpansion& candidate, const ProbeSpec& probe,
                                                const std::vector<Partition>& correction_basis,
                                                const std::vector<ProbeSpec>& other_probes)
{
    for (const auto& other : other_probes) {
        if (eval_expansion(candidate, other.arg) != other.rhs)
            throw std::invalid_argument("h_part_correction: candidate fails probe " + other.name);
        const auto m = static_cast<int>(other.arg.plus.cardinality());
        const auto n = static_cast<int>(other.arg.minus.cardinality());
        for (const auto& p : correction_basis)
            if (in_hook(p, m, n))
                throw std::invalid_argument("h_part_correction: S_{" + p.to_string() + "} need not vanish at probe " +
                                            other.name);
    }

    SchurEvaluator ev(probe.arg);
    const Poly residual = probe.rhs - ev.eval(candidate);
    if (residual.is_zero())
        return {};

    std::vector<Poly> values;
    for (const auto& p : correction_basis)
        values.push_back(ev.schur(p));
    System sys;
    append_equations(sys, values, residual);
    const auto sol = solve_linear(std::move(sys.rows), std::move(sys.rhs), correction_basis.size());
    if (!sol.consistent)
        throw SolveError(SolveError::Kind::NoSolution,
                         "residual " + residual.to_string() + " at " + probe.name + " is not in the span of the correction basis");
    if (!sol.unique())
        throw SolveError(SolveError::Kind::Underdetermined,
                         "correction at " + probe.name + " is not unique (free: " +
                             list_partitions(correction_basis, sol.free_columns) + ")");
    std::map<Partition, Rational> out;
    for (std::size_t k = 0; k < correction_basis.size(); ++k)
        if (sol.x[k] != 0)
            out.emplace(correction_basis[k], sol.x[k]);
    return out;
}

SchurExpansion schur_expand(const Poly& p, int nvars)
{
    require_positive(nvars, "nvars");
    std::vector<VarId> vars;
    for (int k = 1; k <= nvars; ++k)
        vars.emplace_back("x" + std::to_string(k));
    for (const auto& v : p.variables())
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw NotSymmetric("variable " + v.name() + " is not among x1..x" + std::to_string(nvars));

    const DiffArg arg{generic("x", nvars), {}};
    SchurEvaluator ev(arg);
    SchurExpansion out;
    Poly rest = p;
    while (!rest.is_zero()) {
        const auto& lead = rest.leading();
        std::vector<int> exps;
        for (const auto& v : vars)
            exps.push_back(static_cast<int>(lead.mono.exponent(v)));
        if (!std::is_sorted(exps.rbegin(), exps.rend()))
            throw NotSymmetric("leading monomial " + lead.mono.to_string() + " has increasing exponents");
        const Partition part(exps);
        const Rational c = lead.coeff;
        out.add(part, c);
        rest -= ev.schur(part) * Poly(c);
    }
    return out;
}

int rank(const SchurExpansion& e, int r)
{
    int best = 0;
    for (const auto& [p, c] : e.coeffs()) {
        auto h = classify_h(p, r);
        if (!h)
            throw MissingRow("S_{" + p.to_string() + "} does not contain the row (" + std::to_string(r) + ")");
        best = std::max(best, *h);
    }
    return best;
}

SchurExpansion h_part(const SchurExpansion& e, int r, int h)
{
    SchurExpansion out;
    for (const auto& [p, c] : e.coeffs())
        if (classify_h(p, r) == h)
            out.add(p, c);
    return out;
}

// --- Chern class cross-checks -----------------------------------------------

namespace {

// prod numerators * prod 1/(1 + L) expanded as geometric series, truncated.
Poly truncated_ratio(const std::vector<Poly>& numerators, const std::vector<Poly>& denominator_terms, int degree)
{
    auto truncate = [degree](const Poly& p) {
        Poly out;
        for (int d = 0; d <= degree; ++d)
            out += graded_component(p, static_cast<unsigned>(d));
        return out;
    };
    Poly acc(1L);
    for (const auto& n : numerators)
        acc = truncate(acc * n);
    for (const auto& l : denominator_terms) {
        Poly geometric;
        for (int k = 0; k <= degree; ++k)
            geometric += pow(-l, static_cast<unsigned>(k));
        acc = truncate(acc * truncate(geometric));
    }
    return acc;
}

CheckReport compare_series(std::string name, const DiffArg& arg, const Poly& expected, int degree)
{
    const auto series = complete_series(arg, degree);
    CheckReport rep;
    rep.name = std::move(name);
    for (const auto& s : series.values)
        rep.lhs += s;
    rep.rhs = expected;
    rep.passed = rep.lhs == rep.rhs;
    return rep;
}

} // namespace

CheckReport chern_crosscheck(int i, int r, int degree)
{
    require_positive(i, "i");
    require_positive(r, "r");
    if (degree < 0)
        degree = i * r;
    const Poly x(var_x());
    // X = -x, Y_j = -b_j
    std::vector<Poly> numerators{Poly(1L) - Poly(static_cast<long>(i + 1)) * x};
    for (int j = 1; j < r; ++j)
        numerators.push_back(Poly(1L) - Poly::var("b" + std::to_string(j)));
    const Poly expected = truncated_ratio(numerators, {-x}, degree);
    const auto probe = catalog::a_probe(i, i, r);
    return compare_series("chern A" + std::to_string(i) + "(" + std::to_string(r) + ")", probe.arg, expected, degree);
}

CheckReport chern_crosscheck_i22(int degree)
{
    const Poly x1 = Poly::var("x1"), x2 = Poly::var("x2");
    const Poly expected = truncated_ratio({Poly(1L) - Poly(2L) * x1, Poly(1L) - Poly(2L) * x2}, {-x1, -x2}, degree);
    return compare_series("chern I22", catalog::i22_probe().arg, expected, degree);
}

CheckReport chern_crosscheck_iii22(int degree)
{
    const Poly x1 = Poly::var("x1"), x2 = Poly::var("x2");
    const Poly expected = truncated_ratio(
        {Poly(1L) - Poly(2L) * x1, Poly(1L) - Poly(2L) * x2, Poly(1L) - x1 - x2}, {-x1, -x2}, degree);
    return compare_series("chern III22", catalog::iii22_probe().arg, expected, degree);
}

std::vector<std::string> structure_violations(const ThomResult& result, int i)
{
    std::vector<std::string> out;
    const int r = result.r;
    for (const auto& [p, c] : result.expansion.coeffs()) {
        const std::string name = "S_{" + p.to_string() + "}";
        if (p.weight() != i * r)
            out.push_back(name + " has weight " + std::to_string(p.weight()) + ", expected " + std::to_string(i * r));
        if (!contains(p, rectangle(1, r)))
            out.push_back(name + " does not contain the row (" + std::to_string(r) + ")");
        if (c.get_den() != 1 || c < 0)
            out.push_back(name + " has coefficient " + to_string(c));
    }
    if (i >= 2 && result.rank > i - 1)
        out.push_back("rank " + std::to_string(result.rank) + " exceeds " + std::to_string(i - 1));
    if (h_part(result.expansion, r, 1) != F_ir(i, r))
        out.push_back("1-part differs from F^(" + std::to_string(i) + ")_" + std::to_string(r));
    return out;
}

} // namespace morin
