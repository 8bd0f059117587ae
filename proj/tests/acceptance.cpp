// One PASS/FAIL line per acceptance criterion. All comparisons are exact.
//
// Exit status: 0 when every criterion passes or the only failures are the
// known discrepancies listed in kKnown below (each still re-verified here
// to be exactly the documented mismatch); 1 otherwise. With --strict any
// failure gives exit status 1.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "morin/parse.hpp"
#include "morin/thom.hpp"
#include "oracles.hpp"

using namespace morin;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool passed = true;
    bool known = false; // failure matches a documented discrepancy exactly
    std::string detail;
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string run_cli(const std::vector<std::string>& args, int* code = nullptr)
{
    std::ostringstream out, err;
    const int c = cli::run(args, out, err);
    if (code)
        *code = c;
    return out.str();
}

Poly P(const char* text)
{
    return parse_poly(text);
}

// --- 1 ------------------------------------------------------------------------

struct Golden {
    std::vector<std::string> args;
    std::string expected;
};

Verdict golden_expansions()
{
    Verdict v;
    std::vector<std::string> notes;
    int matched = 0, total = 0;
    double worst = 0;

    auto check = [&](const std::vector<std::string>& args, const std::string& expected, const std::string& label) {
        ++total;
        const auto t0 = Clock::now();
        int code = 0;
        std::string got = run_cli(args, &code);
        worst = std::max(worst, seconds_since(t0));
        if (!got.empty() && got.back() == '\n')
            got.pop_back();
        if (code == 0 && got == expected) {
            ++matched;
            return true;
        }
        notes.push_back(label + ": got \"" + got + "\"");
        return false;
    };

    // F^(2)_r rule, r = 1..4
    for (int r = 1; r <= 4; ++r) {
        SchurExpansion rule;
        for (int j = 0; j <= r; ++j)
            rule.add(Partition{r - j, r + j}, Rational(1L << j));
        check({"fir", "2", std::to_string(r)}, rule.to_string(), "F^(2)_" + std::to_string(r));
    }
    check({"fir", "3", "1"}, "S_{111} + 5 S_{12} + 6 S_{3}", "F^(3)_1");
    check({"fir", "3", "2"}, "S_{222} + 5 S_{123} + 6 S_{114} + 19 S_{24} + 30 S_{15} + 36 S_{6}", "F^(3)_2");
    check({"fir", "4", "1"}, "S_{1111} + 9 S_{112} + 26 S_{13} + 24 S_{4}", "F^(4)_1");

    const std::string f42_displayed = "S_{2222} + 9 S_{1223} + 26 S_{1124} + 24 S_{1115} + 55 S_{224} + 210 S_{125} + "
                                      "216 S_{116} + 391 S_{26} + 555 S_{17} + 507 S_{8}";
    const bool f42_ok = check({"fir", "4", "2"}, f42_displayed, "F^(4)_2");

    // F^(5)_1 rule against subset sums e_j(2, 3, 4, 5)
    {
        const std::vector<long> a{2, 3, 4, 5};
        SchurExpansion rule;
        for (int j = 0; j <= 4; ++j) {
            std::vector<int> parts(static_cast<std::size_t>(4 - j), 1);
            parts.push_back(j + 1);
            rule.add(Partition(parts), Rational(oracle::elementary(a, j)));
        }
        check({"fir", "5", "1"}, rule.to_string(), "F^(5)_1");
    }

    std::ostringstream d;
    d << matched << "/" << total << " match, slowest " << worst << " s";
    if (worst >= 1.0) {
        v.passed = false;
        d << " (limit 1 s)";
    }
    for (const auto& n : notes)
        d << "; " << n;

    if (!f42_ok) {
        v.passed = false;
        // Known discrepancy: the displayed S_26, S_17, S_8 coefficients. The
        // computed ones are the tableau sums S_22, S_122, S_222 of [2]+[3]+[4]
        // and satisfy F(x - B_2) = R(x + [2x] + [3x] + [4x], B_2); the
        // displayed ones do not.
        const SchurExpansion computed = F_ir(4, 2);
        const SchurExpansion displayed = parse_expansion(f42_displayed);
        const SchurExpansion diff = computed - displayed;
        const std::vector<Rational> vals{2, 3, 4};
        const bool only_three = diff == SchurExpansion{{Partition{2, 6}, 69}, {Partition{1, 7}, 69}, {Partition{8}, 69}};
        const bool oracle_agrees = computed.coeff(Partition{2, 6}) == oracle::tableau_sum(Partition{2, 2}, vals) &&
                                   computed.coeff(Partition{1, 7}) == oracle::tableau_sum(Partition{1, 2, 2}, vals) &&
                                   computed.coeff(Partition{8}) == oracle::tableau_sum(Partition{2, 2, 2}, vals);
        const DiffArg arg = parse_diffarg("x - B_2");
        const Alphabet top = Alphabet{Letter(VarId("x"))} + boxed_multiples(4, VarId("x"));
        const Poly rhs = resultant(top, generic("b", 2));
        const bool ours_identity = eval_expansion(computed, arg) == rhs;
        const bool displayed_identity = eval_expansion(displayed, arg) == rhs;
        v.known = matched == total - 1 && only_three && oracle_agrees && ours_identity && !displayed_identity &&
                  worst < 1.0;
        d << "; computed 460 S_{26} + 624 S_{17} + 576 S_{8} = tableau sums "
          << (oracle_agrees ? "(confirmed)" : "(NOT confirmed)") << ", F(x - B_2) = R identity holds for computed: "
          << (ours_identity ? "yes" : "no") << ", for displayed: " << (displayed_identity ? "yes" : "no");
    }
    v.detail = d.str();
    return v;
}

// --- 2 ------------------------------------------------------------------------

Verdict identity_suite()
{
    Verdict v;
    const auto t0 = Clock::now();
    int checks = 0;
    std::vector<std::string> failed;
    auto note = [&](bool ok, const std::string& name) {
        ++checks;
        if (!ok)
            failed.push_back(name);
    };
    for (int i = 1; i <= 4; ++i)
        for (int r = 1; r <= 3; ++r) {
            note(check_FBr(i, r).passed, "FBr(" + std::to_string(i) + "," + std::to_string(r) + ")");
            for (int p = 1; p <= i + 1; ++p)
                note(check_CF(i, r, p).passed,
                     "CF(" + std::to_string(i) + "," + std::to_string(r) + "," + std::to_string(p) + ")");
        }
    for (int i = 1; i <= 3; ++i)
        for (int k = 0; k <= 2; ++k)
            note(check_fid(i, k).passed, "fid(" + std::to_string(i) + "," + std::to_string(k) + ")");
    for (const auto& rep : {check_cancellation(3, 5, 1), check_cancellation(3, 5, 2), check_duality(3, 5, 1),
                            check_duality(3, 5, 2), check_vanishing(3, 8), check_factorization(3), check_rectangle(3)})
        note(rep.passed(), rep.name);

    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << checks - static_cast<int>(failed.size()) << "/" << checks << " checks pass in " << secs << " s";
    for (const auto& f : failed)
        d << "; failed " << f;
    v.passed = failed.empty() && secs < 60.0;
    if (secs >= 60.0)
        d << " (limit 60 s)";
    v.detail = d.str();
    return v;
}

// --- 3 ------------------------------------------------------------------------

Verdict a4_pipeline()
{
    Verdict v;
    std::vector<std::string> bad;
    const auto probe = catalog::i22_probe();
    SchurEvaluator ev(probe.arg);
    const SchurExpansion f41 = F_ir(4, 1);
    if (ev.eval(f41) != P("-10 x1 x2 (x1 - 2x2)(x2 - 2x1)"))
        bad.push_back("F41 at I22");

    const std::map<VarId, long> one{{VarId("x1"), 1}, {VarId("x2"), 1}};
    const std::vector<std::pair<Partition, long>> spec{
        {Partition{1, 1, 1, 1}, 28}, {Partition{1, 1, 2}, -4}, {Partition{1, 3}, -1}, {Partition{4}, 1}};
    for (const auto& [p, want] : spec)
        if (eval_at_integers(ev.schur(p), one) != want)
            bad.push_back("S_{" + p.to_string() + "} at x1=x2=1");
    if (eval_at_integers(ev.eval(f41), one) != -10)
        bad.push_back("factor -10");

    const auto corr = h_part_correction(f41, probe, {Partition{2, 2}}, catalog::sigma1_probes(4, 1));
    if (corr != std::map<Partition, Rational>{{Partition{2, 2}, 10}})
        bad.push_back("correction");

    const auto res = solve_thom(4, 1);
    if (res.expansion != parse_expansion("S_{1111} + 9S_{112} + 26S_{13} + 24S_4 + 10S_{22}") || !res.unique)
        bad.push_back("solve_thom");
    v.passed = bad.empty();
    v.detail = "solve A4 1 -> " + res.expansion.to_string_by_h(1) + (res.unique ? ", unique" : ", not unique") +
               "; 1*28 + 9*(-4) + 26*(-1) + 24*1 = -10";
    for (const auto& b : bad)
        v.detail += "; mismatch: " + b;
    return v;
}

// --- 4 ------------------------------------------------------------------------

Verdict a3_pipeline()
{
    Verdict v;
    std::vector<std::string> bad;
    const auto probe = catalog::iii22_probe();
    const SchurExpansion f32 = F_ir(3, 2);
    if (eval_expansion(f32, probe.arg) != P("-5 (x1 x2)^2 (x1 - 2x2)(x2 - 2x1)"))
        bad.push_back("F32 at III22");
    const auto corr = h_part_correction(f32, probe, {Partition{3, 3}}, catalog::sigma1_probes(3, 2));
    if (corr != std::map<Partition, Rational>{{Partition{3, 3}, 5}})
        bad.push_back("correction");
    const auto res = solve_thom(3, 2);
    if (res.expansion != parse_expansion("S_{222} + 5S_{123} + 6S_{114} + 19S_{24} + 30S_{15} + 36S_6 + 5S_{33}"))
        bad.push_back("solve_thom");
    if (res.rank != 2 || rank(res.expansion, 2) != 2)
        bad.push_back("rank");
    v.passed = bad.empty();
    v.detail = "solve A3 2 -> " + res.expansion.to_string_by_h(2) + ", rank " + std::to_string(res.rank);
    for (const auto& b : bad)
        v.detail += "; mismatch: " + b;
    return v;
}

// --- 5 ------------------------------------------------------------------------

Verdict classical_cases()
{
    Verdict v;
    std::vector<std::string> bad;
    for (int r = 1; r <= 4; ++r) {
        if (solve_thom(1, r).expansion != SchurExpansion{{Partition{r}, 1}})
            bad.push_back("A1(" + std::to_string(r) + ")");
        SchurExpansion rule;
        for (int j = 0; j <= r; ++j)
            rule.add(Partition{r - j, r + j}, Rational(1L << j));
        if (solve_thom(2, r).expansion != rule)
            bad.push_back("A2(" + std::to_string(r) + ")");
    }
    v.passed = bad.empty();
    v.detail = "A1(r) = S_r and A2(r) = sum 2^j S_{r-j,r+j} for r = 1..4";
    for (const auto& b : bad)
        v.detail += "; mismatch: " + b;
    return v;
}

// --- 6 ------------------------------------------------------------------------

Verdict structure()
{
    Verdict v;
    std::vector<std::string> bad;
    int solved = 0;
    std::vector<std::pair<int, int>> cases{{3, 1}, {3, 2}, {4, 1}};
    for (int r = 1; r <= 4; ++r) {
        cases.emplace_back(1, r);
        cases.emplace_back(2, r);
    }
    for (auto [i, r] : cases) {
        const auto res = solve_thom(i, r);
        ++solved;
        const std::string tag = "A" + std::to_string(i) + "(" + std::to_string(r) + ")";
        int top = 0;
        for (const auto& [p, c] : res.expansion.coeffs()) {
            if (p.weight() != i * r)
                bad.push_back(tag + " weight");
            if (p.largest() < r)
                bad.push_back(tag + " row");
            if (c.get_den() != 1 || c < 0)
                bad.push_back(tag + " coefficient");
            if (auto h = classify_h(p, r))
                top = std::max(top, *h);
        }
        if (i >= 2 && top > i - 1)
            bad.push_back(tag + " rank");
        if (h_part(res.expansion, r, 1) != F_ir(i, r))
            bad.push_back(tag + " 1-part");
        for (const auto& s : structure_violations(res, i))
            bad.push_back(tag + " " + s);
    }
    v.passed = bad.empty();
    v.detail = std::to_string(solved) + " solved expansions checked";
    for (const auto& b : bad)
        v.detail += "; violation: " + b;
    return v;
}

// --- 7 ------------------------------------------------------------------------

Verdict bialternant()
{
    Verdict v;
    int checked = 0, failed = 0;
    for (int n = 1; n <= 4; ++n) {
        const Poly vd = oracle::vandermonde(n);
        SchurEvaluator ev(DiffArg{generic("x", n), {}});
        for (int w = 0; w <= 6; ++w)
            for (const auto& p : partitions_of(w)) {
                ++checked;
                const Poly s = ev.schur(p);
                const bool ok = p.length() > static_cast<std::size_t>(n) ? s.is_zero()
                                                                         : s * vd == oracle::alternant(p, n);
                if (!ok)
                    ++failed;
            }
    }
    v.passed = failed == 0;
    v.detail = std::to_string(checked - failed) + "/" + std::to_string(checked) +
               " partitions agree with a_{I+delta} / a_delta on N <= 4 variables";
    return v;
}

} // namespace

int main(int argc, char** argv)
{
    const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"1 golden expansions", golden_expansions}, {"2 identity suite", identity_suite},
        {"3 A4(1) pipeline", a4_pipeline},          {"4 A3(2) pipeline", a3_pipeline},
        {"5 classical cases", classical_cases},     {"6 structural assertions", structure},
        {"7 bialternant oracle", bialternant},
    };
    int unexpected = 0, known = 0;
    for (const auto& [name, fn] : criteria) {
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v.passed = false;
            v.detail = std::string("exception: ") + e.what();
        }
        std::cout << (v.passed ? "PASS " : "FAIL ") << name << ": " << v.detail;
        if (!v.passed && v.known)
            std::cout << " [known discrepancy, see README]";
        std::cout << '\n';
        if (!v.passed)
            (v.known ? known : unexpected)++;
    }
    std::cout << "summary: " << criteria.size() - unexpected - known << " pass, " << known << " known discrepancy, "
              << unexpected << " unexpected failure\n";
    if (strict)
        return unexpected + known == 0 ? 0 : 1;
    return unexpected == 0 ? 0 : 1;
}
