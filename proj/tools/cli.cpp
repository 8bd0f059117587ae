#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "morin/errors.hpp"
#include "morin/parse.hpp"

namespace morin::cli {

using json = nlohmann::ordered_json;

namespace {

struct Options {
    bool json = false;
    bool quiet = false;

    int i = 0;
    int r = 0;
    std::string singularity;
    bool all_partitions = false;
    bool sigma1 = false;
    std::string candidate;

    std::string identity;
    std::vector<long> params;
    std::uint64_t seed = 1;

    int nvars = 0;
    std::string poly;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_positive(long v, const char* what)
{
    if (v < 1)
        throw UsageError(std::string(what) + " must be >= 1");
}

json partition_json(const Partition& p)
{
    json a = json::array();
    for (int part : p.parts())
        a.push_back(part);
    return a;
}

json expansion_array(const SchurExpansion& e)
{
    json a = json::array();
    for (const auto& [p, c] : e.sorted_terms())
        a.push_back({{"partition", partition_json(p)}, {"coeff", to_string(c)}});
    return a;
}

json result_object(const ThomResult& result)
{
    return {{"singularity", result.singularity}, {"r", result.r},
            {"expansion", expansion_array(result.expansion)}, {"rank", result.rank},
            {"verified", result.verified}, {"unique", result.unique}};
}

json report_json(const CheckReport& rep)
{
    return {{"identity", rep.name}, {"passed", rep.passed}, {"lhs", rep.lhs.to_string()},
            {"rhs", rep.rhs.to_string()}};
}

json report_json(const IdentityReport& rep)
{
    return {{"identity", rep.name}, {"passed", rep.passed()}, {"checked", rep.checked},
            {"failures", rep.failures}};
}

// --- commands -----------------------------------------------------------------

int cmd_fir(const Options& o, std::ostream& out)
{
    require_positive(o.i, "i");
    require_positive(o.r, "r");
    const SchurExpansion e = F_ir(o.i, o.r);
    if (o.json)
        out << json{{"i", o.i}, {"r", o.r}, {"expansion", expansion_array(e)}}.dump() << '\n';
    else
        out << e.to_string() << '\n';
    return kOk;
}

int cmd_solve(const Options& o, std::ostream& out)
{
    const int i = parse_singularity(o.singularity);
    require_positive(o.r, "r");
    std::vector<ProbeSpec> probes = o.sigma1 ? catalog::sigma1_probes(i, o.r) : catalog::thom_probes(i, o.r);
    std::vector<Partition> basis;
    if (o.all_partitions)
        basis = partitions_of(i * o.r);
    ThomResult result = solve_thom(i, o.r, probes, basis);

    if (o.json) {
        out << result_object(result).dump() << '\n';
        return kOk;
    }
    out << result.expansion.to_string_by_h(o.r) << '\n';
    if (!o.quiet) {
        out << "rank: " << result.rank << '\n';
        out << "unique: " << (result.unique ? "yes" : "no") << '\n';
        out << "verified:";
        for (const auto& name : result.verified)
            out << ' ' << name;
        out << '\n';
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const int i = parse_singularity(o.singularity);
    require_positive(o.r, "r");
    const SchurExpansion candidate = parse_expansion(o.candidate);
    ThomResult result = verify_thom(candidate, catalog::thom_probes(i, o.r), o.r);
    result.singularity = "A" + std::to_string(i);
    const bool ok = result.all_passed();

    if (o.json) {
        json j = result_object(result);
        j["passed"] = ok;
        json probes = json::array();
        for (const auto& p : result.outcomes)
            probes.push_back({{"name", p.name}, {"passed", p.passed}, {"residual", p.residual.to_string()}});
        j["probes"] = probes;
        out << j.dump() << '\n';
    } else {
        for (const auto& p : result.outcomes) {
            if (p.passed) {
                if (!o.quiet)
                    out << p.name << ": ok\n";
            } else {
                out << p.name << ": FAIL, residual " << p.residual.to_string() << '\n';
            }
        }
        if (!o.quiet)
            out << (ok ? "verified" : "not verified") << '\n';
    }
    return ok ? kOk : kVerificationFailed;
}

long param(const Options& o, std::size_t k, const char* what)
{
    if (k >= o.params.size())
        throw UsageError(std::string("identity ") + o.identity + ": missing parameter " + what);
    return o.params[k];
}

long param_or(const Options& o, std::size_t k, long fallback)
{
    return k < o.params.size() ? o.params[k] : fallback;
}

void expect_params(const Options& o, std::size_t lo, std::size_t hi)
{
    if (o.params.size() < lo || o.params.size() > hi) {
        std::ostringstream msg;
        msg << "identity " << o.identity << " takes " << lo;
        if (hi != lo)
            msg << " to " << hi;
        msg << " parameters, got " << o.params.size();
        throw UsageError(msg.str());
    }
}

int to_int(long v, const char* what, long lo, long hi)
{
    if (v < lo || v > hi)
        throw UsageError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

int emit(const Options& o, std::ostream& out, const CheckReport& rep)
{
    if (o.json)
        out << report_json(rep).dump() << '\n';
    else if (!o.quiet || !rep.passed) {
        out << rep.name << ": " << (rep.passed ? "pass" : "FAIL") << '\n';
        if (!rep.passed)
            out << "  lhs: " << rep.lhs.to_string() << "\n  rhs: " << rep.rhs.to_string() << '\n';
    }
    return rep.passed ? kOk : kVerificationFailed;
}

int emit(const Options& o, std::ostream& out, const IdentityReport& rep)
{
    if (o.json)
        out << report_json(rep).dump() << '\n';
    else if (!o.quiet || !rep.passed()) {
        out << rep.name << ": " << (rep.passed() ? "pass" : "FAIL") << " (" << rep.checked << " checks)\n";
        for (const auto& f : rep.failures)
            out << "  " << f << '\n';
    }
    return rep.passed() ? kOk : kVerificationFailed;
}

int cmd_identity(const Options& o, std::ostream& out)
{
    const std::string& name = o.identity;
    if (name == "FBr") {
        expect_params(o, 2, 2);
        return emit(o, out, check_FBr(to_int(param(o, 0, "i"), "i", 1, 8), to_int(param(o, 1, "r"), "r", 1, 8)));
    }
    if (name == "CF") {
        expect_params(o, 3, 3);
        const int i = to_int(param(o, 0, "i"), "i", 1, 8);
        return emit(o, out, check_CF(i, to_int(param(o, 1, "r"), "r", 1, 8), to_int(param(o, 2, "p"), "p", 1, i + 1)));
    }
    if (name == "fid") {
        expect_params(o, 2, 2);
        return emit(o, out, check_fid(to_int(param(o, 0, "i"), "i", 1, 8), to_int(param(o, 1, "k"), "k", 0, 8)));
    }
    if (name == "cancel" || name == "duality") {
        expect_params(o, 0, 3);
        const int card = to_int(param_or(o, 0, 3), "max_card", 0, 6);
        const int weight = to_int(param_or(o, 1, 5), "max_weight", 0, 10);
        const int trials = to_int(param_or(o, 2, 4), "trials", 1, 1000);
        return emit(o, out, name == "cancel" ? check_cancellation(card, weight, o.seed, trials)
                                            : check_duality(card, weight, o.seed, trials));
    }
    if (name == "vanish") {
        expect_params(o, 0, 2);
        return emit(o, out, check_vanishing(to_int(param_or(o, 0, 3), "max_card", 0, 6),
                                            to_int(param_or(o, 1, 8), "max_weight", 0, 12)));
    }
    if (name == "factor") {
        expect_params(o, 0, 2);
        return emit(o, out, check_factorization(to_int(param_or(o, 0, 3), "max_card", 1, 4),
                                                to_int(param_or(o, 1, 2), "max_part", 0, 3)));
    }
    if (name == "rectangle") {
        expect_params(o, 0, 1);
        return emit(o, out, check_rectangle(to_int(param_or(o, 0, 3), "max_card", 1, 5)));
    }
    if (name == "chern") {
        expect_params(o, 2, 3);
        const int i = to_int(param(o, 0, "i"), "i", 1, 8);
        const int r = to_int(param(o, 1, "r"), "r", 1, 8);
        return emit(o, out, chern_crosscheck(i, r, to_int(param_or(o, 2, -1), "degree", -1, 24)));
    }
    throw UsageError("unknown identity \"" + name +
                     "\" (expected FBr, CF, fid, cancel, duality, vanish, factor, rectangle, chern)");
}

int cmd_expand(const Options& o, std::ostream& out)
{
    require_positive(o.nvars, "nvars");
    if (o.nvars > 9)
        throw UsageError("nvars must be <= 9");
    const SchurExpansion e = schur_expand(parse_poly(o.poly), o.nvars);
    if (o.json)
        out << json{{"nvars", o.nvars}, {"expansion", expansion_array(e)}}.dump() << '\n';
    else
        out << e.to_string() << '\n';
    return kOk;
}

void error_line(std::ostream& err, const std::string& msg)
{
    err << "morin: " << msg << '\n';
}

} // namespace

int parse_singularity(const std::string& name)
{
    if (name.size() >= 2 && name[0] == 'A' && std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })
        && name.size() <= 3) {
        const int i = std::stoi(name.substr(1));
        if (i >= 1)
            return i;
    }
    throw std::invalid_argument("unknown singularity \"" + name + "\" (expected A1, A2, ...)");
}

std::string thom_result_json(const ThomResult& result)
{
    return result_object(result).dump();
}

std::string expansion_json(const SchurExpansion& e)
{
    return expansion_array(e).dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Schur functions of differences of alphabets and Thom polynomials of A_i singularities", "morin"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Print JSON instead of text");
    app.add_flag("-q,--quiet", o.quiet, "Print only the result (or only failures)");

    auto* fir = app.add_subcommand("fir", "Print the expansion of F^(i)_r");
    fir->add_option("i", o.i, "Index i >= 1")->required();
    fir->add_option("r", o.r, "Parameter r >= 1")->required();

    auto* solve = app.add_subcommand("solve", "Solve the restriction equations for A_i(r)");
    solve->add_option("singularity", o.singularity, "A1, A2, A3 or A4")->required();
    solve->add_option("r", o.r, "Parameter r >= 1")->required();
    solve->add_flag("--all-partitions", o.all_partitions, "Use every partition of weight i*r as the basis");
    solve->add_flag("--sigma1", o.sigma1, "Use only the A_0 .. A_i probes");

    auto* verify = app.add_subcommand("verify", "Check a candidate expansion against the probes of A_i(r)");
    verify->add_option("--candidate", o.candidate, "Expansion, e.g. \"S_{111} + 5 S_{12} + 6 S_{3}\"")->required();
    verify->add_option("singularity", o.singularity, "A1, A2, A3 or A4")->required();
    verify->add_option("r", o.r, "Parameter r >= 1")->required();

    auto* identity = app.add_subcommand("identity", "Run an exact identity check");
    identity->add_option("name", o.identity, "FBr, CF, fid, cancel, duality, vanish, factor, rectangle, chern")
        ->required();
    identity->add_option("params", o.params, "Integer parameters");
    identity->add_option("--seed", o.seed, "Seed for the random grids");

    auto* expand = app.add_subcommand("expand", "Expand a symmetric polynomial in x1..xN into Schur functions");
    expand->add_option("--nvars", o.nvars, "Number of variables N")->required();
    expand->add_option("poly", o.poly, "Polynomial, e.g. \"x1^2 + x1*x2 + x2^2\"")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        error_line(err, e.what());
        return kUsage;
    }

    try {
        if (fir->parsed())
            return cmd_fir(o, out);
        if (solve->parsed())
            return cmd_solve(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (identity->parsed())
            return cmd_identity(o, out);
        if (expand->parsed())
            return cmd_expand(o, out);
        error_line(err, "no command");
        return kUsage;
    } catch (const ParseError& e) {
        error_line(err, e.what());
        return kUsage;
    } catch (const CatalogError& e) {
        error_line(err, e.what());
        return kUsage;
    } catch (const NotSymmetric& e) {
        error_line(err, e.what());
        return kUsage;
    } catch (const SolveError& e) {
        error_line(err, e.what());
        return kVerificationFailed;
    } catch (const UsageError& e) {
        error_line(err, e.what());
        return kUsage;
    } catch (const std::invalid_argument& e) {
        error_line(err, e.what());
        return kUsage;
    } catch (const std::exception& e) {
        error_line(err, std::string("internal error: ") + e.what());
        return kInternal;
    }
}

} // namespace morin::cli
