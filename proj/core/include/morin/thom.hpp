#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morin/alphabet.hpp"
#include "morin/partition.hpp"
#include "morin/poly.hpp"
#include "morin/schur.hpp"

namespace morin {

/// F(A, -) = sum over I in (n^m) of S_I(A) S_{n-i_m, ..., n-i_1, n+|I|}(-).
/// A must consist of m constant letters so every coefficient is a number.
/// Throws CardinalityMismatch when |A| != m.
SchurExpansion F_general(const Alphabet& a, int m, int n);

/// F^(i)_r: F_general over [2] + [3] + ... + [i] with m = i-1, n = r.
/// F^(1)_r = S_r.
SchurExpansion F_ir(int i, int r);

// [2v] + [3v] + ... + [iv] for a variable v (empty for i < 2).
Alphabet boxed_multiples(int i, VarId v);

/// One exact identity check with both sides kept for reporting.
struct CheckReport {
    std::string name;
    bool passed = false;
    Poly lhs;
    Poly rhs;
};

/// F^(i)_r(x - B_r) == R(x + [2x] + ... + [ix], B_r).
CheckReport check_FBr(int i, int r);
/// p <= i: F^(i)_r(x - B_{r-1} - [px]) == 0;
/// p == i+1: equals R(x + [2x] + ... + [ix], B_{r-1} + [(i+1)x]).
CheckReport check_CF(int i, int r, int p);

/// e(A_i) = i! x^i prod_{j<=k} (y_j - ix)...(y_j - x).
Poly euler_Ai(int i, int k);
/// i!(-x)^i prod_j (ix - y_j)...(x - y_j) == R(x + [2x] + ... + [ix], Y_k + [(i+1)x]).
CheckReport check_fid(int i, int k);

// --- probes -----------------------------------------------------------------

/// One restriction equation: P(arg) == rhs.
struct ProbeSpec {
    std::string name;
    DiffArg arg;
    Poly rhs;
};

namespace catalog {

/// The A_p(r) restriction probe inside the system for A_target(r): argument
/// x - B_{r-1} - [(p+1)x]; right side zero for p < target and the resultant
/// R(x + [2x] + ... + [ix], B_{r-1} + [(i+1)x]) for p == target.
ProbeSpec a_probe(int p, int target, int r);
/// I_{2,2}(1): X_2 - [2x1] - [2x2], vanishing.
ProbeSpec i22_probe();
/// III_{2,2}(2): X_2 - D with D = [2x1] + [2x2] + [x1+x2], vanishing.
ProbeSpec iii22_probe();
// D = [2x1] + [2x2] + [x1+x2].
Alphabet d_alphabet();

/// A_0(r), ..., A_i(r): the whole system when Sigma^j is empty for j >= 2.
std::vector<ProbeSpec> sigma1_probes(int i, int r);

/// The complete list of restriction probes for A_i(r), for the pairs with
/// known classification data: i = 1, 2 (any r), (3,1), (3,2), (4,1).
/// Throws CatalogError for any other pair.
std::vector<ProbeSpec> thom_probes(int i, int r);
bool covered(int i, int r);

} // namespace catalog

// --- restriction equations --------------------------------------------------

struct ProbeOutcome {
    std::string name;
    bool passed = false;
    Poly value;    // candidate evaluated at the probe argument
    Poly residual; // value - rhs
};

struct ThomResult {
    std::string singularity; // e.g. "A4"
    int r = 1;
    SchurExpansion expansion;
    std::vector<std::string> verified;
    std::vector<ProbeOutcome> outcomes;
    bool unique = false;
    int rank = 0; // 0 when some partition lacks the row (r)

    bool all_passed() const noexcept { return verified.size() == outcomes.size(); }
};

/// Evaluates the candidate at every probe and records pass/fail.
ThomResult verify_thom(const SchurExpansion& candidate, const std::vector<ProbeSpec>& probes, int r);

// Partitions of weight i*r whose largest part is at least r.
std::vector<Partition> default_basis(int i, int r);

/// Solves the restriction equations over `basis` (default_basis when
/// empty) by matching every monomial coefficient. Throws SolveError when
/// the system is underdetermined, inconsistent, or has a non-integer
/// solution.
ThomResult solve_thom(int i, int r, const std::vector<ProbeSpec>& probes, std::vector<Partition> basis = {});
// Catalog probes for (i, r).
ThomResult solve_thom(int i, int r);

/// Coefficients c_J with rhs - candidate(arg) == sum c_J S_J(arg).
/// When `other_probes` is given, the candidate must already satisfy them
/// and every basis partition must fall outside their hooks.
/// Throws SolveError (NoSolution) when the residual is outside the span.
std::map<Partition, Rational> h_part_correction(const SchurExpansion& candidate, const ProbeSpec& probe,
                                                const std::vector<Partition>& correction_basis,
                                                const std::vector<ProbeSpec>& other_probes = {});

/// Schur expansion of a symmetric polynomial in x1..xN by repeatedly
/// peeling off the leading monomial. Throws NotSymmetric.
SchurExpansion schur_expand(const Poly& p, int nvars);

/// Largest h-part index over the partitions of E. Throws MissingRow.
int rank(const SchurExpansion& e, int r);

// --- Chern class cross-checks -----------------------------------------------

/// Compares the complete series of x - B_{r-1} - [(i+1)x] with the expansion
/// of (1 + (i+1)X) prod (1 + Y_j) / (1 + X) at X = -x, Y_j = -b_j, degree by
/// degree up to `degree` (i*r when negative).
CheckReport chern_crosscheck(int i, int r, int degree = -1);
// (1 + 2X1)(1 + 2X2) / ((1 + X1)(1 + X2)) against X_2 - [2x1] - [2x2].
CheckReport chern_crosscheck_i22(int degree = 4);
// (1 + 2X1)(1 + 2X2)(1 + X1 + X2) / ((1 + X1)(1 + X2)) against X_2 - D.
CheckReport chern_crosscheck_iii22(int degree = 6);

/// Structural facts every solved A_i(r) expansion must satisfy: weight i*r,
/// each partition contains the row (r), nonnegative integer coefficients,
/// rank <= i-1 for i >= 2, and 1-part equal to F^(i)_r. Returns the
/// violated ones.
std::vector<std::string> structure_violations(const ThomResult& result, int i);

// The h-part of E for parameter r.
SchurExpansion h_part(const SchurExpansion& e, int r, int h);

} // namespace morin
