#ifndef QUIVERINV_INVARIANT_RING_HPP
#define QUIVERINV_INVARIANT_RING_HPP

#include <cstdint>

#include "quiverinv/multipoly.hpp"
#include "quiverinv/wreath.hpp"

namespace quiverinv {

/// Exact symmetric-function generators, as polynomials over Q(omega) with
/// modulus m. p_rs_poly lives in 2n variables (z block then z' block);
/// e_zm_poly in n variables.
MultiPoly p_rs_poly(int n, int m, int r, int s);
/// coeff_modulus 0 means "use m"; the Jacobian check expands over plain Q
/// (coeff_modulus 1) since no roots of unity occur there.
MultiPoly e_zm_poly(int n, int m, int k, int coeff_modulus = 0);

/// The exact monomial substitution of w acting on polynomials, matching the
/// numeric action derived from the gauge embedding: z_j -> omega^{-a_j} z_{sigma(j)}
/// and z'_j -> omega^{a_j} z'_{sigma(j)}.
MultiPoly apply_wreath(const WreathElement& w, const MultiPoly& p, WreathRep rep);

/// Reynolds projector: the average of apply_wreath over the whole group.
/// Exactly idempotent; throws TooLarge above the group cap.
MultiPoly reynolds(const MultiPoly& p, int n, int m, WreathRep rep);

/// Dimension of the degree-d invariant subspace by brute force: the exact
/// rank of {reynolds(monomial) : monomial of degree d}.
long invariant_dim_bruteforce(int n, int m, WreathRep rep, int d);

struct GenerationReport {
    int n = 0;
    int m = 0;
    int d = 0;
    int generator_cutoff = 0;  // R: generators of degree <= R enter products
    long molien_dim = 0;
    long span_dim = 0;
    bool verdict = false;
};

/// Do products of the standard generators span the whole degree-d invariant
/// subspace? Generators: e_k(z^m) for rep L, the power sums p_{r,s} with
/// r == s (mod m) for rep LL, restricted to degree <= R. span_dim is the
/// exact rank of all products of total degree exactly d; molien_dim comes
/// from the closed form (L) or the Molien series (LL).
GenerationReport generation_check(int n, int m, int d, int R, WreathRep rep);

/// Smallest R for which generation_check succeeds at degree d, or -1 if none
/// does for R <= d.
int minimal_generation_degree_cutoff(int n, int m, int d, WreathRep rep);

struct JacobianCheck {
    Complex mean_constant;          // numeric det / formula, averaged
    double relative_spread = 0.0;   // max deviation from the mean, relative
    int trials = 0;
    bool exact_mode_ran = false;    // n <= 3 only
    bool proportional = false;      // det == constant * formula, exactly
    BigRational exact_constant;     // the exact proportionality constant
};

/// Ratio of det(d e_k(z^m) / d z_j) to (z_1...z_n)^{m-1} prod_{i<j}(z_i^m - z_j^m),
/// sampled at random points (degenerate samples are re-drawn), plus the exact
/// symbolic proportionality check for n <= 3.
JacobianCheck jacobian_check(int n, int m, int trials, std::uint64_t seed);

/// Series of prod_{k=1..n} 1/(1 - t^{mk}), exact integer coefficients.
MolienSeries molien_closed_form_L(int n, int m, int max_degree);

}  // namespace quiverinv

#endif
