#ifndef QUIVERINV_TOLERANCES_HPP
#define QUIVERINV_TOLERANCES_HPP

namespace quiverinv {
namespace tol {

// All numeric tolerances live here. They are artifact decisions, relative to
// Frobenius norms (or to max(1, |expected|) for scalar comparisons) unless
// noted otherwise.

// mat_inverse: residual bound factor, ||A*inv(A) - I||_F <= inverse_residual * n * ||A||_F.
inline constexpr double inverse_residual = 1e-9;

// LU: a pivot below singular_pivot * ||A||_F means singular-to-tolerance.
inline constexpr double singular_pivot = 1e-12;

// poly_roots: accept when |p(root)| <= root_residual * maxcoeff * max(1,|root|)^deg.
inline constexpr double root_residual = 1e-10;
inline constexpr int root_max_iter = 200;

// eigen_diagonalize: minimum pairwise eigenvalue gap, relative to ||A||_F.
inline constexpr double eigen_gap = 1e-8;
// eigen_diagonalize: reconstruction residual bound, relative to ||A||_F.
inline constexpr double eigen_residual = 1e-8;

// is_generic default margin, relative to ||cycle product||_F. Sits well above
// sqrt(machine epsilon): an exact double eigenvalue splits by ~1e-8 under
// coefficient rounding, and the test must classify it as a collision.
inline constexpr double generic = 1e-6;

// Moment-map membership, relative to the point's scale.
inline constexpr double moment = 1e-10;

// act_on_L / act_on_LL extraction: the gauged point must be an embedded
// L-point to this (relative) accuracy or we flag an implementation bug.
inline constexpr double wreath_extraction = 1e-12;

// to_canonical_L: witness soundness residual, relative.
inline constexpr double canonical_witness = 1e-7;
// canonicalize_double: transported-y diagonality threshold, relative.
inline constexpr double double_diag = 1e-7;
// orbit_equal: canonical coordinate agreement, relative.
inline constexpr double orbit_match = 1e-6;

// Molien rational reconstruction guard.
inline constexpr double molien_guard = 1e-6;

// random_gauge: condition estimate cap and resampling budget.
inline constexpr double gauge_condition_cap = 1e6;
inline constexpr int gauge_max_attempts = 100;

// Enumeration caps.
inline constexpr long long wreath_enumeration_cap = 1000000;   // n! * m^n
inline constexpr long long reynolds_group_cap = 100000;        // n! * m^n
inline constexpr long long monomial_count_cap = 100000;        // monomials at one degree

}  // namespace tol
}  // namespace quiverinv

#endif
