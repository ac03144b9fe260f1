#ifndef QUIVERINV_NORMAL_FORM_HPP
#define QUIVERINV_NORMAL_FORM_HPP

#include <vector>

#include "quiverinv/quiver.hpp"

namespace quiverinv {

/// Canonical orbit representative in L_n, with the gauge that realizes it:
/// act_gauge(witness, original) == embed_L(z) to tolerance. Coordinates are
/// sorted by (Re z^m, Im z^m), ties broken by (Re z, Im z).
struct CanonicalL {
    std::vector<Complex> z;
    GaugeElement witness;
};

/// Scalar (n = 1) normal form on the moment zero set: every x-component
/// gauged to the common value d, every y-component to e.
struct Z1NormalForm {
    Complex d;
    Complex e;
};

/// Gauges a generic point to the form (I, ..., I, D) with D diagonal, using
/// the tuple (g, x_1 g, x_2 x_1 g, ...) built from the eigenvector matrix g
/// of the cycle product. Returns the gauge and D.
struct DiagonalizedRep {
    GaugeElement gauge;
    SquareMatrix d;
};
DiagonalizedRep diagonalize_generic(const RepPoint& p);

/// Full canonicalization: diagonalize, take principal m-th roots of the
/// D-entries (argument in [0, 2*pi/m)), slide the roots evenly around the
/// cycle, and sort. Throws NotGeneric on non-generic input.
CanonicalL to_canonical_L(const RepPoint& p);

/// n = 1 normal form: d is the principal m-th root of x_1...x_m, e = x_1 y_1 / d.
/// Requires the moment equations to tolerance (NotInZ1) and a nonvanishing
/// product (VanishingProduct).
Z1NormalForm z1_normal_form(const DoubleRepPoint& p);

enum class SaturationStatus {
    OnSaturation,        // transported y-part is diagonal: point recovered
    NonDiagonalResidue,  // valid moment-zero point, but off the L x L saturation
};

/// Double canonicalization on the gauge saturation of L x L: gauge the x-part
/// to canonical form and transport the y-part along. A non-diagonal
/// transported y is a reported outcome (the moment zero set is bigger than
/// the saturation), not an error.
struct CanonicalDouble {
    SaturationStatus status = SaturationStatus::NonDiagonalResidue;
    std::vector<Complex> z;
    std::vector<Complex> zp;
    double offdiagonal_residual = 0.0;  // relative, vs. the diagonality threshold
};
CanonicalDouble canonicalize_double(const DoubleRepPoint& p);

/// Generic points are in the same gauge orbit iff their canonical forms agree.
bool orbit_equal(const RepPoint& p, const RepPoint& q, double rel_tol = tol::orbit_match);

/// Max entrywise distance between canonical coordinate vectors.
double canonical_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

/// Principal m-th root: the root with argument in [0, 2*pi/m). Points with
/// arg exactly 0 sit on the branch cut, where the canonical form is
/// discontinuous; randomized suites use seeds checked to avoid it.
Complex principal_root(const Complex& value, int m);

/// Distance between two coordinate pairs up to the wreath action: each
/// (z_i, zp_i) is twisted so arg(z_i) lands in [0, 2*pi/m) (zp picks up the
/// opposite twist), both lists are sorted by the canonical key, then compared
/// entrywise. Requires all z_i nonzero.
double ll_orbit_distance(const LLPoint& a, const LLPoint& b, int m);

}  // namespace quiverinv

#endif
