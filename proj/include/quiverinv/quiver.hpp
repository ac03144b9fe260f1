#ifndef QUIVERINV_QUIVER_HPP
#define QUIVERINV_QUIVER_HPP

#include <cstdint>
#include <vector>

#include "quiverinv/linalg.hpp"

namespace quiverinv {

// Index conventions, fixed once for the whole repo: vertices live in Z/m,
// x_i is the arrow i -> i+1 and y_i the arrow i+1 -> i. A gauge element
// (g_1, ..., g_m) sends x_i to inv(g_{i+1}) * x_i * g_i and y_i to
// inv(g_i) * y_i * g_{i+1}, with g_{m+1} = g_1.

/// Cyclic quiver with m vertices, dimension n at every vertex.
struct QuiverShape {
    int m = 1;
    int n = 1;

    QuiverShape() = default;
    QuiverShape(int m_, int n_) : m(m_), n(n_) {
        if (m < 1 || n < 1) throw InputError("QuiverShape: m and n must be >= 1");
    }
    bool operator==(const QuiverShape&) const = default;
};

/// A point of the representation space: m matrices of size n.
struct RepPoint {
    QuiverShape shape;
    std::vector<SquareMatrix> x;

    RepPoint() = default;
    RepPoint(QuiverShape s, std::vector<SquareMatrix> xs);
};

/// A point of the cotangent space: m forward and m backward matrices.
struct DoubleRepPoint {
    QuiverShape shape;
    std::vector<SquareMatrix> x;
    std::vector<SquareMatrix> y;

    DoubleRepPoint() = default;
    DoubleRepPoint(QuiverShape s, std::vector<SquareMatrix> xs, std::vector<SquareMatrix> ys);
};

/// A gauge element: m invertible matrices.
struct GaugeElement {
    QuiverShape shape;
    std::vector<SquareMatrix> g;

    GaugeElement() = default;
    GaugeElement(QuiverShape s, std::vector<SquareMatrix> gs);
    static GaugeElement identity(QuiverShape s);
};

/// A diagonal point: coordinates z_1..z_n such that every component of the
/// embedded representation is diag(z).
struct LPoint {
    std::vector<Complex> z;
};

/// A pair of diagonal points (z for the x side, zp for the y side).
struct LLPoint {
    std::vector<Complex> z;
    std::vector<Complex> zp;
};

RepPoint act_gauge(const GaugeElement& g, const RepPoint& p);
DoubleRepPoint act_gauge_double(const GaugeElement& g, const DoubleRepPoint& p);

/// Componentwise product (h*g)_i = h_i * g_i, so that
/// act(g, act(h, p)) == act(compose(h, g), p).
GaugeElement compose(const GaugeElement& h, const GaugeElement& g);

/// The product x_m * x_{m-1} * ... * x_1, in exactly this order.
SquareMatrix cycle_product(const RepPoint& p);

/// Moment-map residuals: r_1 = y_1 x_1 - x_m y_m and
/// r_i = y_i x_i - x_{i-1} y_{i-1} for i = 2..m.
std::vector<SquareMatrix> moment_residual(const DoubleRepPoint& p);
double moment_residual_norm(const DoubleRepPoint& p);
/// max(1, largest component Frobenius norm). The moment residual is quadratic
/// in the components, so membership compares against tol * scale^2.
double point_scale(const DoubleRepPoint& p);
bool in_moment_zero_set(const DoubleRepPoint& p, double rel_tol = tol::moment);

struct GenericityReport {
    bool generic = false;
    double min_eigenvalue_abs = 0.0;  // margin against zero eigenvalues
    double min_eigenvalue_gap = 0.0;  // margin against collisions
    double threshold = 0.0;           // tol * ||cycle product||_F
};

/// A point is generic when its cycle product has pairwise distinct nonzero
/// eigenvalues, both margins measured against tol * ||cycle product||_F.
GenericityReport is_generic(const RepPoint& p, double tol = tol::generic);

RepPoint embed_L(const LPoint& l, int m);
DoubleRepPoint embed_LL(const LLPoint& l, int m);

/// Entries i.i.d. standard complex Gaussian from the named splitmix64 stream.
RepPoint random_rep(QuiverShape shape, std::uint64_t seed);
LPoint random_L(int n, std::uint64_t seed);
LLPoint random_LL(int n, std::uint64_t seed);

/// Gaussian matrices rejection-resampled until condition_estimate < 1e6;
/// throws SamplingFailure after 100 attempts on any component.
GaugeElement random_gauge(QuiverShape shape, std::uint64_t seed);

/// A random gauge applied to a random embedded LL point. In the moment zero
/// set by construction (diagonal matrices commute exactly, and the set is
/// gauge stable).
DoubleRepPoint random_Z_point(QuiverShape shape, std::uint64_t seed);

}  // namespace quiverinv

#endif
