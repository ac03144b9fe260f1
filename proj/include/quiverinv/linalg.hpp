#ifndef QUIVERINV_LINALG_HPP
#define QUIVERINV_LINALG_HPP

#include <complex>
#include <vector>

#include "quiverinv/errors.hpp"
#include "quiverinv/tolerances.hpp"

namespace quiverinv {

using Complex = std::complex<double>;

/// Dense complex square matrix, row-major. Immutable by convention after
/// construction; all operations below are pure functions.
class SquareMatrix {
public:
    SquareMatrix() : n_(0) {}
    explicit SquareMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
        if (n < 1) throw InputError("SquareMatrix: dimension must be >= 1");
    }
    SquareMatrix(int n, std::vector<Complex> entries);

    static SquareMatrix identity(int n);
    static SquareMatrix diagonal(const std::vector<Complex>& d);
    /// Permutation matrix P with P*e_j = e_{sigma[j]} (0-based images).
    static SquareMatrix permutation(const std::vector<int>& sigma);

    int n() const { return n_; }
    const Complex& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    Complex& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<Complex>& entries() const { return entries_; }

    bool operator==(const SquareMatrix& o) const = default;

private:
    int n_;
    std::vector<Complex> entries_;
};

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator*(const Complex& s, const SquareMatrix& a);

/// Exact triple-loop product; the inner sum runs over k ascending, so results
/// are bit-reproducible for fixed inputs.
SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b);

Complex trace(const SquareMatrix& a);
double frobenius_norm(const SquareMatrix& a);
double max_abs(const SquareMatrix& a);

/// LU determinant (product of pivots with sign).
Complex determinant(const SquareMatrix& a);

/// Inverse via LU with partial pivoting. Throws SingularMatrix when a pivot
/// falls below tol::singular_pivot * ||a||_F or when the residual
/// ||a*inv - I||_F exceeds tol::inverse_residual * n * ||a||_F.
SquareMatrix mat_inverse(const SquareMatrix& a);

/// Rough condition estimate ||a||_F * ||inv(a)||_F.
double condition_estimate(const SquareMatrix& a);

/// Univariate polynomial with degree-ascending coefficients.
/// Invariant: coefficients.size() == degree + 1 and the leading coefficient
/// is nonzero unless the polynomial is identically zero.
struct UniPoly {
    std::vector<Complex> coefficients;  // coefficients[k] multiplies t^k

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    Complex eval(const Complex& t) const;
    UniPoly derivative() const;
};

/// Coefficients of det(tI - a) by the Faddeev-LeVerrier recurrence. Monic of
/// degree n, convention det(tI - a) = t^n - tr(a) t^{n-1} + ... + (-1)^n det(a).
UniPoly charpoly(const SquareMatrix& a);

/// All roots, with multiplicity, by Aberth-Ehrlich simultaneous iteration from
/// perturbed-circle initial guesses. Accepts once every root satisfies
/// |p(root)| <= tol::root_residual * maxcoeff * max(1,|root|)^deg; throws
/// ConvergenceFailure after tol::root_max_iter sweeps.
std::vector<Complex> poly_roots(const UniPoly& p);

struct EigenDecomposition {
    SquareMatrix v;               // columns are eigenvectors
    std::vector<Complex> lambda;  // matching eigenvalues, sorted by (Re, Im)
};

/// Eigendecomposition for matrices with pairwise distinct eigenvalues:
/// a = v * diag(lambda) * inv(v). Eigenvalues come from poly_roots(charpoly(a));
/// eigenvectors from inverse iteration with one refinement pass. Each column
/// is unit-norm with its largest-magnitude entry rotated real positive.
/// Throws ClusteredSpectrum if the minimum pairwise gap is below
/// tol::eigen_gap * ||a||_F.
EigenDecomposition eigen_diagonalize(const SquareMatrix& a);

}  // namespace quiverinv

#endif
