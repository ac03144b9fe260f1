#include "quiverinv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace quiverinv {

SquareMatrix::SquareMatrix(int n, std::vector<Complex> entries) : n_(n), entries_(std::move(entries)) {
    if (n < 1) throw InputError("SquareMatrix: dimension must be >= 1");
    if (entries_.size() != static_cast<std::size_t>(n) * n)
        throw InputError("SquareMatrix: entry count must be n^2");
    for (const Complex& e : entries_)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw InputError("SquareMatrix: entries must be finite");
}

SquareMatrix SquareMatrix::identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

SquareMatrix SquareMatrix::diagonal(const std::vector<Complex>& d) {
    SquareMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n(); ++i) m(i, i) = d[i];
    return m;
}

SquareMatrix SquareMatrix::permutation(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    SquareMatrix m(n);
    for (int j = 0; j < n; ++j) {
        if (sigma[j] < 0 || sigma[j] >= n) throw InputError("permutation: image out of range");
        m(sigma[j], j) = 1.0;
    }
    return m;
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n() != b.n()) throw InputError("matrix add: dimension mismatch");
    SquareMatrix c(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n() != b.n()) throw InputError("matrix sub: dimension mismatch");
    SquareMatrix c(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

SquareMatrix operator*(const Complex& s, const SquareMatrix& a) {
    SquareMatrix c(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) c(i, j) = s * a(i, j);
    return c;
}

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n() != b.n()) throw InputError("mat_mul: dimension mismatch");
    const int n = a.n();
    SquareMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < n; ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

Complex trace(const SquareMatrix& a) {
    Complex s = 0.0;
    for (int i = 0; i < a.n(); ++i) s += a(i, i);
    return s;
}

double frobenius_norm(const SquareMatrix& a) {
    double s = 0.0;
    for (const Complex& e : a.entries()) s += std::norm(e);
    return std::sqrt(s);
}

double max_abs(const SquareMatrix& a) {
    double s = 0.0;
    for (const Complex& e : a.entries()) s = std::max(s, std::abs(e));
    return s;
}

namespace {

// In-place LU with partial pivoting. Returns the permutation sign, fills perm
// with row swaps. When clamp_tiny_pivots is set, near-zero pivots are replaced
// by a tiny multiple of the norm instead of throwing; inverse iteration on
// (A - lambda*I) relies on this.
int lu_factor(SquareMatrix& a, std::vector<int>& perm, double pivot_floor, bool clamp_tiny_pivots) {
    const int n = a.n();
    perm.resize(n);
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best <= pivot_floor) {
            if (!clamp_tiny_pivots) throw SingularMatrix("LU: pivot below singularity tolerance");
            a(piv, col) += Complex(pivot_floor > 0 ? pivot_floor : 1e-300, 0.0);
        }
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            sign = -sign;
        }
        perm[col] = piv;
        const Complex d = a(col, col);
        for (int r = col + 1; r < n; ++r) {
            const Complex f = a(r, col) / d;
            a(r, col) = f;
            for (int j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return sign;
}

void lu_solve(const SquareMatrix& lu, const std::vector<int>& perm, std::vector<Complex>& b) {
    const int n = lu.n();
    for (int i = 0; i < n; ++i)
        if (perm[i] != i) std::swap(b[i], b[perm[i]]);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) b[i] -= lu(i, j) * b[j];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) b[i] -= lu(i, j) * b[j];
        b[i] /= lu(i, i);
    }
}

}  // namespace

Complex determinant(const SquareMatrix& a) {
    SquareMatrix lu = a;
    std::vector<int> perm;
    const double floor = tol::singular_pivot * frobenius_norm(a);
    Complex det;
    try {
        const int sign = lu_factor(lu, perm, floor, false);
        det = Complex(sign, 0.0);
        for (int i = 0; i < a.n(); ++i) det *= lu(i, i);
    } catch (const SingularMatrix&) {
        det = 0.0;
    }
    return det;
}

SquareMatrix mat_inverse(const SquareMatrix& a) {
    const int n = a.n();
    const double norm = frobenius_norm(a);
    SquareMatrix lu = a;
    std::vector<int> perm;
    lu_factor(lu, perm, tol::singular_pivot * norm, false);

    SquareMatrix inv(n);
    std::vector<Complex> col(n);
    for (int j = 0; j < n; ++j) {
        std::fill(col.begin(), col.end(), Complex(0.0));
        col[j] = 1.0;
        lu_solve(lu, perm, col);
        for (int i = 0; i < n; ++i) inv(i, j) = col[i];
    }

    const double residual = frobenius_norm(mat_mul(a, inv) - SquareMatrix::identity(n));
    if (residual > tol::inverse_residual * n * std::max(norm, 1.0))
        throw SingularMatrix("mat_inverse: residual check failed (ill-conditioned input)");
    return inv;
}

double condition_estimate(const SquareMatrix& a) {
    return frobenius_norm(a) * frobenius_norm(mat_inverse(a));
}

Complex UniPoly::eval(const Complex& t) const {
    Complex v = 0.0;
    for (std::size_t k = coefficients.size(); k-- > 0;) v = v * t + coefficients[k];
    return v;
}

UniPoly UniPoly::derivative() const {
    UniPoly d;
    for (std::size_t k = 1; k < coefficients.size(); ++k)
        d.coefficients.push_back(static_cast<double>(k) * coefficients[k]);
    if (d.coefficients.empty()) d.coefficients.push_back(0.0);
    return d;
}

UniPoly charpoly(const SquareMatrix& a) {
    const int n = a.n();
    UniPoly p;
    p.coefficients.assign(static_cast<std::size_t>(n) + 1, Complex(0.0));
    p.coefficients[n] = 1.0;
    // Faddeev-LeVerrier: with M_0 = I, repeat c_{n-k} = -tr(A*M_{k-1})/k and
    // M_k = A*M_{k-1} + c_{n-k} I. Division-free apart from the integer /k.
    SquareMatrix m = SquareMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        SquareMatrix am = mat_mul(a, m);
        const Complex c = -trace(am) / static_cast<double>(k);
        p.coefficients[n - k] = c;
        m = am;
        for (int i = 0; i < n; ++i) m(i, i) += c;
    }
    return p;
}

std::vector<Complex> poly_roots(const UniPoly& p) {
    if (p.degree() < 1) throw InputError("poly_roots: degree must be >= 1");
    if (std::abs(p.coefficients.back()) == 0.0)
        throw InputError("poly_roots: leading coefficient must be nonzero");

    // Exact zero roots come from trailing zero coefficients; factor them out
    // so they are returned exactly rather than approached by iteration.
    UniPoly q = p;
    std::vector<Complex> zero_roots;
    while (q.coefficients.size() > 1 && std::abs(q.coefficients.front()) == 0.0) {
        zero_roots.push_back(0.0);
        q.coefficients.erase(q.coefficients.begin());
    }
    if (q.degree() == 0) return zero_roots;
    const int deg = q.degree();

    // Work on the monic normalization.
    const Complex lead = q.coefficients.back();
    for (Complex& c : q.coefficients) c /= lead;
    const UniPoly dq = q.derivative();

    double maxcoeff = 0.0;
    for (const Complex& c : p.coefficients) maxcoeff = std::max(maxcoeff, std::abs(c));

    // Perturbed-circle initial guesses inside the Cauchy bound.
    double radius = 0.0;
    for (int k = 0; k < deg; ++k) radius = std::max(radius, std::abs(q.coefficients[k]));
    radius = 1.0 + radius;
    std::vector<Complex> z(deg);
    for (int i = 0; i < deg; ++i) {
        const double angle = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.25) / deg + 0.42;
        z[i] = std::polar(0.5 * radius * (1.0 + 0.05 * i / std::max(1, deg)), angle);
    }

    auto residual_ok = [&](const Complex& root) {
        const double bound = tol::root_residual * std::max(maxcoeff, 1e-300) *
                             std::pow(std::max(1.0, std::abs(root)), p.degree());
        return std::abs(p.eval(root)) <= bound;
    };

    // Iterate until the sweep stagnates, not merely until the residual bound
    // is met: multiple roots pass the residual test long before the iterates
    // stop resolving the cluster, and downstream gap tests need the extra
    // digits.
    for (int iter = 0; iter < tol::root_max_iter; ++iter) {
        double max_step = 0.0;
        double max_mag = 1.0;
        for (int i = 0; i < deg; ++i) {
            const Complex pv = q.eval(z[i]);
            const Complex dv = dq.eval(z[i]);
            if (std::abs(pv) == 0.0) continue;
            Complex w = (std::abs(dv) > 0.0) ? pv / dv : Complex(1.0, 0.0);
            Complex s = 0.0;
            for (int j = 0; j < deg; ++j) {
                if (j == i) continue;
                const Complex d = z[i] - z[j];
                if (std::abs(d) > 1e-300) s += 1.0 / d;
            }
            const Complex denom = 1.0 - w * s;
            const Complex step = (std::abs(denom) > 1e-300) ? w / denom : w;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step));
            max_mag = std::max(max_mag, std::abs(z[i]));
        }
        if (max_step < 1e-13 * max_mag) break;
    }
    for (int i = 0; i < deg; ++i)
        if (!residual_ok(z[i])) throw ConvergenceFailure("poly_roots: Aberth iteration did not converge");
    z.insert(z.end(), zero_roots.begin(), zero_roots.end());
    return z;
}

EigenDecomposition eigen_diagonalize(const SquareMatrix& a) {
    const int n = a.n();
    const double norm = frobenius_norm(a);

    std::vector<Complex> lambda = poly_roots(charpoly(a));
    std::sort(lambda.begin(), lambda.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });

    double min_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) min_gap = std::min(min_gap, std::abs(lambda[i] - lambda[j]));
    if (n > 1 && min_gap <= tol::eigen_gap * norm)
        throw ClusteredSpectrum("eigen_diagonalize: eigenvalue gap below tolerance");

    SquareMatrix v(n);
    const double floor = 1e-15 * std::max(norm, 1.0);
    for (int e = 0; e < n; ++e) {
        SquareMatrix shifted = a;
        for (int i = 0; i < n; ++i) shifted(i, i) -= lambda[e];
        std::vector<int> perm;
        lu_factor(shifted, perm, floor, true);

        // Deterministic start vector, then one refinement pass.
        std::vector<Complex> x(n);
        for (int i = 0; i < n; ++i) x[i] = Complex(1.0, 0.3 + 0.1 * i);
        for (int pass = 0; pass < 2; ++pass) {
            lu_solve(shifted, perm, x);
            double nx = 0.0;
            for (const Complex& c : x) nx += std::norm(c);
            nx = std::sqrt(nx);
            if (nx == 0.0) throw ConvergenceFailure("eigen_diagonalize: inverse iteration collapsed");
            for (Complex& c : x) c /= nx;
        }

        // Rotate so the largest-magnitude entry is real positive.
        int arg_max = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(x[i]) > std::abs(x[arg_max])) arg_max = i;
        const Complex phase = std::conj(x[arg_max]) / std::abs(x[arg_max]);
        for (int i = 0; i < n; ++i) v(i, e) = x[i] * phase;
    }

    // A multiple eigenvalue can slip past the gap check because the root
    // finder splits it by ~sqrt(residual tolerance); it resurfaces here as a
    // (near-)singular eigenvector matrix.
    SquareMatrix vinv(n);
    try {
        vinv = mat_inverse(v);
    } catch (const SingularMatrix&) {
        throw ClusteredSpectrum("eigen_diagonalize: eigenvector basis is not resolvable");
    }
    const SquareMatrix rec = mat_mul(mat_mul(v, SquareMatrix::diagonal(lambda)), vinv);
    if (frobenius_norm(rec - a) > tol::eigen_residual * std::max(norm, 1.0))
        throw ConvergenceFailure("eigen_diagonalize: reconstruction residual too large");
    return {std::move(v), std::move(lambda)};
}

}  // namespace quiverinv
