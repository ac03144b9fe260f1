#include "quiverinv/wreath.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace quiverinv {

namespace {

bool is_permutation(const std::vector<int>& sigma) {
    std::vector<char> seen(sigma.size(), 0);
    for (int v : sigma) {
        if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

WreathElement::WreathElement(int n_, int m_, std::vector<int> sigma_, std::vector<int> a_)
    : n(n_), m(m_), sigma(std::move(sigma_)), a(std::move(a_)) {
    if (n < 1 || m < 1) throw InputError("WreathElement: n and m must be >= 1");
    if (static_cast<int>(sigma.size()) != n || static_cast<int>(a.size()) != n)
        throw InputError("WreathElement: sigma and a must have length n");
    if (!is_permutation(sigma)) throw InputError("WreathElement: sigma is not a permutation");
    for (int& e : a) {
        e %= m;
        if (e < 0) e += m;
    }
}

WreathElement WreathElement::identity(int n, int m) {
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    return WreathElement(n, m, std::move(sigma), std::vector<int>(n, 0));
}

WreathElement wreath_compose(const WreathElement& u, const WreathElement& v) {
    if (u.n != v.n || u.m != v.m) throw InputError("wreath_compose: mixed groups");
    std::vector<int> sigma(u.n), a(u.n);
    for (int j = 0; j < u.n; ++j) {
        sigma[j] = u.sigma[v.sigma[j]];
        a[j] = (u.a[v.sigma[j]] + v.a[j]) % u.m;
    }
    return WreathElement(u.n, u.m, std::move(sigma), std::move(a));
}

WreathElement wreath_inverse(const WreathElement& u) {
    std::vector<int> sigma_inv(u.n), a(u.n);
    for (int j = 0; j < u.n; ++j) sigma_inv[u.sigma[j]] = j;
    for (int j = 0; j < u.n; ++j) a[j] = (u.m - u.a[sigma_inv[j]]) % u.m;
    return WreathElement(u.n, u.m, std::move(sigma_inv), std::move(a));
}

long long wreath_order(int n, int m) {
    long long order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    for (int i = 0; i < n; ++i) {
        order *= m;
        if (order > tol::wreath_enumeration_cap) return order;  // caller checks
    }
    return order;
}

std::vector<WreathElement> wreath_enumerate(int n, int m) {
    if (wreath_order(n, m) > tol::wreath_enumeration_cap)
        throw TooLarge("wreath_enumerate: group order exceeds cap");
    std::vector<WreathElement> out;
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    do {
        std::vector<int> a(n, 0);
        while (true) {
            out.emplace_back(n, m, sigma, a);
            int pos = n - 1;
            while (pos >= 0 && ++a[pos] == m) a[pos--] = 0;
            if (pos < 0) break;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

GaugeElement to_gauge(const WreathElement& w) {
    const SquareMatrix p = SquareMatrix::permutation(w.sigma);
    std::vector<SquareMatrix> comps;
    comps.reserve(w.m);
    for (int k = 1; k <= w.m; ++k) {
        std::vector<Complex> d(w.n);
        for (int j = 0; j < w.n; ++j) {
            const int e = (w.a[j] * (k - 1)) % w.m;
            d[j] = std::polar(1.0, 2.0 * std::numbers::pi * e / w.m);
        }
        comps.push_back(mat_mul(p, SquareMatrix::diagonal(d)));
    }
    return GaugeElement(QuiverShape(w.m, w.n), std::move(comps));
}

namespace {

// Extracts the diagonal coordinate vector from a gauged embedded point whose
// components must all be equal and diagonal to tolerance.
std::vector<Complex> extract_diagonal(const std::vector<SquareMatrix>& comps, double scale) {
    const int n = comps.front().n();
    const double bound = tol::wreath_extraction * std::max(scale, 1.0);
    for (const SquareMatrix& c : comps) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double dev = (i == j) ? std::abs(c(i, j) - comps.front()(i, i))
                                            : std::abs(c(i, j));
                if (dev > bound)
                    throw StabilityViolation("gauged L-point left the embedded subspace");
            }
    }
    std::vector<Complex> z(n);
    for (int i = 0; i < n; ++i) z[i] = comps.front()(i, i);
    return z;
}

double coords_scale(const std::vector<Complex>& z) {
    double s = 0.0;
    for (const Complex& c : z) s = std::max(s, std::abs(c));
    return s;
}

}  // namespace

LPoint act_on_L(const WreathElement& w, const LPoint& l) {
    if (static_cast<int>(l.z.size()) != w.n) throw InputError("act_on_L: size mismatch");
    const RepPoint moved = act_gauge(to_gauge(w), embed_L(l, w.m));
    return LPoint{extract_diagonal(moved.x, coords_scale(l.z))};
}

LLPoint act_on_LL(const WreathElement& w, const LLPoint& l) {
    if (static_cast<int>(l.z.size()) != w.n || static_cast<int>(l.zp.size()) != w.n)
        throw InputError("act_on_LL: size mismatch");
    const DoubleRepPoint moved = act_gauge_double(to_gauge(w), embed_LL(l, w.m));
    const double scale = std::max(coords_scale(l.z), coords_scale(l.zp));
    return LLPoint{extract_diagonal(moved.x, scale), extract_diagonal(moved.y, scale)};
}

SquareMatrix action_matrix(const WreathElement& w, WreathRep rep) {
    const int n = w.n;
    const int dim = rep == WreathRep::L ? n : 2 * n;
    SquareMatrix mat(dim);
    for (int col = 0; col < dim; ++col) {
        if (rep == WreathRep::L) {
            LPoint basis{std::vector<Complex>(n, 0.0)};
            basis.z[col] = 1.0;
            const LPoint image = act_on_L(w, basis);
            for (int row = 0; row < n; ++row) mat(row, col) = image.z[row];
        } else {
            LLPoint basis{std::vector<Complex>(n, 0.0), std::vector<Complex>(n, 0.0)};
            if (col < n)
                basis.z[col] = 1.0;
            else
                basis.zp[col - n] = 1.0;
            const LLPoint image = act_on_LL(w, basis);
            for (int row = 0; row < n; ++row) mat(row, col) = image.z[row];
            for (int row = 0; row < n; ++row) mat(n + row, col) = image.zp[row];
        }
    }
    return mat;
}

MolienSeries molien(const std::vector<WreathElement>& elements, WreathRep rep, int max_degree) {
    if (elements.empty()) throw InputError("molien: empty element list");
    if (max_degree < 0) throw InputError("molien: negative degree");
    if (static_cast<long long>(elements.size()) > tol::wreath_enumeration_cap)
        throw TooLarge("molien: group too large");

    const long long order = static_cast<long long>(elements.size());
    std::vector<Complex> acc(max_degree + 1, 0.0);
    for (const WreathElement& w : elements) {
        const SquareMatrix mat = action_matrix(w, rep);
        const int dim = mat.n();
        // det(I - t M) = 1 + a_1 t + ... from the charpoly of M.
        const UniPoly cp = charpoly(mat);
        std::vector<Complex> det_poly(dim + 1);
        for (int k = 0; k <= dim; ++k) det_poly[k] = cp.coefficients[dim - k];
        // Power-series inverse of det_poly (constant term is 1).
        std::vector<Complex> inv(max_degree + 1, 0.0);
        inv[0] = 1.0;
        for (int k = 1; k <= max_degree; ++k) {
            Complex s = 0.0;
            for (int j = 1; j <= std::min(k, dim); ++j) s += det_poly[j] * inv[k - j];
            inv[k] = -s;
        }
        for (int k = 0; k <= max_degree; ++k) acc[k] += inv[k];
    }

    MolienSeries series;
    series.variable_count = 1;
    series.coefficients.reserve(max_degree + 1);
    for (int k = 0; k <= max_degree; ++k) {
        const Complex mean = acc[k] / static_cast<double>(order);
        const double scaled = mean.real() * static_cast<double>(order);
        const long long numerator = std::llround(scaled);
        const BigRational value(numerator, order);
        const double err = std::hypot(mean.real() - value.to_double(), mean.imag());
        if (err > tol::molien_guard)
            throw ReconstructionFailure("molien: coefficient too far from the rational lattice");
        series.coefficients.push_back(value);
    }
    if (!(series.coefficients.front() == BigRational(1)))
        throw ReconstructionFailure("molien: constant term is not 1");
    for (const BigRational& c : series.coefficients)
        if (c < BigRational(0)) throw ReconstructionFailure("molien: negative coefficient");
    return series;
}

}  // namespace quiverinv
