#include "quiverinv/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace quiverinv {

namespace {

double rep_scale(const RepPoint& p) {
    double s = 1.0;
    for (const SquareMatrix& a : p.x) s = std::max(s, frobenius_norm(a));
    return s;
}

bool lex_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

Complex principal_root(const Complex& value, int m) {
    if (m < 1) throw InputError("principal_root: m must be >= 1");
    if (m == 1) return value;
    double arg = std::arg(value);
    if (arg < 0) arg += 2.0 * std::numbers::pi;
    return std::polar(std::pow(std::abs(value), 1.0 / m), arg / m);
}

DiagonalizedRep diagonalize_generic(const RepPoint& p) {
    const GenericityReport gen = is_generic(p);
    if (!gen.generic) throw NotGeneric("diagonalize_generic: cycle product spectrum not generic");

    const int m = p.shape.m;
    const EigenDecomposition eig = eigen_diagonalize(cycle_product(p));

    // Gauge tuple (g, x_1 g, x_2 x_1 g, ...): component i+1 multiplies one
    // more x-factor on the left.
    std::vector<SquareMatrix> comps;
    comps.reserve(m);
    comps.push_back(eig.v);
    for (int i = 0; i + 1 < m; ++i) comps.push_back(mat_mul(p.x[i], comps.back()));
    return {GaugeElement(p.shape, std::move(comps)), SquareMatrix::diagonal(eig.lambda)};
}

CanonicalL to_canonical_L(const RepPoint& p) {
    const int m = p.shape.m;
    const int n = p.shape.n;
    DiagonalizedRep diag = diagonalize_generic(p);

    // Principal roots of the D-entries.
    std::vector<Complex> z(n);
    for (int i = 0; i < n; ++i) z[i] = principal_root(diag.d(i, i), m);

    // Sort order on z^m = D entries, then z (ties impossible for generic input).
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (diag.d(a, a) != diag.d(b, b)) return lex_less(diag.d(a, a), diag.d(b, b));
        return lex_less(z[a], z[b]);
    });

    // Compose: first the diagonalizing gauge, then (I, Z^-1, ..., Z^-(m-1))
    // spreading D back into m equal diagonal factors, then the sorting
    // permutation applied as a constant gauge.
    const SquareMatrix pmat = SquareMatrix::permutation(order);
    std::vector<Complex> zinv(n);
    for (int i = 0; i < n; ++i) zinv[i] = 1.0 / z[i];

    std::vector<SquareMatrix> witness;
    witness.reserve(m);
    SquareMatrix zpow = SquareMatrix::identity(n);  // Z^{-(k-1)}
    for (int k = 0; k < m; ++k) {
        witness.push_back(mat_mul(mat_mul(diag.gauge.g[k], zpow), pmat));
        if (k + 1 < m)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) zpow(i, j) *= zinv[j];
    }

    CanonicalL out;
    out.z.resize(n);
    for (int i = 0; i < n; ++i) out.z[i] = z[order[i]];
    out.witness = GaugeElement(p.shape, std::move(witness));

    // Witness soundness is part of the contract; verify before returning.
    const RepPoint gauged = act_gauge(out.witness, p);
    const RepPoint target = embed_L(LPoint{out.z}, m);
    double residual = 0.0;
    for (int i = 0; i < m; ++i)
        residual = std::max(residual, frobenius_norm(gauged.x[i] - target.x[i]));
    if (residual > tol::canonical_witness * rep_scale(p))
        throw ConvergenceFailure("to_canonical_L: witness residual too large");
    return out;
}

Z1NormalForm z1_normal_form(const DoubleRepPoint& p) {
    if (p.shape.n != 1) throw InputError("z1_normal_form: point must have n = 1");
    if (!in_moment_zero_set(p)) throw NotInZ1("z1_normal_form: moment equations violated");
    const int m = p.shape.m;

    Complex prod = 1.0;
    for (int i = 0; i < m; ++i) prod *= p.x[i](0, 0);
    const double scale = point_scale(p);
    if (std::abs(prod) <= tol::generic * scale)
        throw VanishingProduct("z1_normal_form: x-cycle product vanishes");

    const Complex d = principal_root(prod, m);
    const Complex e = p.x[0](0, 0) * p.y[0](0, 0) / d;

    // The gauge g_i = x_1...x_{i-1} / d^{i-1} must send the point to
    // (d, ..., d, e, ..., e); check it does.
    std::vector<SquareMatrix> gs;
    Complex acc = 1.0;
    for (int i = 0; i < m; ++i) {
        gs.push_back(SquareMatrix(1, {acc}));
        acc *= p.x[i](0, 0) / d;
    }
    const DoubleRepPoint moved = act_gauge_double(GaugeElement(p.shape, std::move(gs)), p);
    for (int i = 0; i < m; ++i) {
        if (std::abs(moved.x[i](0, 0) - d) > 1e-9 * scale ||
            std::abs(moved.y[i](0, 0) - e) > 1e-9 * scale)
            throw ConvergenceFailure("z1_normal_form: normal-form verification failed");
    }
    return {d, e};
}

CanonicalDouble canonicalize_double(const DoubleRepPoint& p) {
    if (!in_moment_zero_set(p))
        throw ResidualTooLarge("canonicalize_double: point violates the moment equations");
    const RepPoint xpart(p.shape, p.x);
    const CanonicalL canonical = to_canonical_L(xpart);
    const DoubleRepPoint moved = act_gauge_double(canonical.witness, p);

    // On the saturation the transported y-components are all diag(z') for a
    // single z': the residual stabilizer of a generic embedded L-point forces it.
    const int n = p.shape.n;
    const int m = p.shape.m;
    double offdiag = 0.0;
    double scale = 1.0;
    for (const SquareMatrix& y : moved.y) scale = std::max(scale, frobenius_norm(y));
    for (int c = 0; c < m; ++c)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double dev = (i == j) ? std::abs(moved.y[c](i, i) - moved.y[0](i, i))
                                            : std::abs(moved.y[c](i, j));
                offdiag = std::max(offdiag, dev);
            }

    CanonicalDouble out;
    out.offdiagonal_residual = offdiag / scale;
    out.z = canonical.z;
    if (offdiag <= tol::double_diag * scale) {
        out.status = SaturationStatus::OnSaturation;
        out.zp.resize(n);
        for (int i = 0; i < n; ++i) out.zp[i] = moved.y[0](i, i);
    } else {
        out.status = SaturationStatus::NonDiagonalResidue;
    }
    return out;
}

bool orbit_equal(const RepPoint& p, const RepPoint& q, double rel_tol) {
    if (p.shape != q.shape) return false;
    const CanonicalL cp = to_canonical_L(p);
    const CanonicalL cq = to_canonical_L(q);
    const double scale = std::max(rep_scale(p), rep_scale(q));
    return canonical_distance(cp.z, cq.z) <= rel_tol * scale;
}

double canonical_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) throw InputError("canonical_distance: size mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

namespace {

std::vector<std::pair<Complex, Complex>> wreath_normalized_pairs(const LLPoint& l, int m) {
    const std::size_t n = l.z.size();
    std::vector<std::pair<Complex, Complex>> pairs(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex zm = 1.0;
        for (int e = 0; e < m; ++e) zm *= l.z[i];
        const Complex pr = principal_root(zm, m);
        if (std::abs(l.z[i]) == 0.0) throw InputError("ll_orbit_distance: zero coordinate");
        const Complex twist = pr / l.z[i];  // the root of unity moving z to its principal leaf
        pairs[i] = {pr, l.zp[i] / twist};
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& p, const auto& q) {
        if (p.first.real() != q.first.real()) return p.first.real() < q.first.real();
        if (p.first.imag() != q.first.imag()) return p.first.imag() < q.first.imag();
        if (p.second.real() != q.second.real()) return p.second.real() < q.second.real();
        return p.second.imag() < q.second.imag();
    });
    return pairs;
}

}  // namespace

double ll_orbit_distance(const LLPoint& a, const LLPoint& b, int m) {
    if (a.z.size() != b.z.size()) throw InputError("ll_orbit_distance: size mismatch");
    const auto pa = wreath_normalized_pairs(a, m);
    const auto pb = wreath_normalized_pairs(b, m);
    double d = 0.0;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        d = std::max(d, std::abs(pa[i].first - pb[i].first));
        d = std::max(d, std::abs(pa[i].second - pb[i].second));
    }
    return d;
}

}  // namespace quiverinv
