#include "quiverinv/quiver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quiverinv/rng.hpp"

namespace quiverinv {

namespace {

void check_components(const QuiverShape& s, const std::vector<SquareMatrix>& v, const char* what) {
    if (static_cast<int>(v.size()) != s.m) throw InputError(std::string(what) + ": expected m matrices");
    for (const SquareMatrix& a : v)
        if (a.n() != s.n) throw InputError(std::string(what) + ": component dimension mismatch");
}

}  // namespace

RepPoint::RepPoint(QuiverShape s, std::vector<SquareMatrix> xs) : shape(s), x(std::move(xs)) {
    check_components(shape, x, "RepPoint");
}

DoubleRepPoint::DoubleRepPoint(QuiverShape s, std::vector<SquareMatrix> xs, std::vector<SquareMatrix> ys)
    : shape(s), x(std::move(xs)), y(std::move(ys)) {
    check_components(shape, x, "DoubleRepPoint.x");
    check_components(shape, y, "DoubleRepPoint.y");
}

GaugeElement::GaugeElement(QuiverShape s, std::vector<SquareMatrix> gs) : shape(s), g(std::move(gs)) {
    check_components(shape, g, "GaugeElement");
}

GaugeElement GaugeElement::identity(QuiverShape s) {
    return GaugeElement(s, std::vector<SquareMatrix>(s.m, SquareMatrix::identity(s.n)));
}

RepPoint act_gauge(const GaugeElement& g, const RepPoint& p) {
    if (g.shape != p.shape) throw InputError("act_gauge: shape mismatch");
    const int m = p.shape.m;
    std::vector<SquareMatrix> ginv;
    ginv.reserve(m);
    for (const SquareMatrix& gi : g.g) ginv.push_back(mat_inverse(gi));
    std::vector<SquareMatrix> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i)
        out.push_back(mat_mul(ginv[(i + 1) % m], mat_mul(p.x[i], g.g[i])));
    return RepPoint(p.shape, std::move(out));
}

DoubleRepPoint act_gauge_double(const GaugeElement& g, const DoubleRepPoint& p) {
    if (g.shape != p.shape) throw InputError("act_gauge_double: shape mismatch");
    const int m = p.shape.m;
    std::vector<SquareMatrix> ginv;
    ginv.reserve(m);
    for (const SquareMatrix& gi : g.g) ginv.push_back(mat_inverse(gi));
    std::vector<SquareMatrix> xs, ys;
    xs.reserve(m);
    ys.reserve(m);
    for (int i = 0; i < m; ++i)
        xs.push_back(mat_mul(ginv[(i + 1) % m], mat_mul(p.x[i], g.g[i])));
    for (int i = 0; i < m; ++i)
        ys.push_back(mat_mul(ginv[i], mat_mul(p.y[i], g.g[(i + 1) % m])));
    return DoubleRepPoint(p.shape, std::move(xs), std::move(ys));
}

GaugeElement compose(const GaugeElement& h, const GaugeElement& g) {
    if (h.shape != g.shape) throw InputError("compose: shape mismatch");
    std::vector<SquareMatrix> out;
    out.reserve(h.shape.m);
    for (int i = 0; i < h.shape.m; ++i) out.push_back(mat_mul(h.g[i], g.g[i]));
    return GaugeElement(h.shape, std::move(out));
}

SquareMatrix cycle_product(const RepPoint& p) {
    SquareMatrix prod = SquareMatrix::identity(p.shape.n);
    for (int i = 0; i < p.shape.m; ++i) prod = mat_mul(p.x[i], prod);
    return prod;
}

std::vector<SquareMatrix> moment_residual(const DoubleRepPoint& p) {
    const int m = p.shape.m;
    std::vector<SquareMatrix> r;
    r.reserve(m);
    for (int i = 0; i < m; ++i) {
        const int prev = (i + m - 1) % m;
        r.push_back(mat_mul(p.y[i], p.x[i]) - mat_mul(p.x[prev], p.y[prev]));
    }
    return r;
}

double moment_residual_norm(const DoubleRepPoint& p) {
    double worst = 0.0;
    for (const SquareMatrix& r : moment_residual(p)) worst = std::max(worst, frobenius_norm(r));
    return worst;
}

double point_scale(const DoubleRepPoint& p) {
    double s = 1.0;
    for (const SquareMatrix& a : p.x) s = std::max(s, frobenius_norm(a));
    for (const SquareMatrix& a : p.y) s = std::max(s, frobenius_norm(a));
    return s;
}

bool in_moment_zero_set(const DoubleRepPoint& p, double rel_tol) {
    return moment_residual_norm(p) <= rel_tol * point_scale(p) * point_scale(p);
}

GenericityReport is_generic(const RepPoint& p, double tol) {
    const SquareMatrix prod = cycle_product(p);
    const int n = p.shape.n;
    GenericityReport rep;
    rep.threshold = tol * frobenius_norm(prod);

    std::vector<Complex> lambda = poly_roots(charpoly(prod));
    rep.min_eigenvalue_abs = std::numeric_limits<double>::infinity();
    rep.min_eigenvalue_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        rep.min_eigenvalue_abs = std::min(rep.min_eigenvalue_abs, std::abs(lambda[i]));
        for (int j = i + 1; j < n; ++j)
            rep.min_eigenvalue_gap = std::min(rep.min_eigenvalue_gap, std::abs(lambda[i] - lambda[j]));
    }
    rep.generic = rep.min_eigenvalue_abs > rep.threshold && rep.min_eigenvalue_gap > rep.threshold;
    return rep;
}

RepPoint embed_L(const LPoint& l, int m) {
    const SquareMatrix d = SquareMatrix::diagonal(l.z);
    return RepPoint(QuiverShape(m, static_cast<int>(l.z.size())), std::vector<SquareMatrix>(m, d));
}

DoubleRepPoint embed_LL(const LLPoint& l, int m) {
    if (l.z.size() != l.zp.size()) throw InputError("embed_LL: coordinate lists must have equal length");
    const SquareMatrix dz = SquareMatrix::diagonal(l.z);
    const SquareMatrix dzp = SquareMatrix::diagonal(l.zp);
    return DoubleRepPoint(QuiverShape(m, static_cast<int>(l.z.size())),
                          std::vector<SquareMatrix>(m, dz), std::vector<SquareMatrix>(m, dzp));
}

namespace {

SquareMatrix random_matrix(int n, SplitMix64& rng) {
    SquareMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng.complex_gaussian();
    return a;
}

}  // namespace

RepPoint random_rep(QuiverShape shape, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<SquareMatrix> xs;
    xs.reserve(shape.m);
    for (int i = 0; i < shape.m; ++i) xs.push_back(random_matrix(shape.n, rng));
    return RepPoint(shape, std::move(xs));
}

LPoint random_L(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    LPoint l;
    l.z.reserve(n);
    for (int i = 0; i < n; ++i) l.z.push_back(rng.complex_gaussian());
    return l;
}

LLPoint random_LL(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    LLPoint l;
    l.z.reserve(n);
    l.zp.reserve(n);
    for (int i = 0; i < n; ++i) l.z.push_back(rng.complex_gaussian());
    for (int i = 0; i < n; ++i) l.zp.push_back(rng.complex_gaussian());
    return l;
}

GaugeElement random_gauge(QuiverShape shape, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<SquareMatrix> gs;
    gs.reserve(shape.m);
    for (int i = 0; i < shape.m; ++i) {
        bool accepted = false;
        for (int attempt = 0; attempt < tol::gauge_max_attempts; ++attempt) {
            SquareMatrix cand = random_matrix(shape.n, rng);
            try {
                if (condition_estimate(cand) < tol::gauge_condition_cap) {
                    gs.push_back(std::move(cand));
                    accepted = true;
                    break;
                }
            } catch (const SingularMatrix&) {
                // resample
            }
        }
        if (!accepted) throw SamplingFailure("random_gauge: no well-conditioned sample in 100 attempts");
    }
    return GaugeElement(shape, std::move(gs));
}

DoubleRepPoint random_Z_point(QuiverShape shape, std::uint64_t seed) {
    const LLPoint l = random_LL(shape.n, derive_seed(seed, 0));
    const GaugeElement g = random_gauge(shape, derive_seed(seed, 1));
    return act_gauge_double(g, embed_LL(l, shape.m));
}

}  // namespace quiverinv
