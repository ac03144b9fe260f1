#include "quiverinv/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace quiverinv {

Complex eval_charpoly_invariant(int k, const RepPoint& p) {
    const int n = p.shape.n;
    if (k < 1 || k > n) throw InputError("eval_charpoly_invariant: k out of range");
    const UniPoly cp = charpoly(cycle_product(p));
    return cp.coefficients[n - k];
}

Complex eval_trace_word(const TraceWord& w, const DoubleRepPoint& p) {
    const int m = p.shape.m;
    if (w.m != m) throw InputError("eval_trace_word: modulus mismatch");
    if ((w.r - w.s) % m != 0) throw PathClosureError("eval_trace_word: path does not close");

    // Vertices are 0-based here: x_i maps vertex i to i+1, y_i maps i+1 to i,
    // indices mod m. The word is applied right to left starting at vertex 0.
    int vertex = 0;
    SquareMatrix prod = SquareMatrix::identity(p.shape.n);
    for (int t = 0; t < w.r; ++t) {
        const int arrow = t % m;  // x_{arrow+1} in 1-based terms
        if (arrow != vertex) throw PathClosureError("eval_trace_word: x-factor off its source vertex");
        prod = mat_mul(p.x[arrow], prod);
        vertex = (vertex + 1) % m;
    }
    const int j = w.r % m;
    for (int t = 0; t < w.s; ++t) {
        const int arrow = ((j - 1 - t) % m + m) % m;  // y_{arrow+1} in 1-based terms
        if ((arrow + 1) % m != vertex)
            throw PathClosureError("eval_trace_word: y-factor off its source vertex");
        prod = mat_mul(p.y[arrow], prod);
        vertex = arrow;
    }
    if (vertex != 0) throw PathClosureError("eval_trace_word: path did not return to the base vertex");
    return trace(prod);
}

Complex eval_e_zm(int k, const LPoint& l, int m) {
    const int n = static_cast<int>(l.z.size());
    if (k < 1 || k > n) throw InputError("eval_e_zm: k out of range");
    std::vector<Complex> w(n);
    for (int i = 0; i < n; ++i) {
        Complex v = 1.0;
        for (int e = 0; e < m; ++e) v *= l.z[i];
        w[i] = v;
    }
    // e[j] after processing w_i holds e_j(w_1..w_i).
    std::vector<Complex> e(k + 1, 0.0);
    e[0] = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::min(k, i + 1); j >= 1; --j) e[j] += w[i] * e[j - 1];
    return e[k];
}

Complex eval_p_rs(int r, int s, const LLPoint& l) {
    if (r < 0 || s < 0) throw InputError("eval_p_rs: exponents must be nonnegative");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < l.z.size(); ++i) {
        Complex v = 1.0;
        for (int e = 0; e < r; ++e) v *= l.z[i];
        for (int e = 0; e < s; ++e) v *= l.zp[i];
        acc += v;
    }
    return acc;
}

double rho_identity_residual(const LPoint& l, int m, int k) {
    const Complex lhs = eval_charpoly_invariant(k, embed_L(l, m));
    const Complex rhs = (k % 2 == 0 ? 1.0 : -1.0) * eval_e_zm(k, l, m);
    return std::abs(lhs - rhs);
}

double phi_identity_residual(const LLPoint& l, int m, int r, int s) {
    const TraceWord w(r, s, m);
    const Complex lhs = eval_trace_word(w, embed_LL(l, m));
    const Complex rhs = eval_p_rs(r, s, l);
    return std::abs(lhs - rhs);
}

DoubleRepPoint restrict_to_product(const std::vector<DoubleRepPoint>& points) {
    if (points.empty()) throw InputError("restrict_to_product: no points");
    const int m = points.front().shape.m;
    const int n = static_cast<int>(points.size());
    for (const DoubleRepPoint& p : points) {
        if (p.shape.n != 1) throw InputError("restrict_to_product: inputs must have n = 1");
        if (p.shape.m != m) throw InputError("restrict_to_product: inputs must share m");
        if (!in_moment_zero_set(p))
            throw ResidualTooLarge("restrict_to_product: input violates the moment equations");
    }
    std::vector<SquareMatrix> xs, ys;
    for (int i = 0; i < m; ++i) {
        std::vector<Complex> dx(n), dy(n);
        for (int k = 0; k < n; ++k) {
            dx[k] = points[k].x[i](0, 0);
            dy[k] = points[k].y[i](0, 0);
        }
        xs.push_back(SquareMatrix::diagonal(dx));
        ys.push_back(SquareMatrix::diagonal(dy));
    }
    return DoubleRepPoint(QuiverShape(m, n), std::move(xs), std::move(ys));
}

double diagram_residual(const std::vector<DoubleRepPoint>& points, const TraceWord& word) {
    const Complex assembled = eval_trace_word(word, restrict_to_product(points));
    Complex scalar_sum = 0.0;
    for (const DoubleRepPoint& p : points) scalar_sum += eval_trace_word(word, p);
    return std::abs(assembled - scalar_sum);
}

std::vector<CharPolyInvariant> default_charpoly_panel(int n) {
    std::vector<CharPolyInvariant> panel;
    for (int k = 1; k <= n; ++k) panel.push_back({k});
    return panel;
}

std::vector<TraceWord> default_traceword_panel(int m, int max_total) {
    if (max_total < 0) max_total = 2 * m + 2;
    std::vector<TraceWord> panel;
    for (int total = 1; total <= max_total; ++total)
        for (int r = 0; r <= total; ++r) {
            const int s = total - r;
            if ((r - s) % m == 0) panel.emplace_back(r, s, m);
        }
    return panel;
}

Complex eval_invariant(const InvariantDescriptor& d, const DoubleRepPoint& p) {
    if (d.kind == InvariantDescriptor::Kind::CharPoly)
        return eval_charpoly_invariant(d.k, RepPoint(p.shape, p.x));
    return eval_trace_word(TraceWord(d.r, d.s, p.shape.m), p);
}

double charpoly_panel_separation(const RepPoint& p, const RepPoint& q) {
    if (p.shape.n != q.shape.n) throw InputError("charpoly_panel_separation: size mismatch");
    double best = 0.0;
    for (const CharPolyInvariant& inv : default_charpoly_panel(p.shape.n)) {
        const Complex a = eval_charpoly_invariant(inv.k, p);
        const Complex b = eval_charpoly_invariant(inv.k, q);
        const double scale = 1.0 + std::max(std::abs(a), std::abs(b));
        best = std::max(best, std::abs(a - b) / scale);
    }
    return best;
}

}  // namespace quiverinv
