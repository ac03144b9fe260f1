#include "quiverinv/invariant_ring.hpp"

#include <algorithm>
#include <cmath>

#include "quiverinv/rng.hpp"

namespace quiverinv {

namespace {

// All exponent vectors over `nvars` variables of total degree exactly d,
// in a deterministic order.
void enumerate_monomials(int nvars, int d, std::vector<int>& prefix,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<int>(prefix.size()) == nvars - 1) {
        prefix.push_back(d);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        prefix.push_back(e);
        enumerate_monomials(nvars, d - e, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<int>> monomials_of_degree(int nvars, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    enumerate_monomials(nvars, d, prefix, out);
    if (static_cast<long long>(out.size()) > tol::monomial_count_cap)
        throw TooLarge("monomial enumeration exceeds cap");
    return out;
}

// Rank of the span of the given polynomials inside the degree-d slice.
long span_rank(const std::vector<MultiPoly>& polys, int nvars, int modulus, int d) {
    const std::vector<std::vector<int>> basis = monomials_of_degree(nvars, d);
    std::map<std::vector<int>, int, GradedLex> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], static_cast<int>(i));

    std::vector<std::vector<CycloScalar>> rows;
    rows.reserve(polys.size());
    for (const MultiPoly& p : polys) {
        if (p.is_zero()) continue;
        std::vector<CycloScalar> row(basis.size(), CycloScalar(modulus));
        for (const auto& [e, c] : p.terms()) {
            auto it = column.find(e);
            if (it == column.end()) throw InputError("span_rank: polynomial not homogeneous of degree d");
            row[it->second] = c;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return 0;
    return rank_bareiss(std::move(rows), modulus);
}

}  // namespace

MultiPoly p_rs_poly(int n, int m, int r, int s) {
    if (r < 0 || s < 0) throw InputError("p_rs_poly: exponents must be nonnegative");
    MultiPoly acc(2 * n, m);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(2 * n, 0);
        e[i] = r;
        e[n + i] = s;
        acc += MultiPoly::monomial(m, e, CycloScalar(m, BigRational(1)));
    }
    return acc;
}

MultiPoly e_zm_poly(int n, int m, int k, int coeff_modulus) {
    if (k < 1 || k > n) throw InputError("e_zm_poly: k out of range");
    const int cm = coeff_modulus == 0 ? m : coeff_modulus;
    // e_k in the variables w_i = z_i^m, expanded over z.
    MultiPoly acc(n, cm);
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    while (true) {
        std::vector<int> e(n, 0);
        for (int i : subset) e[i] = m;
        acc += MultiPoly::monomial(cm, e, CycloScalar(cm, BigRational(1)));
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return acc;
}

namespace {

// Determinant of a small square matrix of polynomials, by first-row expansion.
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& a, int nvars, int modulus) {
    const int n = static_cast<int>(a.size());
    if (n == 1) return a[0][0];
    MultiPoly acc(nvars, modulus);
    for (int j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        minor.reserve(n - 1);
        for (int r = 1; r < n; ++r) {
            minor.emplace_back();
            for (int c = 0; c < n; ++c)
                if (c != j) minor.back().push_back(a[r][c]);
        }
        const MultiPoly term = a[0][j] * poly_det(minor, nvars, modulus);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

MultiPoly apply_wreath(const WreathElement& w, const MultiPoly& p, WreathRep rep) {
    const int n = w.n;
    const int nvars = rep == WreathRep::L ? n : 2 * n;
    if (p.nvars() != nvars) throw InputError("apply_wreath: variable count mismatch");
    if (p.modulus() != w.m) throw InputError("apply_wreath: modulus mismatch");
    std::vector<int> image(nvars);
    std::vector<long> phase(nvars);
    for (int j = 0; j < n; ++j) {
        image[j] = w.sigma[j];
        phase[j] = -w.a[j];
    }
    if (rep == WreathRep::LL)
        for (int j = 0; j < n; ++j) {
            image[n + j] = n + w.sigma[j];
            phase[n + j] = w.a[j];
        }
    return p.monomial_substitution(image, phase);
}

MultiPoly reynolds(const MultiPoly& p, int n, int m, WreathRep rep) {
    if (wreath_order(n, m) > tol::reynolds_group_cap)
        throw TooLarge("reynolds: group order exceeds cap");
    const std::vector<WreathElement> group = wreath_enumerate(n, m);
    MultiPoly acc(p.nvars(), p.modulus());
    for (const WreathElement& w : group) acc += apply_wreath(w, p, rep);
    return acc.scaled(CycloScalar(m, BigRational(1, static_cast<long>(group.size()))));
}

long invariant_dim_bruteforce(int n, int m, WreathRep rep, int d) {
    const int nvars = rep == WreathRep::L ? n : 2 * n;
    if (d == 0) return 1;
    std::vector<MultiPoly> symmetrized;
    for (const std::vector<int>& e : monomials_of_degree(nvars, d)) {
        MultiPoly sym = reynolds(MultiPoly::monomial(m, e, CycloScalar(m, BigRational(1))), n, m, rep);
        if (!sym.is_zero()) symmetrized.push_back(std::move(sym));
    }
    return span_rank(symmetrized, nvars, m, d);
}

namespace {

struct Generator {
    int degree;
    MultiPoly poly;
};

void enumerate_products(const std::vector<Generator>& gens, std::size_t first, int remaining,
                        const MultiPoly& partial, std::vector<MultiPoly>& out) {
    if (remaining == 0) {
        out.push_back(partial);
        return;
    }
    for (std::size_t i = first; i < gens.size(); ++i) {
        if (gens[i].degree > remaining) continue;
        enumerate_products(gens, i, remaining - gens[i].degree, partial * gens[i].poly, out);
    }
}

}  // namespace

GenerationReport generation_check(int n, int m, int d, int R, WreathRep rep) {
    if (d < 1) throw InputError("generation_check: degree must be >= 1");
    if (R < 1) throw InputError("generation_check: generator cutoff must be >= 1");
    const int nvars = rep == WreathRep::L ? n : 2 * n;

    std::vector<Generator> gens;
    if (rep == WreathRep::L) {
        for (int k = 1; k <= n; ++k)
            if (m * k <= R) gens.push_back({m * k, e_zm_poly(n, m, k)});
    } else {
        for (int total = 1; total <= R; ++total)
            for (int r = 0; r <= total; ++r) {
                const int s = total - r;
                if ((r - s) % m == 0) gens.push_back({total, p_rs_poly(n, m, r, s)});
            }
    }

    std::vector<MultiPoly> products;
    enumerate_products(gens, 0, d, MultiPoly::constant(nvars, m, BigRational(1)), products);

    GenerationReport report;
    report.n = n;
    report.m = m;
    report.d = d;
    report.generator_cutoff = R;
    report.span_dim = span_rank(products, nvars, m, d);
    if (rep == WreathRep::L) {
        report.molien_dim = molien_closed_form_L(n, m, d).at(d).to_long();
    } else {
        report.molien_dim = molien(wreath_enumerate(n, m), WreathRep::LL, d).at(d).to_long();
    }
    if (report.span_dim > report.molien_dim)
        throw Error("generation_check: span exceeds the invariant dimension (internal bug)");
    report.verdict = report.span_dim == report.molien_dim;
    return report;
}

int minimal_generation_degree_cutoff(int n, int m, int d, WreathRep rep) {
    for (int R = 1; R <= d; ++R)
        if (generation_check(n, m, d, R, rep).verdict) return R;
    return -1;
}

namespace {

// e_k(w_1..w_n) excluding index `skip`, for all k, by the standard recurrence.
std::vector<Complex> elementary_all_excluding(const std::vector<Complex>& w, int skip) {
    const int n = static_cast<int>(w.size());
    std::vector<Complex> e(n, 0.0);
    e[0] = 1.0;
    int used = 0;
    for (int i = 0; i < n; ++i) {
        if (i == skip) continue;
        ++used;
        for (int j = std::min(used, n - 1); j >= 1; --j) e[j] += w[i] * e[j - 1];
    }
    return e;
}

}  // namespace

JacobianCheck jacobian_check(int n, int m, int trials, std::uint64_t seed) {
    if (trials < 2) throw InputError("jacobian_check: need at least 2 trials");
    JacobianCheck out;
    out.trials = trials;

    std::vector<Complex> ratios;
    ratios.reserve(trials);
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        for (int attempt = 0; attempt < 100; ++attempt) {
            std::vector<Complex> z(n);
            for (Complex& c : z) c = rng.complex_gaussian();
            std::vector<Complex> w(n);
            for (int i = 0; i < n; ++i) w[i] = std::pow(z[i], m);

            Complex formula = 1.0;
            for (int i = 0; i < n; ++i)
                for (int e = 0; e < m - 1; ++e) formula *= z[i];
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) formula *= w[i] - w[j];
            if (std::abs(formula) < 1e-12) continue;  // degenerate sample, redraw

            // J_{k,j} = d e_k(w) / d z_j = e_{k-1}(w without j) * m * z_j^{m-1}.
            SquareMatrix jac(n);
            for (int j = 0; j < n; ++j) {
                const std::vector<Complex> excl = elementary_all_excluding(w, j);
                Complex zfac = static_cast<double>(m);
                for (int e = 0; e < m - 1; ++e) zfac *= z[j];
                for (int k = 1; k <= n; ++k) jac(k - 1, j) = excl[k - 1] * zfac;
            }
            ratios.push_back(determinant(jac) / formula);
            break;
        }
    }
    if (static_cast<int>(ratios.size()) != trials)
        throw SamplingFailure("jacobian_check: too many degenerate samples");

    Complex mean = 0.0;
    for (const Complex& r : ratios) mean += r;
    mean /= static_cast<double>(trials);
    double spread = 0.0;
    for (const Complex& r : ratios) spread = std::max(spread, std::abs(r - mean));
    out.mean_constant = mean;
    out.relative_spread = spread / std::abs(mean);

    if (n <= 3) {
        out.exact_mode_ran = true;
        // Exact expansion over Q (modulus 1).
        std::vector<MultiPoly> e_polys;
        for (int k = 1; k <= n; ++k) e_polys.push_back(e_zm_poly(n, m, k, 1));
        std::vector<std::vector<MultiPoly>> jac;
        for (int k = 0; k < n; ++k) {
            jac.emplace_back();
            for (int j = 0; j < n; ++j) jac.back().push_back(e_polys[k].derivative(j));
        }
        MultiPoly det = poly_det(jac, n, 1);

        MultiPoly formula = MultiPoly::constant(n, 1, BigRational(1));
        for (int i = 0; i < n; ++i)
            formula = formula * MultiPoly::variable(n, 1, i, m - 1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                formula = formula * (MultiPoly::variable(n, 1, i, m) - MultiPoly::variable(n, 1, j, m));

        if (formula.is_zero() || det.is_zero()) {
            out.proportional = det.is_zero() && formula.is_zero();
        } else {
            const auto& lead = formula.terms().begin()->first;
            const CycloScalar c = det.coefficient(lead) * formula.coefficient(lead).inverse();
            out.proportional = det == formula.scaled(c);
            if (out.proportional) out.exact_constant = c.rational_value();
        }
    }
    return out;
}

MolienSeries molien_closed_form_L(int n, int m, int max_degree) {
    if (max_degree < 0) throw InputError("molien_closed_form_L: negative degree");
    std::vector<long> counts(max_degree + 1, 0);
    counts[0] = 1;
    for (int k = 1; k <= n; ++k) {
        const int step = m * k;
        for (int deg = step; deg <= max_degree; ++deg) counts[deg] += counts[deg - step];
    }
    MolienSeries series;
    series.variable_count = 1;
    for (long c : counts) series.coefficients.emplace_back(c);
    return series;
}

}  // namespace quiverinv
