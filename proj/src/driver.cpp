#include "quiverinv/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "quiverinv/invariants.hpp"
#include "quiverinv/normal_form.hpp"
#include "quiverinv/rng.hpp"

namespace quiverinv {

void RunConfig::validate() const {
    if (n < 1 || m < 1) throw InputError("config: n and m must be >= 1");
    if (trials < 1) throw InputError("config: trials must be >= 1");
    if (tol <= 0) throw InputError("config: tol must be positive");
    if (max_degree < 0) throw InputError("config: max_degree must be >= 0");
}

bool Report::pass() const {
    for (const CheckRecord& c : checks)
        if (!c.pass) return false;
    return true;
}

Json Report::to_json() const {
    Json records = Json::array();
    for (const CheckRecord& c : checks)
        records.push_back(Json{{"name", c.name},
                               {"residual", c.residual},
                               {"threshold", c.threshold},
                               {"margin", c.margin()},
                               {"pass", c.pass}});
    Json j{{"command", command},
           {"config",
            Json{{"n", config.n},
                 {"m", config.m},
                 {"trials", config.trials},
                 {"seed", config.seed},
                 {"tol", config.tol},
                 {"max_degree", config.max_degree}}},
           {"checks", std::move(records)},
           {"pass", pass()}};
    if (config.timing) j["wall_ms"] = wall_ms;
    return j;
}

RepPoint sample_generic_rep(QuiverShape shape, std::uint64_t seed) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        RepPoint p = random_rep(shape, derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        if (is_generic(p).generic) return p;
    }
    throw SamplingFailure("sample_generic_rep: no generic sample in 100 attempts");
}

namespace {

CheckRecord make_record(std::string name, double residual, double threshold) {
    CheckRecord r;
    r.name = std::move(name);
    r.residual = residual;
    r.threshold = threshold;
    r.pass = residual <= threshold;
    return r;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

Report run_verify_chevalley(const RunConfig& cfg) {
    cfg.validate();
    const Stopwatch watch;
    Report report;
    report.command = "verify-chevalley";
    report.config = cfg;
    const QuiverShape shape(cfg.m, cfg.n);

    // rho identity: charpoly coefficients of embedded points match the
    // elementary symmetric polynomials in z^m up to the (-1)^k convention.
    double worst_rho = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
        const LPoint l = random_L(cfg.n, derive_seed(cfg.seed, t));
        for (int k = 1; k <= cfg.n; ++k) {
            const double scale = 1.0 + std::abs(eval_e_zm(k, l, cfg.m));
            worst_rho = std::max(worst_rho, rho_identity_residual(l, cfg.m, k) / scale);
        }
    }
    report.checks.push_back(make_record("rho-identity", worst_rho, cfg.tol));

    // Canonical forms are gauge-orbit invariants.
    const int points = std::max(1, cfg.trials / 10);
    double worst_orbit = 0.0;
    for (int t = 0; t < points; ++t) {
        const RepPoint p = sample_generic_rep(shape, derive_seed(cfg.seed, 1000 + t));
        const CanonicalL base = to_canonical_L(p);
        double scale = 1.0;
        for (const Complex& z : base.z) scale = std::max(scale, std::abs(z));
        for (int g = 0; g < 3; ++g) {
            const GaugeElement gauge =
                random_gauge(shape, derive_seed(cfg.seed, 2000 + 10ULL * t + g));
            const CanonicalL moved = to_canonical_L(act_gauge(gauge, p));
            worst_orbit = std::max(worst_orbit, canonical_distance(base.z, moved.z) / scale);
        }
    }
    report.checks.push_back(make_record("canonical-orbit-invariance", worst_orbit, 1e-6 * cfg.factor()));

    // Separation: distinct canonical forms must be told apart by the
    // charpoly invariant panel. Residual counts violating pairs.
    std::vector<RepPoint> pool;
    std::vector<CanonicalL> forms;
    for (int t = 0; t < points; ++t) {
        pool.push_back(sample_generic_rep(shape, derive_seed(cfg.seed, 3000 + t)));
        forms.push_back(to_canonical_L(pool.back()));
    }
    long violations = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            if (canonical_distance(forms[i].z, forms[j].z) <= 1e-4) continue;
            if (charpoly_panel_separation(pool[i], pool[j]) <= 1e-6 * cfg.factor()) ++violations;
        }
    report.checks.push_back(make_record("invariant-separation", static_cast<double>(violations), 0.0));

    // Hilbert series: group-average Molien series against the closed form.
    const MolienSeries group_series =
        molien(wreath_enumerate(cfg.n, cfg.m), WreathRep::L, cfg.max_degree);
    const MolienSeries closed = molien_closed_form_L(cfg.n, cfg.m, cfg.max_degree);
    long mismatches = 0;
    for (int d = 0; d <= cfg.max_degree; ++d)
        if (!(group_series.at(d) == closed.at(d))) ++mismatches;
    report.checks.push_back(make_record("hilbert-series", static_cast<double>(mismatches), 0.0));

    report.wall_ms = watch.ms();
    return report;
}

Report run_verify_double(const RunConfig& cfg) {
    cfg.validate();
    const Stopwatch watch;
    Report report;
    report.command = "verify-double";
    report.config = cfg;
    const QuiverShape shape(cfg.m, cfg.n);

    // phi identity over the default trace-word panel.
    double worst_phi = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
        const LLPoint l = random_LL(cfg.n, derive_seed(cfg.seed, t));
        for (const TraceWord& w : default_traceword_panel(cfg.m)) {
            const double scale = 1.0 + std::abs(eval_p_rs(w.r, w.s, l));
            worst_phi = std::max(worst_phi, phi_identity_residual(l, cfg.m, w.r, w.s) / scale);
        }
    }
    report.checks.push_back(make_record("phi-identity", worst_phi, cfg.tol));

    // Sampled saturation points satisfy the moment equations.
    double worst_moment = 0.0;
    for (int t = 0; t < cfg.trials; ++t)
        worst_moment = std::max(
            worst_moment, moment_residual_norm(random_Z_point(shape, derive_seed(cfg.seed, 5000 + t))));
    report.checks.push_back(make_record("moment-residual", worst_moment, 1e-10 * cfg.factor()));

    // Plant-and-recover through the double canonical form.
    const int points = std::max(1, cfg.trials / 10);
    double worst_recover = 0.0;
    long off_saturation = 0;
    for (int t = 0; t < points; ++t) {
        const std::uint64_t s = derive_seed(cfg.seed, 6000 + t);
        const LLPoint planted = random_LL(cfg.n, derive_seed(s, 0));
        const GaugeElement gauge = random_gauge(shape, derive_seed(s, 1));
        const DoubleRepPoint p = act_gauge_double(gauge, embed_LL(planted, cfg.m));
        if (!is_generic(RepPoint(shape, p.x)).generic) continue;
        const CanonicalDouble rec = canonicalize_double(p);
        if (rec.status != SaturationStatus::OnSaturation) {
            ++off_saturation;
            continue;
        }
        worst_recover =
            std::max(worst_recover, ll_orbit_distance(LLPoint{rec.z, rec.zp}, planted, cfg.m));
    }
    report.checks.push_back(make_record("plant-recover", worst_recover, 1e-6 * cfg.factor()));
    report.checks.push_back(
        make_record("plant-recover-saturation-misses", static_cast<double>(off_saturation), 0.0));

    // Diagram identity: traces of diagonal assemblies split into scalar sums.
    double worst_diagram = 0.0;
    const QuiverShape scalar_shape(cfg.m, 1);
    for (int t = 0; t < cfg.trials; ++t) {
        std::vector<DoubleRepPoint> scalars;
        for (int k = 0; k < cfg.n; ++k)
            scalars.push_back(random_Z_point(scalar_shape, derive_seed(cfg.seed, 7000 + 100ULL * t + k)));
        for (const TraceWord& w : default_traceword_panel(cfg.m, cfg.m + 2))
            worst_diagram = std::max(worst_diagram, diagram_residual(scalars, w));
    }
    report.checks.push_back(make_record("diagram-identity", worst_diagram, 1e-10 * cfg.factor()));

    // Weyl generation at small degree, exact.
    long failed_verdicts = 0;
    const int max_d = std::min(cfg.max_degree, 6);
    for (int d = 1; d <= max_d; ++d)
        if (!generation_check(cfg.n, cfg.m, d, d, WreathRep::LL).verdict) ++failed_verdicts;
    report.checks.push_back(
        make_record("weyl-generation", static_cast<double>(failed_verdicts), 0.0));

    report.wall_ms = watch.ms();
    return report;
}

Report run_molien(const RunConfig& cfg) {
    cfg.validate();
    const Stopwatch watch;
    Report report;
    report.command = "molien";
    report.config = cfg;

    const std::vector<WreathElement> group = wreath_enumerate(cfg.n, cfg.m);
    const MolienSeries on_l = molien(group, WreathRep::L, cfg.max_degree);
    const MolienSeries closed = molien_closed_form_L(cfg.n, cfg.m, cfg.max_degree);
    long mismatches = 0;
    for (int d = 0; d <= cfg.max_degree; ++d)
        if (!(on_l.at(d) == closed.at(d))) ++mismatches;
    report.checks.push_back(make_record("molien-L-matches-closed-form",
                                        static_cast<double>(mismatches), 0.0));
    report.wall_ms = watch.ms();
    return report;
}

Report run_generation(const RunConfig& cfg, WreathRep rep, int R_override) {
    cfg.validate();
    const Stopwatch watch;
    Report report;
    report.command = rep == WreathRep::L ? "generation-L" : "generation-LL";
    report.config = cfg;

    for (int d = 1; d <= cfg.max_degree; ++d) {
        const int R = R_override > 0 ? R_override : d;
        const GenerationReport g = generation_check(cfg.n, cfg.m, d, R, rep);
        CheckRecord rec = make_record("generation-d" + std::to_string(d),
                                      static_cast<double>(g.molien_dim - g.span_dim), 0.0);
        rec.pass = g.verdict;
        report.checks.push_back(rec);
    }
    report.wall_ms = watch.ms();
    return report;
}

Report run_jacobian(const RunConfig& cfg) {
    cfg.validate();
    const Stopwatch watch;
    Report report;
    report.command = "jacobian";
    report.config = cfg;

    const JacobianCheck jc = jacobian_check(cfg.n, cfg.m, cfg.trials, cfg.seed);
    report.checks.push_back(make_record("jacobian-ratio-spread", jc.relative_spread, 1e-6 * cfg.factor()));
    if (jc.exact_mode_ran) {
        report.checks.push_back(
            make_record("jacobian-exact-proportional", jc.proportional ? 0.0 : 1.0, 0.0));
        // |constant| must be m^n, pinned by the exact expansion.
        BigRational expected(1);
        for (int i = 0; i < cfg.n; ++i) expected *= BigRational(cfg.m);
        const bool magnitude_ok =
            jc.proportional && (jc.exact_constant == expected || jc.exact_constant == -expected);
        report.checks.push_back(make_record("jacobian-constant-magnitude", magnitude_ok ? 0.0 : 1.0, 0.0));
        if (jc.proportional) {
            // The sampled mean must agree with the exact constant.
            const double exact = jc.exact_constant.to_double();
            const double dev = std::abs(jc.mean_constant - Complex(exact)) / std::abs(exact);
            report.checks.push_back(make_record("jacobian-mean-vs-exact", dev, 1e-6 * cfg.factor()));
        }
    }
    report.wall_ms = watch.ms();
    return report;
}

}  // namespace quiverinv
