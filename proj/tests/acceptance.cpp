// Acceptance runner: one line per criterion, nonzero exit if any fails.
// Every threshold is pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "quiverinv/driver.hpp"
#include "quiverinv/invariant_ring.hpp"
#include "quiverinv/invariants.hpp"
#include "quiverinv/normal_form.hpp"
#include "quiverinv/rng.hpp"

using namespace quiverinv;

namespace {

int failures = 0;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report(int index, const char* name, bool pass, const std::string& detail, double seconds) {
    std::printf("%s  %2d. %-22s %s  (%.2fs)\n", pass ? "PASS" : "FAIL", index, name, detail.c_str(),
                seconds);
    if (!pass) ++failures;
}

std::string fmt(const char* pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, value);
    return buf;
}

// 1. rho identity across (n, m) in {1..4}^2.
void criterion_rho_identity() {
    const Timer timer;
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (std::uint64_t t = 0; t < 100; ++t) {
                const LPoint l = random_L(n, derive_seed(202401, 10000ULL * n + 100ULL * m + t));
                for (int k = 1; k <= n; ++k) {
                    const double scale = 1.0 + std::abs(eval_e_zm(k, l, m));
                    worst = std::max(worst, rho_identity_residual(l, m, k) / scale);
                }
            }
    report(1, "rho-identity", worst <= 1e-9, fmt("worst residual %.2e <= 1e-9", worst),
           timer.seconds());
}

// 2. Constructive diagonalization: witness soundness and orbit invariance.
void criterion_normal_form() {
    const Timer timer;
    double worst_witness = 0.0;
    double worst_orbit = 0.0;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 4; ++m) {
            const QuiverShape shape(m, n);
            for (std::uint64_t t = 0; t < 100; ++t) {
                const std::uint64_t seed = derive_seed(202402, 10000ULL * n + 100ULL * m + t);
                const RepPoint p = sample_generic_rep(shape, seed);
                double scale = 1.0;
                for (const SquareMatrix& c : p.x) scale = std::max(scale, frobenius_norm(c));

                const CanonicalL base = to_canonical_L(p);
                const RepPoint gauged = act_gauge(base.witness, p);
                const RepPoint target = embed_L(LPoint{base.z}, m);
                for (int i = 0; i < m; ++i)
                    worst_witness = std::max(
                        worst_witness, frobenius_norm(gauged.x[i] - target.x[i]) / scale);

                double zscale = 1.0;
                for (const Complex& z : base.z) zscale = std::max(zscale, std::abs(z));
                for (int g = 0; g < 10; ++g) {
                    const GaugeElement gauge = random_gauge(shape, derive_seed(seed, 50 + g));
                    const CanonicalL moved = to_canonical_L(act_gauge(gauge, p));
                    worst_orbit =
                        std::max(worst_orbit, canonical_distance(base.z, moved.z) / zscale);
                }
            }
        }
    const bool pass = worst_witness <= 1e-7 && worst_orbit <= 1e-6;
    report(2, "claim-normal-form", pass,
           fmt("witness %.2e <= 1e-7, ", worst_witness) + fmt("orbit %.2e <= 1e-6", worst_orbit),
           timer.seconds());
}

// 3. Separation at (3,3): distinct canonical forms imply separated invariants.
void criterion_separation() {
    const Timer timer;
    const QuiverShape shape(3, 3);
    std::vector<RepPoint> points;
    std::vector<CanonicalL> forms;
    for (std::uint64_t t = 0; t < 200; ++t) {
        points.push_back(sample_generic_rep(shape, derive_seed(202403, t)));
        forms.push_back(to_canonical_L(points.back()));
    }
    long violations = 0;
    long separated_pairs = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (canonical_distance(forms[i].z, forms[j].z) <= 1e-4) continue;
            ++separated_pairs;
            if (charpoly_panel_separation(points[i], points[j]) <= 1e-6) ++violations;
        }
    report(3, "invariant-separation", violations == 0,
           std::to_string(separated_pairs) + " separated pairs, " + std::to_string(violations) +
               " violations",
           timer.seconds());
}

// 4. Molien series equals the closed form, exactly, through degree 12.
void criterion_hilbert_series() {
    const Timer timer;
    const std::vector<std::pair<int, int>> cases = {{2, 2}, {2, 3}, {3, 2}};
    long mismatches = 0;
    for (const auto& [n, m] : cases) {
        const MolienSeries s = molien(wreath_enumerate(n, m), WreathRep::L, 12);
        const MolienSeries closed = molien_closed_form_L(n, m, 12);
        for (int d = 0; d <= 12; ++d)
            if (!(s.at(d) == closed.at(d))) ++mismatches;
    }
    report(4, "hilbert-series", mismatches == 0,
           std::to_string(mismatches) + " coefficient mismatches", timer.seconds());
}

// 5. phi identity for all admissible words with r+s <= 6.
void criterion_phi_identity() {
    const Timer timer;
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (std::uint64_t t = 0; t < 100; ++t) {
                const LLPoint l = random_LL(n, derive_seed(202405, 10000ULL * n + 100ULL * m + t));
                for (int total = 1; total <= 6; ++total)
                    for (int r = 0; r <= total; ++r) {
                        const int s = total - r;
                        if ((r - s) % m != 0) continue;
                        const double scale = 1.0 + std::abs(eval_p_rs(r, s, l));
                        worst = std::max(worst, phi_identity_residual(l, m, r, s) / scale);
                    }
            }
    report(5, "phi-identity", worst <= 1e-9, fmt("worst residual %.2e <= 1e-9", worst),
           timer.seconds());
}

// 6. Sampled saturation points: moment membership and plant-and-recover.
void criterion_moment_saturation() {
    const Timer timer;
    double worst_moment = 0.0;
    long generic_samples = 0;
    long recovered = 0;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            const QuiverShape shape(m, n);
            for (std::uint64_t t = 0; t < 100; ++t) {
                const std::uint64_t seed = derive_seed(202406, 10000ULL * n + 100ULL * m + t);
                const LLPoint planted = random_LL(n, derive_seed(seed, 0));
                const GaugeElement gauge = random_gauge(shape, derive_seed(seed, 1));
                const DoubleRepPoint p = act_gauge_double(gauge, embed_LL(planted, m));
                worst_moment = std::max(worst_moment, moment_residual_norm(p));
                if (!is_generic(RepPoint(shape, p.x)).generic) continue;
                ++generic_samples;
                try {
                    const CanonicalDouble c = canonicalize_double(p);
                    if (c.status == SaturationStatus::OnSaturation &&
                        ll_orbit_distance(LLPoint{c.z, c.zp}, planted, m) <= 1e-6)
                        ++recovered;
                } catch (const Error&) {
                    // counted as a recovery failure
                }
            }
        }
    const double rate = generic_samples > 0
                            ? static_cast<double>(recovered) / static_cast<double>(generic_samples)
                            : 0.0;
    const bool pass = worst_moment < 1e-10 && rate >= 0.99;
    report(6, "moment-saturation", pass,
           fmt("worst moment residual %.2e < 1e-10, ", worst_moment) +
               fmt("recovery rate %.4f >= 0.99", rate),
           timer.seconds());
}

// 7. Diagram identity at n=3, m=2.
void criterion_diagram() {
    const Timer timer;
    double worst = 0.0;
    const QuiverShape scalar_shape(2, 1);
    const std::vector<TraceWord> words = {TraceWord(2, 2, 2), TraceWord(4, 2, 2), TraceWord(3, 1, 2)};
    for (std::uint64_t t = 0; t < 100; ++t) {
        std::vector<DoubleRepPoint> scalars;
        for (int k = 0; k < 3; ++k)
            scalars.push_back(random_Z_point(scalar_shape, derive_seed(202407, 10ULL * t + k)));
        for (const TraceWord& w : words) worst = std::max(worst, diagram_residual(scalars, w));
    }
    report(7, "diagram-identity", worst <= 1e-10, fmt("worst residual %.2e <= 1e-10", worst),
           timer.seconds());
}

// 8. Weyl generation, exact integer equalities.
void criterion_generation() {
    const Timer timer;
    long failures_ll = 0, failures_l = 0;
    const std::vector<std::pair<int, int>> ll_cases = {{1, 2}, {1, 3}, {2, 2}};
    for (const auto& [n, m] : ll_cases)
        for (int d = 1; d <= 6; ++d)
            if (!generation_check(n, m, d, d, WreathRep::LL).verdict) ++failures_ll;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int d = 1; d <= 12; ++d)
                if (!generation_check(n, m, d, d, WreathRep::L).verdict) ++failures_l;
    const bool pass = failures_ll == 0 && failures_l == 0;
    report(8, "weyl-generation", pass,
           std::to_string(failures_ll) + " LL failures, " + std::to_string(failures_l) +
               " L failures",
           timer.seconds());
}

// 9. Jacobian: numeric spread everywhere, exact proportionality for n <= 3.
void criterion_jacobian() {
    const Timer timer;
    double worst_spread = 0.0;
    bool exact_ok = true;
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            const JacobianCheck jc = jacobian_check(n, m, 50, derive_seed(202409, 10ULL * n + m));
            worst_spread = std::max(worst_spread, jc.relative_spread);
            if (n <= 3) {
                BigRational expected(1);
                for (int i = 0; i < n; ++i) expected *= BigRational(m);
                const bool magnitude =
                    jc.exact_constant == expected || jc.exact_constant == -expected;
                if (!jc.exact_mode_ran || !jc.proportional || !magnitude) exact_ok = false;
            }
        }
    const bool pass = worst_spread < 1e-6 && exact_ok;
    report(9, "jacobian", pass,
           fmt("worst spread %.2e < 1e-6, ", worst_spread) +
               (exact_ok ? "exact constant +/- m^n confirmed" : "exact mode FAILED"),
           timer.seconds());
}

// 10. Sharpness negatives.
void criterion_sharpness() {
    const Timer timer;
    bool ok = true;
    std::string detail;

    // p_{1,0} at m=2 is not invariant: the phase flip negates it.
    {
        const WreathElement w(1, 2, {0}, {1});
        const LLPoint l{{Complex(1.3, 0.4)}, {Complex(-0.2, 0.9)}};
        const Complex before = eval_p_rs(1, 0, l);
        const Complex after = eval_p_rs(1, 0, act_on_LL(w, l));
        if (!(std::abs(before - after) > 1e-6)) {
            ok = false;
            detail += "p_{1,0} not detected; ";
        }
    }

    // Colliding z_i^m is non-generic.
    {
        const RepPoint collided = embed_L(LPoint{{Complex(1.0), Complex(-1.0)}}, 2);
        if (is_generic(collided).generic) {
            ok = false;
            detail += "collision not detected; ";
        }
    }

    // Tolerance inversion makes the CLI exit 1.
    {
        const char* cli = std::getenv("QUIVERINV_CLI");
        if (cli == nullptr) {
            ok = false;
            detail += "QUIVERINV_CLI unset; ";
        } else {
            const std::string cmd = std::string(cli) +
                                    " verify-chevalley --n 2 --m 2 --trials 5 --seed 7"
                                    " --tol 1e-30 >/dev/null 2>&1";
            const int status = std::system(cmd.c_str());
            const int code = WEXITSTATUS(status);
            if (code != 1) {
                ok = false;
                detail += "tol inversion exited " + std::to_string(code) + "; ";
            }
        }
    }

    if (detail.empty()) detail = "all three negatives detected";
    report(10, "sharpness-negatives", ok, detail, timer.seconds());
}

}  // namespace

int main() {
    std::printf("acceptance: cyclic-quiver restriction checks\n");
    criterion_rho_identity();
    criterion_normal_form();
    criterion_separation();
    criterion_hilbert_series();
    criterion_phi_identity();
    criterion_moment_saturation();
    criterion_diagram();
    criterion_generation();
    criterion_jacobian();
    criterion_sharpness();
    if (failures > 0) {
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
