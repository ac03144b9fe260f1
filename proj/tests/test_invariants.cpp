#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quiverinv/invariants.hpp"
#include "quiverinv/rng.hpp"

using namespace quiverinv;

namespace {

SquareMatrix scalar(Complex v) { return SquareMatrix(1, {v}); }

}  // namespace

TEST_CASE("charpoly invariant on the all-ones point") {
    for (int n = 1; n <= 4; ++n) {
        const RepPoint p = embed_L(LPoint{std::vector<Complex>(n, 1.0)}, 3);
        const Complex top = eval_charpoly_invariant(n, p);
        CHECK(std::abs(top - Complex(n % 2 == 0 ? 1.0 : -1.0)) < 1e-12);
    }
}

TEST_CASE("charpoly invariant at n=1 is minus the cycle product") {
    const QuiverShape shape(4, 1);
    const RepPoint p(shape, {scalar(1.5), scalar(-2.0), scalar(Complex(0, 1)), scalar(3.0)});
    const Complex expected = -(Complex(1.5) * Complex(-2.0) * Complex(0, 1) * Complex(3.0));
    CHECK(std::abs(eval_charpoly_invariant(1, p) - expected) < 1e-12);
}

TEST_CASE("charpoly invariants are gauge invariant") {
    const QuiverShape shape(3, 3);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const RepPoint p = random_rep(shape, 1000 + seed);
        const RepPoint moved = act_gauge(random_gauge(shape, 2000 + seed), p);
        for (int k = 1; k <= 3; ++k) {
            const Complex a = eval_charpoly_invariant(k, p);
            const Complex b = eval_charpoly_invariant(k, moved);
            CHECK(std::abs(a - b) < 1e-8 * (1.0 + std::abs(a)));
        }
    }
}

TEST_CASE("trace word (m, 0) recovers the first charpoly invariant") {
    const QuiverShape shape(3, 2);
    const DoubleRepPoint p = random_Z_point(shape, 55);
    const Complex from_word = eval_trace_word(TraceWord(3, 0, 3), p);
    const Complex from_charpoly = eval_charpoly_invariant(1, RepPoint(shape, p.x));
    CHECK(std::abs(from_word + from_charpoly) < 1e-10 * (1.0 + std::abs(from_word)));
}

TEST_CASE("scalar trace word (m, m) is the product of all matrix entries") {
    const QuiverShape shape(3, 1);
    const DoubleRepPoint p(shape, {scalar(2.0), scalar(3.0), scalar(1.0)},
                           {scalar(3.0), scalar(2.0), scalar(6.0)});
    const Complex expected = Complex(2.0 * 3.0 * 1.0) * Complex(3.0 * 2.0 * 6.0);
    CHECK(std::abs(eval_trace_word(TraceWord(3, 3, 3), p) - expected) < 1e-12);
}

TEST_CASE("trace words are gauge invariant") {
    const QuiverShape shape(3, 2);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DoubleRepPoint p = random_Z_point(shape, 3000 + seed);
        const DoubleRepPoint moved = act_gauge_double(random_gauge(shape, 4000 + seed), p);
        const TraceWord w(4, 1, 3);
        const Complex a = eval_trace_word(w, p);
        const Complex b = eval_trace_word(w, moved);
        CHECK(std::abs(a - b) < 1e-8 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("the whole invariant panel is gauge invariant: 100 seeded pairs") {
    int instances = 0;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 4; ++m)
            for (std::uint64_t t = 0; t < 9; ++t, ++instances) {
                const QuiverShape shape(m, n);
                const std::uint64_t base = 7000ULL * n + 400ULL * m + t;
                const DoubleRepPoint p = random_Z_point(shape, base);
                const GaugeElement g = random_gauge(shape, base + 3);
                const DoubleRepPoint moved = act_gauge_double(g, p);
                const RepPoint px(shape, p.x);
                const RepPoint movedx(shape, moved.x);
                for (const CharPolyInvariant& inv : default_charpoly_panel(n)) {
                    const Complex a = eval_charpoly_invariant(inv.k, px);
                    const Complex b = eval_charpoly_invariant(inv.k, movedx);
                    CHECK(std::abs(a - b) <= 1e-8 * (1.0 + std::abs(a)));
                }
                for (const TraceWord& w : default_traceword_panel(m)) {
                    const Complex a = eval_trace_word(w, p);
                    const Complex b = eval_trace_word(w, moved);
                    CHECK(std::abs(a - b) <= 1e-8 * (1.0 + std::abs(a)));
                }
            }
    CHECK(instances >= 100);
}

TEST_CASE("trace word construction enforces closure") {
    CHECK_THROWS_AS(TraceWord(1, 0, 2), PathClosureError);
    CHECK_THROWS_AS(TraceWord(5, 2, 2), PathClosureError);
    CHECK_NOTHROW(TraceWord(3, 1, 2));
    CHECK_THROWS_AS(TraceWord(0, 0, 2), InputError);
}

TEST_CASE("symmetric-side evaluations") {
    CHECK(std::abs(eval_e_zm(1, LPoint{{Complex(1.0), Complex(2.0)}}, 2) - Complex(5.0)) < 1e-14);

    const LLPoint l{{Complex(1.0), Complex(2.0), Complex(3.0)}, {Complex(0.0), Complex(0.0), Complex(0.0)}};
    CHECK(std::abs(eval_p_rs(0, 0, l) - Complex(3.0)) < 1e-14);
    CHECK(std::abs(eval_p_rs(2, 1, l)) < 1e-14);  // z' = 0 kills any s > 0
}

TEST_CASE("rho identity on pinned examples") {
    // n=1, m=2, z=3: coefficient is -9, e_1(z^2) = 9.
    CHECK(rho_identity_residual(LPoint{{Complex(3.0)}}, 2, 1) < 1e-12);
    // n=2, m=1, z=(1,2): k=2 coefficient is det = 2 = e_2.
    CHECK(rho_identity_residual(LPoint{{Complex(1.0), Complex(2.0)}}, 1, 2) < 1e-12);
}

TEST_CASE("rho identity sweep over random points") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (std::uint64_t t = 0; t < 10; ++t) {
                const LPoint l = random_L(n, derive_seed(91, 100ULL * n + 10ULL * m + t));
                for (int k = 1; k <= n; ++k) {
                    const double scale = 1.0 + std::abs(eval_e_zm(k, l, m));
                    CHECK(rho_identity_residual(l, m, k) < 1e-9 * scale);
                }
            }
}

TEST_CASE("phi identity on pinned examples") {
    // n=1, m=2, (r,s)=(2,0), z=c: both sides are c^2.
    CHECK(phi_identity_residual(LLPoint{{Complex(1.7, 0.3)}, {Complex(0.2, -1.0)}}, 2, 2, 0) < 1e-12);
    // (r,s)=(1,1), m=1: both sides are sum z z'.
    CHECK(phi_identity_residual(
              LLPoint{{Complex(1.0), Complex(2.0)}, {Complex(3.0), Complex(-1.0)}}, 1, 1, 1) < 1e-12);
}

TEST_CASE("phi identity sweep over random points") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (std::uint64_t t = 0; t < 10; ++t) {
                const LLPoint l = random_LL(n, derive_seed(92, 100ULL * n + 10ULL * m + t));
                for (int total = 1; total <= 6; ++total)
                    for (int r = 0; r <= total; ++r) {
                        const int s = total - r;
                        if ((r - s) % m != 0) continue;
                        const double scale = 1.0 + std::abs(eval_p_rs(r, s, l));
                        CHECK(phi_identity_residual(l, m, r, s) < 1e-9 * scale);
                    }
            }
}

TEST_CASE("restrict_to_product basics") {
    const int m = 2;
    const DoubleRepPoint z1 = random_Z_point(QuiverShape(m, 1), 77);

    // A single input reproduces itself.
    const DoubleRepPoint same = restrict_to_product({z1});
    for (int i = 0; i < m; ++i) {
        CHECK(frobenius_norm(same.x[i] - z1.x[i]) == 0.0);
        CHECK(frobenius_norm(same.y[i] - z1.y[i]) == 0.0);
    }

    // Two copies of the same point give scalar matrices.
    const DoubleRepPoint dup = restrict_to_product({z1, z1});
    for (int i = 0; i < m; ++i) {
        CHECK(std::abs(dup.x[i](0, 0) - dup.x[i](1, 1)) == 0.0);
        CHECK(std::abs(dup.x[i](0, 1)) == 0.0);
    }

    // Exactly-commuting scalar inputs assemble to an exactly moment-zero point.
    const DoubleRepPoint e1 = embed_LL(LLPoint{{Complex(2.0, 1.0)}, {Complex(-0.5, 0.5)}}, m);
    const DoubleRepPoint e2 = embed_LL(LLPoint{{Complex(0.5, -1.0)}, {Complex(1.0, 2.0)}}, m);
    CHECK(moment_residual_norm(restrict_to_product({e1, e2})) == 0.0);
}

TEST_CASE("restrict_to_product rejects off-shell inputs") {
    const QuiverShape shape(2, 1);
    const DoubleRepPoint bad(shape, {scalar(1.0), scalar(1.0)}, {scalar(1.0), scalar(2.0)});
    CHECK(moment_residual_norm(bad) > 0.1);
    CHECK_THROWS_AS(restrict_to_product({bad}), ResidualTooLarge);
}

TEST_CASE("diagram identity: assembled traces split into scalar sums") {
    const int m = 2;
    // n = 1 is trivially exact.
    const DoubleRepPoint single = random_Z_point(QuiverShape(m, 1), 81);
    CHECK(diagram_residual({single}, TraceWord(2, 2, m)) < 1e-14);

    // Equal points: the assembly evaluates to n times the scalar value.
    const std::vector<DoubleRepPoint> equal(3, single);
    const Complex triple = eval_trace_word(TraceWord(2, 2, m), restrict_to_product(equal));
    const Complex single_value = eval_trace_word(TraceWord(2, 2, m), single);
    CHECK(std::abs(triple - 3.0 * single_value) < 1e-10 * (1.0 + std::abs(triple)));

    // Random scalar points, a few words.
    for (std::uint64_t t = 0; t < 10; ++t) {
        std::vector<DoubleRepPoint> scalars;
        for (int k = 0; k < 3; ++k)
            scalars.push_back(random_Z_point(QuiverShape(m, 1), derive_seed(83, 10 * t + k)));
        CHECK(diagram_residual(scalars, TraceWord(2, 2, m)) < 1e-10);
        CHECK(diagram_residual(scalars, TraceWord(4, 2, m)) < 1e-10);
        CHECK(diagram_residual(scalars, TraceWord(3, 1, m)) < 1e-10);
    }
}

TEST_CASE("default panels have the advertised contents") {
    CHECK(default_charpoly_panel(3).size() == 3);
    // r + s <= 2m + 2 with r == s (mod m).
    for (const TraceWord& w : default_traceword_panel(2)) {
        CHECK(w.r + w.s <= 6);
        CHECK((w.r - w.s) % 2 == 0);
    }
}
