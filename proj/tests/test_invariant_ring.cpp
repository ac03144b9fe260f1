#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quiverinv/invariant_ring.hpp"
#include "quiverinv/rng.hpp"

using namespace quiverinv;

namespace {

// Sparse random polynomial with small integer coefficients.
MultiPoly random_sparse_poly(int nvars, int modulus, int max_degree, std::uint64_t seed) {
    SplitMix64 rng(seed);
    MultiPoly p(nvars, modulus);
    const int terms = 2 + static_cast<int>(rng.next() % 4);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(nvars, 0);
        for (int v = 0; v < nvars; ++v) e[v] = static_cast<int>(rng.next() % (max_degree + 1));
        const long num = static_cast<long>(rng.next() % 7) - 3;
        const long phase = static_cast<long>(rng.next() % modulus);
        if (num == 0) continue;
        p += MultiPoly::monomial(modulus, e,
                                 CycloScalar(modulus, BigRational(num)) *
                                     CycloScalar::omega_power(modulus, phase));
    }
    return p;
}

}  // namespace

TEST_CASE("reynolds fixes invariants") {
    // p_{2,0} at n=2, m=2 is already invariant.
    const MultiPoly p = p_rs_poly(2, 2, 2, 0);
    CHECK(reynolds(p, 2, 2, WreathRep::LL) == p);

    // e_k(z^m) polynomials are invariant on the L side.
    for (int k = 1; k <= 2; ++k) {
        const MultiPoly e = e_zm_poly(2, 3, k);
        CHECK(reynolds(e, 2, 3, WreathRep::L) == e);
    }
}

TEST_CASE("reynolds kills non-invariant phases") {
    // z_1 averages to zero for m >= 2.
    const MultiPoly z1 = MultiPoly::variable(1, 2, 0);
    CHECK(reynolds(z1, 1, 2, WreathRep::L).is_zero());
    const MultiPoly z1_n2 = MultiPoly::variable(2, 3, 0);
    CHECK(reynolds(z1_n2, 2, 3, WreathRep::L).is_zero());
}

TEST_CASE("reynolds is idempotent on random sparse polynomials") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const MultiPoly p = random_sparse_poly(4, 2, 3, 100 + seed);
        const MultiPoly once = reynolds(p, 2, 2, WreathRep::LL);
        const MultiPoly twice = reynolds(once, 2, 2, WreathRep::LL);
        CHECK(once == twice);
    }
}

TEST_CASE("reynolds respects the group cap") {
    CHECK_THROWS_AS(reynolds(MultiPoly::variable(9, 3, 0), 9, 3, WreathRep::L), TooLarge);
}

TEST_CASE("brute-force invariant dimensions at small sizes") {
    CHECK(invariant_dim_bruteforce(1, 2, WreathRep::L, 2) == 1);   // z^2 only
    CHECK(invariant_dim_bruteforce(1, 2, WreathRep::L, 3) == 0);   // odd degree dies
    CHECK(invariant_dim_bruteforce(1, 2, WreathRep::LL, 2) == 3);  // z^2, zz', z'^2
}

TEST_CASE("brute-force dimensions equal the Molien coefficients") {
    // Dual-method oracle over n <= 2, m <= 3.
    const std::vector<std::pair<int, int>> cases = {{1, 2}, {1, 3}, {2, 2}, {2, 3}};
    for (const auto& [n, m] : cases) {
        const std::vector<WreathElement> group = wreath_enumerate(n, m);
        for (WreathRep rep : {WreathRep::L, WreathRep::LL}) {
            const MolienSeries s = molien(group, rep, 6);
            for (int d = 1; d <= 6; ++d)
                CHECK(invariant_dim_bruteforce(n, m, rep, d) == s.at(d).to_long());
        }
    }
}

TEST_CASE("generation below the first generator degree is vacuous") {
    for (int m = 2; m <= 3; ++m)
        for (int d = 1; d < m; ++d) {
            const GenerationReport g = generation_check(2, m, d, d, WreathRep::L);
            CHECK(g.molien_dim == 0);
            CHECK(g.span_dim == 0);
            CHECK(g.verdict);
        }
}

TEST_CASE("degree-2 LL generation at n=1, m=2") {
    const GenerationReport g = generation_check(1, 2, 2, 2, WreathRep::LL);
    CHECK(g.molien_dim == 3);
    CHECK(g.span_dim == 3);
    CHECK(g.verdict);
}

TEST_CASE("degree-4 LL generation at n=2, m=2: regression-pinned dimensions") {
    const GenerationReport g = generation_check(2, 2, 4, 4, WreathRep::LL);
    // 5 phase-admissible pair patterns of degree 4 against (0,0), plus 6
    // unordered pairs of degree-2 patterns.
    CHECK(g.molien_dim == 11);
    CHECK(g.span_dim == 11);
    CHECK(g.verdict);
}

TEST_CASE("the e_k(z^m) generate on the L side at small scale") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int d = 1; d <= 8; ++d) {
                const GenerationReport g = generation_check(n, m, d, d, WreathRep::L);
                CHECK(g.verdict);
            }
}

TEST_CASE("minimal generator cutoff is reported") {
    // At n=1, m=2, degree 4: the degree-2 generators already span.
    CHECK(minimal_generation_degree_cutoff(1, 2, 4, WreathRep::LL) == 2);
    // Degree 2 needs the degree-2 generators themselves.
    CHECK(minimal_generation_degree_cutoff(1, 2, 2, WreathRep::LL) == 2);
}

TEST_CASE("reynolds moves p_rs with r != s mod m: sharpness") {
    const MultiPoly p10 = p_rs_poly(1, 2, 1, 0);
    CHECK(reynolds(p10, 1, 2, WreathRep::LL) != p10);
    CHECK(reynolds(p10, 1, 2, WreathRep::LL).is_zero());
}

TEST_CASE("jacobian ratio is the constant m at n=1") {
    const JacobianCheck jc = jacobian_check(1, 3, 10, 7);
    CHECK(std::abs(jc.mean_constant - Complex(3.0)) < 1e-9);
    CHECK(jc.relative_spread < 1e-9);
    REQUIRE(jc.exact_mode_ran);
    CHECK(jc.proportional);
    CHECK(jc.exact_constant == BigRational(3));
}

TEST_CASE("jacobian at n=2, m=1 is the Vandermonde determinant") {
    const JacobianCheck jc = jacobian_check(2, 1, 10, 11);
    CHECK(std::abs(std::abs(jc.mean_constant) - 1.0) < 1e-9);
    REQUIRE(jc.exact_mode_ran);
    CHECK(jc.proportional);
    const bool unit = jc.exact_constant == BigRational(1) || jc.exact_constant == BigRational(-1);
    CHECK(unit);
}

TEST_CASE("jacobian constant magnitude is m^n, exactly, up to n=3") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            const JacobianCheck jc = jacobian_check(n, m, 10, 100ULL * n + m);
            CHECK(jc.relative_spread < 1e-6);
            REQUIRE(jc.exact_mode_ran);
            CHECK(jc.proportional);
            BigRational expected(1);
            for (int i = 0; i < n; ++i) expected *= BigRational(m);
            const bool magnitude = jc.exact_constant == expected || jc.exact_constant == -expected;
            CHECK(magnitude);
        }
}

TEST_CASE("closed-form series counts generator-degree partitions") {
    const MolienSeries n1m3 = molien_closed_form_L(1, 3, 9);
    for (int d = 0; d <= 9; ++d) CHECK(n1m3.at(d) == BigRational(d % 3 == 0 ? 1 : 0));

    // n=2, m=1: partitions into at most two parts: 1,1,2,2,3,3,...
    const MolienSeries n2m1 = molien_closed_form_L(2, 1, 7);
    const std::vector<long> expected = {1, 1, 2, 2, 3, 3, 4, 4};
    for (int d = 0; d <= 7; ++d) CHECK(n2m1.at(d) == BigRational(expected[d]));
}

TEST_CASE("span never exceeds the invariant dimension") {
    for (int d = 1; d <= 6; ++d) {
        const GenerationReport g = generation_check(2, 2, d, d, WreathRep::LL);
        CHECK(g.span_dim <= g.molien_dim);
    }
}
