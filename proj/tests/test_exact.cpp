#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "quiverinv/cyclotomic.hpp"
#include "quiverinv/multipoly.hpp"
#include "quiverinv/rng.hpp"

using namespace quiverinv;

TEST_CASE("BigRational arithmetic stays reduced") {
    const BigRational a(1, 3), b(1, 6);
    CHECK((a + b) == BigRational(1, 2));
    CHECK((a - b) == BigRational(1, 6));
    CHECK((a * b) == BigRational(1, 18));
    CHECK((a / b) == BigRational(2));
    CHECK((a + b).to_string() == "1/2");
    CHECK(BigRational(-4, -6) == BigRational(2, 3));
    CHECK(BigRational(4, -6).to_string() == "-2/3");
}

TEST_CASE("BigRational parsing and guards") {
    CHECK(BigRational("3/4") == BigRational(3, 4));
    CHECK(BigRational("-7") == BigRational(-7));
    CHECK_THROWS_AS(BigRational(1, 0), InputError);
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), InputError);
    CHECK_THROWS_AS(BigRational(1, 2).to_long(), InputError);
    CHECK(BigRational(42).to_long() == 42);
}

TEST_CASE("BigRational survives values past 64 bits") {
    BigRational fact(1);
    for (long i = 1; i <= 30; ++i) fact *= BigRational(i);  // 30! ~ 2.6e32
    BigRational fact28(1);
    for (long i = 1; i <= 28; ++i) fact28 *= BigRational(i);
    CHECK(fact / fact28 == BigRational(29 * 30));
    CHECK(pow(BigRational(2), 100) * pow(BigRational(2, 1), 0) ==
          pow(BigRational(4), 50));
}

TEST_CASE("cyclotomic polynomials match the known table") {
    using V = std::vector<BigRational>;
    CHECK(cyclotomic_polynomial(1) == V{BigRational(-1), BigRational(1)});
    CHECK(cyclotomic_polynomial(2) == V{BigRational(1), BigRational(1)});
    CHECK(cyclotomic_polynomial(3) == V{BigRational(1), BigRational(1), BigRational(1)});
    CHECK(cyclotomic_polynomial(4) == V{BigRational(1), BigRational(0), BigRational(1)});
    CHECK(cyclotomic_polynomial(6) == V{BigRational(1), BigRational(-1), BigRational(1)});
    CHECK(cyclotomic_polynomial(12) ==
          V{BigRational(1), BigRational(0), BigRational(-1), BigRational(0), BigRational(1)});
}

TEST_CASE("euler_phi small values") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(3) == 2);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("CycloScalar root-of-unity identities") {
    for (int m = 1; m <= 6; ++m) {
        const CycloScalar one(m, BigRational(1));
        CHECK(CycloScalar::omega_power(m, m) == one);
        CHECK(CycloScalar::omega_power(m, 1) * CycloScalar::omega_power(m, m - 1) == one);
        // 1 + w + ... + w^{m-1} = 0 for m > 1.
        CycloScalar sum(m);
        for (int e = 0; e < m; ++e) sum += CycloScalar::omega_power(m, e);
        if (m > 1)
            CHECK(sum.is_zero());
        else
            CHECK(sum == one);
    }
}

TEST_CASE("CycloScalar inverse and numeric image") {
    for (int m = 2; m <= 6; ++m) {
        CycloScalar x = CycloScalar::omega_power(m, 1) + CycloScalar(m, BigRational(3, 7));
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == CycloScalar(m, BigRational(1)));
        const std::complex<double> numeric = CycloScalar::omega_power(m, 1).to_complex();
        const std::complex<double> expected = std::polar(1.0, 2.0 * std::numbers::pi / m);
        CHECK(std::abs(numeric - expected) < 1e-14);
    }
    CHECK_THROWS_AS(CycloScalar(3).inverse(), InputError);
}

TEST_CASE("CycloScalar rationality detection") {
    const CycloScalar w = CycloScalar::omega_power(4, 1);
    CHECK(!w.is_rational());
    CHECK((w * w * w * w).is_rational());
    CHECK((w * w * w * w).rational_value() == BigRational(1));
    // omega^2 = -1 for m = 4.
    CHECK((w * w).rational_value() == BigRational(-1));
}

TEST_CASE("MultiPoly ring arithmetic") {
    const int m = 1;
    const MultiPoly z1 = MultiPoly::variable(2, m, 0);
    const MultiPoly z2 = MultiPoly::variable(2, m, 1);
    const MultiPoly square = (z1 + z2) * (z1 + z2);
    MultiPoly expected = MultiPoly::variable(2, m, 0, 2) + MultiPoly::variable(2, m, 1, 2) +
                         (z1 * z2).scaled(CycloScalar(m, BigRational(2)));
    CHECK(square == expected);
    CHECK((square - expected).is_zero());
    CHECK(square.total_degree() == 2);
    CHECK((z1 - z1).is_zero());
}

TEST_CASE("MultiPoly derivative") {
    const int m = 1;
    const MultiPoly z1 = MultiPoly::variable(2, m, 0);
    const MultiPoly p = z1 * z1 * z1;  // z1^3
    const MultiPoly expected = (z1 * z1).scaled(CycloScalar(m, BigRational(3)));
    CHECK(p.derivative(0) == expected);
    CHECK(p.derivative(1).is_zero());
}

TEST_CASE("MultiPoly monomial substitution twists and permutes") {
    const int m = 4;
    const MultiPoly z1 = MultiPoly::variable(2, m, 0);
    // z1 -> omega * z2, z2 -> z1.
    const MultiPoly image = z1.monomial_substitution({1, 0}, {1, 0});
    CHECK(image == MultiPoly::variable(2, m, 1).scaled(CycloScalar::omega_power(m, 1)));

    // Substituting a full m-cycle of twists on z1^m changes nothing.
    const MultiPoly zm = MultiPoly::variable(2, m, 0, m);
    CHECK(zm.monomial_substitution({0, 1}, {1, 0}) == zm);
}

TEST_CASE("rank_bareiss known ranks") {
    const int m = 1;
    auto c = [&](long v) { return CycloScalar(m, BigRational(v)); };
    std::vector<std::vector<CycloScalar>> rows = {
        {c(1), c(2), c(3)},
        {c(2), c(4), c(6)},
        {c(1), c(0), c(1)},
    };
    CHECK(rank_bareiss(rows, m) == 2);

    std::vector<std::vector<CycloScalar>> id = {
        {c(1), c(0)},
        {c(0), c(1)},
    };
    CHECK(rank_bareiss(id, m) == 2);

    std::vector<std::vector<CycloScalar>> zero = {{c(0), c(0)}};
    CHECK(rank_bareiss(zero, m) == 0);
}

TEST_CASE("rank_bareiss over the cyclotomic field") {
    const int m = 3;
    const CycloScalar one(m, BigRational(1));
    const CycloScalar w = CycloScalar::omega_power(m, 1);
    // Second row is omega times the first: rank 1.
    std::vector<std::vector<CycloScalar>> rows = {
        {one, w},
        {w, w * w},
    };
    CHECK(rank_bareiss(rows, m) == 1);
    // Perturb one entry: rank 2.
    rows[1][1] += one;
    CHECK(rank_bareiss(rows, m) == 2);
}

TEST_CASE("graded-lex term order puts low degree first") {
    const int m = 1;
    const MultiPoly p =
        MultiPoly::variable(2, m, 0, 3) + MultiPoly::variable(2, m, 1) + MultiPoly::constant(2, m, BigRational(5));
    std::vector<int> degrees;
    for (const auto& [e, c] : p.terms()) degrees.push_back(e[0] + e[1]);
    CHECK(degrees == std::vector<int>{0, 1, 3});
}
