#ifndef QUIVERINV_WREATH_HPP
#define QUIVERINV_WREATH_HPP

#include <vector>

#include "quiverinv/quiver.hpp"
#include "quiverinv/rational.hpp"

namespace quiverinv {

/// An element of S_n x| (Z/m)^n: a permutation sigma (0-based images) and a
/// phase exponent a_i per letter, the phase itself being omega^{a_i} for the
/// fixed primitive m-th root of unity omega.
struct WreathElement {
    int n = 1;
    int m = 1;
    std::vector<int> sigma;  // sigma[j] = image of j, 0-based
    std::vector<int> a;      // 0 <= a[j] < m

    WreathElement() = default;
    WreathElement(int n_, int m_, std::vector<int> sigma_, std::vector<int> a_);
    static WreathElement identity(int n, int m);
    bool operator==(const WreathElement&) const = default;
};

/// Composition pinned so that to_gauge is a group homomorphism under the
/// componentwise product on gauge elements: compose(u, v) acts like v
/// followed by u, with sigma = sigma_u o sigma_v and a*_j = a_u[sigma_v(j)] + a_v[j].
WreathElement wreath_compose(const WreathElement& u, const WreathElement& v);
WreathElement wreath_inverse(const WreathElement& u);

/// All n! * m^n elements in a deterministic order. Throws TooLarge above the
/// enumeration cap.
std::vector<WreathElement> wreath_enumerate(int n, int m);

long long wreath_order(int n, int m);

/// Embedding into the gauge group: component k is
/// P_sigma * diag(omega^{a_1 (k-1)}, ..., omega^{a_n (k-1)}), k = 1..m.
GaugeElement to_gauge(const WreathElement& w);

/// Action on diagonal points, computed by conjugating the embedded point and
/// extracting the diagonals back. Throws StabilityViolation if the gauged
/// point is not an embedded L-point to tolerance (implementation bug).
LPoint act_on_L(const WreathElement& w, const LPoint& l);
LLPoint act_on_LL(const WreathElement& w, const LLPoint& l);

enum class WreathRep { L, LL };

/// The matrix of w acting on L (n x n) or on L + L (2n x 2n), recovered by
/// pushing basis vectors through act_on_L / act_on_LL. Each matrix is
/// monomial with unit-modulus entries.
SquareMatrix action_matrix(const WreathElement& w, WreathRep rep);

/// Graded dimension series with exact rational coefficients.
/// Invariants: constant term 1, all coefficients nonnegative.
struct MolienSeries {
    int variable_count = 1;  // single-graded here; 2 reserved for bigraded use
    std::vector<BigRational> coefficients;

    const BigRational& at(int degree) const { return coefficients.at(degree); }
    int max_degree() const { return static_cast<int>(coefficients.size()) - 1; }
    bool operator==(const MolienSeries&) const = default;
};

/// Molien series of the listed group elements on the chosen representation:
/// coefficient of t^d is the dimension of the degree-d invariant subspace,
/// accumulated numerically as (1/|G|) sum_g 1/det(I - t M_g) and then
/// reconstructed as exact rationals with denominator dividing |G|. Throws
/// ReconstructionFailure if a coefficient strays from the rational lattice by
/// more than the guard.
MolienSeries molien(const std::vector<WreathElement>& elements, WreathRep rep, int max_degree);

}  // namespace quiverinv

#endif
