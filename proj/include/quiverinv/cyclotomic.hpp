#ifndef QUIVERINV_CYCLOTOMIC_HPP
#define QUIVERINV_CYCLOTOMIC_HPP

#include <complex>
#include <string>
#include <vector>

#include "quiverinv/rational.hpp"

namespace quiverinv {

int euler_phi(int m);

/// Coefficients of the m-th cyclotomic polynomial, degree-ascending. Computed
/// by dividing x^m - 1 by the cyclotomic polynomials of the proper divisors;
/// all coefficients come out integral.
std::vector<BigRational> cyclotomic_polynomial(int m);

/// An element of Q(omega), omega a fixed primitive m-th root of unity,
/// stored as a residue mod the m-th cyclotomic polynomial: coefficients of
/// 1, omega, ..., omega^{phi(m)-1}. Reduction is eager, so equality of
/// residue vectors is equality in the field.
class CycloScalar {
public:
    explicit CycloScalar(int m);  // zero
    CycloScalar(int m, const BigRational& r);

    static CycloScalar omega_power(int m, long e);

    int modulus() const { return m_; }
    const std::vector<BigRational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The rational value; requires is_rational().
    BigRational rational_value() const;

    CycloScalar operator+(const CycloScalar& o) const;
    CycloScalar operator-(const CycloScalar& o) const;
    CycloScalar operator*(const CycloScalar& o) const;
    CycloScalar operator-() const;
    CycloScalar inverse() const;
    CycloScalar& operator+=(const CycloScalar& o);

    bool operator==(const CycloScalar& o) const;
    bool operator!=(const CycloScalar& o) const { return !(*this == o); }

    /// Numeric image under omega -> exp(2*pi*i/m).
    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    int m_;
    std::vector<BigRational> c_;  // length phi(m)

    void check_compatible(const CycloScalar& o) const;
};

}  // namespace quiverinv

#endif
