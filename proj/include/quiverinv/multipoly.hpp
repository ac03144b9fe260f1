#ifndef QUIVERINV_MULTIPOLY_HPP
#define QUIVERINV_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "quiverinv/cyclotomic.hpp"

namespace quiverinv {

/// Exponent vectors ordered graded-lexicographically: lower total degree
/// first, then lexicographic.
struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Exact multivariate polynomial over Q(omega). Variable indices are
/// positional; by convention variables 0..n-1 are z_1..z_n and, on the
/// doubled side, n..2n-1 are z'_1..z'_n. Zero coefficients are never stored.
class MultiPoly {
public:
    MultiPoly(int nvars, int modulus);

    static MultiPoly constant(int nvars, int modulus, const BigRational& c);
    static MultiPoly variable(int nvars, int modulus, int index, int power = 1);
    static MultiPoly monomial(int modulus, const std::vector<int>& exponents, const CycloScalar& c);

    int nvars() const { return nvars_; }
    int modulus() const { return modulus_; }
    const std::map<std::vector<int>, CycloScalar, GradedLex>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    CycloScalar coefficient(const std::vector<int>& exponents) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const CycloScalar& c) const;
    MultiPoly& operator+=(const MultiPoly& o);

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(int var) const;

    /// Substitution along a monomial change of variables:
    /// variable v -> omega^{phase_exp[v]} * variable image[v].
    MultiPoly monomial_substitution(const std::vector<int>& image,
                                    const std::vector<long>& phase_exp) const;

    std::string to_string() const;

private:
    int nvars_;
    int modulus_;
    std::map<std::vector<int>, CycloScalar, GradedLex> terms_;

    void insert_term(const std::vector<int>& e, const CycloScalar& c);
};

/// Rank of a dense CycloScalar matrix by fraction-free (Bareiss) elimination.
int rank_bareiss(std::vector<std::vector<CycloScalar>> rows, int modulus);

}  // namespace quiverinv

#endif
