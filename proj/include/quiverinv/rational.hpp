#ifndef QUIVERINV_RATIONAL_HPP
#define QUIVERINV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "quiverinv/errors.hpp"

namespace quiverinv {

/// Exact rational number. Backed by GMP; always stored reduced with a
/// positive denominator (mpq_class canonicalization guarantees both).
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long num) : v_(num) {}
    BigRational(long num, long den) : v_(num, den) {
        if (den == 0) throw InputError("BigRational: zero denominator");
        v_.canonicalize();
    }
    explicit BigRational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    /// Parses "p" or "p/q".
    explicit BigRational(const std::string& text);

    BigRational operator+(const BigRational& o) const { return BigRational(mpq_class(v_ + o.v_)); }
    BigRational operator-(const BigRational& o) const { return BigRational(mpq_class(v_ - o.v_)); }
    BigRational operator*(const BigRational& o) const { return BigRational(mpq_class(v_ * o.v_)); }
    BigRational operator/(const BigRational& o) const {
        if (o.is_zero()) throw InputError("BigRational: division by zero");
        return BigRational(mpq_class(v_ / o.v_));
    }
    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }

    bool operator==(const BigRational& o) const { return v_ == o.v_; }
    bool operator!=(const BigRational& o) const { return v_ != o.v_; }
    bool operator<(const BigRational& o) const { return v_ < o.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    /// Integer value; the caller must know it fits (used for dimensions).
    long to_long() const;
    double to_double() const { return v_.get_d(); }
    std::string to_string() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

BigRational pow(const BigRational& base, unsigned e);

}  // namespace quiverinv

#endif
