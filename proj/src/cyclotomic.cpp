#include "quiverinv/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace quiverinv {

namespace {

using RatPoly = std::vector<BigRational>;  // degree-ascending

void strip(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly c(a.size() + b.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    strip(c);
    return c;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), BigRational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    strip(a);
    return a;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    strip(a);
    RatPoly q;
    const int db = deg(b);
    while (deg(a) >= db && !a.empty()) {
        const int shift = deg(a) - db;
        const BigRational f = a.back() / b.back();
        if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, BigRational(0));
        q[shift] += f;
        RatPoly t(shift, BigRational(0));
        t.push_back(f);
        a = sub(a, mul(t, b));
    }
    return {q, a};
}

// Per-modulus reduction data: Phi_m and the residues of x^{phi}, ...,
// x^{2*phi-2} mod Phi_m, so products reduce without a polynomial division.
struct CycloContext {
    int phi = 0;
    RatPoly phi_poly;
    std::vector<RatPoly> high_powers;  // high_powers[k] = x^{phi+k} mod Phi_m, length phi
};

const CycloContext& cyclo_context(int m) {
    static std::mutex mu;
    static std::map<int, CycloContext> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    CycloContext ctx;
    ctx.phi_poly = cyclotomic_polynomial(m);
    ctx.phi = deg(ctx.phi_poly);
    ctx.high_powers.resize(ctx.phi > 1 ? ctx.phi - 1 : 0);
    // x^phi = -(lower part of Phi_m); x^{phi+k+1} = x * x^{phi+k}, re-reduced.
    RatPoly cur(ctx.phi_poly.begin(), ctx.phi_poly.end() - 1);
    for (auto& c : cur) c = -c;
    cur.resize(ctx.phi, BigRational(0));
    for (int k = 0; k < static_cast<int>(ctx.high_powers.size()); ++k) {
        ctx.high_powers[k] = cur;
        RatPoly next(ctx.phi, BigRational(0));
        for (int i = 0; i + 1 < ctx.phi; ++i) next[i + 1] = cur[i];
        const BigRational top = cur[ctx.phi - 1];
        if (!top.is_zero())
            for (int i = 0; i < ctx.phi; ++i) next[i] += top * ctx.high_powers[0][i];
        cur = std::move(next);
    }
    return cache.emplace(m, std::move(ctx)).first->second;
}

}  // namespace

int euler_phi(int m) {
    if (m < 1) throw InputError("euler_phi: m must be >= 1");
    int result = m;
    int k = m;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            while (k % p == 0) k /= p;
            result -= result / p;
        }
    }
    if (k > 1) result -= result / k;
    return result;
}

std::vector<BigRational> cyclotomic_polynomial(int m) {
    if (m < 1) throw InputError("cyclotomic_polynomial: m must be >= 1");
    // x^m - 1
    RatPoly num(m + 1, BigRational(0));
    num[0] = BigRational(-1);
    num[m] = BigRational(1);
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = divmod(num, cyclotomic_polynomial(d));
        if (!r.empty()) throw Error("cyclotomic_polynomial: non-exact division");
        num = std::move(q);
    }
    return num;
}

CycloScalar::CycloScalar(int m) : m_(m), c_(euler_phi(m), BigRational(0)) {
    if (m < 1) throw InputError("CycloScalar: modulus must be >= 1");
}

CycloScalar::CycloScalar(int m, const BigRational& r) : CycloScalar(m) { c_[0] = r; }

CycloScalar CycloScalar::omega_power(int m, long e) {
    CycloScalar out(m);
    long r = e % m;
    if (r < 0) r += m;
    const int phi = static_cast<int>(out.c_.size());
    if (r < phi) {
        out.c_[static_cast<std::size_t>(r)] = BigRational(1);
        return out;
    }
    // Reduce x^r mod Phi_m.
    RatPoly p(static_cast<std::size_t>(r) + 1, BigRational(0));
    p.back() = BigRational(1);
    const RatPoly phi_m = cyclotomic_polynomial(m);
    auto [q, rem] = divmod(p, phi_m);
    (void)q;
    rem.resize(phi, BigRational(0));
    out.c_.assign(rem.begin(), rem.end());
    return out;
}

void CycloScalar::check_compatible(const CycloScalar& o) const {
    if (m_ != o.m_) throw InputError("CycloScalar: mixed moduli");
}

bool CycloScalar::is_zero() const {
    for (const BigRational& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool CycloScalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

BigRational CycloScalar::rational_value() const {
    if (!is_rational()) throw InputError("CycloScalar: value is not rational");
    return c_[0];
}

CycloScalar CycloScalar::operator+(const CycloScalar& o) const {
    check_compatible(o);
    CycloScalar out(m_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

CycloScalar CycloScalar::operator-(const CycloScalar& o) const {
    check_compatible(o);
    CycloScalar out(m_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar out(m_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycloScalar CycloScalar::operator*(const CycloScalar& o) const {
    check_compatible(o);
    const int phi = static_cast<int>(c_.size());
    RatPoly prod(2 * phi, BigRational(0));
    for (int i = 0; i < phi; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j < phi; ++j) {
            if (o.c_[j].is_zero()) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    CycloScalar out(m_);
    const CycloContext& ctx = cyclo_context(m_);
    for (int i = 0; i < phi; ++i) out.c_[i] = prod[i];
    for (int k = 0; k + phi < 2 * phi; ++k) {
        if (k >= static_cast<int>(ctx.high_powers.size())) break;
        if (prod[phi + k].is_zero()) continue;
        for (int i = 0; i < phi; ++i) out.c_[i] += prod[phi + k] * ctx.high_powers[k][i];
    }
    return out;
}

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) throw InputError("CycloScalar: inverse of zero");
    // Extended Euclid in Q[x] against Phi_m, which is irreducible: the gcd is
    // a nonzero constant c with u*a + v*Phi = c, so inv(a) = u/c.
    RatPoly a(c_.begin(), c_.end());
    strip(a);
    RatPoly b = cyclotomic_polynomial(m_);
    RatPoly ua = {BigRational(1)};
    RatPoly ub = {};
    while (deg(b) >= 0) {
        auto [q, r] = divmod(a, b);
        RatPoly unext = sub(ua, mul(q, ub));
        a = std::move(b);
        ua = std::move(ub);
        b = std::move(r);
        ub = std::move(unext);
    }
    if (deg(a) != 0) throw Error("CycloScalar: gcd with the cyclotomic polynomial is not constant");
    const BigRational c = a[0];
    const int phi = static_cast<int>(c_.size());
    ua.resize(phi, BigRational(0));
    CycloScalar out(m_);
    for (int i = 0; i < phi; ++i) out.c_[i] = ua[i] / c;
    return out;
}

bool CycloScalar::operator==(const CycloScalar& o) const {
    if (m_ != o.m_) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::complex<double> CycloScalar::to_complex() const {
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        acc += c_[i].to_double() *
               std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / m_);
    }
    return acc;
}

std::string CycloScalar::to_string() const {
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) s += " + ";
        s += c_[i].to_string();
        if (i > 0) s += "*w^" + std::to_string(i);
        first = false;
    }
    return first ? "0" : s;
}

}  // namespace quiverinv
