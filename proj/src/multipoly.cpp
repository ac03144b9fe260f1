#include "quiverinv/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace quiverinv {

bool GradedLex::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

MultiPoly::MultiPoly(int nvars, int modulus) : nvars_(nvars), modulus_(modulus) {
    if (nvars < 1) throw InputError("MultiPoly: need at least one variable");
    if (modulus < 1) throw InputError("MultiPoly: cyclotomic modulus must be >= 1");
}

MultiPoly MultiPoly::constant(int nvars, int modulus, const BigRational& c) {
    MultiPoly p(nvars, modulus);
    p.insert_term(std::vector<int>(nvars, 0), CycloScalar(modulus, c));
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int modulus, int index, int power) {
    if (index < 0 || index >= nvars) throw InputError("MultiPoly::variable: index out of range");
    if (power < 0) throw InputError("MultiPoly::variable: negative power");
    MultiPoly p(nvars, modulus);
    std::vector<int> e(nvars, 0);
    e[index] = power;
    p.insert_term(e, CycloScalar(modulus, BigRational(1)));
    return p;
}

MultiPoly MultiPoly::monomial(int modulus, const std::vector<int>& exponents, const CycloScalar& c) {
    MultiPoly p(static_cast<int>(exponents.size()), modulus);
    for (int e : exponents)
        if (e < 0) throw InputError("MultiPoly::monomial: negative exponent");
    p.insert_term(exponents, c);
    return p;
}

void MultiPoly::insert_term(const std::vector<int>& e, const CycloScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // Graded order: the last term has maximal degree.
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

CycloScalar MultiPoly::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? CycloScalar(modulus_) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    out += o;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_ || modulus_ != o.modulus_) throw InputError("MultiPoly: mixed rings");
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_, modulus_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::scaled(const CycloScalar& c) const {
    MultiPoly out(nvars_, modulus_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.insert_term(e, v * c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || modulus_ != o.modulus_) throw InputError("MultiPoly: mixed rings");
    MultiPoly out(nvars_, modulus_);
    std::vector<int> e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.insert_term(e, ca * cb);
        }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || modulus_ != o.modulus_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw InputError("MultiPoly::derivative: variable out of range");
    MultiPoly out(nvars_, modulus_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        d[var] -= 1;
        out.insert_term(d, c * CycloScalar(modulus_, BigRational(e[var])));
    }
    return out;
}

MultiPoly MultiPoly::monomial_substitution(const std::vector<int>& image,
                                           const std::vector<long>& phase_exp) const {
    if (static_cast<int>(image.size()) != nvars_ || static_cast<int>(phase_exp.size()) != nvars_)
        throw InputError("monomial_substitution: map size mismatch");
    MultiPoly out(nvars_, modulus_);
    std::vector<int> e(nvars_);
    for (const auto& [ea, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        long phase = 0;
        for (int v = 0; v < nvars_; ++v) {
            e[image[v]] += ea[v];
            phase += phase_exp[v] * ea[v];
        }
        out.insert_term(e, c * CycloScalar::omega_power(modulus_, phase));
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")";
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            s += "*x" + std::to_string(v);
            if (e[v] > 1) s += "^" + std::to_string(e[v]);
        }
    }
    return s;
}

int rank_bareiss(std::vector<std::vector<CycloScalar>> rows, int modulus) {
    if (rows.empty()) return 0;
    const int nrows = static_cast<int>(rows.size());
    const int ncols = static_cast<int>(rows.front().size());
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != ncols) throw InputError("rank_bareiss: ragged matrix");

    int rank = 0;
    CycloScalar prev(modulus, BigRational(1));
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);

        // One inverse of the previous pivot per elimination step; all the
        // divisions below are exact (Sylvester identity).
        const CycloScalar prev_inv = prev.inverse();
        for (int r = rank + 1; r < nrows; ++r) {
            for (int j = col + 1; j < ncols; ++j)
                rows[r][j] = (rows[rank][col] * rows[r][j] - rows[r][col] * rows[rank][j]) * prev_inv;
            rows[r][col] = CycloScalar(modulus);
        }
        prev = rows[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace quiverinv
