#include "quiverinv/rational.hpp"

namespace quiverinv {

BigRational::BigRational(const std::string& text) {
    try {
        v_ = mpq_class(text);
    } catch (const std::invalid_argument&) {
        throw InputError("BigRational: cannot parse '" + text + "'");
    }
    if (v_.get_den() == 0) throw InputError("BigRational: zero denominator");
    v_.canonicalize();
}

long BigRational::to_long() const {
    if (!is_integer()) throw InputError("BigRational: not an integer");
    if (!v_.get_num().fits_slong_p()) throw InputError("BigRational: integer does not fit in long");
    return v_.get_num().get_si();
}

std::string BigRational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRational pow(const BigRational& base, unsigned e) {
    BigRational acc(1);
    BigRational b = base;
    while (e > 0) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

}  // namespace quiverinv
