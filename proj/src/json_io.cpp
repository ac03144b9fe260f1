#include "quiverinv/json_io.hpp"

namespace quiverinv {

namespace {

Json complex_to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InputError("expected a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

template <typename T>
T field(const Json& j, const char* name) {
    if (!j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError(std::string("field '") + name + "' has the wrong type");
    }
}

std::vector<SquareMatrix> matrices_from_json(const Json& j, const char* name, int m, int n) {
    const Json arr = field<Json>(j, name);
    if (!arr.is_array() || static_cast<int>(arr.size()) != m)
        throw InputError(std::string("field '") + name + "' must list m matrices");
    std::vector<SquareMatrix> out;
    out.reserve(m);
    for (const Json& e : arr) {
        out.push_back(matrix_from_json(e));
        if (out.back().n() != n) throw InputError("matrix dimension does not match n");
    }
    return out;
}

}  // namespace

Json to_json(const SquareMatrix& a) {
    Json entries = Json::array();
    for (const Complex& e : a.entries()) entries.push_back(complex_to_json(e));
    return Json{{"n", a.n()}, {"entries", std::move(entries)}};
}

SquareMatrix matrix_from_json(const Json& j) {
    const int n = field<int>(j, "n");
    const Json entries = field<Json>(j, "entries");
    if (n < 1) throw InputError("matrix: n must be >= 1");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n) * n)
        throw InputError("matrix: expected n^2 entries");
    std::vector<Complex> data;
    data.reserve(entries.size());
    for (const Json& e : entries) data.push_back(complex_from_json(e));
    return SquareMatrix(n, std::move(data));
}

Json to_json(const RepPoint& p) {
    Json xs = Json::array();
    for (const SquareMatrix& a : p.x) xs.push_back(to_json(a));
    return Json{{"m", p.shape.m}, {"n", p.shape.n}, {"x", std::move(xs)}};
}

Json to_json(const DoubleRepPoint& p) {
    Json xs = Json::array(), ys = Json::array();
    for (const SquareMatrix& a : p.x) xs.push_back(to_json(a));
    for (const SquareMatrix& a : p.y) ys.push_back(to_json(a));
    return Json{{"m", p.shape.m}, {"n", p.shape.n}, {"x", std::move(xs)}, {"y", std::move(ys)}};
}

RepPoint rep_point_from_json(const Json& j) {
    const QuiverShape shape(field<int>(j, "m"), field<int>(j, "n"));
    return RepPoint(shape, matrices_from_json(j, "x", shape.m, shape.n));
}

DoubleRepPoint double_rep_point_from_json(const Json& j) {
    const QuiverShape shape(field<int>(j, "m"), field<int>(j, "n"));
    return DoubleRepPoint(shape, matrices_from_json(j, "x", shape.m, shape.n),
                          matrices_from_json(j, "y", shape.m, shape.n));
}

bool json_is_double_point(const Json& j) { return j.contains("y"); }

Json to_json(const WreathElement& w) {
    Json sigma = Json::array(), a = Json::array();
    for (int v : w.sigma) sigma.push_back(v + 1);  // 1-based on the wire
    for (int v : w.a) a.push_back(v);
    return Json{{"n", w.n}, {"m", w.m}, {"sigma", std::move(sigma)}, {"a", std::move(a)}};
}

WreathElement wreath_from_json(const Json& j) {
    const int n = field<int>(j, "n");
    const int m = field<int>(j, "m");
    std::vector<int> sigma = field<std::vector<int>>(j, "sigma");
    const std::vector<int> a = field<std::vector<int>>(j, "a");
    for (int& v : sigma) --v;  // to 0-based
    return WreathElement(n, m, std::move(sigma), a);
}

Json to_json(const CanonicalL& c) {
    Json z = Json::array();
    for (const Complex& v : c.z) z.push_back(complex_to_json(v));
    Json witness = Json::array();
    for (const SquareMatrix& g : c.witness.g) witness.push_back(to_json(g));
    return Json{{"z", std::move(z)}, {"witness", std::move(witness)}};
}

Json to_json(const Z1NormalForm& nf) {
    return Json{{"d", complex_to_json(nf.d)}, {"e", complex_to_json(nf.e)}};
}

Json to_json(const GenerationReport& r) {
    return Json{{"n", r.n},
                {"m", r.m},
                {"d", r.d},
                {"R", r.generator_cutoff},
                {"molien_dim", r.molien_dim},
                {"span_dim", r.span_dim},
                {"verdict", r.verdict}};
}

Json to_json(const MolienSeries& s) {
    Json coeffs = Json::array();
    for (const BigRational& c : s.coefficients) coeffs.push_back(c.to_string());
    return Json{{"variables", s.variable_count},
                {"max_degree", s.max_degree()},
                {"coefficients", std::move(coeffs)}};
}

Json to_json(const InvariantDescriptor& d) {
    if (d.kind == InvariantDescriptor::Kind::CharPoly)
        return Json{{"type", "charpoly"}, {"k", d.k}};
    return Json{{"type", "traceword"}, {"r", d.r}, {"s", d.s}};
}

InvariantDescriptor invariant_descriptor_from_json(const Json& j) {
    const std::string type = field<std::string>(j, "type");
    InvariantDescriptor d;
    if (type == "charpoly") {
        d.kind = InvariantDescriptor::Kind::CharPoly;
        d.k = field<int>(j, "k");
        if (d.k < 1) throw InputError("invariant descriptor: k must be >= 1");
    } else if (type == "traceword") {
        d.kind = InvariantDescriptor::Kind::TraceWord;
        d.r = field<int>(j, "r");
        d.s = field<int>(j, "s");
        if (d.r < 0 || d.s < 0 || d.r + d.s < 1)
            throw InputError("invariant descriptor: need r,s >= 0 and r+s >= 1");
    } else {
        throw InputError("invariant descriptor: unknown type '" + type + "'");
    }
    return d;
}

}  // namespace quiverinv
