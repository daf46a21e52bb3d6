#include "i1/json_io.hpp"

#include <string>
#include <vector>

#include "i1/errors.hpp"

namespace i1 {

namespace {

SyntaxError bad(const std::string& what) { return SyntaxError(0, "bad JSON: " + what); }

long parse_long_key(const std::string& k) {
    try {
        std::size_t used = 0;
        long v = std::stol(k, &used);
        if (used != k.size()) throw bad("malformed integer key '" + k + "'");
        return v;
    } catch (const std::logic_error&) {
        throw bad("malformed integer key '" + k + "'");
    }
}

unsigned long parse_ulong_key(const std::string& k) {
    const long v = parse_long_key(k);
    if (v < 0) throw bad("negative degree key '" + k + "'");
    return static_cast<unsigned long>(v);
}

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const HPoly& p) {
    Json arr = Json::array();
    for (long d = 0; d <= p.degree(); ++d)
        arr.push_back(p.coeff(static_cast<std::size_t>(d)).str());
    return arr;
}

Json to_json(const PolyX& p) {
    Json obj = Json::object();
    for (const auto& [s, c] : p.terms()) obj[std::to_string(s)] = c.str();
    return obj;
}

Json to_json(const FMatrix& f) {
    Json arr = Json::array();
    for (const auto& [ij, c] : f.entries()) arr.push_back(Json::array({ij.first, ij.second, c.str()}));
    return arr;
}

Json to_json(const IOp& a) {
    Json towers = Json::object();
    for (const auto& [i, b] : a.towers()) towers[std::to_string(i)] = to_json(b);
    return Json{{"towers", towers}, {"f", to_json(a.f_part())}};
}

Json to_json(const B1Elem& b) {
    Json obj = Json::object();
    for (const auto& [k, p] : b.components()) obj[std::to_string(k)] = to_json(p);
    return obj;
}

Json to_json(const AutDecomposition& d) {
    Json diag{{"lambda", d.diag.lambda.str()},
              {"mu", d.diag.mu.str()},
              {"n", d.diag.n},
              {"s", d.diag.s_bound},
              {"kernel_der_deg", d.diag.kernel_der_deg}};
    return Json{{"nu", d.nu.str()}, {"u", to_json(d.u)}, {"diagnostics", diag}};
}

Scalar scalar_from_json(const Json& j) {
    if (!j.is_string()) throw bad("scalar must be a \"p/q\" string");
    return Scalar::parse(j.get<std::string>());
}

HPoly hpoly_from_json(const Json& j) {
    if (!j.is_array()) throw bad("polynomial in H must be a coefficient array");
    std::vector<Scalar> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(scalar_from_json(e));
    return HPoly(std::move(c));
}

PolyX polyx_from_json(const Json& j) {
    if (!j.is_object()) throw bad("polynomial in x must be a {degree: coeff} object");
    PolyX p;
    for (const auto& [k, v] : j.items())
        p.add_term(parse_ulong_key(k), scalar_from_json(v));
    return p;
}

FMatrix fmatrix_from_json(const Json& j) {
    if (!j.is_array()) throw bad("F element must be an array of [i,j,coeff] triples");
    FMatrix f;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw bad("F entry must be [i,j,coeff]");
        f.add_entry(t[0].get<Index>(), t[1].get<Index>(), scalar_from_json(t[2]));
    }
    return f;
}

IOp iop_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("towers") || !j.contains("f"))
        throw bad("operator must be {\"towers\": {...}, \"f\": [...]}");
    IOp a;
    for (const auto& [k, v] : j.at("towers").items())
        a.add_tower(parse_long_key(k), hpoly_from_json(v));
    const FMatrix f = fmatrix_from_json(j.at("f"));
    for (const auto& [ij, c] : f.entries()) a.add_f(ij.first, ij.second, c);
    return a;
}

B1Elem b1_from_json(const Json& j) {
    if (!j.is_object()) throw bad("B1 element must be {exponent: coeffs}");
    B1Elem b;
    for (const auto& [k, v] : j.items()) b.add_term(parse_long_key(k), hpoly_from_json(v));
    return b;
}

Endo endo_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("H") || !j.contains("int") || !j.contains("der"))
        throw bad("endomorphism must be {\"H\": ..., \"int\": ..., \"der\": ...}");
    return Endo::validate(iop_from_json(j.at("H")), iop_from_json(j.at("int")),
                          iop_from_json(j.at("der")));
}

}  // namespace i1
