#include "i1/polyx.hpp"

namespace i1 {

PolyX PolyX::from_monomial(const std::vector<Scalar>& mono) {
    PolyX p;
    for (unsigned long s = 0; s < mono.size(); ++s)
        if (!mono[s].is_zero()) p.c_[s] = factorial(s) * mono[s];
    return p;
}

std::vector<Scalar> PolyX::to_monomial() const {
    std::vector<Scalar> mono(c_.empty() ? 0 : c_.rbegin()->first + 1);
    for (const auto& [s, c] : c_) mono[s] = c / factorial(s);
    return mono;
}

PolyX PolyX::operator-() const {
    PolyX r;
    for (const auto& [s, c] : c_) r.c_[s] = -c;
    return r;
}

PolyX& PolyX::operator+=(const PolyX& o) {
    for (const auto& [s, c] : o.c_) add_term(s, c);
    return *this;
}

PolyX& PolyX::operator-=(const PolyX& o) {
    for (const auto& [s, c] : o.c_) add_term(s, -c);
    return *this;
}

PolyX operator*(const Scalar& c, const PolyX& p) {
    PolyX r;
    if (c.is_zero()) return r;
    for (const auto& [s, pc] : p.c_) r.c_[s] = c * pc;
    return r;
}

PolyX operator*(const PolyX& a, const PolyX& b) {
    PolyX r;
    for (const auto& [s, cs] : a.c_)
        for (const auto& [t, ct] : b.c_) r.add_term(s + t, binomial(s + t, s) * cs * ct);
    return r;
}

}  // namespace i1
