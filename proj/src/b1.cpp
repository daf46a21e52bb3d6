#include "i1/b1.hpp"

#include <cstdlib>

#include "i1/errors.hpp"

namespace i1 {

B1Elem B1Elem::operator-() const {
    B1Elem r;
    for (const auto& [k, p] : c_) r.c_[k] = -p;
    return r;
}

B1Elem& B1Elem::operator+=(const B1Elem& o) {
    for (const auto& [k, p] : o.c_) add_term(k, p);
    return *this;
}

B1Elem& B1Elem::operator-=(const B1Elem& o) {
    for (const auto& [k, p] : o.c_) add_term(k, -p);
    return *this;
}

B1Elem operator*(const Scalar& c, const B1Elem& a) {
    B1Elem r;
    if (c.is_zero()) return r;
    for (const auto& [k, p] : a.c_) r.c_[k] = c * p;
    return r;
}

B1Elem b1_mul(const B1Elem& a, const B1Elem& b) {
    B1Elem r;
    for (const auto& [i, p] : a.components())
        for (const auto& [j, q] : b.components()) r.add_term(i + j, p * q.shifted(i));
    return r;
}

B1Elem b1_pow(B1Elem a, unsigned long n) {
    B1Elem r = B1Elem::one();
    for (unsigned long k = 0; k < n; ++k) r = b1_mul(r, a);
    return r;
}

B1Elem pi(const IOp& a) {
    B1Elem r;
    for (const auto& [i, b] : a.towers()) r.add_term(-i, b);
    return r;
}

B1Elem sigma_n_apply(unsigned long n, const B1Elem& a) {
    B1Elem r;
    const Scalar inv_n(1, static_cast<long>(n));
    for (const auto& [k, p] : a.components())
        r.add_term(k * static_cast<long>(n), p.compose_linear(inv_n, Scalar(0)));
    return r;
}

std::optional<B1Elem> sigma_n_preimage_search(unsigned long n, const B1Elem& target,
                                              unsigned long D) {
    const long nn = static_cast<long>(n), DD = static_cast<long>(D);
    B1Elem candidate;
    for (const auto& [k, p] : target.components()) {
        if (k % nn != 0) return std::nullopt;  // exponent not reachable by sigma_n
        const long pre = k / nn;
        if (std::abs(pre) > DD) return std::nullopt;
        HPoly q = p.compose_linear(Scalar(nn), Scalar(0));  // undoes H -> H/n
        if (q.degree() > DD) return std::nullopt;
        candidate.add_term(pre, q);
    }
    if (sigma_n_apply(n, candidate) != target) return std::nullopt;
    return candidate;
}

std::optional<Scalar> ad_eigenvalue_on_component(const HPoly& a, long i) {
    if (i == 0) throw InvalidComponent("weight 0 carries no nonzero ad eigenvalue");
    HPoly diff = a - a.shifted(-i);
    if (!diff.is_constant() || diff.is_zero()) return std::nullopt;
    return diff.coeff(0);
}

}  // namespace i1
