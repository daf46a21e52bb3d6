#pragma once

#include <map>
#include <optional>
#include <string>

#include "i1/hpoly.hpp"
#include "i1/iop.hpp"

namespace i1 {

/// Element of the skew Laurent algebra K[H][der, der^{-1}; tau], tau(H) = H+1,
/// stored as left coefficients: sum_k p_k(H) der^k with every p_k nonzero.
/// The ad(H)-weight of the der^k component is -k.
class B1Elem {
public:
    B1Elem() = default;

    static B1Elem zero() { return B1Elem(); }
    static B1Elem one() { return term(0, HPoly(1)); }
    static B1Elem h() { return term(0, HPoly::variable()); }
    static B1Elem d() { return term(1, HPoly(1)); }
    static B1Elem dinv() { return term(-1, HPoly(1)); }
    static B1Elem term(long k, const HPoly& p) {
        B1Elem b;
        if (!p.is_zero()) b.c_[k] = p;
        return b;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<long, HPoly>& components() const { return c_; }

    void add_term(long k, const HPoly& p) {
        if (p.is_zero()) return;
        auto [it, fresh] = c_.try_emplace(k, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    B1Elem operator-() const;
    B1Elem& operator+=(const B1Elem& o);
    B1Elem& operator-=(const B1Elem& o);
    friend B1Elem operator+(B1Elem a, const B1Elem& b) { return a += b; }
    friend B1Elem operator-(B1Elem a, const B1Elem& b) { return a -= b; }
    friend B1Elem operator*(const Scalar& c, const B1Elem& a);

    friend bool operator==(const B1Elem& a, const B1Elem& b) { return a.c_ == b.c_; }
    friend bool operator!=(const B1Elem& a, const B1Elem& b) { return !(a == b); }

private:
    std::map<long, HPoly> c_;
};

/// (p der^i)(q der^j) = p tau^i(q) der^{i+j}.
B1Elem b1_mul(const B1Elem& a, const B1Elem& b);
inline B1Elem operator*(const B1Elem& a, const B1Elem& b) { return b1_mul(a, b); }
B1Elem b1_pow(B1Elem a, unsigned long n);

/// Canonical epimorphism onto the quotient by F: towers survive with
/// v_i -> der^{-i} (integ maps to the two-sided inverse of der), F dies.
B1Elem pi(const IOp& a);

/// The endomorphism H -> H/n, der -> der^n, extended multiplicatively.
B1Elem sigma_n_apply(unsigned long n, const B1Elem& a);

/// Search the window {exponents in [-D, D], deg_H <= D} for b with
/// sigma_n(b) = target. Only exponents divisible by n are reachable, which
/// pins the unique candidate; nullopt when it falls outside the window or
/// does not exist.
std::optional<B1Elem> sigma_n_preimage_search(unsigned long n, const B1Elem& target,
                                              unsigned long D);

/// Eigenvalue of ad(a) on the weight-i component of B1 (the der^{-i} line):
/// nu = a - tau^{-i}(a) when that difference is a nonzero constant, nullopt
/// otherwise. i = 0 is not a graded direction for ad and is rejected.
std::optional<Scalar> ad_eigenvalue_on_component(const HPoly& a, long i);

}  // namespace i1
