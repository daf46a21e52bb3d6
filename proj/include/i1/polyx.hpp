#pragma once

#include <map>
#include <vector>

#include "i1/rational.hpp"

namespace i1 {

/// Element of K[x] stored in the divided-power basis x^[s] = x^s/s!.
/// In that basis der/integ and the matrix units act by index shifts with
/// unit coefficients, so the kernel never touches factorials on hot paths.
class PolyX {
public:
    PolyX() = default;

    static PolyX divided_term(unsigned long s, const Scalar& c = Scalar(1)) {
        PolyX p;
        if (!c.is_zero()) p.c_[s] = c;
        return p;
    }

    /// From monomial-basis coefficients: sum c_s x^s  ->  sum (s! c_s) x^[s].
    static PolyX from_monomial(const std::vector<Scalar>& mono);

    /// Inverse of from_monomial; round-trip is the identity.
    std::vector<Scalar> to_monomial() const;

    bool is_zero() const { return c_.empty(); }
    long degree() const { return c_.empty() ? -1 : static_cast<long>(c_.rbegin()->first); }
    Scalar coeff(unsigned long s) const {
        auto it = c_.find(s);
        return it == c_.end() ? Scalar() : it->second;
    }
    const std::map<unsigned long, Scalar>& terms() const { return c_; }

    void add_term(unsigned long s, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = c_.try_emplace(s, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    PolyX operator-() const;
    PolyX& operator+=(const PolyX& o);
    PolyX& operator-=(const PolyX& o);
    friend PolyX operator+(PolyX a, const PolyX& b) { return a += b; }
    friend PolyX operator-(PolyX a, const PolyX& b) { return a -= b; }
    friend PolyX operator*(const Scalar& c, const PolyX& p);

    /// Commutative product: x^[a] * x^[b] = binomial(a+b, a) x^[a+b].
    friend PolyX operator*(const PolyX& a, const PolyX& b);

    friend bool operator==(const PolyX& a, const PolyX& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyX& a, const PolyX& b) { return !(a == b); }

private:
    std::map<unsigned long, Scalar> c_;  // no zero entries
};

}  // namespace i1
