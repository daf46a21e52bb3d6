#pragma once

#include <string>
#include <vector>

#include "i1/rational.hpp"

namespace i1 {

/// Polynomial in H over Scalar, dense coefficients by degree, trailing
/// coefficient nonzero. deg(0) = -1.
class HPoly {
public:
    HPoly() = default;
    HPoly(const Scalar& constant) { if (!constant.is_zero()) c_.push_back(constant); }
    HPoly(long constant) : HPoly(Scalar(constant)) {}
    explicit HPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static HPoly variable() { return HPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const Scalar& coeff(std::size_t i) const {
        static const Scalar zero;
        return i < c_.size() ? c_[i] : zero;
    }
    const Scalar& leading() const { return c_.back(); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    HPoly operator-() const;
    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const HPoly& a, const HPoly& b);
    friend HPoly operator*(const Scalar& c, const HPoly& p);

    friend bool operator==(const HPoly& a, const HPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

    Scalar eval(const Scalar& at) const;

    /// p(H + k); degree preserved.
    HPoly shifted(long k) const;

    /// p(a·H + b).
    HPoly compose_linear(const Scalar& a, const Scalar& b) const;

    std::string str() const;  // human-readable, e.g. "H^2 - 2*H + 1"

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

}  // namespace i1
