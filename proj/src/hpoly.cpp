#include "i1/hpoly.hpp"

#include <algorithm>
#include <sstream>

namespace i1 {

HPoly HPoly::operator-() const {
    HPoly r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

HPoly& HPoly::operator+=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
    if (a.is_zero() || b.is_zero()) return HPoly();
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return HPoly(std::move(r));
}

HPoly operator*(const Scalar& c, const HPoly& p) {
    if (c.is_zero()) return HPoly();
    std::vector<Scalar> r;
    r.reserve(p.c_.size());
    for (const auto& pc : p.c_) r.push_back(c * pc);
    return HPoly(std::move(r));
}

Scalar HPoly::eval(const Scalar& at) const {
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

HPoly HPoly::shifted(long k) const {
    if (k == 0 || is_constant()) return *this;
    return compose_linear(Scalar(1), Scalar(k));
}

HPoly HPoly::compose_linear(const Scalar& a, const Scalar& b) const {
    // Horner in the polynomial ring: p(aH+b) built highest coefficient first.
    HPoly lin(std::vector<Scalar>{b, a});
    HPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + HPoly(*it);
    return acc;
}

std::string HPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long d = degree(); d >= 0; --d) {
        const Scalar& c = c_[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        Scalar abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (d == 0 || !abs.is_one()) os << abs.str();
        if (d > 0) {
            if (!abs.is_one()) os << "*";
            os << "H";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

}  // namespace i1
