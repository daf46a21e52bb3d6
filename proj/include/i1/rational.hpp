#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "i1/errors.hpp"

namespace i1 {

/// Exact rational scalar over Q. Always kept canonical: denominator > 0,
/// gcd(|num|, den) = 1, zero stored as 0/1. Serializes as "p/q" with the
/// "/q" dropped when q = 1.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
    Scalar(long num, long den) : v_(num, den) {
        if (den == 0) throw ZeroScalar("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Scalar(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "p", "p/q", optional leading minus on p.
    static Scalar parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw SyntaxError(0, "malformed rational '" + text + "'");
        if (q.get_den() == 0) throw ZeroScalar("rational with zero denominator");
        q.canonicalize();
        return Scalar(std::move(q), already_canonical{});
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // For 1/n detection: n when *this == 1/n with n a positive machine integer.
    std::optional<long> as_unit_fraction() const {
        if (sgn(v_) <= 0 || v_.get_num() != 1 || !v_.get_den().fits_slong_p()) return std::nullopt;
        return v_.get_den().get_si();
    }
    std::optional<long> as_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
        return v_.get_num().get_si();
    }

    Scalar operator-() const { return Scalar(-v_, already_canonical{}); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw ZeroScalar("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const {
        if (is_zero()) throw ZeroScalar("inverse of zero");
        return Scalar(1 / v_, already_canonical{});
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

    std::string str() const { return v_.get_str(); }  // GMP prints exactly "p/q" / "p"

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.v_; }

private:
    struct already_canonical {};
    Scalar(mpq_class q, already_canonical) : v_(std::move(q)) {}
    mpq_class v_;
};

inline Scalar factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(mpq_class(f));
}

/// j!/i! without forming both factorials.
inline Scalar factorial_ratio(unsigned long j, unsigned long i) {
    mpz_class n = 1, d = 1;
    for (unsigned long k = i + 1; k <= j; ++k) n *= k;
    for (unsigned long k = j + 1; k <= i; ++k) d *= k;
    return Scalar(mpq_class(n, d));
}

/// binomial(n, k) as an exact scalar.
inline Scalar binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(mpq_class(b));
}

}  // namespace i1
