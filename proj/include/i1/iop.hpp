#pragma once

#include <map>
#include <string>

#include "i1/fmatrix.hpp"
#include "i1/hpoly.hpp"

namespace i1 {

/// Canonical-form element of the algebra of polynomial integro-differential
/// operators:
///
///     a = sum_i b_i(H) v_i + f,    v_i = integ^i (i>0), 1 (i=0), der^|i| (i<0)
///
/// with every stored tower polynomial b_i nonzero and f in the matrix-unit
/// ideal F. The representation is unique, so equality is entry-wise.
///
/// Multiplication normalizes term pairs with the rewrite rules
///
///     integ p(H) = p(H-1) integ            der p(H) = p(H+1) der
///     der  integ = 1                       integ^k der^k = 1 - e_00 - ... - e_{k-1,k-1}
///     integ e_ij = e_{i+1,j}   der e_ij = e_{i-1,j}   e_ij integ = e_{i,j-1}   e_ij der = e_{i,j+1}
///     p(H) e_ij = p(i+1) e_ij              e_ij p(H) = p(j+1) e_ij
///
/// (boundary cases e_{-1,j} = e_{i,-1} = 0).
class IOp {
public:
    IOp() = default;

    static IOp zero() { return IOp(); }
    static IOp one() { return from_scalar(Scalar(1)); }
    static IOp from_scalar(const Scalar& c) { return tower(0, HPoly(c)); }
    static IOp from_hpoly(const HPoly& p) { return tower(0, p); }
    static IOp from_f(const FMatrix& f) {
        IOp a;
        a.f_ = f;
        return a;
    }
    static IOp tower(long i, const HPoly& b) {
        IOp a;
        if (!b.is_zero()) a.towers_[i] = b;
        return a;
    }

    // Generators. x is not stored as its own symbol: it always normalizes
    // to (H-1) integ, keeping the representation unique.
    static IOp h() { return from_hpoly(HPoly::variable()); }
    static IOp der() { return tower(-1, HPoly(1)); }
    static IOp integ() { return tower(1, HPoly(1)); }
    static IOp x() { return integ() * h(); }
    static IOp e(Index i, Index j) { return from_f(FMatrix::unit(i, j)); }

    bool is_zero() const { return towers_.empty() && f_.is_zero(); }
    const std::map<long, HPoly>& towers() const { return towers_; }
    const FMatrix& f_part() const { return f_; }

    void add_tower(long i, const HPoly& b);
    void add_f(Index i, Index j, const Scalar& c) { f_.add_entry(i, j, c); }

    IOp operator-() const;
    IOp& operator+=(const IOp& o);
    IOp& operator-=(const IOp& o);
    friend IOp operator+(IOp a, const IOp& b) { return a += b; }
    friend IOp operator-(IOp a, const IOp& b) { return a -= b; }
    friend IOp operator*(const Scalar& c, const IOp& a);
    friend IOp operator*(const IOp& a, const IOp& b);  // canonical-form product
    friend IOp mul(const IOp& a, const IOp& b);

    friend bool operator==(const IOp& a, const IOp& b) {
        return a.towers_ == b.towers_ && a.f_ == b.f_;
    }
    friend bool operator!=(const IOp& a, const IOp& b) { return !(a == b); }

    /// Component of ad(H)-weight i: tower i plus the e_kl with k-l = i.
    IOp graded_component(long i) const;

    /// True iff a = constant + f (towers empty or a single constant at 0).
    bool is_in_K_plus_F() const;

    /// Units are exactly lambda (1+f) with lambda != 0 and det(1+f) != 0.
    bool is_unit() const;
    IOp unit_inverse() const;  // throws NotAUnit

    /// max(|tower index|, deg_f) + 1; the action on K[x] moves degrees by
    /// strictly less than this.
    long bandwidth() const;

    std::string str() const;  // canonical JSON, for diagnostics

private:
    std::map<long, HPoly> towers_;  // nonzero H-polynomials only
    FMatrix f_;
};

IOp mul(const IOp& a, const IOp& b);
IOp pow(IOp a, unsigned long n);
IOp commutator(const IOp& a, const IOp& b);

/// dim of {f in span(e_ij, 0 <= i,j <= N) : [a, f] = 0}, by exact
/// elimination on the (N+1)^2 unknowns, ordered lexicographically by (i,j).
unsigned long centralizer_f_dim(const IOp& a, unsigned long N);

}  // namespace i1
