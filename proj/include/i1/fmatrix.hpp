#pragma once

#include <map>
#include <utility>

#include "i1/linalg.hpp"
#include "i1/rational.hpp"

namespace i1 {

using Index = unsigned long;
using EntryMap = std::map<std::pair<Index, Index>, Scalar>;

/// Finite-support matrix in the e_ij basis: an element of the ideal F.
/// Entries are e-coordinates; in this basis coefficient arrays multiply like
/// plain matrices (e_ij e_kl = delta_jk e_il). The identity of 1+F is never
/// stored; operations on 1+f take f and add deltas on the affected block.
class FMatrix {
public:
    FMatrix() = default;

    static FMatrix unit(Index i, Index j, const Scalar& c = Scalar(1)) {
        FMatrix f;
        if (!c.is_zero()) f.e_[{i, j}] = c;
        return f;
    }

    bool is_zero() const { return e_.empty(); }
    const EntryMap& entries() const { return e_; }
    Scalar coeff(Index i, Index j) const {
        auto it = e_.find({i, j});
        return it == e_.end() ? Scalar() : it->second;
    }

    void add_entry(Index i, Index j, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = e_.try_emplace({i, j}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) e_.erase(it);
        }
    }

    /// Largest stored row or column index; -1 for the zero matrix.
    long deg_f() const;

    FMatrix operator-() const;
    FMatrix& operator+=(const FMatrix& o);
    FMatrix& operator-=(const FMatrix& o);
    friend FMatrix operator+(FMatrix a, const FMatrix& b) { return a += b; }
    friend FMatrix operator-(FMatrix a, const FMatrix& b) { return a -= b; }
    friend FMatrix operator*(const Scalar& c, const FMatrix& f);

    friend bool operator==(const FMatrix& a, const FMatrix& b) { return a.e_ == b.e_; }
    friend bool operator!=(const FMatrix& a, const FMatrix& b) { return !(a == b); }

private:
    EntryMap e_;  // no zero entries, sorted lexicographically by (i, j)
};

/// Bilinear extension of e_ij e_kl = delta_jk e_il.
FMatrix fmul(const FMatrix& a, const FMatrix& b);

/// e-coordinates to E-coordinates: entry (i,j) scaled by j!/i!.
EntryMap e_to_E(const FMatrix& a);

/// Inverse basis change: scales by i!/j!.
FMatrix E_to_e(const EntryMap& em);

/// Determinant of 1+f on the finite block 0..deg_f(f), taken in
/// E-coordinates; det(1) = 1 and det is multiplicative on 1+F.
Scalar det_one_plus(const FMatrix& f);

bool is_unit_one_plus(const FMatrix& f);

/// g with (1+f)(1+g) = (1+g)(1+f) = 1; throws NotAUnit when det(1+f) = 0.
FMatrix inverse_one_plus(const FMatrix& f);

}  // namespace i1
