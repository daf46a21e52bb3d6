#include "i1/fmatrix.hpp"

#include <algorithm>

#include "i1/errors.hpp"

namespace i1 {

long FMatrix::deg_f() const {
    long d = -1;
    for (const auto& [ij, c] : e_)
        d = std::max(d, static_cast<long>(std::max(ij.first, ij.second)));
    return d;
}

FMatrix FMatrix::operator-() const {
    FMatrix r;
    for (const auto& [ij, c] : e_) r.e_[ij] = -c;
    return r;
}

FMatrix& FMatrix::operator+=(const FMatrix& o) {
    for (const auto& [ij, c] : o.e_) add_entry(ij.first, ij.second, c);
    return *this;
}

FMatrix& FMatrix::operator-=(const FMatrix& o) {
    for (const auto& [ij, c] : o.e_) add_entry(ij.first, ij.second, -c);
    return *this;
}

FMatrix operator*(const Scalar& c, const FMatrix& f) {
    FMatrix r;
    if (c.is_zero()) return r;
    for (const auto& [ij, fc] : f.e_) r.e_[ij] = c * fc;
    return r;
}

FMatrix fmul(const FMatrix& a, const FMatrix& b) {
    FMatrix r;
    const auto& be = b.entries();
    for (const auto& [ij, ca] : a.entries()) {
        // entries of b with row index ij.second are contiguous in the map
        auto it = be.lower_bound({ij.second, 0});
        for (; it != be.end() && it->first.first == ij.second; ++it)
            r.add_entry(ij.first, it->first.second, ca * it->second);
    }
    return r;
}

EntryMap e_to_E(const FMatrix& a) {
    EntryMap r;
    for (const auto& [ij, c] : a.entries())
        r[ij] = factorial_ratio(ij.second, ij.first) * c;
    return r;
}

FMatrix E_to_e(const EntryMap& em) {
    FMatrix r;
    for (const auto& [ij, c] : em)
        r.add_entry(ij.first, ij.second, factorial_ratio(ij.first, ij.second) * c);
    return r;
}

Scalar det_one_plus(const FMatrix& f) {
    const long d = f.deg_f();
    if (d < 0) return Scalar(1);
    const auto n = static_cast<std::size_t>(d + 1);
    Mat m(n, Row(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
    for (const auto& [ij, c] : e_to_E(f)) m[ij.first][ij.second] += c;
    return det_bareiss(std::move(m));
}

bool is_unit_one_plus(const FMatrix& f) { return !det_one_plus(f).is_zero(); }

FMatrix inverse_one_plus(const FMatrix& f) {
    const long d = f.deg_f();
    if (d < 0) return FMatrix();
    const auto n = static_cast<std::size_t>(d + 1);
    // e-coordinates multiply like matrix entries, so the block inverse of
    // 1+f in e-coordinates is exactly 1+g.
    Mat m(n, Row(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
    for (const auto& [ij, c] : f.entries()) m[ij.first][ij.second] += c;
    Mat inv;
    if (!invert(m, inv)) throw NotAUnit("det(1+f) = 0, no inverse in 1+F");
    FMatrix g;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.add_entry(i, j, i == j ? inv[i][j] - Scalar(1) : inv[i][j]);
    return g;
}

}  // namespace i1
