#include "i1/iop.hpp"

#include <algorithm>
#include <cstdlib>

#include "i1/errors.hpp"
#include "i1/json_io.hpp"

namespace i1 {

void IOp::add_tower(long i, const HPoly& b) {
    if (b.is_zero()) return;
    auto [it, fresh] = towers_.try_emplace(i, b);
    if (!fresh) {
        it->second += b;
        if (it->second.is_zero()) towers_.erase(it);
    }
}

IOp IOp::operator-() const {
    IOp r;
    for (const auto& [i, b] : towers_) r.towers_[i] = -b;
    r.f_ = -f_;
    return r;
}

IOp& IOp::operator+=(const IOp& o) {
    for (const auto& [i, b] : o.towers_) add_tower(i, b);
    f_ += o.f_;
    return *this;
}

IOp& IOp::operator-=(const IOp& o) {
    for (const auto& [i, b] : o.towers_) add_tower(i, -b);
    f_ -= o.f_;
    return *this;
}

IOp operator*(const Scalar& c, const IOp& a) {
    IOp r;
    if (c.is_zero()) return r;
    for (const auto& [i, b] : a.towers_) r.towers_[i] = c * b;
    r.f_ = c * a.f_;
    return r;
}

IOp mul(const IOp& a, const IOp& b) {
    IOp r;

    // tower x tower:  b_i(H) v_i . c_j(H) v_j = q(H) v_i v_j,  q = b_i tau^{-i}(c_j)
    for (const auto& [i, bi] : a.towers()) {
        for (const auto& [j, cj] : b.towers()) {
            HPoly q = bi * cj.shifted(-i);
            r.add_tower(i + j, q);
            if (i > 0 && j < 0) {
                // integ^i der^|j| = v_{i+j} - sum_k e_{k+i-m, k+|j|-m}, m = min(i,|j|)
                const long m = std::min(i, -j);
                for (long k = 0; k < m; ++k) {
                    const long row = k + i - m, col = k - j - m;
                    r.add_f(static_cast<Index>(row), static_cast<Index>(col),
                            -q.eval(Scalar(row + 1)));
                }
            }
        }
    }

    // tower x F:  b_i(H) v_i . e_kl = b_i(k+i+1) e_{k+i, l}   (zero when k+i < 0)
    for (const auto& [i, bi] : a.towers()) {
        for (const auto& [kl, c] : b.f_part().entries()) {
            const long row = static_cast<long>(kl.first) + i;
            if (row < 0) continue;
            r.add_f(static_cast<Index>(row), kl.second, c * bi.eval(Scalar(row + 1)));
        }
    }

    // F x tower:  e_kl . c_j(H) v_j = c_j(l+1) e_{k, l-j}   (zero when l-j < 0)
    for (const auto& [kl, c] : a.f_part().entries()) {
        for (const auto& [j, cj] : b.towers()) {
            const long col = static_cast<long>(kl.second) - j;
            if (col < 0) continue;
            r.add_f(kl.first, static_cast<Index>(col),
                    c * cj.eval(Scalar(static_cast<long>(kl.second) + 1)));
        }
    }

    r.f_ += fmul(a.f_part(), b.f_part());
    return r;
}

IOp operator*(const IOp& a, const IOp& b) { return mul(a, b); }

IOp pow(IOp a, unsigned long n) {
    IOp r = IOp::one();
    for (unsigned long k = 0; k < n; ++k) r = mul(r, a);
    return r;
}

IOp commutator(const IOp& a, const IOp& b) { return mul(a, b) - mul(b, a); }

IOp IOp::graded_component(long i) const {
    IOp r;
    auto it = towers_.find(i);
    if (it != towers_.end()) r.towers_[i] = it->second;
    for (const auto& [kl, c] : f_.entries())
        if (static_cast<long>(kl.first) - static_cast<long>(kl.second) == i)
            r.f_.add_entry(kl.first, kl.second, c);
    return r;
}

bool IOp::is_in_K_plus_F() const {
    if (towers_.empty()) return true;
    return towers_.size() == 1 && towers_.begin()->first == 0 &&
           towers_.begin()->second.is_constant();
}

bool IOp::is_unit() const {
    if (!is_in_K_plus_F() || towers_.empty()) return false;
    const Scalar lambda = towers_.begin()->second.coeff(0);
    return is_unit_one_plus(lambda.inverse() * f_);
}

IOp IOp::unit_inverse() const {
    if (!is_in_K_plus_F() || towers_.empty())
        throw NotAUnit("units have the form lambda(1+f), lambda != 0");
    const Scalar lambda = towers_.begin()->second.coeff(0);
    FMatrix g = inverse_one_plus(lambda.inverse() * f_);
    IOp r = from_scalar(lambda.inverse());
    r.f_ = lambda.inverse() * g;
    return r;
}

long IOp::bandwidth() const {
    long bw = 0;
    for (const auto& [i, b] : towers_) bw = std::max(bw, std::abs(i));
    bw = std::max(bw, f_.deg_f());
    return bw + 1;
}

std::string IOp::str() const { return to_json(*this).dump(); }

unsigned long centralizer_f_dim(const IOp& a, unsigned long N) {
    const unsigned long side = N + 1, unknowns = side * side;

    // Column per unknown e_ij: the commutator [a, e_ij] written out in
    // canonical coordinates. Row keys are collected across all columns.
    std::map<std::pair<long, long>, std::size_t> tower_rows;   // (tower, H-degree)
    std::map<std::pair<Index, Index>, std::size_t> f_rows;
    std::vector<IOp> cols;
    cols.reserve(unknowns);
    for (Index i = 0; i < side; ++i)
        for (Index j = 0; j < side; ++j) cols.push_back(commutator(a, IOp::e(i, j)));

    for (const auto& c : cols) {
        for (const auto& [t, b] : c.towers())
            for (long d = 0; d <= b.degree(); ++d)
                if (!b.coeff(static_cast<std::size_t>(d)).is_zero())
                    tower_rows.try_emplace({t, d}, 0);
        for (const auto& [kl, v] : c.f_part().entries()) f_rows.try_emplace(kl, 0);
    }
    std::size_t nrows = 0;
    for (auto& [k, idx] : tower_rows) idx = nrows++;
    for (auto& [k, idx] : f_rows) idx = nrows++;
    if (nrows == 0) return unknowns;

    Mat m(nrows, Row(unknowns));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (const auto& [t, b] : cols[c].towers())
            for (long d = 0; d <= b.degree(); ++d) {
                const Scalar& v = b.coeff(static_cast<std::size_t>(d));
                if (!v.is_zero()) m[tower_rows.at({t, d})][c] = v;
            }
        for (const auto& [kl, v] : cols[c].f_part().entries()) m[f_rows.at(kl)][c] = v;
    }
    return unknowns - mat_rank(std::move(m));
}

}  // namespace i1
