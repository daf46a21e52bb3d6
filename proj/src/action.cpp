#include "i1/action.hpp"

#include <algorithm>
#include <string>

#include "i1/errors.hpp"

namespace i1 {

PolyX apply(const IOp& a, const PolyX& p) {
    PolyX r;
    for (const auto& [s, c] : p.terms()) {
        for (const auto& [i, b] : a.towers()) {
            const long out = static_cast<long>(s) + i;
            if (out < 0) continue;
            r.add_term(static_cast<unsigned long>(out), c * b.eval(Scalar(out + 1)));
        }
        auto it = a.f_part().entries().begin();
        const auto end = a.f_part().entries().end();
        for (; it != end; ++it)
            if (it->first.second == s) r.add_term(it->first.first, c * it->second);
    }
    return r;
}

namespace {

// Largest degree raise of the operator (0 when it only lowers degrees).
long max_raise(const IOp& a) {
    long raise = 0;
    for (const auto& [i, b] : a.towers()) raise = std::max(raise, i);
    for (const auto& [kl, c] : a.f_part().entries())
        raise = std::max(raise, static_cast<long>(kl.first) - static_cast<long>(kl.second));
    return raise;
}

Mat action_matrix(const IOp& a, unsigned long N) {
    const auto rows = static_cast<std::size_t>(N + max_raise(a) + 1);
    Mat m(rows, Row(N + 1));
    for (unsigned long j = 0; j <= N; ++j) {
        PolyX img = apply(a, PolyX::divided_term(j));
        for (const auto& [s, c] : img.terms()) m[s][j] = c;
    }
    return m;
}

Mat submatrix(const Mat& m, std::size_t rows, std::size_t cols) {
    Mat s(rows, Row(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) s[i][j] = m[i][j];
    return s;
}

struct FredholmData {
    unsigned long window = 0;  // stabilized N
    long ker = 0;
    long coker = 0;
};

// At truncation N only degrees <= N - bw count. Kernel vectors supported
// there survive every enlargement. For the cokernel the right stable
// quantity is dim(image intersect window): a p lands in the window exactly
// when the rows above it kill p, so it equals rank(full) - rank(above-window
// rows); the projection of the image onto the window instead overcounts
// whenever hitting a low degree needs a non-terminating tail (e.g. 1 + der
// perturbed inside F). Both estimates grow monotonically to the true
// dimensions; the certificate asks the (ker, coker) pair to repeat across
// two consecutive doublings.
FredholmData stabilize(const IOp& a, unsigned long cap_mult) {
    if (a.is_zero()) throw ZeroOperator("the zero operator has no Fredholm data");
    if (a.towers().empty())
        throw ElementOfF("kernel and cokernel are infinite dimensional on F");

    const auto bw = static_cast<unsigned long>(a.bandwidth());
    const unsigned long cap = cap_mult * bw;

    std::vector<FredholmData> seen;
    for (unsigned long N = 4 * bw; N <= cap; N *= 2) {
        Mat full = action_matrix(a, N);
        const std::size_t stable = N - bw + 1;  // degrees 0 .. N-bw
        FredholmData d;
        d.window = N;
        {
            Mat ker_m = submatrix(full, full.size(), stable);
            d.ker = static_cast<long>(stable) - static_cast<long>(mat_rank(std::move(ker_m)));
        }
        {
            Mat band(full.begin() + static_cast<long>(stable), full.end());
            d.coker = static_cast<long>(stable) + static_cast<long>(mat_rank(std::move(band))) -
                      static_cast<long>(mat_rank(std::move(full)));
        }
        seen.push_back(d);
        const std::size_t n = seen.size();
        if (n >= 3 && seen[n - 1].ker == seen[n - 2].ker && seen[n - 2].ker == seen[n - 3].ker &&
            seen[n - 1].coker == seen[n - 2].coker && seen[n - 2].coker == seen[n - 3].coker)
            return d;
    }
    throw NotStabilized("kernel/cokernel dimensions still moving at truncation cap " +
                        std::to_string(cap));
}

}  // namespace

TruncatedAction truncated_matrix(const IOp& a, unsigned long N) {
    return TruncatedAction{a, N, action_matrix(a, N)};
}

std::vector<PolyX> kernel_basis(const IOp& a, unsigned long cap_mult) {
    FredholmData d = stabilize(a, cap_mult);
    const auto bw = static_cast<unsigned long>(a.bandwidth());
    Mat full = action_matrix(a, d.window);
    Mat ker_m = submatrix(full, full.size(), d.window - bw + 1);
    std::vector<PolyX> basis;
    for (const auto& v : nullspace(std::move(ker_m))) {
        PolyX p;
        for (unsigned long s = 0; s < v.size(); ++s) p.add_term(s, v[s]);
        basis.push_back(std::move(p));
    }
    return basis;
}

long index(const IOp& a, unsigned long cap_mult) {
    FredholmData d = stabilize(a, cap_mult);
    return d.ker - d.coker;
}

std::vector<PolyX> eigenspace(const IOp& a, const Scalar& lam, unsigned long N) {
    Mat m = action_matrix(a, N);
    for (unsigned long j = 0; j <= N; ++j) m[j][j] -= lam;
    std::vector<PolyX> basis;
    for (const auto& v : nullspace(std::move(m))) {
        PolyX p;
        for (unsigned long s = 0; s < v.size(); ++s) p.add_term(s, v[s]);
        basis.push_back(std::move(p));
    }
    return basis;
}

}  // namespace i1
