#pragma once

#include <vector>

#include "i1/iop.hpp"
#include "i1/linalg.hpp"
#include "i1/polyx.hpp"

namespace i1 {

/// Faithful action on K[x] in the divided-power basis:
///   der x^[s] = x^[s-1] (0 at s=0),  integ x^[s] = x^[s+1],
///   H x^[s] = (s+1) x^[s],           e_ij x^[s] = delta_js x^[i].
PolyX apply(const IOp& a, const PolyX& p);

/// Exact matrix of the action restricted to inputs of degree <= in_degree.
/// Column j is the coefficient vector of op applied to x^[j]; rows run over
/// output degrees 0 .. in_degree + max degree raise of op.
struct TruncatedAction {
    IOp op;
    unsigned long in_degree = 0;
    Mat matrix;  // (in_degree + raise + 1) x (in_degree + 1)

    unsigned long rows() const { return matrix.size(); }
    const Scalar& entry(std::size_t out_deg, std::size_t in_deg) const {
        return matrix[out_deg][in_deg];
    }
};

TruncatedAction truncated_matrix(const IOp& a, unsigned long N);

inline constexpr unsigned long kDefaultTruncCap = 512;

/// Exact basis of ker(a .) on all of K[x]; finite because a is not in F.
/// Throws ZeroOperator / ElementOfF on the excluded inputs, NotStabilized
/// when the truncation certificate fails below the cap.
std::vector<PolyX> kernel_basis(const IOp& a, unsigned long cap_mult = kDefaultTruncCap);

/// Fredholm index dim ker - dim coker of the action on K[x], computed from
/// stabilized truncations; invariant under perturbation by elements of F.
long index(const IOp& a, unsigned long cap_mult = kDefaultTruncCap);

/// Exact basis of {p : deg p <= N, a p = lam p}; the caller chooses the
/// degree window, the band above it is required to vanish on the result.
std::vector<PolyX> eigenspace(const IOp& a, const Scalar& lam, unsigned long N);

}  // namespace i1
