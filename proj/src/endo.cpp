#include "i1/endo.hpp"

#include <algorithm>
#include <string>

#include "i1/b1.hpp"
#include "i1/errors.hpp"

namespace i1 {

Endo Endo::validate(IOp h_img, IOp int_img, IOp der_img) {
    const IOp one = IOp::one();
    {
        IOp res = mul(der_img, int_img) - one;
        if (!res.is_zero()) throw RelationViolated("der'*int' = 1", res.str());
    }
    {
        IOp res = commutator(h_img, int_img) - int_img;
        if (!res.is_zero()) throw RelationViolated("[H',int'] = int'", res.str());
    }
    {
        IOp res = commutator(h_img, der_img) + der_img;
        if (!res.is_zero()) throw RelationViolated("[H',der'] = -der'", res.str());
    }
    const IOp proj = one - mul(int_img, der_img);  // image of e_00
    {
        IOp res = mul(h_img, proj) - proj;
        if (!res.is_zero()) throw RelationViolated("H'(1-int'der') = 1-int'der'", res.str());
    }
    {
        IOp res = mul(proj, h_img) - proj;
        if (!res.is_zero()) throw RelationViolated("(1-int'der')H' = 1-int'der'", res.str());
    }
    return Endo(std::move(h_img), std::move(int_img), std::move(der_img));
}

Endo Endo::torus(const Scalar& lam) {
    if (lam.is_zero()) throw ZeroScalar("torus parameter must be nonzero");
    return validate(IOp::h(), lam * IOp::integ(), lam.inverse() * IOp::der());
}

Endo Endo::inner(const FMatrix& u) {
    IOp w = IOp::one() + IOp::from_f(u);
    if (!w.is_unit()) throw NotAUnit("1+u is not a unit, det(1+u) = 0");
    IOp winv = w.unit_inverse();
    auto conj = [&](const IOp& g) { return mul(mul(w, g), winv); };
    return validate(conj(IOp::h()), conj(IOp::integ()), conj(IOp::der()));
}

IOp apply_endo(const Endo& s, const IOp& a) {
    IOp r;
    const IOp proj = IOp::one() - mul(s.int_img(), s.der_img());  // sigma(e_00)
    for (const auto& [i, b] : a.towers()) {
        // b(H') sigma(v_i)
        IOp bh;
        for (long d = b.degree(); d >= 0; --d)
            bh = mul(bh, s.h_img()) + IOp::from_scalar(b.coeff(static_cast<std::size_t>(d)));
        IOp vi = i >= 0 ? pow(s.int_img(), static_cast<unsigned long>(i))
                        : pow(s.der_img(), static_cast<unsigned long>(-i));
        r += mul(bh, vi);
    }
    for (const auto& [kl, c] : a.f_part().entries()) {
        IOp img = mul(mul(pow(s.int_img(), kl.first), proj), pow(s.der_img(), kl.second));
        r += c * img;
    }
    return r;
}

Endo compose(const Endo& s1, const Endo& s2) {
    return Endo::validate(apply_endo(s1, s2.h_img()), apply_endo(s1, s2.int_img()),
                          apply_endo(s1, s2.der_img()));
}

namespace {

// pi(a) as lam*H + mu; nullopt-style via flag.
bool linear_in_h(const B1Elem& b, Scalar& lam, Scalar& mu) {
    if (b.components().size() != 1 || b.components().begin()->first != 0) return false;
    const HPoly& p = b.components().begin()->second;
    if (p.degree() != 1) return false;
    lam = p.coeff(1);
    mu = p.coeff(0);
    return true;
}

// pi(a) as c * der^k with c a nonzero constant.
bool constant_times_power(const B1Elem& b, Scalar& c, long& k) {
    if (b.components().size() != 1) return false;
    const HPoly& p = b.components().begin()->second;
    if (!p.is_constant() || p.is_zero()) return false;
    k = b.components().begin()->first;
    c = p.coeff(0);
    return true;
}

}  // namespace

AutDecomposition decompose(const Endo& s, unsigned long cap_mult) {
    AutDecomposition out;

    // Quotient data of H': must be lambda H + mu.
    Scalar lambda, mu;
    if (!linear_in_h(pi(s.h_img()), lambda, mu))
        throw TheoremViolation("quotient-of-H", "pi(H') is not of the form lambda*H + mu");
    out.diag.lambda = lambda;
    out.diag.mu = mu;

    // Quotient data of integ', der': nu der^{-n} and nu^{-1} der^{n}.
    Scalar nu, nu_inv_check;
    long mk = 0, gk = 0;
    if (!constant_times_power(pi(s.int_img()), nu, mk))
        throw TheoremViolation("quotient-of-int", "pi(int') is not a constant times a power of der");
    if (mk > 0)
        throw TheoremViolation("quotient-of-int", "pi(int') is a positive power of der (excluded case)");
    if (mk == 0) throw TheoremViolation("quotient-of-int", "pi(int') is a constant");
    const long n = -mk;
    if (!constant_times_power(pi(s.der_img()), nu_inv_check, gk) || gk != n ||
        nu_inv_check != nu.inverse())
        throw TheoremViolation("quotient-of-der", "pi(der') does not match nu^{-1} der^n");
    auto unit_frac = lambda.as_unit_fraction();
    if (!unit_frac || *unit_frac != n)
        throw TheoremViolation("quotient-consistency", "lambda is not 1/n for the n read from pi(int')");
    out.diag.n = n;
    out.nu = nu;

    // Fredholm index of der' must equal n.
    if (index(s.der_img(), cap_mult) != n)
        throw TheoremViolation("index", "index of der' on K[x] differs from n");

    // Validated endomorphisms force n = 1 and mu = 0.
    if (n != 1) throw TheoremViolation("multiplicity", "n != 1");
    if (!mu.is_zero()) throw TheoremViolation("shift", "mu != 0");

    // Undo the torus part; now H' = H + h, integ' = integ + f, der' = der + g.
    const Endo s1 = compose(Endo::torus(nu.inverse()), s);

    // Degree bound: strict majorant of the kernel degree of der' and of the
    // F-supports of all three images.
    auto ker = kernel_basis(s1.der_img(), cap_mult);
    long d = 0;
    for (const auto& p : ker) d = std::max(d, p.degree());
    out.diag.kernel_der_deg = d;
    long m = std::max<long>({1, d, s1.h_img().f_part().deg_f(), s1.int_img().f_part().deg_f(),
                             s1.der_img().f_part().deg_f()});
    const auto s_bound = static_cast<unsigned long>(m + 1);
    out.diag.s_bound = s_bound;

    // Rebuild the conjugating unit columnwise: x'^[i] = der'^(s+1-i) x^[s+1]
    // for i <= s, x'^[i] = x^[i] above; u has column i = x'^[i] - x^[i].
    FMatrix u;
    PolyX cur = PolyX::divided_term(s_bound + 1);
    for (unsigned long i = s_bound + 1; i-- > 0;) {
        cur = apply(s1.der_img(), cur);  // now cur = x'^[i]
        PolyX delta = cur - PolyX::divided_term(i);
        for (const auto& [row, c] : delta.terms()) u.add_entry(row, i, c);
    }
    if (!is_unit_one_plus(u))
        throw TheoremViolation("unit-rebuild", "rebuilt 1+u is not invertible");

    // The factorization must reproduce the input exactly on all generators.
    const Endo rebuilt = compose(Endo::torus(nu), Endo::inner(u));
    if (rebuilt != s)
        throw ReconstructionMismatch("torus(nu) after inner(u) differs from the input on a generator");

    out.u = u;
    return out;
}

}  // namespace i1
