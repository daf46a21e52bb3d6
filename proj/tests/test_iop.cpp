#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "i1/iop.hpp"
#include "i1/b1.hpp"
#include "i1/errors.hpp"
#include "gen.hpp"

using namespace i1;

namespace {
const IOp D = IOp::der();
const IOp I = IOp::integ();
const IOp H = IOp::h();
const IOp one = IOp::one();
}

TEST_CASE("generators arrive in canonical form") {
    CHECK(H == IOp::from_hpoly(HPoly::variable()));
    CHECK(IOp::x() == IOp::tower(1, HPoly(std::vector<Scalar>{Scalar(-1), Scalar(1)})));
    CHECK(IOp::e(0, 0) == IOp::from_f(FMatrix::unit(0, 0)));
    CHECK(mul(D, IOp::x()) == H);  // H = der x by definition
}

TEST_CASE("defining relations") {
    CHECK(mul(D, I) == one);
    CHECK(mul(I, D) == one - IOp::e(0, 0));
    CHECK(commutator(H, I) == I);
    CHECK(commutator(H, D) == -D);
    const IOp p = one - mul(I, D);
    CHECK(mul(H, p) == p);
    CHECK(mul(p, H) == p);
}

TEST_CASE("commutation of H past the shift generators") {
    const HPoly Hm1(std::vector<Scalar>{Scalar(-1), Scalar(1)});  // H - 1
    CHECK(mul(I, H) == mul(IOp::from_hpoly(Hm1), I));   // integ H = (H-1) integ
    CHECK(mul(H, D) == mul(D, IOp::from_hpoly(Hm1)));   // H der = der (H-1)
    std::mt19937_64 rng(30);
    for (int t = 0; t < 30; ++t) {
        HPoly p = gen::hpoly(rng, 4);
        // integ p(H) = p(H-1) integ,  der p(H) = p(H+1) der
        CHECK(mul(I, IOp::from_hpoly(p)) == mul(IOp::from_hpoly(p.shifted(-1)), I));
        CHECK(mul(D, IOp::from_hpoly(p)) == mul(IOp::from_hpoly(p.shifted(1)), D));
    }
}

TEST_CASE("tower collapse rules") {
    CHECK(mul(H, IOp::e(0, 0)) == IOp::e(0, 0));
    CHECK(pow(I, 2) * pow(D, 2) == one - IOp::e(0, 0) - IOp::e(1, 1));
    for (unsigned long i = 1; i <= 8; ++i) {
        IOp expect = one;
        for (Index k = 0; k < i; ++k) expect -= IOp::e(k, k);
        CHECK(pow(I, i) * pow(D, i) == expect);
    }
    CHECK(pow(D, 3) * pow(I, 5) == pow(I, 2));
    CHECK(pow(D, 5) * pow(I, 3) == pow(D, 2));
}

TEST_CASE("linear structure") {
    CHECK((H + (-H)).is_zero());
    CHECK(D + D == Scalar(2) * D);
    CHECK(IOp::zero() + IOp::e(1, 1) == IOp::e(1, 1));
    CHECK(commutator(H, H).is_zero());
}

TEST_CASE("e-shift rules against the word expansion") {
    // e_ij = integ^i der^j - integ^{i+1} der^{j+1}
    for (Index i = 0; i <= 3; ++i)
        for (Index j = 0; j <= 3; ++j) {
            IOp word = pow(I, i) * pow(D, j) - pow(I, i + 1) * pow(D, j + 1);
            CHECK(word == IOp::e(i, j));
        }
    CHECK(mul(I, IOp::e(1, 2)) == IOp::e(2, 2));
    CHECK(mul(D, IOp::e(0, 2)).is_zero());
    CHECK(mul(IOp::e(1, 2), I) == IOp::e(1, 1));
    CHECK(mul(IOp::e(1, 0), I).is_zero());
    CHECK(mul(IOp::e(1, 2), D) == IOp::e(1, 3));
}

TEST_CASE("scalar action of H-polynomials on matrix units") {
    HPoly p(std::vector<Scalar>{Scalar(1), Scalar(2), Scalar(1)});  // (H+1)^2
    IOp ph = IOp::from_hpoly(p);
    CHECK(mul(ph, IOp::e(2, 5)) == Scalar(16) * IOp::e(2, 5));  // p(3) = 16
    CHECK(mul(IOp::e(2, 5), ph) == Scalar(49) * IOp::e(2, 5));  // p(6) = 49
}

TEST_CASE("associativity fuzz") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        IOp a = gen::iop(rng), b = gen::iop(rng), c = gen::iop(rng);
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    }
}

TEST_CASE("unique representation separates elements") {
    CHECK(IOp::x() != I);
    CHECK(mul(I, D) != one);
    CHECK(IOp::tower(1, HPoly(1)) != IOp::tower(-1, HPoly(1)));
}

TEST_CASE("graded components") {
    IOp a = H + I + IOp::e(0, 1);
    CHECK(a.graded_component(1) == I);
    CHECK(a.graded_component(0) == H);
    CHECK(a.graded_component(-1) == IOp::e(0, 1));
    CHECK(IOp::x().graded_component(1) == IOp::x());
    CHECK(a.graded_component(0) + a.graded_component(1) + a.graded_component(-1) == a);
}

TEST_CASE("grading is multiplicative and ad(H) reads the weight") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 50; ++t) {
        IOp a = gen::iop(rng), b = gen::iop(rng);
        IOp ab = mul(a, b);
        for (long k = -8; k <= 8; ++k) {
            IOp sum;
            for (long i = -4; i <= 4; ++i)
                sum += mul(a.graded_component(i), b.graded_component(k - i));
            CHECK(ab.graded_component(k) == sum);
        }
        for (long i = -4; i <= 4; ++i) {
            IOp ai = a.graded_component(i);
            CHECK(commutator(H, ai) == Scalar(i) * ai);
        }
    }
}

TEST_CASE("projection to the quotient") {
    CHECK(pi(mul(I, D)) == B1Elem::one());
    CHECK(pi(IOp::e(3, 4)).is_zero());
    CHECK(pi(H + IOp::e(0, 0)) == B1Elem::h());
    CHECK(pi(I) == B1Elem::dinv());
    CHECK(pi(D) == B1Elem::d());
}

TEST_CASE("pi is a ring homomorphism") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 100; ++t) {
        IOp a = gen::iop(rng), b = gen::iop(rng);
        CHECK(pi(mul(a, b)) == b1_mul(pi(a), pi(b)));
    }
}

TEST_CASE("membership in K + F") {
    CHECK((IOp::from_scalar(Scalar(3)) + IOp::e(1, 2)).is_in_K_plus_F());
    CHECK_FALSE(H.is_in_K_plus_F());
    CHECK_FALSE(I.is_in_K_plus_F());
    CHECK(IOp::zero().is_in_K_plus_F());
    CHECK(IOp::e(0, 0).is_in_K_plus_F());
}

TEST_CASE("units and their inverses") {
    SUBCASE("2(1+e01)") {
        IOp u = Scalar(2) * (one + IOp::e(0, 1));
        REQUIRE(u.is_unit());
        IOp inv = u.unit_inverse();
        CHECK(inv == Scalar(1, 2) * (one - IOp::e(0, 1)));
        CHECK(mul(u, inv) == one);
        CHECK(mul(inv, u) == one);
    }
    SUBCASE("integ is not a unit") {
        CHECK_FALSE(I.is_unit());
        CHECK_THROWS_AS(I.unit_inverse(), NotAUnit);
    }
    SUBCASE("1 - e00 is not a unit") {
        CHECK_FALSE((one - IOp::e(0, 0)).is_unit());
        CHECK_THROWS_AS((one - IOp::e(0, 0)).unit_inverse(), NotAUnit);
    }
    SUBCASE("random units invert exactly") {
        std::mt19937_64 rng(34);
        for (int t = 0; t < 30; ++t) {
            IOp u = gen::nonzero_scalar(rng) * (one + IOp::from_f(gen::unit_fmatrix(rng, 4)));
            REQUIRE(u.is_unit());
            CHECK(mul(u, u.unit_inverse()) == one);
        }
    }
}

TEST_CASE("centralizer dimensions inside F") {
    CHECK(centralizer_f_dim(H, 3) == 4);
    CHECK(centralizer_f_dim(IOp::e(0, 0), 1) == 2);
    CHECK(centralizer_f_dim(D + I, 0) == 0);
}

TEST_CASE("centralizer dichotomy at desk scale") {
    // inside K[H]+F the commutant keeps growing with the window
    for (const IOp& kh : {H, H + IOp::e(0, 1), mul(H, H) + IOp::e(1, 1)}) {
        unsigned long prev = centralizer_f_dim(kh, 1);
        for (unsigned long N = 2; N <= 10; ++N) {
            unsigned long cur = centralizer_f_dim(kh, N);
            CHECK(cur > prev);
            prev = cur;
        }
    }
    // outside it stays put once the window clears the bandwidth
    for (const IOp& a : {D, I, D + I, mul(H, D)}) {
        const auto start = static_cast<unsigned long>(a.bandwidth() + 2);
        unsigned long first = centralizer_f_dim(a, start);
        for (unsigned long N = start + 1; N <= 10; ++N)
            CHECK(centralizer_f_dim(a, N) == first);
    }
}

TEST_CASE("bandwidth") {
    CHECK(D.bandwidth() == 2);
    CHECK(one.bandwidth() == 1);
    CHECK((pow(I, 3) + IOp::e(0, 5)).bandwidth() == 6);
}
