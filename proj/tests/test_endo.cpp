#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "i1/endo.hpp"
#include "i1/errors.hpp"
#include "gen.hpp"

using namespace i1;

namespace {
const IOp D = IOp::der();
const IOp I = IOp::integ();
const IOp H = IOp::h();

Endo identity_endo() { return Endo::validate(H, I, D); }
}

TEST_CASE("validate accepts the identity and the torus") {
    CHECK(identity_endo().h_img() == H);
    Endo t2 = Endo::validate(H, Scalar(2) * I, Scalar(1, 2) * D);
    CHECK(t2 == Endo::torus(Scalar(2)));
}

TEST_CASE("validate rejects swapped generators") {
    CHECK_THROWS_AS(Endo::validate(H, D, I), RelationViolated);
    try {
        Endo::validate(H, D, I);
    } catch (const RelationViolated& e) {
        CHECK(e.which == "der'*int' = 1");
    }
}

TEST_CASE("single-image perturbations always break a relation") {
    // a validated endomorphism is rigid: changing exactly one generator image
    // by a nonzero element of F cannot stay consistent
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<unsigned long> idx(0, 3);
    int tried = 0;
    while (tried < 25) {
        FMatrix p = FMatrix::unit(idx(rng), idx(rng), gen::nonzero_scalar(rng));
        IOp pert = IOp::from_f(p);
        switch (tried % 3) {
            case 0: CHECK_THROWS_AS(Endo::validate(H + pert, I, D), RelationViolated); break;
            case 1: CHECK_THROWS_AS(Endo::validate(H, I + pert, D), RelationViolated); break;
            case 2: CHECK_THROWS_AS(Endo::validate(H, I, D + pert), RelationViolated); break;
        }
        ++tried;
    }
}

TEST_CASE("apply_endo") {
    SUBCASE("identity acts trivially") {
        std::mt19937_64 rng(62);
        Endo id = identity_endo();
        for (int t = 0; t < 20; ++t) {
            IOp a = gen::iop(rng);
            CHECK(apply_endo(id, a) == a);
        }
    }
    SUBCASE("torus scales integ") {
        CHECK(apply_endo(Endo::torus(Scalar(2)), I) == Scalar(2) * I);
        CHECK(apply_endo(Endo::torus(Scalar(2)), D) == Scalar(1, 2) * D);
        CHECK(apply_endo(Endo::torus(Scalar(2)), H) == H);
    }
    SUBCASE("conjugation image of e00 matches the direct F computation") {
        FMatrix u = FMatrix::unit(0, 1);
        Endo w = Endo::inner(u);
        // oracle: (1+u) e00 (1+u)^{-1} computed entirely inside F
        FMatrix uinv = inverse_one_plus(u);
        FMatrix e00 = FMatrix::unit(0, 0);
        FMatrix expect = e00 + fmul(u, e00) + fmul(e00, uinv) + fmul(u, fmul(e00, uinv));
        CHECK(apply_endo(w, IOp::e(0, 0)) == IOp::from_f(expect));
    }
    SUBCASE("conjugation images of all small e(i,j) match the F oracle") {
        std::mt19937_64 rng(63);
        for (int t = 0; t < 10; ++t) {
            FMatrix u = gen::unit_fmatrix(rng, 4);
            Endo w = Endo::inner(u);
            FMatrix uinv = inverse_one_plus(u);
            for (Index i = 0; i <= 4; ++i)
                for (Index j = 0; j <= 4; ++j) {
                    FMatrix eij = FMatrix::unit(i, j);
                    FMatrix expect =
                        eij + fmul(u, eij) + fmul(eij, uinv) + fmul(u, fmul(eij, uinv));
                    CHECK(apply_endo(w, IOp::e(i, j)) == IOp::from_f(expect));
                }
        }
    }
}

TEST_CASE("apply_endo is a homomorphism") {
    std::mt19937_64 rng(64);
    std::vector<Endo> endos = {identity_endo(), Endo::torus(Scalar(2)),
                               Endo::torus(Scalar(-1)),
                               Endo::inner(gen::unit_fmatrix(rng, 3)),
                               Endo::inner(gen::unit_fmatrix(rng, 4))};
    for (const auto& s : endos) {
        for (int t = 0; t < 15; ++t) {
            IOp a = gen::iop(rng, 2, 2, 3, 2), b = gen::iop(rng, 2, 2, 3, 2);
            CHECK(apply_endo(s, mul(a, b)) == mul(apply_endo(s, a), apply_endo(s, b)));
            CHECK(apply_endo(s, a + b) == apply_endo(s, a) + apply_endo(s, b));
        }
    }
}

TEST_CASE("endomorphisms kill nothing") {
    std::mt19937_64 rng(65);
    std::vector<Endo> endos = {Endo::torus(Scalar(5, 3)), Endo::inner(gen::unit_fmatrix(rng, 4))};
    for (const auto& s : endos) {
        // sigma(e00) = 1 - int' der' is structurally nonzero
        CHECK_FALSE((IOp::one() - mul(s.int_img(), s.der_img())).is_zero());
        for (int t = 0; t < 20; ++t) {
            IOp a = gen::iop(rng, 2, 2, 3, 2);
            if (a.is_zero()) continue;
            CHECK_FALSE(apply_endo(s, a).is_zero());
        }
    }
}

TEST_CASE("the ideal maps into itself") {
    std::mt19937_64 rng(66);
    std::vector<Endo> endos = {Endo::torus(Scalar(3)), Endo::inner(gen::unit_fmatrix(rng, 4))};
    for (const auto& s : endos)
        for (Index i = 0; i <= 4; ++i)
            for (Index j = 0; j <= 4; ++j)
                CHECK(apply_endo(s, IOp::e(i, j)).towers().empty());
}

TEST_CASE("torus") {
    CHECK(Endo::torus(Scalar(1)) == identity_endo());
    CHECK(Endo::torus(Scalar(2)).int_img() == Scalar(2) * I);
    CHECK(Endo::torus(Scalar(-1)).der_img() == -D);
    CHECK_THROWS_AS(Endo::torus(Scalar(0)), ZeroScalar);
}

TEST_CASE("inner") {
    CHECK(Endo::inner(FMatrix()) == identity_endo());
    CHECK_THROWS_AS(Endo::inner(-FMatrix::unit(0, 0)), NotAUnit);
    // u = e01 conjugates der to der + e(0,2)
    Endo w = Endo::inner(FMatrix::unit(0, 1));
    CHECK(w.der_img() == D + IOp::e(0, 2));
    CHECK(w.h_img() == H + IOp::e(0, 1));
}

TEST_CASE("composition") {
    std::mt19937_64 rng(67);
    Endo id = identity_endo();
    Endo s = Endo::inner(gen::unit_fmatrix(rng, 3));
    CHECK(compose(id, s) == s);
    CHECK(compose(s, id) == s);
    CHECK(compose(Endo::torus(Scalar(2)), Endo::torus(Scalar(3))) == Endo::torus(Scalar(6)));
    SUBCASE("inner compose multiplies the units") {
        for (int t = 0; t < 10; ++t) {
            FMatrix u = gen::unit_fmatrix(rng, 4), v = gen::unit_fmatrix(rng, 4);
            FMatrix uv = u + v + fmul(u, v);  // (1+u)(1+v) - 1
            CHECK(compose(Endo::inner(u), Endo::inner(v)) == Endo::inner(uv));
        }
    }
}

TEST_CASE("decompose on closed forms") {
    SUBCASE("identity") {
        AutDecomposition d = decompose(identity_endo());
        CHECK(d.nu == Scalar(1));
        CHECK(d.u.is_zero());
        CHECK(d.diag.lambda == Scalar(1));
        CHECK(d.diag.mu == Scalar(0));
        CHECK(d.diag.n == 1);
    }
    SUBCASE("pure torus") {
        AutDecomposition d = decompose(Endo::torus(Scalar(3)));
        CHECK(d.nu == Scalar(3));
        CHECK(d.u.is_zero());
    }
    SUBCASE("pure inner by e01") {
        AutDecomposition d = decompose(Endo::inner(FMatrix::unit(0, 1)));
        CHECK(d.nu == Scalar(1));
        CHECK(d.u == FMatrix::unit(0, 1));
    }
}

TEST_CASE("decompose round-trips torus times inner") {
    std::mt19937_64 rng(68);
    for (const Scalar& lam : {Scalar(1), Scalar(2), Scalar(-1), Scalar(5, 3)}) {
        for (int t = 0; t < 12; ++t) {
            FMatrix u = gen::unit_fmatrix(rng, 4);
            AutDecomposition d = decompose(compose(Endo::torus(lam), Endo::inner(u)));
            CHECK(d.nu == lam);
            CHECK(d.u == u);
        }
    }
}

TEST_CASE("images of der stay index-1 with kernel dimension 1") {
    std::mt19937_64 rng(70);
    for (int t = 0; t < 8; ++t) {
        Endo s = compose(Endo::torus(gen::nonzero_scalar(rng)),
                         Endo::inner(gen::unit_fmatrix(rng, 4)));
        const IOp& dp = s.der_img();
        CHECK(index(dp) == 1);
        CHECK(kernel_basis(dp).size() == 1);
    }
}

TEST_CASE("decompose handles hand-built perturbed triples") {
    // (H + h, integ + f, der + g) built by conjugation stays decomposable
    std::mt19937_64 rng(69);
    for (int t = 0; t < 10; ++t) {
        FMatrix u = gen::unit_fmatrix(rng, 3);
        Endo s = Endo::inner(u);
        Endo rebuilt = Endo::validate(s.h_img(), s.int_img(), s.der_img());
        AutDecomposition d = decompose(rebuilt);
        CHECK(d.nu == Scalar(1));
        CHECK(d.u == u);
    }
}
