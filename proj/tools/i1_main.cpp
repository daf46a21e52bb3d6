// i1 - exact calculator for polynomial integro-differential operators.
//
// Every subcommand prints a single JSON object on stdout. Exit codes:
//   0  success
//   1  domain error (NotAUnit, ElementOfF, RelationViolated, ...)
//   2  syntax / dialect / IO error
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "i1/action.hpp"
#include "i1/b1.hpp"
#include "i1/endo.hpp"
#include "i1/errors.hpp"
#include "i1/expr.hpp"
#include "i1/json_io.hpp"

namespace {

using i1::Json;

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

unsigned long trunc_cap() {
    if (const char* env = std::getenv("I1_TRUNC_CAP")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return i1::kDefaultTruncCap;
}

Json endo_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw i1::SyntaxError(0, "cannot open file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw i1::SyntaxError(0, std::string("invalid JSON: ") + e.what());
    }
    return j;
}

// Seeded self-check: associativity in I1 and multiplicativity of the
// projection onto B1, on random canonical-form operators.
i1::IOp random_iop(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> tower(-2, 2), deg(0, 2), coef(-3, 3), idx(0, 2);
    std::uniform_int_distribution<int> pick(0, 2);
    i1::IOp a;
    for (long i = -2; i <= 2; ++i) {
        if (pick(rng) != 0) continue;
        std::vector<i1::Scalar> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = i1::Scalar(coef(rng));
        a.add_tower(i, i1::HPoly(std::move(c)));
    }
    for (int k = pick(rng); k > 0; --k)
        a.add_f(static_cast<i1::Index>(idx(rng)), static_cast<i1::Index>(idx(rng)),
                i1::Scalar(coef(rng)));
    return a;
}

int run_fuzz(unsigned long seed, unsigned long count) {
    std::mt19937_64 rng(seed);
    for (unsigned long k = 0; k < count; ++k) {
        i1::IOp a = random_iop(rng), b = random_iop(rng), c = random_iop(rng);
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            emit(Json{{"error", "SelfCheckFailed"}, {"detail", "associativity"}, {"at", k}});
            return 1;
        }
        if (b1_mul(pi(a), pi(b)) != pi(mul(a, b))) {
            emit(Json{{"error", "SelfCheckFailed"}, {"detail", "pi homomorphism"}, {"at", k}});
            return 1;
        }
    }
    emit(Json{{"checked", count}, {"failures", 0}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for polynomial integro-differential operators"};
    app.require_subcommand(1);

    std::string expr_text, poly_text, file_path;
    unsigned long arg_n = 2, arg_depth = 3, seed = 0, count = 200;
    long arg_cdim_n = 3;

    auto* normalize = app.add_subcommand("normalize", "canonical form of an operator expression");
    normalize->add_option("expr", expr_text)->required();

    auto* picmd = app.add_subcommand("pi", "image in the quotient by the matrix-unit ideal");
    picmd->add_option("expr", expr_text)->required();

    auto* degf = app.add_subcommand("degf", "F-degree of the matrix-unit part");
    degf->add_option("expr", expr_text)->required();

    auto* det = app.add_subcommand("det", "determinant of an element of 1+F");
    det->add_option("expr", expr_text)->required();

    auto* isunit = app.add_subcommand("is-unit", "unit test with exact inverse");
    isunit->add_option("expr", expr_text)->required();

    auto* index_cmd = app.add_subcommand("index", "Fredholm index of the action on K[x]");
    index_cmd->add_option("expr", expr_text)->required();

    auto* kernel = app.add_subcommand("kernel", "exact kernel basis of the action on K[x]");
    kernel->add_option("expr", expr_text)->required();

    auto* applycmd = app.add_subcommand("apply", "apply an operator to a polynomial in x");
    applycmd->add_option("expr", expr_text)->required();
    applycmd->add_option("poly", poly_text)->required();

    auto* cdim = app.add_subcommand("centralizer-dim",
                                    "dim of the commutant inside the e(i,j) block 0..N");
    cdim->add_option("expr", expr_text)->required();
    cdim->add_option("N", arg_cdim_n)->required()->check(CLI::NonNegativeNumber);

    auto* check = app.add_subcommand("check-endo", "validate generator images from a JSON file");
    check->add_option("file", file_path)->required();

    auto* decomp = app.add_subcommand("decompose", "torus x inner factorization of an endomorphism");
    decomp->add_option("file", file_path)->required();

    auto* sigma = app.add_subcommand("sigma-n", "apply H -> H/n, der -> der^n in B1");
    sigma->add_option("n", arg_n)->required()->check(CLI::PositiveNumber);
    sigma->add_option("expr", expr_text)->required();

    auto* sigpre = app.add_subcommand("sigma-n-preimage", "bounded exact preimage search under sigma_n");
    sigpre->add_option("n", arg_n)->required()->check(CLI::Range(2ul, 1000000ul));
    sigpre->add_option("expr", expr_text)->required();
    sigpre->add_option("D", arg_depth)->required();

    long arg_weight = 1;
    auto* adev = app.add_subcommand("ad-eigenvalue",
                                    "ad eigenvalue of an H-polynomial on a graded weight");
    adev->add_option("expr", expr_text)->required();
    adev->add_option("i", arg_weight)->required();

    auto* fuzz = app.add_subcommand("fuzz", "seeded associativity / quotient self-check");
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--count", count);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*normalize) {
            emit(i1::to_json(i1::parse_i1(expr_text)));
        } else if (*picmd) {
            emit(i1::to_json(i1::pi(i1::parse_i1(expr_text))));
        } else if (*degf) {
            emit(Json{{"degf", i1::parse_i1(expr_text).f_part().deg_f()}});
        } else if (*det) {
            i1::IOp a = i1::parse_i1(expr_text);
            if (a.towers().size() != 1 || a.towers().begin()->first != 0 ||
                a.towers().begin()->second != i1::HPoly(1))
                throw i1::NotOnePlusF("det is defined on elements 1 + f with f in F");
            emit(Json{{"det", i1::det_one_plus(a.f_part()).str()}});
        } else if (*isunit) {
            i1::IOp a = i1::parse_i1(expr_text);
            i1::IOp inv = a.unit_inverse();  // throws NotAUnit otherwise
            emit(Json{{"is_unit", true}, {"inverse", i1::to_json(inv)}});
        } else if (*index_cmd) {
            i1::IOp a = i1::parse_i1(expr_text);
            Json ker = Json::array();
            for (const auto& p : i1::kernel_basis(a, trunc_cap())) ker.push_back(i1::to_json(p));
            emit(Json{{"index", i1::index(a, trunc_cap())}, {"kernel", ker}});
        } else if (*kernel) {
            Json ker = Json::array();
            for (const auto& p : i1::kernel_basis(i1::parse_i1(expr_text), trunc_cap()))
                ker.push_back(i1::to_json(p));
            emit(Json{{"kernel", ker}});
        } else if (*applycmd) {
            i1::PolyX r = i1::apply(i1::parse_i1(expr_text), i1::parse_poly(poly_text));
            Json mono = Json::object();
            const auto mc = r.to_monomial();
            for (std::size_t s = 0; s < mc.size(); ++s)
                if (!mc[s].is_zero()) mono[std::to_string(s)] = mc[s].str();
            emit(Json{{"divided", i1::to_json(r)}, {"monomial", mono}});
        } else if (*cdim) {
            emit(Json{{"dim", i1::centralizer_f_dim(i1::parse_i1(expr_text),
                                                    static_cast<unsigned long>(arg_cdim_n))}});
        } else if (*check) {
            i1::endo_from_json(endo_file(file_path));
            emit(Json{{"valid", true}});
        } else if (*decomp) {
            i1::Endo s = i1::endo_from_json(endo_file(file_path));
            emit(i1::to_json(i1::decompose(s, trunc_cap())));
        } else if (*sigma) {
            emit(i1::to_json(i1::sigma_n_apply(arg_n, i1::parse_b1(expr_text))));
        } else if (*sigpre) {
            auto pre = i1::sigma_n_preimage_search(arg_n, i1::parse_b1(expr_text), arg_depth);
            emit(Json{{"preimage", pre ? i1::to_json(*pre) : Json(nullptr)}});
        } else if (*adev) {
            i1::IOp a = i1::parse_i1(expr_text);
            if (!a.f_part().is_zero() ||
                (!a.towers().empty() && a.towers().rbegin()->first != 0) ||
                a.towers().size() > 1)
                throw i1::DialectError("ad-eigenvalue expects a polynomial in H");
            i1::HPoly p = a.towers().empty() ? i1::HPoly() : a.towers().begin()->second;
            auto nu = i1::ad_eigenvalue_on_component(p, arg_weight);
            emit(Json{{"eigenvalue", nu ? Json(nu->str()) : Json(nullptr)}});
        } else if (*fuzz) {
            return run_fuzz(seed, count);
        }
    } catch (const i1::SyntaxError& e) {
        emit(Json{{"error", e.kind()}, {"detail", e.what()}});
        return 2;
    } catch (const i1::DialectError& e) {
        emit(Json{{"error", e.kind()}, {"detail", e.what()}});
        return 2;
    } catch (const i1::Error& e) {
        emit(Json{{"error", e.kind()}, {"detail", e.what()}});
        return 1;
    } catch (const std::exception& e) {
        emit(Json{{"error", "IOError"}, {"detail", e.what()}});
        return 2;
    }
    return 0;
}
