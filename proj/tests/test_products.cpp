#include <doctest.h>

#include "qhl/errors.hpp"
#include "qhl/products.hpp"
#include "qhl/zoo.hpp"

#include <random>

using namespace qhl;

namespace {

const FieldSpec Q = FieldSpec::rationals();

const char* const hopf_names[] = {"kZ2", "kZ4", "kS3", "H4"};
const char* const quasi_names[] = {"k^Z2_omega", "k^Z3_omega", "H4_F"};

// (φ·h'₂)(h₁·ψ)♮h₂h'₁ by direct summation over Δ(h), Δ(h').
Tensor hopf_lr_oracle(const BimoduleAlgebra& A, const QuasiBialgebra& H)
{
    const std::size_t n = A.carrier->dim(), m = H.dim(), N = n * m;
    const FieldSpec& f = A.carrier->field();
    TensorBuilder out(f, {N, N, N});
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t h = 0; h < m; ++h)
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t k = 0; k < m; ++k)
                    for (const auto& dh : H.comult.prefix_range(h, 1))
                        for (const auto& dk : H.comult.prefix_range(k, 1)) {
                            std::size_t h1 = (dh.flat / m) % m, h2 = dh.flat % m;
                            std::size_t k1 = (dk.flat / m) % m, k2 = dk.flat % m;
                            Scalar c = dh.value * dk.value;
                            for (const auto& l : A.act_r.prefix_range(p * m + k2, 2))
                                for (const auto& r : A.act_l.prefix_range(h1 * n + q, 2))
                                    for (const auto& pr : A.carrier->product(l.flat % n, r.flat % n))
                                        for (const auto& hk : H.alg->product(h2, k1))
                                            out.add_product(((p * m + h) * N + q * m + k) * N +
                                                                (pr.flat % n) * m + hk.flat % m,
                                                            c * l.value * r.value, pr.value * hk.value);
                        }
    return out.build();
}

void check_assoc(const ProductAlgebra& P, const std::string& what)
{
    auto r = check_product(P);
    CHECK_MESSAGE(r.passed(), what << ": " << r.summary());
}

BicomoduleAlgebra regular(const QHPtr& H) { return regular_bicomodule(H->base); }
BimoduleAlgebra dual(const QHPtr& H) { return dual_bimodule_algebra(H->base); }

// One side of H* is a module algebra only when Φ is trivial.
LeftModuleAlgebra left_example(const std::string& name)
{
    auto H = hopf_example(name);
    if (name == "H4_F") {
        auto H4 = sweedler_h4();
        return twist_left_module(adjoint_left_module(*H4), h4_gauge(*H4), H->base);
    }
    if (name.rfind("k^", 0) == 0)
        return left_part(graded_dual_numbers(H, 1, 1));
    return left_part(dual(H));
}

RightModuleAlgebra right_example(const std::string& name)
{
    auto H = hopf_example(name);
    if (name == "H4_F") {
        auto H4 = sweedler_h4();
        return twist_right_module(adjoint_right_module(*H4), h4_gauge(*H4), H->base);
    }
    if (name.rfind("k^", 0) == 0)
        return right_part(graded_dual_numbers(H, 1, 1));
    return right_part(dual(H));
}

} // namespace

TEST_CASE("smash product")
{
    auto G = symmetric_group_3();
    auto H = group_algebra(G);
    auto A = left_part(dual(H));
    auto P = smash_product(A);
    check_assoc(P, "k^S3 # kS3");
    // (e^a # g)(e^b # g') = δ(a, b g⁻¹) e^a # gg'
    const std::size_t n = 6;
    TensorBuilder b(Q, {36, 36, 36});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t k = 0; k < n; ++k)
                    if (a == G.mul(c, G.inverse[g]))
                        b.add((((a * n + g) * 36) + c * n + k) * 36 + a * n + G.mul(g, k), Scalar::one(Q));
    CHECK(P.mult() == b.build());

    auto T = smash_product(trivial_left_module(tensor_product(H->alg(), H->alg()), H->base));
    CHECK(T.mult() == tensor_product(tensor_product(H->alg(), H->alg()), H->alg())->mult());

    for (const char* name : quasi_names) {
        auto S = smash_product(left_example(name));
        check_assoc(S, name);
    }
}

TEST_CASE("generalized smash product")
{
    for (const char* name : {"kS3", "k^Z2_omega", "H4_F"}) {
        auto H = hopf_example(name);
        auto A = left_example(name);
        CHECK(generalized_smash(A, regular_left_comodule(H->base)).mult() == smash_product(A).mult());
        check_assoc(generalized_smash(A, regular_left_comodule(H->base)), name);
    }
    auto H = hopf_example("H4");
    auto A = adjoint_left_module(*H);
    auto C = tensor_product(H->alg(), H->alg());
    auto P = generalized_smash(A, trivial_left_comodule(C, H->base));
    CHECK(P.mult() == tensor_product(H->alg(), C)->mult());
}

TEST_CASE("L-R-smash product")
{
    for (const char* name : hopf_names) {
        auto H = hopf_example(name);
        auto A = dual(H);
        auto U = regular(H);
        auto P = lr_smash(A, U);
        check_assoc(P, name);
        CHECK_MESSAGE(P.mult() == hopf_lr_oracle(A, H->qb()), name);
        CHECK(check_lr_smash_embedding(A, U, P).passed());
    }
    for (const char* name : quasi_names) {
        auto H = hopf_example(name);
        auto A = dual(H);
        auto P = lr_smash(A, regular(H));
        check_assoc(P, name);
        CHECK(check_lr_smash_embedding(A, regular(H), P).passed());
    }
    // trivial right action gives the generalized smash product
    for (const char* name : {"kS3", "k^Z2_omega", "H4_F"}) {
        auto H = hopf_example(name);
        auto A = left_example(name);
        auto U = regular(H);
        CHECK_MESSAGE(lr_smash(as_bimodule(A), U).mult() == generalized_smash(A, U.left).mult(), name);
    }
}

TEST_CASE("two-sided smash product and phi")
{
    auto k = ground_algebra(Q);
    for (const char* name : {"kZ2", "k^Z2_omega"}) {
        auto H = hopf_example(name);
        auto U = regular(H);
        auto T = two_sided_smash(left_example(name), U, right_example(name));
        check_assoc(T, name);
        CHECK_NOTHROW(iso_phi(left_example(name), right_example(name), U));
        // A = B = k
        auto kk = two_sided_smash(trivial_left_module(k, H->base), U, trivial_right_module(k, H->base));
        CHECK(kk.mult() == H->alg()->mult());
    }
    auto H = hopf_example("H4");
    auto D = dual(H);
    auto U = regular(H);
    auto B = trivial_right_module(k, H->base);
    CHECK(two_sided_smash(left_part(D), U, B).mult() == generalized_smash(left_part(D), U.left).mult());
    CHECK_NOTHROW(iso_phi(left_part(D), B, U));
}

TEST_CASE("two-sided crossed product and tau")
{
    auto k = ground_algebra(Q);
    for (const char* name : {"kZ2", "k^Z2_omega"}) {
        auto H = hopf_example(name);
        auto D = dual(H);
        auto R = regular_right_comodule(H->base);
        auto L = regular_left_comodule(H->base);
        check_assoc(two_sided_crossed(R, D, L), name);
        CHECK_NOTHROW(iso_tau(D, R, L));
    }
    auto H = hopf_example("H4");
    auto D = dual(H);
    auto R = regular_right_comodule(H->base);
    auto L = trivial_left_comodule(k, H->base);
    check_assoc(two_sided_crossed(R, D, L), "H4");
    CHECK_NOTHROW(iso_tau(D, R, L));
    // trivial comodules over a Hopf algebra return the bimodule algebra
    auto T = two_sided_crossed(trivial_right_comodule(k, H->base), D, L);
    CHECK(T.mult() == D.carrier->mult());
}

TEST_CASE("Omega and the diagonal crossed product")
{
    auto H = hopf_example("kS3");
    auto U = regular(H);
    CHECK(omega_element(U, *H).omega == Elem::unit({H->alg(), H->alg(), H->alg(), H->alg(), H->alg()}).t);
    for (const char* name : {"H4", "k^Z2_omega", "k^Z3_omega", "H4_F"}) {
        auto W = hopf_example(name);
        check_assoc(diagonal_crossed(dual(W), regular(W), *W), name);
    }
    // Hopf case with trivial right action: the generalized smash product
    auto A = left_part(dual(H));
    CHECK(diagonal_crossed(as_bimodule(A), U, *H).mult() == generalized_smash(A, U.left).mult());
}

TEST_CASE("nu")
{
    for (const char* name : hopf_names) {
        auto H = hopf_example(name);
        auto A = dual(H);
        auto U = regular(H);
        AlgebraIso nu;
        REQUIRE_NOTHROW(nu = iso_nu(A, U, *H));
        CHECK_MESSAGE(nu.fwd == nu_hopf_formula(A, U), name);
        CHECK(check_of4(U, *H).passed());
    }
    for (const char* name : quasi_names) {
        auto H = hopf_example(name);
        CHECK_NOTHROW(iso_nu(dual(H), regular(H), *H));
        CHECK_MESSAGE(check_of4(regular(H), *H).passed(), name);
    }
    std::mt19937_64 rng(5);
    auto H = hopf_example("H4");
    auto HF = twist(*H, random_gauge(H->qb(), rng));
    CHECK_NOTHROW(iso_nu(dual(HF), regular(HF), *HF));
}

TEST_CASE("compatibility of nu with phi and tau")
{
    for (const char* name : {"kZ2", "k^Z2_omega"}) {
        auto H = hopf_example(name);
        auto D = dual(H);
        auto U = regular(H);
        CHECK_MESSAGE(check_nu_phi_square(left_example(name), right_example(name), U, *H).passed(), name);
        auto tau = check_nu_tau_square(D, regular_right_comodule(H->base), regular_left_comodule(H->base), *H);
        CHECK_MESSAGE(tau.passed(), name);
    }
}

TEST_CASE("quantum double")
{
    auto Z2 = hopf_example("kZ2");
    auto D = quantum_double(*Z2);
    CHECK(D.dim() == 4);
    CHECK(D.kind == ProductKind::QuantumDouble);
    CHECK_NOTHROW(iso_nu(dual(Z2), regular(Z2), *Z2));
    for (const char* name : {"kS3", "H4", "k^Z2_omega"}) {
        auto P = quantum_double(*hopf_example(name));
        check_assoc(P, name);
    }
}

TEST_CASE("cocommutative iso")
{
    for (const char* name : {"kZ2", "kS3"}) {
        auto H = hopf_example(name);
        CocommutativeIso c;
        REQUIRE_NOTHROW(c = cocommutative_iso(dual(H), *H));
        check_assoc(c.smash, name);
    }
    auto H = hopf_example("kS3");
    auto triv = as_bimodule(left_part(dual(H)));
    auto c = cocommutative_iso(triv, *H);
    CHECK(c.iso.fwd == Tensor::identity(Q, 36));
    CHECK_THROWS_AS(cocommutative_iso(dual(hopf_example("H4")), *hopf_example("H4")), NotCocommutative);
    auto w = hopf_example("k^Z2_omega");
    CHECK_THROWS_AS(cocommutative_iso(dual(w), *w), HypothesisFailed);
}

TEST_CASE("Maschke")
{
    auto Z2 = hopf_example("kZ2");
    auto k = ground_algebra(Q);
    auto kk = make_bimodule_algebra(k, Z2->base, Z2->qb().counit.reshape({2, 1, 1}),
                                    Z2->qb().counit.reshape({1, 2, 1}));
    CHECK(maschke_suite(kk, *Z2).passed());

    auto S3 = hopf_example("kS3");
    auto t = normalized_integral(*S3);
    TensorBuilder avg(Q, {6});
    for (std::size_t i = 0; i < 6; ++i)
        avg.add(i, Scalar(Q, mpq_class(1, 6)));
    CHECK(t == avg.build());
    CHECK(distinguished_grouplike(*S3) == S3->qb().unit());
    auto r = maschke_suite(dual(S3), *S3);
    CHECK_MESSAGE(r.passed(), r.summary());
    REQUIRE(r.find("product-semisimple"));
    CHECK(r.find("product-semisimple")->status == Status::Pass);

    auto H4 = hopf_example("H4");
    CHECK_THROWS_AS(maschke_suite(dual(H4), *H4), HypothesisFailed);
    CHECK(radical_trace_form(*H4->alg()).dim > 0);
}

TEST_CASE("Yetter-Drinfeld identifications")
{
    auto G = symmetric_group_3();
    auto Y = conjugation_yd(G);
    auto H = group_algebra(G);
    auto D = dual_bimodule_algebra(Y.module.H);
    auto U = regular_bicomodule(Y.module.H);
    auto Ap = left_part(D);
    auto r = yd_identifications(D, Y, U, &Ap);
    CHECK_MESSAGE(r.passed(), r.summary());
    CHECK(r.find("yd-corollary"));
    check_assoc(lr_smash(yd_bimodule(D, Y), U), "(H* x kS3) nat kS3");
}

TEST_CASE("twist invariance")
{
    std::mt19937_64 rng(3);
    for (const char* name : {"H4", "k^Z2_omega", "kS3"}) {
        auto H = hopf_example(name);
        auto A = dual(H);
        auto U = regular(H);
        CHECK(twist_invariance(A, U, trivial_gauge(H->qb())).passed());
        for (int i = 0; i < 2; ++i)
            CHECK_MESSAGE(twist_invariance(A, U, random_gauge(H->qb(), rng)).passed(), name);
    }
}
