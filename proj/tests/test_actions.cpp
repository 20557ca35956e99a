#include <doctest.h>

#include "qhl/errors.hpp"
#include "qhl/zoo.hpp"

#include <random>

using namespace qhl;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::string first_failure_tag(const VerificationReport& r)
{
    auto f = r.first_failure();
    return f ? f->tag : std::string();
}

QHPtr twisted(const char* name, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto H = hopf_example(name);
    return twist(*H, random_gauge(H->qb(), rng));
}

} // namespace

TEST_CASE("dual bimodule algebra")
{
    for (const char* name : {"kZ2", "kS3", "H4", "k^Z2_omega", "k^Z3_omega"}) {
        auto H = hopf_example(name);
        auto D = dual_bimodule_algebra(H->base);
        CHECK_MESSAGE(check_bimodule_algebra(D).passed(), name);
        CHECK(is_unital(*D.carrier).passed());
    }
    // ⟨h⇀φ, h'⟩ = φ(h'h) on kS3: e^a ↦ e^{a h⁻¹}
    auto G = symmetric_group_3();
    auto H = group_algebra(G);
    auto D = dual_bimodule_algebra(H->base);
    for (std::size_t h = 0; h < 6; ++h)
        for (std::size_t a = 0; a < 6; ++a) {
            CHECK(D.act_l.at({h, a, G.mul(a, G.inverse[h])}) == Scalar::one(Q));
            CHECK(D.act_r.at({a, h, G.mul(G.inverse[h], a)}) == Scalar::one(Q));
        }
}

TEST_CASE("dual of a quasi-bialgebra with nontrivial reassociator is not associative")
{
    auto HF = twisted("kS3", 1);
    CHECK_FALSE(HF->qb().phi_is_trivial());
    auto D = dual_bimodule_algebra(HF->base);
    CHECK(check_bimodule_algebra(D).passed());
    CHECK_FALSE(is_associative(*D.carrier).passed());
}

TEST_CASE("adjoint module algebras")
{
    for (const char* name : {"kS3", "H4", "kD4"}) {
        auto H = hopf_example(name);
        auto L = adjoint_left_module(*H);
        auto R = adjoint_right_module(*H);
        CHECK(check_left_module_algebra(L).passed());
        CHECK(check_right_module_algebra(R).passed());
    }
    auto H4 = sweedler_h4();
    auto T = tensor_bimodule_algebra(adjoint_left_module(*H4), adjoint_right_module(*H4));
    CHECK(T.carrier->dim() == 16);
    CHECK(check_bimodule_algebra(T).passed());
    // the left regular action is not a module algebra
    auto H = hopf_example("kZ2");
    auto bad = make_left_module_algebra(H->alg(), H->base, H->alg()->mult(), false);
    auto r = check_left_module_algebra(bad);
    CHECK(first_failure_tag(r) == "ma2");
}

TEST_CASE("comodule algebras")
{
    for (const char* name : {"kS3", "H4", "k^Z2_omega", "H4_F"}) {
        auto H = hopf_example(name);
        auto B = regular_bicomodule(H->base);
        CHECK_MESSAGE(check_bicomodule_algebra(B).passed(), name);
        auto pq = pq_elements(B.right, *H);
        CHECK_MESSAGE(check_pq_elements(B.right, *H, pq).passed(), name);
    }
    auto H = hopf_example("kS3");
    auto k = ground_algebra(Q);
    CHECK(check_bicomodule_algebra(trivial_bicomodule(k, H->base)).passed());
    auto w = hopf_example("k^Z2_omega");
    CHECK_THROWS_AS(trivial_left_comodule(ground_algebra(Q), w->base), CheckFailed);
    auto bad = make_left_comodule_algebra(k, w->base, Elem::unit({w->alg(), k}).t.reshape({1, 2, 1}),
                                          Elem::unit({w->alg(), w->alg(), k}).t, false);
    CHECK(first_failure_tag(check_left_comodule_algebra(bad)) == "lca2");
}

TEST_CASE("perturbed reassociator is caught")
{
    auto H = hopf_example("k^Z2_omega");
    auto R = regular_right_comodule(H->base);
    Tensor phi = R.phi;
    TensorBuilder b(Q, phi.shape());
    for (const auto& e : phi.entries())
        b.add(e.flat, e.value);
    b.add(phi.flat({1, 0, 1}), Scalar(Q, 1));
    auto bad = make_right_comodule_algebra(R.carrier, R.H, R.rho, b.build(), false);
    auto r = check_right_comodule_algebra(bad);
    CHECK_FALSE(r.passed());
    CHECK(r.first_failure()->witness.has_value());
}

TEST_CASE("tensor bicomodule algebra")
{
    auto H = hopf_example("H4_F");
    auto T = tensor_bicomodule_algebra(regular_right_comodule(H->base), regular_left_comodule(H->base));
    CHECK(T.carrier()->dim() == 16);
    CHECK(check_bicomodule_algebra(T).passed());
}

TEST_CASE("twisting bimodule and bicomodule algebras")
{
    std::mt19937_64 rng(11);
    for (const char* name : {"kS3", "H4", "k^Z2_omega"}) {
        auto H = hopf_example(name);
        auto F = random_gauge(H->qb(), rng);
        auto HF = twist(*H, F);
        // _F(H*)_{F⁻¹} is (H_F)* on the nose
        auto D = twist_bimodule_algebra(dual_bimodule_algebra(H->base), F, HF->base);
        CHECK(D.carrier->mult() == dual_bimodule_algebra(HF->base).carrier->mult());
        auto B = twist_bicomodule_algebra(regular_bicomodule(H->base), F, HF->base);
        CHECK_MESSAGE(check_bicomodule_algebra(B).passed(), name);
        auto pq = pq_elements(B.right, *HF);
        CHECK(check_pq_elements(B.right, *HF, pq).passed());
    }
}

TEST_CASE("Yetter-Drinfeld conjugation")
{
    auto G = symmetric_group_3();
    auto Y = conjugation_yd(G);
    CHECK(check_yetter_drinfeld(Y).passed());
    auto H = group_algebra(G);
    YDAlgebra bad{trivial_left_module(Y.module.carrier, Y.module.H), Y.comodule};
    CHECK(first_failure_tag(check_yetter_drinfeld(bad)) == "yd");
}

TEST_CASE("canonical structures")
{
    for (const char* name : {"kZ2", "H4", "k^Z2_omega"}) {
        auto H = hopf_example(name);
        auto c = canonical_structures(H);
        CHECK_MESSAGE(check_bicomodule_algebra(c.regular).passed(), name);
        CHECK(check_bimodule_algebra(c.dual).passed());
        CHECK(c.left.has_value() == H->qb().phi_is_trivial());
        if (c.left) {
            CHECK(check_left_module_algebra(*c.left).passed());
            CHECK(check_right_module_algebra(*c.right).passed());
        }
    }
    CHECK(corpus_group("kS3")->order == 6);
    CHECK(corpus_group("k^Z2_omega")->order == 2);
    CHECK_FALSE(corpus_group("H4"));
    CHECK(hopf_example("sweedler")->dim() == 4);
}
