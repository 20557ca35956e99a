#include <doctest.h>

#include "qhl/errors.hpp"
#include "qhl/linalg.hpp"
#include "qhl/zoo.hpp"

#include <random>

using namespace qhl;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long v) { return Scalar(Q, v); }

std::string first_failure_tag(const VerificationReport& r)
{
    auto f = r.first_failure();
    return f ? f->tag : std::string();
}

} // namespace

TEST_CASE("kZ2 is a quasi-Hopf algebra with trivial reassociator")
{
    auto H = group_algebra(cyclic_group(2));
    CHECK(check_quasi_bialgebra(H->qb()).passed());
    CHECK(check_quasi_hopf(*H).passed());
    CHECK(H->qb().phi_is_trivial());
    CHECK(is_cocommutative(H->qb()));
}

TEST_CASE("groups of the corpus")
{
    CHECK(symmetric_group_3().order == 6);
    CHECK(dihedral_group_4().order == 8);
    auto S3 = symmetric_group_3();
    bool abelian = true;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b)
            abelian = abelian && S3.mul(a, b) == S3.mul(b, a);
    CHECK_FALSE(abelian);
    CHECK_THROWS_AS(make_group(2, {0, 0, 0, 1}, "bad"), InvalidStructure);
}

TEST_CASE("3-cocycle on k^Z2")
{
    auto G = cyclic_group(2);
    auto w = cyclic_cocycle(2, 1, Q);
    CHECK(w[7] == q(-1));
    CHECK_FALSE(cocycle_violation(G, w));
    auto H = dual_group_algebra(G, w);
    CHECK(check_quasi_hopf(*H).passed());
    CHECK_FALSE(H->qb().phi_is_trivial());

    // brute force (q1)-(q3) with the idempotent basis: Φ is central and
    // Δ(e_g) = Σ_{ab=g} e_a⊗e_b, so the pentagon is the cocycle identity
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                CHECK(H->qb().phi.at({a, b, c}) == w[(a * 2 + b) * 2 + c]);

    // β solves X¹βS(X²)αX³ = 1 with α = 1: β(a) = ω(a,a,a)⁻¹ here
    CHECK(H->beta.at({0}) == q(1));
    CHECK(H->beta.at({1}) == q(-1));

    auto w2 = w;
    w2[7] = q(2);
    CHECK(cocycle_violation(G, w2));
    CHECK_THROWS_AS(dual_group_algebra(G, w2), NotACocycle);
}

TEST_CASE("non-normalized cocycle fails at q4")
{
    auto G = cyclic_group(2);
    std::vector<Scalar> mu(4, q(1));
    mu[1] = q(2); // μ(0,1)
    auto w = coboundary(G, mu);
    CHECK_FALSE(cocycle_violation(G, w));
    CHECK_THROWS_AS(dual_group_algebra(G, w), NotACocycle);

    auto base = dual_group_algebra(G, Q);
    auto bad = make_quasi_bialgebra(base->alg(), base->qb().comult, base->qb().counit, dual_group_phi(G, w),
                                    std::nullopt, "bad", false);
    auto r = check_quasi_bialgebra(*bad);
    CHECK(first_failure_tag(r) == "q4");
    CHECK(r.find("q1")->status == Status::Pass);
    CHECK(r.find("q3")->status == Status::Pass);
}

TEST_CASE("cyclotomic cocycle on k^Z3")
{
    auto H = hopf_example("k^Z3_omega");
    CHECK(H->field() == FieldSpec::cyclotomic(3));
    CHECK_FALSE(H->qb().phi_is_trivial());
    CHECK(check_quasi_hopf(*H).passed());
}

TEST_CASE("Sweedler H4")
{
    auto H = sweedler_h4();
    CHECK(check_quasi_hopf(*H).passed());
    CHECK_FALSE(is_cocommutative(H->qb()));
    Tensor S2 = matmul(H->antipode, H->antipode);
    CHECK(S2 != Tensor::identity(Q, 4));
    CHECK(H->antipode_inv != H->antipode);
    CHECK(radical_trace_form(*H->alg()).dim > 0);

    // (xg = -gx): x * g = -(gx)
    CHECK(H->alg()->mult().at({2, 1, 3}) == q(-1));
    CHECK(H->alg()->mult().at({1, 2, 3}) == q(1));

    auto Hz = std::make_shared<QuasiHopfAlgebra>(*H);
    Hz->alpha = Tensor(Q, {4});
    auto r = check_quasi_hopf(*Hz);
    CHECK_FALSE(r.passed());
    CHECK(r.find("q6")->status == Status::Fail);
}

TEST_CASE("gauge twists")
{
    auto H = group_algebra(direct_product(cyclic_group(2), cyclic_group(2)));
    // F = 1⊗1 + (e1 - 1)⊗(e2 - 1): normalized, not symmetric
    const std::size_t n = 4;
    TensorBuilder b(Q, {n, n});
    b.add(0, q(1));
    b.add(1 * n + 2, q(1));
    b.add(1 * n + 0, q(-1));
    b.add(0 * n + 2, q(-1));
    b.add(0, q(1));
    Tensor f = b.build();
    CHECK(f != f.permute({1, 0}));
    auto F = make_gauge(H->qb(), f);
    auto HF = twist(*H, F);
    CHECK(check_quasi_hopf(*HF).passed());
    CHECK_FALSE(HF->qb().phi_is_trivial());

    auto back = twist(*HF, inverse_gauge(F));
    CHECK(back->qb().comult == H->qb().comult);
    CHECK(back->qb().phi == H->qb().phi);
    CHECK(back->alpha == H->alpha);
    CHECK(back->beta == H->beta);

    auto same = twist(*H, trivial_gauge(H->qb()));
    CHECK(same->qb().comult == H->qb().comult);
    CHECK(same->qb().phi == H->qb().phi);

    TensorBuilder nb(Q, {n, n});
    nb.add(0, q(1));
    nb.add(1 * n + 1, q(1));
    CHECK_THROWS_AS(make_gauge(H->qb(), nb.build()), InvalidGauge);
}

TEST_CASE("random gauges keep the corpus quasi-Hopf")
{
    std::mt19937_64 rng(7);
    for (const char* name : {"kZ2", "kS3", "H4", "k^Z2_omega"}) {
        auto H = hopf_example(name);
        for (int k = 0; k < 10; ++k) {
            auto F = random_gauge(H->qb(), rng);
            auto HF = twist(*H, F, false);
            CHECK_MESSAGE(check_quasi_bialgebra(HF->qb()).passed(), name);
            CHECK_MESSAGE(check_quasi_hopf(*HF).passed(), name);
        }
    }
}

TEST_CASE("Drinfeld twist")
{
    SUBCASE("ordinary Hopf algebras give f = 1⊗1")
    {
        for (const char* name : {"kZ2", "kS3", "H4"}) {
            auto H = hopf_example(name);
            auto d = drinfeld_twist_f(*H);
            CHECK(d.f == Elem::unit(H->legs(2)).t);
            CHECK(d.f_inv == d.f);
        }
    }
    SUBCASE("3-cocycle example")
    {
        auto H = hopf_example("k^Z2_omega");
        auto d = drinfeld_twist_f(*H);
        CHECK(check_drinfeld_twist(*H, d).passed());
        // H is commutative and cocommutative here, so (ca) only says
        // Δ(S(h)) = (S⊗S)Δ(h); f itself must still be a normalized gauge.
        auto F = make_gauge(H->qb(), d.f);
        CHECK(F.f_inv == d.f_inv);
    }
    SUBCASE("twisted examples")
    {
        std::mt19937_64 rng(3);
        auto H = hopf_example("H4");
        auto HF = twist(*H, random_gauge(H->qb(), rng));
        auto d = drinfeld_twist_f(*HF);
        CHECK(check_drinfeld_twist(*HF, d).passed());
        CHECK(d.f != Elem::unit(H->legs(2)).t);
    }
}

TEST_CASE("opposite and tensor bialgebras")
{
    auto H = sweedler_h4();
    auto op = opposite_bialgebra(H->qb());
    CHECK(check_quasi_bialgebra(*op).passed());
    auto T = tensor_bialgebra(H->qb(), *op);
    CHECK(T->dim() == 16);
    CHECK(check_quasi_bialgebra(*T).passed());
    auto w = hopf_example("k^Z2_omega");
    auto T2 = tensor_bialgebra(w->qb(), w->qb());
    CHECK(check_quasi_bialgebra(*T2).passed());
}
