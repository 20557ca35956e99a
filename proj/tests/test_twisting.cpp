#include <doctest.h>

#include "qhl/errors.hpp"
#include "qhl/linalg.hpp"
#include "qhl/twisting.hpp"
#include "qhl/zoo.hpp"

using namespace qhl;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::string first_failure_tag(const VerificationReport& r)
{
    auto f = r.first_failure();
    return f ? f->tag : std::string();
}

LRTwistingDatum canonical(const QHPtr& H)
{
    return lr_datum(dual_bimodule_algebra(H->base), regular_bicomodule(H->base));
}

LeftTwistingDatum trivial_datum(AlgPtr C, QBPtr H)
{
    return {C, H, trivial_left_module(C, H).act, trivial_left_comodule(C, H).lam};
}

} // namespace

TEST_CASE("L-R-twisting datum on A (x) U")
{
    for (const char* name : {"kZ2", "kS3", "H4"}) {
        auto H = hopf_example(name);
        auto d = canonical(H);
        auto r = check_datum(d);
        CHECK_MESSAGE(r.passed(), name << ": " << r.summary());
        CHECK(check_bullet_consequences(d).passed());
        AlgPtr b = bullet_product(d);
        CHECK(is_associative(*b).passed());
        CHECK(b->unit() == d.carrier->unit());
        // the L-R-twisted product is the L-R-smash product on the nose
        auto lr = lr_smash(dual_bimodule_algebra(H->base), regular_bicomodule(H->base));
        CHECK_MESSAGE(b->mult() == lr.mult(), name);
    }
}

TEST_CASE("twisted products with trivial pieces")
{
    auto H = hopf_example("kZ2");
    auto C = hopf_example("kS3")->alg();
    auto d = trivial_datum(C, H->base);
    CHECK(check_datum(d).passed());
    CHECK(star_product(d)->mult() == C->mult());
    auto H4 = hopf_example("H4");
    auto L = left_datum(canonical(H4));
    CHECK(bullet_product(as_lr_datum(L))->mult() == star_product(L)->mult());
    auto R = right_datum(canonical(H4));
    CHECK(bullet_product(as_lr_datum(R))->mult() == diamond_product(R)->mult());
    RightTwistingDatum tr{C, H->base, trivial_right_module(C, H->base).act, trivial_right_comodule(C, H->base).rho};
    CHECK(diamond_product(tr)->mult() == C->mult());
}

TEST_CASE("incompatible grading is caught at a2")
{
    // k[Z2 x Z2], the generator of Z2 swaps s1 and s2, s1 odd and s2 even
    auto H = hopf_example("kZ2");
    auto K = hopf_example("kZ2xZ2");
    AlgPtr C = K->alg();
    const std::size_t sigma[] = {0, 2, 1, 3};
    TensorBuilder act(Q, {2, 4, 4}), coact(Q, {4, 4, 2});
    for (std::size_t a = 0; a < 4; ++a) {
        act.add({0, a, a}, Scalar::one(Q));
        act.add({1, a, sigma[a]}, Scalar::one(Q));
        coact.add({a, a, a / 2}, Scalar::one(Q));
    }
    LRTwistingDatum d{C,
                      H->base,
                      act.build(),
                      trivial_right_module(C, H->base).act,
                      trivial_left_comodule(C, H->base).lam,
                      coact.build()};
    auto r = check_datum(d);
    CHECK(first_failure_tag(r) == "a2");
    CHECK(r.find("a1")->status == Status::Pass);
    CHECK(r.find("a3")->status == Status::Pass);
    CHECK(r.find("a4")->status == Status::Pass);
}

TEST_CASE("iterated twisting")
{
    for (const char* name : {"kZ2", "kS3", "H4"}) {
        auto r = iterate_check(canonical(hopf_example(name)));
        CHECK_MESSAGE(r.passed(), name << ": " << r.summary());
    }
    auto H = hopf_example("kZ2");
    auto C = hopf_example("kZ3")->alg();
    auto r = iterate_check(as_lr_datum(trivial_datum(C, H->base)));
    CHECK(r.passed());
}

TEST_CASE("lambda isomorphism")
{
    for (const char* name : {"kZ2", "kS3", "H4"}) {
        auto H = hopf_example(name);
        auto A = dual_bimodule_algebra(H->base);
        auto U = regular_bicomodule(H->base);
        TwistedIso t;
        REQUIRE_NOTHROW(t = lambda_iso(canonical(H), *H));
        CHECK(matmul(t.iso.fwd, t.iso.bwd) == Tensor::identity(Q, t.from->dim()));
        // (A, star) over H (x) H^op is the diagonal crossed product
        CHECK_MESSAGE(t.to->mult() == diagonal_crossed(A, U, *H).mult(), name);
    }
    auto H = hopf_example("H4");
    auto L = left_datum(canonical(H));
    auto t = lambda_iso(as_lr_datum(L), *H);
    CHECK(t.iso.fwd == Tensor::identity(Q, L.carrier->dim()));
}

TEST_CASE("right twisting datum to left twisting datum")
{
    for (const char* name : {"kS3", "H4"}) {
        auto H = hopf_example(name);
        auto A = dual_bimodule_algebra(H->base);
        auto U = regular_bicomodule(H->base);
        auto d = gsm_right_datum(A, U);
        CHECK(check_datum(d).passed());
        CHECK_MESSAGE(diamond_product(d)->mult() == lr_smash(A, U).mult(), name);
        TwistedIso t;
        REQUIRE_NOTHROW(t = right_to_left_iso(d, *H));
        CHECK_MESSAGE(t.to->mult() == diagonal_crossed(A, U, *H).mult(), name);
    }
    auto H = hopf_example("kZ2");
    auto C = hopf_example("kS3")->alg();
    RightTwistingDatum tr{C, H->base, trivial_right_module(C, H->base).act, trivial_right_comodule(C, H->base).rho};
    CHECK(right_to_left_iso(tr, *H).iso.fwd == Tensor::identity(Q, 6));
}

TEST_CASE("invariants and coinvariants")
{
    auto H = hopf_example("kZ2");
    auto C = hopf_example("kZ3")->alg();
    auto res = invariants_coinvariants(trivial_datum(C, H->base));
    CHECK(res.report.passed());
    CHECK(res.invariants.dim() == 3);
    CHECK(res.coinvariants.dim() == 3);
    CHECK(res.commute);
    REQUIRE(res.lambda);
    CHECK(*res.lambda == C->mult().reshape({9, 3}));
    CHECK(res.surjective);
    CHECK_FALSE(res.injective);

    // k (x) H with the regular left coaction
    auto S3 = hopf_example("kS3");
    auto k = ground_algebra(Q);
    auto kk = make_bimodule_algebra(k, S3->base, S3->qb().counit.reshape({6, 1, 1}),
                                    S3->qb().counit.reshape({1, 6, 1}));
    auto L = left_datum(lr_datum(kk, regular_bicomodule(S3->base)));
    CHECK(check_datum(L).passed());
    auto r2 = invariants_coinvariants(L);
    CHECK_MESSAGE(r2.report.passed(), r2.report.summary());
    CHECK(r2.invariants.dim() == 6);
    CHECK(r2.coinvariants.dim() == 1);
    CHECK(r2.injective);
    CHECK(r2.surjective);

    // noncommutative invariants: (comut) fails and lambda is omitted
    auto r3 = invariants_coinvariants(trivial_datum(S3->alg(), H->base));
    CHECK_FALSE(r3.commute);
    CHECK_FALSE(r3.lambda);
    REQUIRE(r3.report.find("comut"));
    CHECK(r3.report.find("comut")->status == Status::Skipped);
}
