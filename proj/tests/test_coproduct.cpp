#include <doctest.h>

#include "qhl/coproduct.hpp"
#include "qhl/zoo.hpp"

using namespace qhl;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::string first_failure_tag(const VerificationReport& r)
{
    auto f = r.first_failure();
    return f ? f->tag : std::string();
}

} // namespace

TEST_CASE("coalgebra checker")
{
    CHECK(check_coalgebra(matrix_coalgebra(Q, 2)).passed());
    CHECK(check_coalgebra(grouplike_coalgebra(Q, 3)).passed());
    auto M = matrix_coalgebra(Q, 2);
    TensorBuilder b(Q, M.comult.shape());
    for (const auto& e : M.comult.entries())
        b.add(e.flat, e.value);
    b.add({1, 1, 1}, Scalar::one(Q));
    M.comult = b.build();
    auto r = check_coalgebra(M);
    CHECK(first_failure_tag(r) == "coassoc");
    CHECK(r.first_failure()->witness.has_value());
}

TEST_CASE("bicomodule coalgebras")
{
    auto H = hopf_example("kZ2");
    CHECK(check_bicomodule_coalgebra(trivial_bicomodule_coalgebra(matrix_coalgebra(Q, 2), H->base)).passed());
    CHECK(check_bicomodule_coalgebra(grading_bicomodule_coalgebra(symmetric_group_3())).passed());
    // H over itself via Δ is a bicomodule, but g ↦ g⊗g is not a comodule coalgebra map
    auto r = check_bicomodule_coalgebra(regular_bicomodule_coalgebra(H->base));
    CHECK(r.find("lc")->status == Status::Pass);
    CHECK(r.find("bc")->status == Status::Pass);
    CHECK(first_failure_tag(r) == "lca");
}

TEST_CASE("L-R-smash coproduct")
{
    auto C = grading_bicomodule_coalgebra(symmetric_group_3());
    auto D = lr_smash_coproduct(C);
    CHECK(D.dim() == 36);
    CHECK(check_coalgebra(D).passed());
    CHECK_FALSE(D.comult == molnar_smash_coproduct(C).comult);

    // trivial right coaction: Molnar's smash coproduct
    auto H = hopf_example("kS3");
    BicomoduleCoalgebra L = C;
    L.coact_r = trivial_bicomodule_coalgebra(C.coalg, C.H).coact_r;
    CHECK(check_bicomodule_coalgebra(L).passed());
    CHECK(lr_smash_coproduct(L).comult == molnar_smash_coproduct(L).comult);
    CHECK(check_coalgebra(molnar_smash_coproduct(L)).passed());

    // trivial coactions: the tensor product coalgebra
    auto M = matrix_coalgebra(Q, 2);
    auto T = trivial_bicomodule_coalgebra(M, H->base);
    auto P = lr_smash_coproduct(T);
    Tensor tensor = einsum("cxy,hab->chxayb", {&M.comult, &H->qb().comult}).reshape({24, 24, 24});
    CHECK(P.comult == tensor);
    CHECK(check_coalgebra(P).passed());

    auto H4 = hopf_example("H4");
    auto T4 = trivial_bicomodule_coalgebra(underlying_coalgebra(H4->qb()), H4->base);
    CHECK(check_coalgebra(lr_smash_coproduct(T4)).passed());
}
