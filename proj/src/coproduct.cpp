#include "qhl/coproduct.hpp"

#include "qhl/errors.hpp"

namespace qhl {

VerificationReport check_coalgebra(const CoalgebraData& C)
{
    VerificationReport r("coalgebra " + C.name);
    const std::size_t n = C.dim();
    if (C.comult.shape() != Shape{n, n, n})
        throw ShapeMismatch("comultiplication must have shape [n,n,n]");
    const Tensor& D = C.comult;
    const Tensor& e = C.counit;
    Tensor I = Tensor::identity(C.field(), n);
    r.expect_equal("coassoc", einsum("cpz,pxy->cxyz", {&D, &D}), einsum("cxp,pyz->cxyz", {&D, &D}));
    r.expect_equal("counit-left", einsum("cxy,x->cy", {&D, &e}), I);
    r.expect_equal("counit-right", einsum("cxy,y->cx", {&D, &e}), I);
    return r;
}

CoalgebraData grouplike_coalgebra(const FieldSpec& f, std::size_t n)
{
    TensorBuilder d(f, {n, n, n}), e(f, {n});
    for (std::size_t i = 0; i < n; ++i) {
        d.add({i, i, i}, Scalar::one(f));
        e.add(i, Scalar::one(f));
    }
    return {d.build(), e.build(), "k^" + std::to_string(n) + " grouplike"};
}

CoalgebraData matrix_coalgebra(const FieldSpec& f, std::size_t n)
{
    const std::size_t N = n * n;
    TensorBuilder d(f, {N, N, N}), e(f, {N});
    for (std::size_t i = 0; i < n; ++i) {
        e.add(i * n + i, Scalar::one(f));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                d.add({i * n + j, i * n + k, k * n + j}, Scalar::one(f));
    }
    return {d.build(), e.build(), "M" + std::to_string(n) + "^c"};
}

CoalgebraData underlying_coalgebra(const QuasiBialgebra& H)
{
    return {H.comult, H.counit, H.name};
}

VerificationReport check_bicomodule_coalgebra(const BicomoduleCoalgebra& C)
{
    VerificationReport r("bicomodule coalgebra " + C.coalg.name);
    if (!C.H->phi_is_trivial())
        throw HypothesisFailed("bicomodule coalgebras are defined over ordinary bialgebras");
    const std::size_t n = C.coalg.dim(), d = C.H->dim();
    if (C.coact_l.shape() != Shape{n, d, n} || C.coact_r.shape() != Shape{n, n, d})
        throw ShapeMismatch("coactions must have shapes [m,n,m] and [m,m,n]");
    r.merge(check_coalgebra(C.coalg));
    const Tensor& L = C.coact_l;
    const Tensor& R = C.coact_r;
    const Tensor& Dc = C.coalg.comult;
    const Tensor& ec = C.coalg.counit;
    const Tensor& Dh = C.H->comult;
    const Tensor& eh = C.H->counit;
    const Tensor& m = C.H->alg->mult();
    const Tensor& one = C.H->unit();
    Tensor I = Tensor::identity(C.coalg.field(), n);

    r.expect_equal("lc", einsum("cxe,eyd->cxyd", {&L, &L}), einsum("czd,zxy->cxyd", {&L, &Dh}));
    r.expect_equal("lc-counit", einsum("x,cxd->cd", {&eh, &L}), I);
    r.expect_equal("rc", einsum("cey,edx->cdxy", {&R, &R}), einsum("cdz,zxy->cdxy", {&R, &Dh}));
    r.expect_equal("rc-counit", einsum("cdx,x->cd", {&R, &eh}), I);
    r.expect_equal("bc", einsum("cey,exd->cxdy", {&R, &L}), einsum("cxe,edy->cxdy", {&L, &R}));
    r.expect_equal("lca", einsum("cpq,pxd,qye,xyz->czde", {&Dc, &L, &L, &m}), einsum("czf,fde->czde", {&L, &Dc}));
    r.expect_equal("lca-counit", einsum("cxd,d->cx", {&L, &ec}), einsum("c,x->cx", {&ec, &one}));
    r.expect_equal("rca", einsum("cpq,pdx,qey,xyz->cdez", {&Dc, &R, &R, &m}), einsum("cfz,fde->cdez", {&R, &Dc}));
    r.expect_equal("rca-counit", einsum("d,cdx->cx", {&ec, &R}), einsum("c,x->cx", {&ec, &one}));
    return r;
}

BicomoduleCoalgebra trivial_bicomodule_coalgebra(CoalgebraData C, QBPtr H)
{
    Tensor I = Tensor::identity(C.field(), C.dim());
    Tensor l = einsum("x,cd->cxd", {&H->unit(), &I});
    Tensor r = einsum("x,cd->cdx", {&H->unit(), &I});
    return {std::move(C), std::move(H), std::move(l), std::move(r)};
}

BicomoduleCoalgebra regular_bicomodule_coalgebra(QBPtr H)
{
    CoalgebraData C = underlying_coalgebra(*H);
    Tensor D = H->comult;
    return {std::move(C), std::move(H), D, D};
}

CoalgebraData lr_smash_coproduct(const BicomoduleCoalgebra& C)
{
    const std::size_t N = C.coalg.dim() * C.H->dim();
    const Tensor& m = C.H->alg->mult();
    Tensor D = einsum("cpq,pdx,qye,hab,yak,bxl->chdkel",
                      {&C.coalg.comult, &C.coact_r, &C.coact_l, &C.H->comult, &m, &m})
                   .reshape({N, N, N});
    Tensor e = outer(C.coalg.counit, C.H->counit).reshape({N});
    return {std::move(D), std::move(e), C.coalg.name + " nat " + C.H->name};
}

CoalgebraData molnar_smash_coproduct(const BicomoduleCoalgebra& C)
{
    const std::size_t n = C.coalg.dim(), d = C.H->dim(), N = n * d;
    const AlgebraData& H = *C.H->alg;
    TensorBuilder b(C.coalg.field(), {N, N, N});
    for (const auto& cc : C.coalg.comult.entries()) {
        std::size_t c = cc.flat / (n * n), c1 = (cc.flat / n) % n, c2 = cc.flat % n;
        for (const auto& l : C.coact_l.prefix_range(c2, 1)) {
            std::size_t x = (l.flat / n) % d, c20 = l.flat % n;
            for (std::size_t h = 0; h < d; ++h)
                for (const auto& dh : C.H->comult.prefix_range(h, 1)) {
                    std::size_t h1 = (dh.flat / d) % d, h2 = dh.flat % d;
                    for (const auto& p : H.product(x, h1))
                        b.add_product(((c * d + h) * N + c1 * d + p.flat % d) * N + c20 * d + h2,
                                      cc.value * l.value, dh.value * p.value);
                }
        }
    }
    Tensor e = outer(C.coalg.counit, C.H->counit).reshape({N});
    return {b.build(), std::move(e), C.coalg.name + " >< " + C.H->name};
}

} // namespace qhl
