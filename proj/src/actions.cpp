#include "qhl/actions.hpp"

#include "qhl/errors.hpp"

namespace qhl {

namespace {

AlgPtr halg(const QBPtr& H) { return H->alg; }

Elem constant3(const Tensor& t, AlgPtr a, AlgPtr b, AlgPtr c)
{
    return Elem::constant(t, {std::move(a), std::move(b), std::move(c)});
}

Tensor invert3(const Tensor& phi, const std::vector<AlgPtr>& algs)
{
    if (phi == Elem::unit(algs).t)
        return phi;
    return invert(Elem::constant(phi, algs)).t;
}

void require_shape(const Tensor& t, const Shape& s, const char* what)
{
    if (t.shape() != s)
        throw ShapeMismatch(std::string(what) + " has the wrong shape");
}

void check_left_action(VerificationReport& r, const AlgPtr& A, const QuasiBialgebra& H, const Tensor& act,
                       const std::string& p)
{
    const Tensor& mH = H.alg->mult();
    const Tensor& mA = A->mult();
    // module
    r.expect_equal(p + "module-assoc", einsum("hkp,paq->hkaq", {&mH, &act}), einsum("kab,hbq->hkaq", {&act, &act}));
    r.expect_equal(p + "module-unit", einsum("p,paq->aq", {&H.unit(), &act}), Tensor::identity(A->field(), A->dim()));
    // h·(aa') = (h₁·a)(h₂·a')
    Elem T = tensor(H.delta_family(), Elem::basis({A, A}));
    T = act_left(act_left(T, 0, 2, act), 0, 2, act);
    r.expect_equal(p + "ma2", einsum("abp,hpq->habq", {&mA, &act}), merge_legs(T, 0, 1).t);
    r.expect_equal(p + "ma3", einsum("hpq,p->hq", {&act, &A->unit()}), outer(H.counit, A->unit()));
}

void check_right_action(VerificationReport& r, const AlgPtr& A, const QuasiBialgebra& H, const Tensor& act,
                        const std::string& p)
{
    const Tensor& mH = H.alg->mult();
    const Tensor& mA = A->mult();
    r.expect_equal(p + "module-assoc", einsum("hkp,apq->ahkq", {&mH, &act}), einsum("ahb,bkq->ahkq", {&act, &act}));
    r.expect_equal(p + "module-unit", einsum("p,apq->aq", {&H.unit(), &act}), Tensor::identity(A->field(), A->dim()));
    // (aa')·h = (a·h₁)(a'·h₂)
    Elem T = tensor(Elem::basis({A, A}), H.delta_family());
    T = act_right(act_right(T, 0, 2, act), 1, 2, act);
    r.expect_equal(p + "rma2", einsum("abp,phq->abhq", {&mA, &act}), merge_legs(T, 0, 1).t);
    r.expect_equal(p + "rma3", einsum("phq,p->hq", {&act, &A->unit()}), outer(H.counit, A->unit()));
}

// (φψ)ξ = (X¹·φ·x¹)[(X²·ψ·x²)(X³·ξ·x³)]; either action may be absent.
Tensor reassociated_product(const AlgPtr& A, const QuasiBialgebra& H, const Tensor* act_l, const Tensor* act_r)
{
    const Tensor& m = A->mult();
    // W[x,y,z,t]: (x·X¹)((y·X²)(z·X³)) with X = Φ⁻¹
    Tensor W = act_r ? einsum("lmn,xlp,ymq,znr,qrs,pst->xyzt", {&H.phi_inv, act_r, act_r, act_r, &m, &m})
                     : einsum("yzs,xst->xyzt", {&m, &m});
    if (!act_l)
        return W;
    Tensor L = einsum("ijk,iax,jby,kcz->abcxyz", {&H.phi, act_l, act_l, act_l});
    return einsum("abcxyz,xyzt->abct", {&L, &W});
}

Tensor triple_product(const AlgPtr& A)
{
    const Tensor& m = A->mult();
    return einsum("ijp,pkq->ijkq", {&m, &m});
}

void check_phi_inverse(VerificationReport& r, const std::string& tag, const Elem& phi, const Elem& phi_inv)
{
    Tensor u = Elem::unit(phi.algs).t;
    r.expect_equal(tag, mul(phi, phi_inv).t, u);
    r.expect_equal(tag + "-left", mul(phi_inv, phi).t, u);
}

} // namespace

Elem act_left(const Elem& x, std::size_t h, std::size_t a, const Tensor& act)
{
    return apply(x, {h, a}, act, {x.algs.at(a)}, a - (h < a ? 1 : 0));
}

Elem act_right(const Elem& x, std::size_t a, std::size_t h, const Tensor& act)
{
    return apply(x, {a, h}, act, {x.algs.at(a)}, a - (h < a ? 1 : 0));
}

Tensor BimoduleAlgebra::both() const
{
    return einsum("hap,pkq->hakq", {&act_l, &act_r});
}

VerificationReport check_left_module_algebra(const LeftModuleAlgebra& A)
{
    VerificationReport r("left module algebra " + A.carrier->name());
    check_left_action(r, A.carrier, *A.H, A.act, "");
    r.expect_equal("ma1", triple_product(A.carrier), reassociated_product(A.carrier, *A.H, &A.act, nullptr));
    return r;
}

VerificationReport check_right_module_algebra(const RightModuleAlgebra& B)
{
    VerificationReport r("right module algebra " + B.carrier->name());
    check_right_action(r, B.carrier, *B.H, B.act, "");
    r.expect_equal("rma1", triple_product(B.carrier), reassociated_product(B.carrier, *B.H, nullptr, &B.act));
    return r;
}

VerificationReport check_bimodule_algebra(const BimoduleAlgebra& A)
{
    VerificationReport r("bimodule algebra " + A.carrier->name());
    check_left_action(r, A.carrier, *A.H, A.act_l, "left-");
    check_right_action(r, A.carrier, *A.H, A.act_r, "right-");
    // (h·φ)·h' = h·(φ·h')
    r.expect_equal("bimodule", A.both(), einsum("akp,hpq->hakq", {&A.act_r, &A.act_l}));
    r.expect_equal("bma1", triple_product(A.carrier), reassociated_product(A.carrier, *A.H, &A.act_l, &A.act_r));
    return r;
}

VerificationReport check_right_comodule_algebra(const RightComoduleAlgebra& A)
{
    VerificationReport r("right comodule algebra " + A.carrier->name());
    const QuasiBialgebra& H = *A.H;
    AlgPtr C = A.carrier, h = H.alg;
    const Tensor& m = C->mult();
    Elem R = Elem::family(A.rho, 1, {C, h});
    Elem P = constant3(A.phi, C, h, h), Pi = constant3(A.phi_inv, C, h, h);

    r.expect_equal("rho-mult", einsum("ijp,pqh->ijqh", {&m, &A.rho}), mul(R, R).t);
    r.expect_equal("rho-unit", einsum("p,pqh->qh", {&C->unit(), &A.rho}), Elem::unit({C, h}).t);
    r.expect_equal("rca1", mul(P, apply(R, 0, A.rho, {C, h})).t, mul(apply(R, 1, H.comult, {h, h}), P).t);
    Elem lhs2 = mul(mul(insert_unit(H.Phi(), 0, C), apply(P, 1, H.comult, {h, h})), insert_unit(P, 3, h));
    Elem rhs2 = mul(apply(P, 2, H.comult, {h, h}), apply(P, 0, A.rho, {C, h}));
    r.expect_equal("rca2", lhs2.t, rhs2.t);
    r.expect_equal("rca3", apply(R, 1, H.counit, {}).t, Tensor::identity(C->field(), C->dim()));
    Tensor u2 = Elem::unit({C, h}).t;
    r.expect_equal("rca4", apply(P, 1, H.counit, {}).t, u2);
    r.expect_equal("rca4-right", apply(P, 2, H.counit, {}).t, u2);
    check_phi_inverse(r, "phi-inverse", P, Pi);
    return r;
}

VerificationReport check_left_comodule_algebra(const LeftComoduleAlgebra& B)
{
    VerificationReport r("left comodule algebra " + B.carrier->name());
    const QuasiBialgebra& H = *B.H;
    AlgPtr C = B.carrier, h = H.alg;
    const Tensor& m = C->mult();
    Elem L = Elem::family(B.lam, 1, {h, C});
    Elem P = constant3(B.phi, h, h, C), Pi = constant3(B.phi_inv, h, h, C);

    r.expect_equal("lambda-mult", einsum("ijp,phq->ijhq", {&m, &B.lam}), mul(L, L).t);
    r.expect_equal("lambda-unit", einsum("p,phq->hq", {&C->unit(), &B.lam}), Elem::unit({h, C}).t);
    r.expect_equal("lca1", mul(apply(L, 1, B.lam, {h, C}), P).t, mul(P, apply(L, 0, H.comult, {h, h})).t);
    Elem lhs2 = mul(mul(insert_unit(P, 0, h), apply(P, 1, H.comult, {h, h})), insert_unit(H.Phi(), 3, C));
    Elem rhs2 = mul(apply(P, 2, B.lam, {h, C}), apply(P, 0, H.comult, {h, h}));
    r.expect_equal("lca2", lhs2.t, rhs2.t);
    r.expect_equal("lca3", apply(L, 0, H.counit, {}).t, Tensor::identity(C->field(), C->dim()));
    Tensor u2 = Elem::unit({h, C}).t;
    r.expect_equal("lca4", apply(P, 1, H.counit, {}).t, u2);
    r.expect_equal("lca4-left", apply(P, 0, H.counit, {}).t, u2);
    check_phi_inverse(r, "phi-inverse", P, Pi);
    return r;
}

VerificationReport check_bicomodule_algebra(const BicomoduleAlgebra& A)
{
    VerificationReport r("bicomodule algebra " + A.carrier()->name());
    if (A.left.carrier != A.right.carrier || !same_structure(A.left.H, A.right.H))
        throw StructureMismatch("left and right coactions live on different algebras");
    r.merge(check_left_comodule_algebra(A.left), "left-");
    r.merge(check_right_comodule_algebra(A.right), "right-");

    const QuasiBialgebra& H = *A.H();
    AlgPtr C = A.carrier(), h = H.alg;
    Elem R = Elem::family(A.right.rho, 1, {C, h});
    Elem L = Elem::family(A.left.lam, 1, {h, C});
    Elem M = constant3(A.phi_lr, h, C, h), Mi = constant3(A.phi_lr_inv, h, C, h);
    Elem Pl = constant3(A.left.phi, h, h, C), Pr = constant3(A.right.phi, C, h, h);

    r.expect_equal("bca1", mul(M, apply(R, 0, A.left.lam, {h, C})).t, mul(apply(L, 1, A.right.rho, {C, h}), M).t);
    Elem lhs2 = mul(mul(insert_unit(M, 0, h), apply(M, 1, A.left.lam, {h, C})), insert_unit(Pl, 3, h));
    Elem rhs2 = mul(apply(Pl, 2, A.right.rho, {C, h}), apply(M, 0, H.comult, {h, h}));
    r.expect_equal("bca2", lhs2.t, rhs2.t);
    Elem lhs3 = mul(mul(insert_unit(Pr, 0, h), apply(M, 1, A.right.rho, {C, h})), insert_unit(M, 3, h));
    Elem rhs3 = mul(apply(M, 2, H.comult, {h, h}), apply(Pr, 0, A.left.lam, {h, C}));
    r.expect_equal("bca3", lhs3.t, rhs3.t);
    Tensor u2 = Elem::unit({h, C}).t;
    r.expect_equal("bca4", apply(M, 2, H.counit, {}).t, u2);
    r.expect_equal("bca4-left", apply(M, 0, H.counit, {}).t, Elem::unit({C, h}).t);
    check_phi_inverse(r, "phi-lr-inverse", M, Mi);
    return r;
}

LeftModuleAlgebra make_left_module_algebra(AlgPtr carrier, QBPtr H, Tensor act, bool validate)
{
    require_shape(act, {H->dim(), carrier->dim(), carrier->dim()}, "left action");
    LeftModuleAlgebra A{std::move(carrier), std::move(H), std::move(act)};
    if (validate)
        require_passed(check_left_module_algebra(A), "left module algebra " + A.carrier->name());
    return A;
}

RightModuleAlgebra make_right_module_algebra(AlgPtr carrier, QBPtr H, Tensor act, bool validate)
{
    require_shape(act, {carrier->dim(), H->dim(), carrier->dim()}, "right action");
    RightModuleAlgebra B{std::move(carrier), std::move(H), std::move(act)};
    if (validate)
        require_passed(check_right_module_algebra(B), "right module algebra " + B.carrier->name());
    return B;
}

BimoduleAlgebra make_bimodule_algebra(AlgPtr carrier, QBPtr H, Tensor act_l, Tensor act_r, bool validate)
{
    require_shape(act_l, {H->dim(), carrier->dim(), carrier->dim()}, "left action");
    require_shape(act_r, {carrier->dim(), H->dim(), carrier->dim()}, "right action");
    BimoduleAlgebra A{std::move(carrier), std::move(H), std::move(act_l), std::move(act_r)};
    if (validate)
        require_passed(check_bimodule_algebra(A), "bimodule algebra " + A.carrier->name());
    return A;
}

RightComoduleAlgebra make_right_comodule_algebra(AlgPtr carrier, QBPtr H, Tensor rho, Tensor phi, bool validate)
{
    const std::size_t n = carrier->dim(), d = H->dim();
    require_shape(rho, {n, n, d}, "right coaction");
    require_shape(phi, {n, d, d}, "right reassociator");
    RightComoduleAlgebra A{carrier, H, std::move(rho), phi, invert3(phi, {carrier, H->alg, H->alg})};
    if (validate)
        require_passed(check_right_comodule_algebra(A), "right comodule algebra " + carrier->name());
    return A;
}

LeftComoduleAlgebra make_left_comodule_algebra(AlgPtr carrier, QBPtr H, Tensor lam, Tensor phi, bool validate)
{
    const std::size_t n = carrier->dim(), d = H->dim();
    require_shape(lam, {n, d, n}, "left coaction");
    require_shape(phi, {d, d, n}, "left reassociator");
    LeftComoduleAlgebra B{carrier, H, std::move(lam), phi, invert3(phi, {H->alg, H->alg, carrier})};
    if (validate)
        require_passed(check_left_comodule_algebra(B), "left comodule algebra " + carrier->name());
    return B;
}

BicomoduleAlgebra make_bicomodule_algebra(LeftComoduleAlgebra left, RightComoduleAlgebra right, Tensor phi_lr,
                                          bool validate)
{
    AlgPtr C = left.carrier, h = left.H->alg;
    require_shape(phi_lr, {h->dim(), C->dim(), h->dim()}, "bicomodule reassociator");
    Tensor inv = invert3(phi_lr, {h, C, h});
    BicomoduleAlgebra A{std::move(left), std::move(right), std::move(phi_lr), std::move(inv)};
    if (validate)
        require_passed(check_bicomodule_algebra(A), "bicomodule algebra " + C->name());
    return A;
}

LeftModuleAlgebra trivial_left_module(AlgPtr carrier, QBPtr H)
{
    Tensor act = outer(H->counit, Tensor::identity(carrier->field(), carrier->dim()));
    return make_left_module_algebra(std::move(carrier), std::move(H), std::move(act));
}

RightModuleAlgebra trivial_right_module(AlgPtr carrier, QBPtr H)
{
    Tensor act = outer(H->counit, Tensor::identity(carrier->field(), carrier->dim())).permute({1, 0, 2});
    return make_right_module_algebra(std::move(carrier), std::move(H), std::move(act));
}

BimoduleAlgebra as_bimodule(const LeftModuleAlgebra& A)
{
    Tensor r = outer(A.H->counit, Tensor::identity(A.carrier->field(), A.carrier->dim())).permute({1, 0, 2});
    return make_bimodule_algebra(A.carrier, A.H, A.act, std::move(r));
}

BimoduleAlgebra as_bimodule(const RightModuleAlgebra& B)
{
    Tensor l = outer(B.H->counit, Tensor::identity(B.carrier->field(), B.carrier->dim()));
    return make_bimodule_algebra(B.carrier, B.H, std::move(l), B.act);
}

LeftModuleAlgebra left_part(const BimoduleAlgebra& A)
{
    return make_left_module_algebra(A.carrier, A.H, A.act_l);
}

RightModuleAlgebra right_part(const BimoduleAlgebra& A)
{
    return make_right_module_algebra(A.carrier, A.H, A.act_r);
}

LeftComoduleAlgebra trivial_left_comodule(AlgPtr carrier, QBPtr H)
{
    Tensor lam = outer(H->unit(), Tensor::identity(carrier->field(), carrier->dim())).permute({1, 0, 2});
    Tensor phi = Elem::unit({H->alg, H->alg, carrier}).t;
    return make_left_comodule_algebra(std::move(carrier), std::move(H), std::move(lam), std::move(phi));
}

RightComoduleAlgebra trivial_right_comodule(AlgPtr carrier, QBPtr H)
{
    Tensor rho = outer(Tensor::identity(carrier->field(), carrier->dim()), H->unit());
    Tensor phi = Elem::unit({carrier, H->alg, H->alg}).t;
    return make_right_comodule_algebra(std::move(carrier), std::move(H), std::move(rho), std::move(phi));
}

BicomoduleAlgebra trivial_bicomodule(AlgPtr carrier, QBPtr H)
{
    Tensor phi_lr = Elem::unit({H->alg, carrier, H->alg}).t;
    return make_bicomodule_algebra(trivial_left_comodule(carrier, H), trivial_right_comodule(carrier, H),
                                   std::move(phi_lr));
}

LeftComoduleAlgebra regular_left_comodule(QBPtr H)
{
    return make_left_comodule_algebra(H->alg, H, H->comult, H->phi);
}

RightComoduleAlgebra regular_right_comodule(QBPtr H)
{
    return make_right_comodule_algebra(H->alg, H, H->comult, H->phi);
}

BicomoduleAlgebra regular_bicomodule(QBPtr H)
{
    return make_bicomodule_algebra(regular_left_comodule(H), regular_right_comodule(H), H->phi);
}

LeftModuleAlgebra adjoint_left_module(const QuasiHopfAlgebra& H)
{
    AlgPtr h = H.alg();
    Elem T = tensor(H.qb().delta_family(), Elem::basis({h}));
    T = apply(T, 1, H.antipode, {h});
    T = merge_legs(merge_legs(T, 0, 2), 0, 1);
    return make_left_module_algebra(h, H.base, T.t);
}

RightModuleAlgebra adjoint_right_module(const QuasiHopfAlgebra& H)
{
    AlgPtr h = H.alg();
    Elem T = tensor(Elem::basis({h}), H.qb().delta_family());
    T = apply(T, 1, H.antipode, {h});
    T = merge_legs(merge_legs(T, 1, 0), 0, 1);
    return make_right_module_algebra(h, H.base, T.t);
}

BimoduleAlgebra dual_bimodule_algebra(QBPtr H)
{
    const Tensor& m = H->alg->mult();
    AlgPtr dual = make_algebra(H->comult.permute({1, 2, 0}), H->counit, H->name + "*");
    return make_bimodule_algebra(dual, H, m.permute({1, 2, 0}), m.permute({2, 0, 1}));
}

PQElements pq_elements(const RightComoduleAlgebra& A, const QuasiHopfAlgebra& H)
{
    AlgPtr C = A.carrier, h = H.alg();
    Elem x = apply(constant3(A.phi_inv, C, h, h), 2, H.antipode, {h});
    Elem p = merge_legs(right_mul(x, 1, H.beta), 1, 2);
    Elem X = apply(left_mul(H.alpha, constant3(A.phi, C, h, h), 2), 2, H.antipode_inv, {h});
    Elem q = merge_legs(X, 2, 1);
    return {p.t, q.t};
}

VerificationReport check_pq_elements(const RightComoduleAlgebra& A, const QuasiHopfAlgebra& H, const PQElements& pq)
{
    VerificationReport r("p, q elements of " + A.carrier->name());
    AlgPtr C = A.carrier, h = H.alg();
    Elem P = Elem::constant(pq.p, {C, h}), Q = Elem::constant(pq.q, {C, h});
    Elem R = Elem::family(A.rho, 1, {C, h});
    Elem a1 = insert_unit(Elem::basis({C}), 1, h);

    Elem l1 = apply(apply(R, 1, H.antipode, {h}), 0, A.rho, {C, h});
    r.expect_equal("tpqr1", merge_legs(mul_at(l1, P, {0, 1}), 1, 2).t, mul(P, a1).t);
    Elem l1a = apply(apply(R, 1, H.antipode_inv, {h}), 0, A.rho, {C, h});
    r.expect_equal("tpqr1a", merge_legs(mul_at(l1a, Q, {0, 1}, false), 2, 1).t, mul(a1, Q).t);

    Tensor u = Elem::unit({C, h}).t;
    Elem l2 = apply(apply(Q, 1, H.antipode, {h}), 0, A.rho, {C, h});
    r.expect_equal("tpqr2", merge_legs(mul_at(l2, P, {0, 1}), 1, 2).t, u);
    Elem l2a = apply(apply(P, 1, H.antipode_inv, {h}), 0, A.rho, {C, h});
    r.expect_equal("tpqr2a", merge_legs(mul_at(l2a, Q, {0, 1}, false), 2, 1).t, u);
    return r;
}

BimoduleAlgebra tensor_bimodule_algebra(const LeftModuleAlgebra& A, const RightModuleAlgebra& B)
{
    if (!same_structure(A.H, B.H))
        throw StructureMismatch("tensor bimodule algebra over different quasi-bialgebras");
    const std::size_t na = A.carrier->dim(), nb = B.carrier->dim(), N = na * nb, d = A.H->dim();
    const FieldSpec& f = A.carrier->field();
    Tensor ia = Tensor::identity(f, na), ib = Tensor::identity(f, nb);
    Tensor l = einsum("hac,bd->habcd", {&A.act, &ib}).reshape({d, N, N});
    Tensor r = einsum("ac,bhd->abhcd", {&ia, &B.act}).reshape({N, d, N});
    return make_bimodule_algebra(tensor_product(A.carrier, B.carrier), A.H, std::move(l), std::move(r));
}

BicomoduleAlgebra tensor_bicomodule_algebra(const RightComoduleAlgebra& A, const LeftComoduleAlgebra& B)
{
    if (!same_structure(A.H, B.H))
        throw StructureMismatch("tensor bicomodule algebra over different quasi-bialgebras");
    const std::size_t na = A.carrier->dim(), nb = B.carrier->dim(), N = na * nb, d = A.H->dim();
    const FieldSpec& f = A.carrier->field();
    AlgPtr C = tensor_product(A.carrier, B.carrier), h = halg(A.H);
    Tensor ia = Tensor::identity(f, na), ib = Tensor::identity(f, nb);
    Tensor rho = einsum("ach,bd->abcdh", {&A.rho, &ib}).reshape({N, N, d});
    Tensor lam = einsum("ac,bhd->abhcd", {&ia, &B.lam}).reshape({N, d, N});
    Tensor pr = einsum("axy,b->abxy", {&A.phi, &B.carrier->unit()}).reshape({N, d, d});
    Tensor pl = einsum("xyb,a->xyab", {&B.phi, &A.carrier->unit()}).reshape({d, d, N});
    auto left = make_left_comodule_algebra(C, A.H, std::move(lam), std::move(pl));
    auto right = make_right_comodule_algebra(C, A.H, std::move(rho), std::move(pr));
    return make_bicomodule_algebra(std::move(left), std::move(right), Elem::unit({h, C, h}).t);
}

BimoduleAlgebra twist_bimodule_algebra(const BimoduleAlgebra& A, const GaugeTwist& F, QBPtr HF)
{
    if (!HF)
        HF = twist(*A.H, F);
    AlgPtr C = A.carrier, h = A.H->alg;
    Elem T = tensor(Elem::basis({C, C}),
                    tensor(Elem::constant(F.f_inv, {h, h}), Elem::constant(F.f, {h, h})));
    T = act_left(act_left(T, 2, 0, A.act_l), 2, 1, A.act_l);
    T = act_right(act_right(T, 0, 2, A.act_r), 1, 2, A.act_r);
    AlgPtr twisted = make_algebra(merge_legs(T, 0, 1).t, C->unit(), C->name() + "_F");
    return make_bimodule_algebra(twisted, HF, A.act_l, A.act_r);
}

LeftModuleAlgebra twist_left_module(const LeftModuleAlgebra& A, const GaugeTwist& F, QBPtr HF)
{
    return left_part(twist_bimodule_algebra(as_bimodule(A), F, std::move(HF)));
}

RightModuleAlgebra twist_right_module(const RightModuleAlgebra& B, const GaugeTwist& F, QBPtr HF)
{
    return right_part(twist_bimodule_algebra(as_bimodule(B), F, std::move(HF)));
}

LeftComoduleAlgebra twist_left_comodule(const LeftComoduleAlgebra& B, const GaugeTwist& F, QBPtr HF)
{
    if (!HF)
        HF = twist(*B.H, F);
    AlgPtr C = B.carrier, h = B.H->alg;
    Elem P = constant3(B.phi, h, h, C);
    Tensor phi = mul(P, insert_unit(Elem::constant(F.f_inv, {h, h}), 2, C)).t;
    return make_left_comodule_algebra(C, HF, B.lam, std::move(phi));
}

RightComoduleAlgebra twist_right_comodule(const RightComoduleAlgebra& A, const GaugeTwist& F, QBPtr HF)
{
    if (!HF)
        HF = twist(*A.H, F);
    AlgPtr C = A.carrier, h = A.H->alg;
    Elem P = constant3(A.phi, C, h, h);
    Tensor phi = mul(insert_unit(Elem::constant(F.f, {h, h}), 0, C), P).t;
    return make_right_comodule_algebra(C, HF, A.rho, std::move(phi));
}

BicomoduleAlgebra twist_bicomodule_algebra(const BicomoduleAlgebra& A, const GaugeTwist& F, QBPtr HF)
{
    if (!HF)
        HF = twist(*A.H(), F);
    return make_bicomodule_algebra(twist_left_comodule(A.left, F, HF), twist_right_comodule(A.right, F, HF),
                                   A.phi_lr);
}

VerificationReport check_yetter_drinfeld(const YDAlgebra& A)
{
    VerificationReport r("Yetter-Drinfeld algebra " + A.module.carrier->name());
    if (A.module.carrier != A.comodule.carrier || !same_structure(A.module.H, A.comodule.H))
        throw StructureMismatch("action and coaction live on different algebras");
    r.merge(check_left_module_algebra(A.module), "module-");
    r.merge(check_left_comodule_algebra(A.comodule), "comodule-");
    AlgPtr C = A.module.carrier, h = A.module.H->alg;
    Elem D = A.module.H->delta_family();
    // h₁a₍₋₁₎ ⊗ h₂·a₍₀₎ = (h₁·a)₍₋₁₎h₂ ⊗ (h₁·a)₍₀₎
    Elem lhs = tensor(D, Elem::family(A.comodule.lam, 1, {h, C}));
    lhs = act_left(merge_legs(lhs, 0, 2), 1, 2, A.module.act);
    Elem rhs = act_left(tensor(D, Elem::basis({C})), 0, 2, A.module.act);
    rhs = merge_legs(apply(rhs, 1, A.comodule.lam, {h, C}), 1, 0);
    r.expect_equal("yd", lhs.t, rhs.t);
    return r;
}

} // namespace qhl
