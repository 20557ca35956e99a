#include "qhl/twisting.hpp"

#include "qhl/errors.hpp"
#include "qhl/linalg.hpp"

namespace qhl {

namespace {

void require_ordinary(const QBPtr& H, const char* what)
{
    if (!H->phi_is_trivial())
        throw HypothesisFailed(std::string(what) + " needs an ordinary bialgebra");
}

Tensor unit3(const AlgPtr& a, const AlgPtr& b, const AlgPtr& c)
{
    return Elem::unit({a, b, c}).t;
}

LeftComoduleAlgebra left_comodule(const AlgPtr& C, const QBPtr& H, const Tensor& coact)
{
    return make_left_comodule_algebra(C, H, coact, unit3(H->alg, H->alg, C), false);
}

RightComoduleAlgebra right_comodule(const AlgPtr& C, const QBPtr& H, const Tensor& coact)
{
    return make_right_comodule_algebra(C, H, coact, unit3(C, H->alg, H->alg), false);
}

// (h·a)₍₋₁₎⊗(h·a)₍₀₎ = a₍₋₁₎⊗h·a₍₀₎
void long_identity(VerificationReport& r, const std::string& tag, const Tensor& act, const Tensor& coact)
{
    r.expect_equal(tag, einsum("hac,cxb->haxb", {&act, &coact}), einsum("axc,hcb->haxb", {&coact, &act}));
}

// (a·h)₍₀₎⊗(a·h)₍₁₎ = a₍₀₎·h⊗a₍₁₎
void right_long_identity(VerificationReport& r, const std::string& tag, const Tensor& act_r, const Tensor& coact_r)
{
    r.expect_equal(tag, einsum("ahc,cbx->ahbx", {&act_r, &coact_r}), einsum("acx,chb->ahbx", {&coact_r, &act_r}));
}

Tensor bullet_tensor(const AlgPtr& C, const QBPtr& H, const Tensor& act_l, const Tensor& act_r,
                     const Tensor& coact_l, const Tensor& coact_r)
{
    AlgPtr h = H->alg;
    Elem x = apply(Elem::basis({C, C}), 0, coact_l, {h, C});
    x = apply(x, 2, coact_r, {C, h});
    x = act_left(act_right(x, 1, 3, act_r), 0, 2, act_l);
    return merge_legs(x, 0, 1).t;
}

// Echelonized rows of a nullspace, plus the product restricted to their span.
Subalgebra subalgebra_of(const AlgebraData& A, const Nullspace& ns, VerificationReport& r, const std::string& tag)
{
    const FieldSpec& f = A.field();
    const std::size_t n = A.dim(), k = ns.dim;
    Subalgebra s;
    if (k == 0) {
        s.inclusion = Tensor(f, {0, n});
        r.pass(tag + "-closed", "zero subspace");
        return s;
    }
    DenseMatrix m(f, k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (const auto& e : ns.basis[i].entries())
            m(i, e.flat) = e.value;
    auto pivots = row_reduce(m);
    s.inclusion = m.to_tensor();
    // coordinates of w in the echelon basis are w at the pivot columns
    Tensor prod = einsum("ip,jq,pqo->ijo", {&s.inclusion, &s.inclusion, &A.mult()});
    TensorBuilder coords(f, {k, k, k});
    for (const auto& e : prod.entries()) {
        std::size_t o = e.flat % n;
        for (std::size_t l = 0; l < k; ++l)
            if (pivots[l] == o)
                coords.add(e.flat / n * k + l, e.value);
    }
    Tensor c = coords.build();
    bool closed = einsum("ijl,lo->ijo", {&c, &s.inclusion}) == prod;
    r.expect(tag + "-closed", closed);
    if (!closed)
        return s;
    TensorBuilder u(f, {k});
    for (const auto& e : A.unit().entries())
        for (std::size_t l = 0; l < k; ++l)
            if (pivots[l] == e.flat)
                u.add(l, e.value);
    Tensor unit = u.build();
    r.expect(tag + "-unit", einsum("l,lo->o", {&unit, &s.inclusion}) == A.unit());
    s.alg = make_algebra(std::move(c), std::move(unit), A.name() + "_" + tag);
    return s;
}

// Pulls a map back to subspace coordinates: t restricted on leg `in` to the
// subspace and with leg `out` expressed in it (nullopt if it leaves it).
std::optional<Tensor> restrict_leg(const Tensor& t, const Subalgebra& s, const std::string& spec_in,
                                   const std::string& spec_out)
{
    const std::size_t k = s.inclusion.dim(0), n = s.inclusion.dim(1);
    Tensor full = einsum(spec_in, {&s.inclusion, &t});
    // find coordinates via pivot columns: echelon rows have a leading 1
    std::vector<std::size_t> pivots(k);
    for (std::size_t l = 0; l < k; ++l)
        pivots[l] = s.inclusion.prefix_range(l, 1).front().flat % n;
    const std::size_t last = full.rank() - 1;
    Shape shape = full.shape();
    shape[last] = k;
    TensorBuilder b(t.field(), shape);
    for (const auto& e : full.entries()) {
        std::size_t o = e.flat % n;
        for (std::size_t l = 0; l < k; ++l)
            if (pivots[l] == o)
                b.add(e.flat / n * k + l, e.value);
    }
    Tensor c = b.build();
    if (einsum(spec_out, {&c, &s.inclusion}) != full)
        return std::nullopt;
    return c;
}

} // namespace

VerificationReport check_datum(const LeftTwistingDatum& d)
{
    VerificationReport r("left twisting datum on " + d.carrier->name());
    require_ordinary(d.H, "twisting datum");
    r.merge(check_left_module_algebra({d.carrier, d.H, d.act}), "module-");
    r.merge(check_left_comodule_algebra(left_comodule(d.carrier, d.H, d.coact)), "comodule-");
    long_identity(r, "long", d.act, d.coact);
    return r;
}

VerificationReport check_datum(const RightTwistingDatum& d)
{
    VerificationReport r("right twisting datum on " + d.carrier->name());
    require_ordinary(d.H, "twisting datum");
    r.merge(check_right_module_algebra({d.carrier, d.H, d.act_r}), "module-");
    r.merge(check_right_comodule_algebra(right_comodule(d.carrier, d.H, d.coact_r)), "comodule-");
    right_long_identity(r, "long", d.act_r, d.coact_r);
    return r;
}

VerificationReport check_datum(const LRTwistingDatum& d)
{
    VerificationReport r("L-R-twisting datum on " + d.carrier->name());
    require_ordinary(d.H, "twisting datum");
    r.merge(check_bimodule_algebra(make_bimodule_algebra(d.carrier, d.H, d.act_l, d.act_r, false)), "module-");
    auto B = make_bicomodule_algebra(left_comodule(d.carrier, d.H, d.coact_l),
                                     right_comodule(d.carrier, d.H, d.coact_r),
                                     unit3(d.H->alg, d.carrier, d.H->alg), false);
    r.merge(check_bicomodule_algebra(B), "comodule-");
    long_identity(r, "a1", d.act_l, d.coact_l);
    r.expect_equal("a2", einsum("hac,cbx->habx", {&d.act_l, &d.coact_r}),
                   einsum("acx,hcb->habx", {&d.coact_r, &d.act_l}));
    r.expect_equal("a3", einsum("ahc,cxb->ahxb", {&d.act_r, &d.coact_l}),
                   einsum("axc,chb->ahxb", {&d.coact_l, &d.act_r}));
    right_long_identity(r, "a4", d.act_r, d.coact_r);
    return r;
}

LeftTwistingDatum left_datum(const LRTwistingDatum& d) { return {d.carrier, d.H, d.act_l, d.coact_l}; }

RightTwistingDatum right_datum(const LRTwistingDatum& d) { return {d.carrier, d.H, d.act_r, d.coact_r}; }

LRTwistingDatum as_lr_datum(const LeftTwistingDatum& d)
{
    auto r = trivial_right_module(d.carrier, d.H);
    auto c = trivial_right_comodule(d.carrier, d.H);
    return {d.carrier, d.H, d.act, r.act, d.coact, c.rho};
}

LRTwistingDatum as_lr_datum(const RightTwistingDatum& d)
{
    auto l = trivial_left_module(d.carrier, d.H);
    auto c = trivial_left_comodule(d.carrier, d.H);
    return {d.carrier, d.H, l.act, d.act_r, c.lam, d.coact_r};
}

LRTwistingDatum lr_datum(const BimoduleAlgebra& M, const BicomoduleAlgebra& U)
{
    require_ordinary(M.H, "lr_datum");
    if (!same_structure(M.H, U.H()))
        throw StructureMismatch("lr_datum: inputs over different bialgebras");
    const FieldSpec& f = M.carrier->field();
    const std::size_t n = M.carrier->dim(), m = U.carrier()->dim(), d = M.H->dim(), N = n * m;
    Tensor In = Tensor::identity(f, n), Im = Tensor::identity(f, m);
    AlgPtr C = tensor_product(M.carrier, U.carrier());
    return {C,
            M.H,
            einsum("hpq,uv->hpuqv", {&M.act_l, &Im}).reshape({d, N, N}),
            einsum("phq,uv->puhqv", {&M.act_r, &Im}).reshape({N, d, N}),
            einsum("pq,uxv->puxqv", {&In, &U.left.lam}).reshape({N, d, N}),
            einsum("pq,uvx->puqvx", {&In, &U.right.rho}).reshape({N, N, d})};
}

RightTwistingDatum gsm_right_datum(const BimoduleAlgebra& M, const BicomoduleAlgebra& U)
{
    require_ordinary(M.H, "gsm_right_datum");
    auto P = generalized_smash(left_part(M), U.left);
    const FieldSpec& f = M.carrier->field();
    const std::size_t n = M.carrier->dim(), m = U.carrier()->dim(), d = M.H->dim(), N = n * m;
    Tensor In = Tensor::identity(f, n), Im = Tensor::identity(f, m);
    return {P.result, M.H, einsum("phq,uv->puhqv", {&M.act_r, &Im}).reshape({N, d, N}),
            einsum("pq,uvx->puqvx", {&In, &U.right.rho}).reshape({N, N, d})};
}

AlgPtr star_product(const LeftTwistingDatum& d)
{
    AlgPtr C = d.carrier;
    Elem x = apply(Elem::basis({C, C}), 0, d.coact, {d.H->alg, C});
    x = merge_legs(act_left(x, 0, 2, d.act), 0, 1);
    return make_algebra(x.t, C->unit(), C->name() + "_star");
}

AlgPtr diamond_product(const RightTwistingDatum& d)
{
    AlgPtr C = d.carrier;
    Elem x = apply(Elem::basis({C, C}), 1, d.coact_r, {C, d.H->alg});
    x = merge_legs(act_right(x, 0, 2, d.act_r), 0, 1);
    return make_algebra(x.t, C->unit(), C->name() + "_diamond");
}

AlgPtr bullet_product(const LRTwistingDatum& d)
{
    return make_algebra(bullet_tensor(d.carrier, d.H, d.act_l, d.act_r, d.coact_l, d.coact_r), d.carrier->unit(),
                        d.carrier->name() + "_bullet");
}

VerificationReport check_bullet_consequences(const LRTwistingDatum& d)
{
    VerificationReport r("consequences of the L-R-twisted product");
    AlgPtr C = d.carrier, h = d.H->alg;
    const Tensor& D = d.H->comult;
    Tensor Bm = bullet_tensor(C, d.H, d.act_l, d.act_r, d.coact_l, d.coact_r);

    // h·(a•b) = (h₁·a₍₀₎·b₍₁₎)(h₂a₍₋₁₎·b₍₀₎)
    Elem x = apply(Elem::basis({h, C, C}), 1, d.coact_l, {h, C});
    x = apply(apply(x, 3, d.coact_r, {C, h}), 0, D, {h, h});
    x = act_left(merge_legs(x, 1, 2), 0, 2, d.act_l);
    x = act_left(act_right(x, 1, 3, d.act_r), 0, 2, d.act_l);
    r.expect_equal("c1", einsum("abc,hco->habo", {&Bm, &d.act_l}), merge_legs(x, 0, 1).t);

    // (a•b)·h = (a₍₀₎·b₍₁₎h₁)(a₍₋₁₎·b₍₀₎·h₂)
    x = apply(Elem::basis({C, C, h}), 0, d.coact_l, {h, C});
    x = apply(apply(x, 2, d.coact_r, {C, h}), 4, D, {h, h});
    x = act_right(merge_legs(x, 3, 4), 2, 4, d.act_r);
    x = act_left(act_right(x, 1, 3, d.act_r), 0, 2, d.act_l);
    r.expect_equal("c2", einsum("abc,cho->abho", {&Bm, &d.act_r}), merge_legs(x, 0, 1).t);

    // (a•b)₍₋₁₎⊗(a•b)₍₀₎ = a₍₀₎₍₋₁₎b₍₀₎₍₋₁₎ ⊗ (a₍₀₎₍₀₎·b₍₁₎)(a₍₋₁₎·b₍₀₎₍₀₎)
    x = apply(Elem::basis({C, C}), 0, d.coact_l, {h, C});
    x = apply(apply(x, 1, d.coact_l, {h, C}), 3, d.coact_r, {C, h});
    x = merge_legs(apply(x, 3, d.coact_l, {h, C}), 1, 3);
    x = act_left(act_right(x, 2, 4, d.act_r), 0, 3, d.act_l);
    r.expect_equal("c3", einsum("abc,cxo->abxo", {&Bm, &d.coact_l}), merge_legs(x, 1, 2).t);

    // (a•b)₍₀₎⊗(a•b)₍₁₎ = (a₍₀₎₍₀₎·b₍₁₎)(a₍₋₁₎·b₍₀₎₍₀₎) ⊗ a₍₀₎₍₁₎b₍₀₎₍₁₎
    x = apply(Elem::basis({C, C}), 0, d.coact_l, {h, C});
    x = apply(apply(x, 1, d.coact_r, {C, h}), 3, d.coact_r, {C, h});
    x = merge_legs(apply(x, 3, d.coact_r, {C, h}), 2, 4);
    x = act_left(act_right(x, 1, 4, d.act_r), 0, 3, d.act_l);
    r.expect_equal("c4", einsum("abc,coy->aboy", {&Bm, &d.coact_r}), merge_legs(x, 0, 2).t);
    return r;
}

VerificationReport iterate_check(const LRTwistingDatum& d)
{
    VerificationReport r("iterated twisting on " + d.carrier->name());
    AlgPtr bullet = bullet_product(d);

    AlgPtr star = star_product(left_datum(d));
    RightTwistingDatum on_star{star, d.H, d.act_r, d.coact_r};
    r.merge(check_datum(on_star), "on-star-");
    r.expect_equal("star-then-diamond", diamond_product(on_star)->mult(), bullet->mult());

    AlgPtr diamond = diamond_product(right_datum(d));
    LeftTwistingDatum on_diamond{diamond, d.H, d.act_l, d.coact_l};
    r.merge(check_datum(on_diamond), "on-diamond-");
    r.expect_equal("diamond-then-star", star_product(on_diamond)->mult(), bullet->mult());
    return r;
}

namespace {

TwistedIso finish_lambda(AlgPtr from, LeftTwistingDatum induced, const Tensor& act_r, const Tensor& coact_r,
                         const QuasiHopfAlgebra& H, const char* what)
{
    auto dr = check_datum(induced);
    if (!dr.passed())
        throw HypothesisFailed(std::string(what) + ": induced left twisting datum fails: " + dr.summary());
    AlgPtr to = star_product(induced);
    Tensor fwd = einsum("acy,yz,czb->ab", {&coact_r, &H.antipode_inv, &act_r});
    Tensor bwd = einsum("acy,cyb->ab", {&coact_r, &act_r});
    AlgebraIso iso{std::move(fwd), std::move(bwd)};
    auto r = check_algebra_iso(*from, *to, iso);
    if (!r.passed())
        throw IsoCheckFailed(std::string(what) + ": " + r.summary());
    return {std::move(from), std::move(to), std::move(iso), std::move(induced)};
}

} // namespace

TwistedIso lambda_iso(const LRTwistingDatum& d, const QuasiHopfAlgebra& H)
{
    if (!same_structure(d.H, H.base))
        throw StructureMismatch("lambda_iso: datum is not over the given Hopf algebra");
    require_ordinary(d.H, "lambda_iso");
    const std::size_t n = d.carrier->dim(), m = H.dim();
    QBPtr HH = tensor_bialgebra(H.qb(), *opposite_bialgebra(H.qb()));
    Tensor pi = einsum("hac,cgb->hgab", {&d.act_l, &d.act_r}).reshape({m * m, n, n});
    Tensor psi = einsum("axc,cby,yz->axzb", {&d.coact_l, &d.coact_r, &H.antipode_inv}).reshape({n, m * m, n});
    return finish_lambda(bullet_product(d), {d.carrier, HH, std::move(pi), std::move(psi)}, d.act_r, d.coact_r, H,
                         "lambda");
}

TwistedIso right_to_left_iso(const RightTwistingDatum& d, const QuasiHopfAlgebra& H)
{
    if (!same_structure(d.H, H.base))
        throw StructureMismatch("right_to_left_iso: datum is not over the given Hopf algebra");
    require_ordinary(d.H, "right_to_left_iso");
    QBPtr Hop = opposite_bialgebra(H.qb());
    Tensor pi = d.act_r.permute({1, 0, 2});
    Tensor psi = einsum("aby,yz->azb", {&d.coact_r, &H.antipode_inv});
    return finish_lambda(diamond_product(d), {d.carrier, Hop, std::move(pi), std::move(psi)}, d.act_r, d.coact_r,
                         H, "right-to-left");
}

InvariantsResult invariants_coinvariants(const LeftTwistingDatum& d)
{
    InvariantsResult res;
    VerificationReport& r = res.report;
    r = VerificationReport("invariants and coinvariants of " + d.carrier->name());
    const AlgebraData& A = *d.carrier;
    const FieldSpec& f = A.field();
    const std::size_t n = A.dim(), m = d.H->dim();
    Tensor In = Tensor::identity(f, n);

    // h·a − ε(h)a = 0: rows (h, b), unknowns a
    Tensor inv = d.act.permute({0, 2, 1}) - einsum("h,ba->hba", {&d.H->counit, &In});
    res.invariants = subalgebra_of(A, nullspace(inv.reshape({m * n, n})), r, "invariants");
    // a₍₋₁₎⊗a₍₀₎ − 1⊗a = 0: rows (x, b), unknowns a
    Tensor coinv = d.coact.permute({1, 2, 0}) - einsum("x,ba->xba", {&d.H->unit(), &In});
    res.coinvariants = subalgebra_of(A, nullspace(coinv.reshape({m * n, n})), r, "coinvariants");

    const Subalgebra& I = res.invariants;
    const Subalgebra& K = res.coinvariants;
    if (I.alg) {
        auto lam = restrict_leg(d.coact, I, "ia,axb->ixb", "ixl,lb->ixb");
        r.expect("invariants-coaction-closed", lam.has_value());
        if (lam) {
            auto B = make_left_comodule_algebra(I.alg, d.H, *lam, unit3(d.H->alg, d.H->alg, I.alg), false);
            auto cr = check_left_comodule_algebra(B);
            r.merge(cr, "invariants-comodule-");
            if (cr.passed())
                res.invariants_comodule = std::move(B);
        }
    }
    if (K.alg) {
        auto act = restrict_leg(d.act.permute({1, 0, 2}), K, "ia,ahb->ihb", "ihl,lb->ihb");
        r.expect("coinvariants-action-closed", act.has_value());
        if (act) {
            LeftModuleAlgebra M{K.alg, d.H, act->permute({1, 0, 2})};
            auto mr = check_left_module_algebra(M);
            r.merge(mr, "coinvariants-module-");
            if (mr.passed())
                res.coinvariants_module = std::move(M);
        }
    }
    if (!res.invariants_comodule || !res.coinvariants_module) {
        r.add({"lambda", Status::Skipped, std::nullopt, "sub-structures unavailable"});
        return res;
    }

    const Tensor& Jk = K.inclusion;
    const Tensor& Ji = I.inclusion;
    Tensor ab = einsum("ip,jq,pqo->ijo", {&Jk, &Ji, &A.mult()});
    Tensor ba = einsum("ip,jq,qpo->ijo", {&Jk, &Ji, &A.mult()});
    res.commute = ab == ba;
    r.add({"comut", res.commute ? Status::Pass : Status::Skipped,
           res.commute ? std::nullopt : ab.first_difference(ba), res.commute ? "" : "hypothesis fails; no lambda"});
    if (!res.commute)
        return res;

    auto P = generalized_smash(*res.coinvariants_module, *res.invariants_comodule);
    const std::size_t k = K.dim() * I.dim();
    Tensor L = ab.reshape({k, n});
    AlgPtr star = star_product(d);
    r.expect_equal("lambda-multiplicative", einsum("ijk,kl->ijl", {&P.mult(), &L}),
                   einsum("ia,jb,abl->ijl", {&L, &L, &star->mult()}));
    r.expect_equal("lambda-unit", einsum("i,il->l", {&P.result->unit(), &L}), A.unit());
    std::size_t rank = matrix_rank(L);
    res.injective = rank == k;
    res.surjective = rank == n;
    res.lambda = std::move(L);
    return res;
}

} // namespace qhl
