#include "qhl/quasihopf.hpp"

#include "qhl/errors.hpp"
#include "qhl/linalg.hpp"

namespace qhl {

namespace {

Elem S_on(const Elem& x, std::size_t leg, const Tensor& S)
{
    return apply(x, leg, S, {x.algs.at(leg)});
}

// Right-multiplies leg `leg` by v, then merges it with leg `other`.
Elem times_then_merge(const Elem& x, std::size_t leg, const Tensor& v, std::size_t other)
{
    return merge_legs(right_mul(x, leg, v), leg, other);
}

} // namespace

bool QuasiBialgebra::phi_is_trivial() const
{
    return phi == Elem::unit(legs(3)).t;
}

QBPtr make_quasi_bialgebra(AlgPtr alg, Tensor comult, Tensor counit, Tensor phi,
                           std::optional<Tensor> phi_inv, std::string name, bool validate)
{
    const std::size_t n = alg->dim();
    if (comult.shape() != Shape{n, n, n} || counit.shape() != Shape{n} || phi.shape() != Shape{n, n, n})
        throw ShapeMismatch("quasi-bialgebra tensors have inconsistent shapes");
    auto H = std::make_shared<QuasiBialgebra>();
    H->alg = std::move(alg);
    H->comult = std::move(comult);
    H->counit = std::move(counit);
    H->phi = std::move(phi);
    H->name = std::move(name);
    std::vector<AlgPtr> l3(3, H->alg);
    if (phi_inv) {
        if (phi_inv->shape() != Shape{n, n, n})
            throw ShapeMismatch("phi_inv shape");
        Elem u = Elem::unit(l3);
        Elem p = Elem::constant(H->phi, l3), pi = Elem::constant(*phi_inv, l3);
        if (mul(p, pi).t != u.t || mul(pi, p).t != u.t)
            throw NotInvertible("supplied phi_inv is not a two-sided inverse of phi");
        H->phi_inv = std::move(*phi_inv);
    } else if (H->phi == Elem::unit(l3).t) {
        H->phi_inv = H->phi;
    } else {
        H->phi_inv = invert(Elem::constant(H->phi, l3)).t;
    }
    if (validate)
        require_passed(check_quasi_bialgebra(*H), "quasi-bialgebra " + H->name);
    return H;
}

bool same_structure(const QBPtr& a, const QBPtr& b)
{
    if (a == b)
        return true;
    return a->alg->mult() == b->alg->mult() && a->alg->unit() == b->alg->unit() && a->comult == b->comult &&
           a->counit == b->counit && a->phi == b->phi;
}

VerificationReport check_quasi_bialgebra(const QuasiBialgebra& H)
{
    VerificationReport r("quasi-bialgebra " + H.name);
    const FieldSpec& f = H.field();
    const Tensor& m = H.alg->mult();
    Elem D = H.delta_family();

    // coassociativity up to Φ
    Elem lhs1 = apply(D, 1, H.comult, H.legs(2));
    Elem rhs1 = mul(mul(H.Phi(), apply(D, 0, H.comult, H.legs(2))), H.Phi_inv());
    r.expect_equal("q1", lhs1.t, rhs1.t);

    // counit laws
    Tensor id = Tensor::identity(f, H.dim());
    r.expect_equal("q2", apply(D, 1, H.counit, {}).t, id);
    r.expect_equal("q2-left", apply(D, 0, H.counit, {}).t, id);

    // pentagon
    Elem one_phi = insert_unit(H.Phi(), 0, H.alg);
    Elem phi_one = insert_unit(H.Phi(), 3, H.alg);
    Elem lhs3 = mul(mul(one_phi, apply(H.Phi(), 1, H.comult, H.legs(2))), phi_one);
    Elem rhs3 = mul(apply(H.Phi(), 2, H.comult, H.legs(2)), apply(H.Phi(), 0, H.comult, H.legs(2)));
    r.expect_equal("q3", lhs3.t, rhs3.t);

    // normalization
    Tensor u2 = Elem::unit(H.legs(2)).t;
    r.expect_equal("q4", apply(H.Phi(), 1, H.counit, {}).t, u2);
    r.expect_equal("q7", apply(H.Phi(), 0, H.counit, {}).t, u2);
    r.expect_equal("q7-right", apply(H.Phi(), 2, H.counit, {}).t, u2);

    // Δ and ε are algebra maps
    Tensor dm = einsum("ijk,kab->ijab", {&m, &H.comult});
    r.expect_equal("delta-mult", dm, mul(D, D).t);
    r.expect_equal("delta-unit", apply(Elem::constant(H.unit(), H.legs(1)), 0, H.comult, H.legs(2)).t, u2);
    Tensor em = einsum("ijk,k->ij", {&m, &H.counit});
    r.expect_equal("eps-mult", em, outer(H.counit, H.counit));
    r.expect_equal("eps-unit", einsum("i,i->", {&H.unit(), &H.counit}), Tensor::scalar(Scalar::one(f)));

    Elem u3 = Elem::unit(H.legs(3));
    r.expect_equal("phi-inverse", mul(H.Phi(), H.Phi_inv()).t, u3.t);
    r.expect_equal("phi-inverse-left", mul(H.Phi_inv(), H.Phi()).t, u3.t);
    return r;
}

QHPtr make_quasi_hopf(QBPtr base, Tensor antipode, Tensor alpha, Tensor beta, std::string name, bool validate)
{
    const std::size_t n = base->dim();
    if (antipode.shape() != Shape{n, n} || alpha.shape() != Shape{n} || beta.shape() != Shape{n})
        throw ShapeMismatch("quasi-Hopf tensors have inconsistent shapes");
    auto H = std::make_shared<QuasiHopfAlgebra>();
    H->base = std::move(base);
    H->antipode = std::move(antipode);
    try {
        H->antipode_inv = inverse_matrix(H->antipode);
    } catch (const NotInvertible&) {
        throw NoQuasiHopfStructure("antipode is not bijective");
    }
    H->alpha = std::move(alpha);
    H->beta = std::move(beta);
    H->name = name.empty() ? H->base->name : std::move(name);
    if (validate) {
        require_passed(check_quasi_bialgebra(*H->base), "quasi-Hopf base " + H->name);
        require_passed(check_quasi_hopf(*H), "quasi-Hopf " + H->name);
    }
    return H;
}

VerificationReport check_quasi_hopf(const QuasiHopfAlgebra& H)
{
    const QuasiBialgebra& B = H.qb();
    VerificationReport r("quasi-Hopf " + H.name);
    const FieldSpec& f = H.field();
    const Tensor& m = B.alg->mult();
    const Tensor& S = H.antipode;

    // S is an anti-automorphism
    Elem Sf = Elem::family(S, 1, H.legs(1));
    Tensor lhs = einsum("ijk,ko->ijo", {&m, &S});
    Tensor rhs = mul(Sf, Sf).t.permute({1, 0, 2});
    r.expect_equal("S-antimult", lhs, rhs);
    r.expect_equal("S-unit", matvec(S.permute({1, 0}), B.unit()), B.unit());
    r.expect_equal("eps-S", matvec(S, B.counit), B.counit);
    Tensor id = Tensor::identity(f, H.dim());
    r.expect_equal("S-inverse", matmul(S, H.antipode_inv), id);
    r.expect_equal("S-inverse-left", matmul(H.antipode_inv, S), id);

    // S(h1) α h2 = ε(h) α and h1 β S(h2) = ε(h) β
    Elem D = B.delta_family();
    Elem q5a = times_then_merge(S_on(D, 0, S), 0, H.alpha, 1);
    r.expect_equal("q5", q5a.t, outer(B.counit, H.alpha));
    Elem q5b = merge_legs(right_mul(S_on(D, 1, S), 0, H.beta), 0, 1);
    r.expect_equal("q5-beta", q5b.t, outer(B.counit, H.beta));

    // X1 β S(X2) α X3 = 1 and S(x1) α x2 β S(x3) = 1
    Elem X = S_on(B.Phi(), 1, S);
    X = times_then_merge(X, 0, H.beta, 1);
    X = times_then_merge(X, 0, H.alpha, 1);
    r.expect_equal("q6", X.t, B.unit());
    Elem x = S_on(S_on(B.Phi_inv(), 0, S), 2, S);
    x = times_then_merge(x, 0, H.alpha, 1);
    x = times_then_merge(x, 0, H.beta, 1);
    r.expect_equal("q6-inverse", x.t, B.unit());

    Scalar ea = einsum("i,i->", {&H.alpha, &B.counit}).at_flat(0);
    Scalar eb = einsum("i,i->", {&H.beta, &B.counit}).at_flat(0);
    r.expect("eps-alpha-beta", ea.is_one() && eb.is_one(),
             "eps(alpha) = " + ea.to_string() + ", eps(beta) = " + eb.to_string());
    return r;
}

bool is_cocommutative(const QuasiBialgebra& H)
{
    return H.comult == H.comult_cop();
}

// ------------------------------------------------------------------ gauges

GaugeTwist make_gauge(const QuasiBialgebra& H, Tensor f)
{
    const std::size_t n = H.dim();
    if (f.shape() != Shape{n, n})
        throw InvalidGauge("gauge must be an element of H ⊗ H");
    Elem F = Elem::constant(f, H.legs(2));
    if (apply(F, 0, H.counit, {}).t != H.unit() || apply(F, 1, H.counit, {}).t != H.unit())
        throw InvalidGauge("gauge is not counit-normalized");
    Elem Finv;
    try {
        Finv = invert(F);
    } catch (const NotInvertible&) {
        throw InvalidGauge("gauge is not invertible");
    }
    return {std::move(f), Finv.t};
}

GaugeTwist trivial_gauge(const QuasiBialgebra& H)
{
    Tensor one = Elem::unit(H.legs(2)).t;
    return {one, one};
}

GaugeTwist inverse_gauge(const GaugeTwist& F)
{
    return {F.f_inv, F.f};
}

GaugeTwist random_gauge(const QuasiBialgebra& H, std::mt19937_64& rng)
{
    const std::size_t n = H.dim();
    const FieldSpec& fs = H.field();
    static const long values[] = {-2, -1, 1, 2};
    Elem one = Elem::unit(H.legs(2));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        TensorBuilder b(fs, {n, n});
        const int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            std::size_t i = rng() % n, j = rng() % n;
            b.add(i * n + j, Scalar(fs, values[rng() % 4]));
        }
        Tensor f0 = one.t + b.build();
        Elem F0 = Elem::constant(f0, H.legs(2));
        Tensor c = apply(F0, 0, H.counit, {}).t - H.unit();
        Tensor f1 = f0 - outer(H.unit(), c);
        Tensor d = apply(Elem::constant(f1, H.legs(2)), 1, H.counit, {}).t - H.unit();
        Tensor f2 = f1 - outer(d, H.unit());
        if (f2 == one.t)
            continue;
        try {
            return make_gauge(H, f2);
        } catch (const InvalidGauge&) {
            continue;
        }
    }
    throw InternalInconsistency("could not sample an invertible gauge");
}

QBPtr twist(const QuasiBialgebra& H, const GaugeTwist& F, bool validate)
{
    const auto l2 = H.legs(2);
    Elem Fe = Elem::constant(F.f, l2), Fi = Elem::constant(F.f_inv, l2);
    Tensor comult = mul(mul(Fe, H.delta_family()), Fi).t;

    // Φ_F = (1⊗F)(id⊗Δ)(F) Φ (Δ⊗id)(F⁻¹)(F⁻¹⊗1)
    Elem one_F = insert_unit(Fe, 0, H.alg);
    Elem Fi_one = insert_unit(Fi, 2, H.alg);
    Elem phi = mul(mul(mul(mul(one_F, apply(Fe, 1, H.comult, l2)), H.Phi()), apply(Fi, 0, H.comult, l2)),
                   Fi_one);
    // its inverse: (F⊗1)(Δ⊗id)(F) Φ⁻¹ (id⊗Δ)(F⁻¹)(1⊗F⁻¹)
    Elem F_one = insert_unit(Fe, 2, H.alg);
    Elem one_Fi = insert_unit(Fi, 0, H.alg);
    Elem phi_inv = mul(mul(mul(mul(F_one, apply(Fe, 0, H.comult, l2)), H.Phi_inv()), apply(Fi, 1, H.comult, l2)),
                       one_Fi);
    std::string name = H.name + "^F";
    return make_quasi_bialgebra(H.alg, std::move(comult), H.counit, phi.t, phi_inv.t, name, validate);
}

QHPtr twist(const QuasiHopfAlgebra& H, const GaugeTwist& F, bool validate)
{
    QBPtr base = twist(H.qb(), F, validate);
    const auto l2 = H.legs(2);
    // α_F = S(G1) α G2, β_F = F1 β S(F2)
    Elem G = apply(Elem::constant(F.f_inv, l2), 0, H.antipode, {H.alg()});
    Tensor alpha = merge_legs(right_mul(G, 0, H.alpha), 0, 1).t;
    Elem Fs = apply(Elem::constant(F.f, l2), 1, H.antipode, {H.alg()});
    Tensor beta = merge_legs(right_mul(Fs, 0, H.beta), 0, 1).t;
    return make_quasi_hopf(base, H.antipode, alpha, beta, base->name, validate);
}

// ---------------------------------------------------------- Drinfeld twist

DrinfeldTwist drinfeld_twist_f(const QuasiHopfAlgebra& H)
{
    const QuasiBialgebra& B = H.qb();
    const Tensor& S = H.antipode;
    const auto l2 = H.legs(2);
    DrinfeldTwist d;

    // A = (Φ⊗1)(Δ⊗id⊗id)(Φ⁻¹), B = (Δ⊗id⊗id)(Φ)(Φ⁻¹⊗1)
    Elem A = mul(insert_unit(B.Phi(), 3, B.alg), apply(B.Phi_inv(), 0, B.comult, l2));
    Elem Bq = mul(apply(B.Phi(), 0, B.comult, l2), insert_unit(B.Phi_inv(), 3, B.alg));
    d.A = A.t;
    d.B = Bq.t;

    // γ = S(A2) α A3 ⊗ S(A1) α A4
    Elem g = S_on(S_on(A, 0, S), 1, S);
    g = times_then_merge(g, 1, H.alpha, 2); // (S(A1), S(A2)αA3, A4)
    g = times_then_merge(g, 0, H.alpha, 2); // (S(A1)αA4, S(A2)αA3)
    d.gamma = permute(g, {1, 0}).t;

    // δ = B1 β S(B4) ⊗ B2 β S(B3)
    Elem e = S_on(S_on(Bq, 2, S), 3, S);
    e = times_then_merge(e, 0, H.beta, 3); // (B1βS(B4), B2, S(B3))
    e = times_then_merge(e, 1, H.beta, 2); // (.., B2βS(B3))
    d.delta = e.t;

    Elem gamma = Elem::constant(d.gamma, l2), delta = Elem::constant(d.delta, l2);
    const Tensor cop = B.comult_cop();

    // f = (S⊗S)(Δ^cop(x1)) γ Δ(x2 β S(x3))
    Elem fx = S_on(B.Phi_inv(), 2, S);
    fx = times_then_merge(fx, 1, H.beta, 2);            // (x1, x2βS(x3))
    fx = apply(fx, 0, cop, l2);                          // (x1_2, x1_1, y)
    fx = S_on(S_on(fx, 0, S), 1, S);
    fx = apply(fx, 2, B.comult, l2);                     // (.., .., y1, y2)
    fx = mul_at(fx, gamma, {0, 1}, true);
    fx = merge_legs(fx, 0, 2);
    fx = merge_legs(fx, 1, 2);
    d.f = fx.t;

    // f⁻¹ = Δ(S(x1) α x2) δ (S⊗S)(Δ^cop(x3))
    Elem gx = S_on(B.Phi_inv(), 0, S);
    gx = times_then_merge(gx, 0, H.alpha, 1);           // (z, x3)
    gx = apply(gx, 0, B.comult, l2);                     // (z1, z2, x3)
    gx = apply(gx, 2, cop, l2);                          // (z1, z2, x3_2, x3_1)
    gx = S_on(S_on(gx, 2, S), 3, S);
    gx = mul_at(gx, delta, {0, 1}, true);
    gx = merge_legs(gx, 0, 2);
    gx = merge_legs(gx, 1, 2);
    d.f_inv = gx.t;

    Elem u = Elem::unit(l2);
    Elem fe = Elem::constant(d.f, l2), fi = Elem::constant(d.f_inv, l2);
    if (mul(fe, fi).t != u.t || mul(fi, fe).t != u.t)
        throw InternalInconsistency("Drinfeld twist: f f⁻¹ != 1");
    VerificationReport rep = check_drinfeld_twist(H, d);
    if (!rep.passed())
        throw InternalInconsistency("Drinfeld twist: " + rep.summary());
    return d;
}

VerificationReport check_drinfeld_twist(const QuasiHopfAlgebra& H, const DrinfeldTwist& d)
{
    const QuasiBialgebra& B = H.qb();
    const auto l2 = H.legs(2);
    VerificationReport r("drinfeld twist " + H.name);
    Elem DS = apply(Elem::family(H.antipode, 1, H.legs(1)), 0, B.comult, l2);
    Elem lhs = mul(mul(Elem::constant(d.f, l2), DS), Elem::constant(d.f_inv, l2));
    Elem rhs = apply(B.delta_family(), 0, H.antipode, {H.alg()});
    rhs = apply(rhs, 1, H.antipode, {H.alg()});
    rhs = permute(rhs, {1, 0});
    r.expect_equal("ca", lhs.t, rhs.t);
    Elem u = Elem::unit(l2);
    r.expect_equal("f-inverse", mul(Elem::constant(d.f, l2), Elem::constant(d.f_inv, l2)).t, u.t);
    return r;
}

// ------------------------------------------------------ derived bialgebras

QBPtr opposite_bialgebra(const QuasiBialgebra& H)
{
    AlgPtr op = H.alg->opposite();
    return make_quasi_bialgebra(op, H.comult, H.counit, H.phi_inv, H.phi, H.name + "^op");
}

QBPtr tensor_bialgebra(const QuasiBialgebra& H, const QuasiBialgebra& K)
{
    const std::size_t n = H.dim(), m = K.dim(), N = n * m;
    AlgPtr alg = tensor_product(H.alg, K.alg);
    Tensor comult = einsum("iab,jcd->ijacbd", {&H.comult, &K.comult}).reshape({N, N, N});
    Tensor counit = outer(H.counit, K.counit).reshape({N});
    Tensor phi = einsum("abc,def->adbecf", {&H.phi, &K.phi}).reshape({N, N, N});
    Tensor phi_inv = einsum("abc,def->adbecf", {&H.phi_inv, &K.phi_inv}).reshape({N, N, N});
    return make_quasi_bialgebra(alg, comult, counit, phi, phi_inv, H.name + "(x)" + K.name);
}

} // namespace qhl
