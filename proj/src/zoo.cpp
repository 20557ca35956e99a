#include "qhl/zoo.hpp"

#include "qhl/errors.hpp"
#include "qhl/linalg.hpp"

#include <algorithm>
#include <map>

namespace qhl {

namespace {

using Perm = std::vector<std::size_t>;

Perm compose(const Perm& p, const Perm& q)
{
    // (p q)(i) = p(q(i))
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = p[q[i]];
    return r;
}

Group permutation_group(const std::vector<Perm>& gens, std::string name)
{
    Perm id(gens.front().size());
    for (std::size_t i = 0; i < id.size(); ++i)
        id[i] = i;
    std::vector<Perm> elems{id};
    std::map<Perm, std::size_t> index{{id, 0}};
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (const auto& g : gens) {
            Perm p = compose(elems[k], g);
            if (index.emplace(p, elems.size()).second)
                elems.push_back(p);
        }
    const std::size_t n = elems.size();
    std::vector<std::size_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = index.at(compose(elems[a], elems[b]));
    return make_group(n, std::move(table), std::move(name));
}

} // namespace

Group make_group(std::size_t order, std::vector<std::size_t> table, std::string name)
{
    if (order == 0 || table.size() != order * order)
        throw InvalidStructure("group table has the wrong size");
    Group G{order, std::move(table), {}, 0, std::move(name)};
    for (auto v : G.table)
        if (v >= order)
            throw InvalidStructure("group table entry out of range");
    bool found = false;
    for (std::size_t e = 0; e < order && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < order && ok; ++a)
            ok = G.mul(e, a) == a && G.mul(a, e) == a;
        if (ok) {
            G.identity = e;
            found = true;
        }
    }
    if (!found)
        throw InvalidStructure("group has no identity");
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            for (std::size_t c = 0; c < order; ++c)
                if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
                    throw InvalidStructure("group table is not associative");
    G.inverse.assign(order, order);
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            if (G.mul(a, b) == G.identity && G.mul(b, a) == G.identity)
                G.inverse[a] = b;
    if (std::count(G.inverse.begin(), G.inverse.end(), order))
        throw InvalidStructure("group element without inverse");
    return G;
}

Group cyclic_group(std::size_t n)
{
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a * n + b] = (a + b) % n;
    return make_group(n, std::move(t), "Z" + std::to_string(n));
}

Group direct_product(const Group& g, const Group& h)
{
    const std::size_t n = g.order * h.order;
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a * n + b] = g.mul(a / h.order, b / h.order) * h.order + h.mul(a % h.order, b % h.order);
    return make_group(n, std::move(t), g.name + "x" + h.name);
}

Group symmetric_group_3()
{
    return permutation_group({{1, 0, 2}, {0, 2, 1}}, "S3");
}

Group dihedral_group_4()
{
    return permutation_group({{1, 2, 3, 0}, {0, 3, 2, 1}}, "D4");
}

QHPtr group_algebra(const Group& G, const FieldSpec& f)
{
    const std::size_t n = G.order;
    const Scalar one = Scalar::one(f);
    TensorBuilder m(f, {n, n, n}), d(f, {n, n, n}), s(f, {n, n});
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            m.add((a * n + b) * n + G.mul(a, b), one);
        d.add((a * n + a) * n + a, one);
        s.add(a * n + G.inverse[a], one);
    }
    Tensor counit = Tensor::from_entries(f, {n}, [&] {
        std::vector<Entry> e;
        for (std::size_t a = 0; a < n; ++a)
            e.push_back({a, one});
        return e;
    }());
    const std::string name = "k" + G.name;
    AlgPtr alg = make_algebra(m.build(), Tensor::basis_vector(f, n, G.identity), name);
    Tensor phi = outer(outer(alg->unit(), alg->unit()), alg->unit());
    QBPtr qb = make_quasi_bialgebra(alg, d.build(), counit, phi, phi, name);
    return make_quasi_hopf(qb, s.build(), alg->unit(), alg->unit(), name);
}

YDAlgebra conjugation_yd(const Group& G, const FieldSpec& f)
{
    auto H = group_algebra(G, f);
    const std::size_t n = G.order;
    const Scalar one = Scalar::one(f);
    TensorBuilder act(f, {n, n, n}), lam(f, {n, n, n});
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t a = 0; a < n; ++a)
            act.add((h * n + a) * n + G.mul(G.mul(h, a), G.inverse[h]), one);
    for (std::size_t a = 0; a < n; ++a)
        lam.add((a * n + a) * n + a, one);
    auto m = make_left_module_algebra(H->alg(), H->base, act.build());
    auto c = make_left_comodule_algebra(H->alg(), H->base, lam.build(), H->qb().phi);
    return {std::move(m), std::move(c)};
}

Cocycle trivial_cocycle(const Group& G, const FieldSpec& f)
{
    return Cocycle(G.order * G.order * G.order, Scalar::one(f));
}

Cocycle cyclic_cocycle(std::size_t n, std::size_t k, const FieldSpec& f)
{
    Scalar zeta = -Scalar::one(f);
    if (n != 2) {
        if (f.kind() != FieldSpec::Kind::Cyclotomic || f.parameter() % n != 0)
            throw UnsupportedField("cyclic cocycle needs a field containing n-th roots of unity");
        Scalar z = Scalar::root_of_unity(f);
        zeta = Scalar::one(f);
        for (std::size_t i = 0; i < f.parameter() / n; ++i)
            zeta *= z;
    }
    Cocycle w;
    w.reserve(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t e = (k * a * ((b + c) / n)) % n;
                Scalar v = Scalar::one(f);
                for (std::size_t i = 0; i < e; ++i)
                    v *= zeta;
                w.push_back(v);
            }
    return w;
}

Cocycle coboundary(const Group& G, const std::vector<Scalar>& mu)
{
    const std::size_t n = G.order;
    auto m = [&](std::size_t a, std::size_t b) { return mu[a * n + b]; };
    Cocycle w;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                w.push_back(m(b, c) * m(a, G.mul(b, c)) / (m(G.mul(a, b), c) * m(a, b)));
    return w;
}

std::optional<std::array<std::size_t, 4>> cocycle_violation(const Group& G, const Cocycle& w)
{
    const std::size_t n = G.order;
    auto at = [&](std::size_t a, std::size_t b, std::size_t c) -> const Scalar& { return w[(a * n + b) * n + c]; };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    if (at(b, c, d) * at(a, G.mul(b, c), d) * at(a, b, c) !=
                        at(G.mul(a, b), c, d) * at(a, b, G.mul(c, d)))
                        return std::array<std::size_t, 4>{a, b, c, d};
    return std::nullopt;
}

Tensor dual_group_phi(const Group& G, const Cocycle& w)
{
    const std::size_t n = G.order;
    const FieldSpec& f = w.front().field();
    TensorBuilder b(f, {n, n, n});
    for (std::size_t k = 0; k < w.size(); ++k)
        b.add(k, w[k]);
    return b.build();
}

std::optional<Tensor> solve_beta(const QuasiBialgebra& H, const Tensor& antipode, const Tensor& alpha)
{
    Elem X = apply(H.Phi(), 1, antipode, {H.alg});
    Elem T = tensor(Elem::basis(H.legs(1)), X); // (β, X1, S(X2), X3)
    T = merge_legs(T, 1, 0);
    T = merge_legs(T, 0, 1);
    T = merge_legs(right_mul(T, 0, alpha), 0, 1);
    return solve_linear(T.t.permute({1, 0}), H.unit());
}

QHPtr dual_group_algebra(const Group& G, const Cocycle& w, std::string name)
{
    const std::size_t n = G.order;
    if (w.size() != n * n * n)
        throw ShapeMismatch("cocycle table has the wrong size");
    const FieldSpec& f = w.front().field();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if ((a == G.identity || b == G.identity || c == G.identity) && !w[(a * n + b) * n + c].is_one())
                    throw NotACocycle("3-cocycle is not normalized at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
    if (auto v = cocycle_violation(G, w))
        throw NotACocycle("cocycle identity fails at (" + std::to_string((*v)[0]) + "," + std::to_string((*v)[1]) +
                          "," + std::to_string((*v)[2]) + "," + std::to_string((*v)[3]) + ")");
    if (name.empty())
        name = "k^" + G.name;
    const Scalar one = Scalar::one(f);
    TensorBuilder m(f, {n, n, n}), d(f, {n, n, n}), s(f, {n, n}), u(f, {n});
    Cocycle winv;
    for (const auto& x : w)
        winv.push_back(x.inverse());
    for (std::size_t a = 0; a < n; ++a) {
        m.add((a * n + a) * n + a, one);
        u.add(a, one);
        s.add(a * n + G.inverse[a], one);
        for (std::size_t b = 0; b < n; ++b)
            d.add((G.mul(a, b) * n + a) * n + b, one);
    }
    Tensor unit = u.build();
    AlgPtr alg = make_algebra(m.build(), unit, name);
    QBPtr qb = make_quasi_bialgebra(alg, d.build(), Tensor::basis_vector(f, n, G.identity), dual_group_phi(G, w),
                                    dual_group_phi(G, winv), name);
    Tensor S = s.build();
    auto beta = solve_beta(*qb, S, unit);
    if (!beta)
        throw NoQuasiHopfStructure("no beta solves the antipode condition with alpha = 1");
    return make_quasi_hopf(qb, S, unit, *beta, name);
}

QHPtr dual_group_algebra(const Group& G, const FieldSpec& f)
{
    return dual_group_algebra(G, trivial_cocycle(G, f));
}

BimoduleAlgebra graded_dual_numbers(const QHPtr& H, std::size_t l, std::size_t r)
{
    const FieldSpec& f = H->field();
    const std::size_t n = H->dim();
    const Tensor& eps = H->qb().counit;
    if (eps.nnz() != 1)
        throw InvalidStructure("graded_dual_numbers needs a dual group algebra");
    const std::size_t e = eps.entries()[0].flat;
    TensorBuilder m(f, {2, 2, 2}), u(f, {2}), al(f, {n, 2, 2}), ar(f, {2, n, 2});
    m.add({0, 0, 0}, Scalar::one(f));
    m.add({0, 1, 1}, Scalar::one(f));
    m.add({1, 0, 1}, Scalar::one(f));
    u.add(0, Scalar::one(f));
    al.add({e, 0, 0}, Scalar::one(f));
    al.add({l, 1, 1}, Scalar::one(f));
    ar.add({0, e, 0}, Scalar::one(f));
    ar.add({1, r, 1}, Scalar::one(f));
    auto A = make_algebra(m.build(), u.build(), "k[u]/u^2");
    return make_bimodule_algebra(A, H->base, al.build(), ar.build());
}

BicomoduleCoalgebra grading_bicomodule_coalgebra(const Group& G, const FieldSpec& f)
{
    const std::size_t n = G.order;
    TensorBuilder d(f, {n, n, n}), e(f, {n}), l(f, {n, n, n}), r(f, {n, n, n});
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t a = 0; a < n; ++a)
            d.add({g, a, G.mul(G.inverse[a], g)}, Scalar::one(f));
        l.add({g, g, g}, Scalar::one(f));
        r.add({g, g, g}, Scalar::one(f));
    }
    e.add(G.identity, Scalar::one(f));
    CoalgebraData C{d.build(), e.build(), "k^" + G.name};
    return {std::move(C), group_algebra(G, f)->base, l.build(), r.build()};
}

QHPtr sweedler_h4(const FieldSpec& f)
{
    if (f.characteristic() == 2)
        throw UnsupportedField("Sweedler's algebra needs characteristic != 2");
    // basis index = i + 2j for g^i x^j
    const Scalar one = Scalar::one(f);
    TensorBuilder m(f, {4, 4, 4});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    if (j + l == 2)
                        continue;
                    Scalar c = (j * k) % 2 ? -one : one; // x g = -g x
                    m.add(((i + 2 * j) * 4 + (k + 2 * l)) * 4 + ((i + k) % 2 + 2 * (j + l)), c);
                }
    auto idx = [](std::size_t a, std::size_t b, std::size_t c) { return (a * 4 + b) * 4 + c; };
    const std::size_t E = 0, g = 1, x = 2, gx = 3;
    TensorBuilder d(f, {4, 4, 4});
    d.add(idx(E, E, E), one);
    d.add(idx(g, g, g), one);
    d.add(idx(x, x, E), one);
    d.add(idx(x, g, x), one);
    d.add(idx(gx, gx, g), one);
    d.add(idx(gx, E, gx), one);
    TensorBuilder s(f, {4, 4});
    s.add(E * 4 + E, one);
    s.add(g * 4 + g, one);
    s.add(x * 4 + gx, -one);
    s.add(gx * 4 + x, one);
    Tensor counit = Tensor::basis_vector(f, 4, E) + Tensor::basis_vector(f, 4, g);
    AlgPtr alg = make_algebra(m.build(), Tensor::basis_vector(f, 4, E), "H4");
    Tensor phi = outer(outer(alg->unit(), alg->unit()), alg->unit());
    QBPtr qb = make_quasi_bialgebra(alg, d.build(), counit, phi, phi, "H4");
    return make_quasi_hopf(qb, s.build(), alg->unit(), alg->unit(), "H4");
}

GaugeTwist h4_gauge(const QuasiHopfAlgebra& H4)
{
    // 1⊗1 + x⊗x: normalized since ε(x) = 0, inverse 1⊗1 − x⊗x
    const FieldSpec& f = H4.field();
    TensorBuilder b(f, {4, 4});
    b.add(0, Scalar::one(f));
    b.add(2 * 4 + 2, Scalar::one(f));
    return make_gauge(H4.qb(), b.build());
}

const std::vector<NamedHopf>& hopf_corpus()
{
    static const std::vector<NamedHopf> corpus = {
        {"kZ2", [] { return group_algebra(cyclic_group(2)); }},
        {"kZ3", [] { return group_algebra(cyclic_group(3)); }},
        {"kZ4", [] { return group_algebra(cyclic_group(4)); }},
        {"kZ2xZ2", [] { return group_algebra(direct_product(cyclic_group(2), cyclic_group(2))); }},
        {"kS3", [] { return group_algebra(symmetric_group_3()); }},
        {"kD4", [] { return group_algebra(dihedral_group_4()); }},
        {"k^Z2", [] { return dual_group_algebra(cyclic_group(2)); }},
        {"k^Z2_omega",
         [] {
             return dual_group_algebra(cyclic_group(2), cyclic_cocycle(2, 1, FieldSpec::rationals()), "k^Z2_omega");
         }},
        {"k^Z3_omega",
         [] {
             return dual_group_algebra(cyclic_group(3), cyclic_cocycle(3, 1, FieldSpec::cyclotomic(3)), "k^Z3_omega");
         }},
        {"H4", [] { return sweedler_h4(); }},
        {"H4_F",
         [] {
             auto H = sweedler_h4();
             auto T = twist(*H, h4_gauge(*H));
             auto r = std::make_shared<QuasiHopfAlgebra>(*T);
             r->name = "H4_F";
             return QHPtr(r);
         }},
    };
    return corpus;
}

QHPtr hopf_example(const std::string& name)
{
    const std::string key = name == "sweedler" ? "H4" : name;
    for (const auto& e : hopf_corpus())
        if (e.name == key)
            return e.make();
    throw InvalidStructure("unknown example '" + name + "'");
}

std::optional<Group> corpus_group(const std::string& name)
{
    std::string g = name.substr(name.rfind("k^", 0) == 0 ? 2 : 1);
    if (auto u = g.find('_'); u != std::string::npos)
        g = g.substr(0, u);
    if (g == "Z2" || g == "Z3" || g == "Z4")
        return cyclic_group(std::stoul(g.substr(1)));
    if (g == "Z2xZ2")
        return direct_product(cyclic_group(2), cyclic_group(2));
    if (g == "S3")
        return symmetric_group_3();
    if (g == "D4")
        return dihedral_group_4();
    return std::nullopt;
}

CanonicalStructures canonical_structures(const QHPtr& H)
{
    CanonicalStructures c{regular_bicomodule(H->base), std::nullopt, std::nullopt, dual_bimodule_algebra(H->base)};
    if (H->qb().phi_is_trivial()) {
        c.left = adjoint_left_module(*H);
        c.right = adjoint_right_module(*H);
    }
    return c;
}

LeftModuleAlgebra corpus_left_module(const std::string& name)
{
    auto H = hopf_example(name);
    if (name == "H4_F") {
        auto H4 = sweedler_h4();
        return twist_left_module(adjoint_left_module(*H4), h4_gauge(*H4), H->base);
    }
    if (!H->qb().phi_is_trivial())
        return left_part(graded_dual_numbers(H, 1, 1));
    return left_part(dual_bimodule_algebra(H->base));
}

RightModuleAlgebra corpus_right_module(const std::string& name)
{
    auto H = hopf_example(name);
    if (name == "H4_F") {
        auto H4 = sweedler_h4();
        return twist_right_module(adjoint_right_module(*H4), h4_gauge(*H4), H->base);
    }
    if (!H->qb().phi_is_trivial())
        return right_part(graded_dual_numbers(H, 1, 1));
    return right_part(dual_bimodule_algebra(H->base));
}

} // namespace qhl
