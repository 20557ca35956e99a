#include "qhl/legs.hpp"

#include "qhl/errors.hpp"
#include "qhl/linalg.hpp"

#include <numeric>

namespace qhl {

namespace {

Shape leg_shape(const std::vector<AlgPtr>& algs)
{
    Shape s;
    for (const auto& a : algs)
        s.push_back(a->dim());
    return s;
}

void check_shape(const Elem& e)
{
    const std::size_t r = e.t.rank();
    if (r != e.batch + e.algs.size())
        throw ShapeMismatch("element rank differs from batch + legs");
    for (std::size_t i = 0; i < e.algs.size(); ++i) {
        if (e.t.dim(e.batch + i) != e.algs[i]->dim())
            throw ShapeMismatch("leg " + std::to_string(i) + " has length " +
                                std::to_string(e.t.dim(e.batch + i)) + ", algebra has dimension " +
                                std::to_string(e.algs[i]->dim()));
        if (e.algs[i]->field() != e.t.field())
            throw FieldMismatch("leg algebra over a different field");
    }
}

// Decoded entries: indices[k * rank + leg].
struct Decoded
{
    std::vector<std::uint32_t> idx;
    std::size_t rank = 0;
    const std::uint32_t* at(std::size_t k) const { return idx.data() + k * rank; }
};

Decoded decode(const Tensor& t)
{
    Decoded d;
    d.rank = t.rank();
    d.idx.resize(t.nnz() * d.rank);
    std::size_t k = 0;
    for (const auto& e : t.entries()) {
        std::uint64_t rest = e.flat;
        for (std::size_t l = 0; l < d.rank; ++l) {
            d.idx[k * d.rank + l] = static_cast<std::uint32_t>(rest / t.stride(l));
            rest %= t.stride(l);
        }
        ++k;
    }
    return d;
}

std::vector<std::uint64_t> strides_of(const Shape& s)
{
    std::vector<std::uint64_t> st(s.size());
    std::uint64_t v = 1;
    for (std::size_t k = s.size(); k-- > 0;) {
        st[k] = v;
        v *= s[k];
    }
    return st;
}

} // namespace

Elem Elem::constant(Tensor t, std::vector<AlgPtr> algs)
{
    return family(std::move(t), 0, std::move(algs));
}

Elem Elem::family(Tensor t, std::size_t batch, std::vector<AlgPtr> algs)
{
    Elem e{std::move(t), batch, std::move(algs)};
    check_shape(e);
    return e;
}

Elem Elem::unit(const std::vector<AlgPtr>& algs)
{
    if (algs.empty())
        throw ShapeMismatch("unit of an empty tensor product needs a field");
    Tensor t = algs[0]->unit();
    for (std::size_t i = 1; i < algs.size(); ++i)
        t = outer(t, algs[i]->unit());
    return constant(std::move(t), algs);
}

Elem Elem::basis(const std::vector<AlgPtr>& algs)
{
    Shape s = leg_shape(algs);
    std::uint64_t N = 1;
    for (auto d : s)
        N *= d;
    Shape full = s;
    full.insert(full.end(), s.begin(), s.end());
    std::vector<Entry> e;
    e.reserve(N);
    const FieldSpec& f = algs.at(0)->field();
    for (std::uint64_t j = 0; j < N; ++j)
        e.push_back({j * N + j, Scalar::one(f)});
    return family(Tensor::from_entries(f, full, std::move(e)), s.size(), algs);
}

Elem Elem::with_algs(std::vector<AlgPtr> a) const
{
    return family(t, batch, std::move(a));
}

Elem mul_at(const Elem& x, const Elem& y, const std::vector<std::size_t>& positions, bool y_right)
{
    if (positions.size() != y.legs())
        throw ShapeMismatch("mul_at: one position per leg of y");
    for (std::size_t q = 0; q < positions.size(); ++q) {
        if (positions[q] >= x.legs())
            throw ShapeMismatch("mul_at: position out of range");
        if (x.algs[positions[q]]->dim() != y.algs[q]->dim())
            throw ShapeMismatch("mul_at: leg dimensions differ");
    }
    if (x.field() != y.field())
        throw FieldMismatch("mul_at over different fields");

    Shape rs;
    for (std::size_t i = 0; i < x.batch; ++i)
        rs.push_back(x.t.dim(i));
    for (std::size_t i = 0; i < y.batch; ++i)
        rs.push_back(y.t.dim(i));
    for (const auto& a : x.algs)
        rs.push_back(a->dim());
    auto rst = strides_of(rs);
    TensorBuilder out(x.field(), rs);

    Decoded dx = decode(x.t), dy = decode(y.t);
    const std::size_t k = positions.size();
    std::vector<bool> touched(x.legs(), false);
    for (auto p : positions)
        touched[p] = true;

    // flat contribution of y's batch legs, per y entry
    std::vector<std::uint64_t> ybase(y.t.nnz(), 0);
    for (std::size_t j = 0; j < y.t.nnz(); ++j)
        for (std::size_t b = 0; b < y.batch; ++b)
            ybase[j] += dy.at(j)[b] * rst[x.batch + b];

    std::vector<Scalar> coef(k + 1, Scalar::zero(x.field()));
    std::vector<std::span<const Entry>> spans(k);
    const std::size_t leg0 = x.batch + y.batch;

    for (std::size_t i = 0; i < x.t.nnz(); ++i) {
        const std::uint32_t* xi = dx.at(i);
        std::uint64_t xbase = 0;
        for (std::size_t b = 0; b < x.batch; ++b)
            xbase += xi[b] * rst[b];
        for (std::size_t l = 0; l < x.legs(); ++l)
            if (!touched[l])
                xbase += xi[x.batch + l] * rst[leg0 + l];
        const Scalar& xv = x.t.entries()[i].value;
        for (std::size_t j = 0; j < y.t.nnz(); ++j) {
            const std::uint32_t* yj = dy.at(j);
            bool empty = false;
            for (std::size_t q = 0; q < k; ++q) {
                const std::size_t l = positions[q];
                const auto& A = *x.algs[l];
                std::size_t a = xi[x.batch + l], b = yj[y.batch + q];
                spans[q] = y_right ? A.product(a, b) : A.product(b, a);
                if (spans[q].empty()) {
                    empty = true;
                    break;
                }
            }
            if (empty)
                continue;
            const Scalar& yv = y.t.entries()[j].value;
            const Scalar* c0 = &xv;
            if (!yv.is_one()) {
                coef[0] = xv;
                coef[0] *= yv;
                c0 = &coef[0];
            }
            // iterate over the cartesian product of the per-leg terms
            std::uint64_t base = xbase + ybase[j];
            auto recurse = [&](auto&& self, std::size_t q, std::uint64_t f, const Scalar* c) -> void {
                if (k == 0) {
                    out.add(f, *c);
                    return;
                }
                const std::size_t l = positions[q];
                const std::size_t d = x.algs[l]->dim();
                const std::uint64_t st = rst[leg0 + l];
                for (const auto& term : spans[q]) {
                    const std::uint64_t g = f + (term.flat % d) * st;
                    const bool one = term.value.is_one();
                    if (q + 1 == k) {
                        if (one)
                            out.add(g, *c);
                        else
                            out.add_product(g, *c, term.value);
                    } else if (one) {
                        self(self, q + 1, g, c);
                    } else {
                        coef[q + 1] = *c;
                        coef[q + 1] *= term.value;
                        self(self, q + 1, g, &coef[q + 1]);
                    }
                }
            };
            recurse(recurse, 0, base, c0);
        }
    }
    Elem r{out.build(), x.batch + y.batch, x.algs};
    return r;
}

Elem mul(const Elem& x, const Elem& y)
{
    if (x.legs() != y.legs())
        throw ShapeMismatch("mul: different numbers of legs");
    std::vector<std::size_t> pos(x.legs());
    std::iota(pos.begin(), pos.end(), 0);
    return mul_at(x, y, pos, true);
}

Elem apply(const Elem& x, const std::vector<std::size_t>& in, const Tensor& map,
           std::vector<AlgPtr> out_algs, std::size_t at)
{
    const std::size_t r = in.size();
    if (map.rank() != r + out_algs.size())
        throw ShapeMismatch("apply: map rank must be inputs + outputs");
    if (map.field() != x.field())
        throw FieldMismatch("apply over different fields");
    std::vector<bool> consumed(x.legs(), false);
    for (std::size_t q = 0; q < r; ++q) {
        if (in[q] >= x.legs() || consumed[in[q]])
            throw ShapeMismatch("apply: bad input leg");
        consumed[in[q]] = true;
        if (map.dim(q) != x.algs[in[q]]->dim())
            throw ShapeMismatch("apply: input length differs from leg dimension");
    }
    for (std::size_t o = 0; o < out_algs.size(); ++o)
        if (map.dim(r + o) != out_algs[o]->dim())
            throw ShapeMismatch("apply: output length differs from algebra dimension");

    std::vector<std::size_t> rest;
    for (std::size_t l = 0; l < x.legs(); ++l)
        if (!consumed[l])
            rest.push_back(l);
    if (at > rest.size())
        throw ShapeMismatch("apply: insertion point out of range");

    std::vector<AlgPtr> ralgs;
    for (std::size_t i = 0; i < at; ++i)
        ralgs.push_back(x.algs[rest[i]]);
    ralgs.insert(ralgs.end(), out_algs.begin(), out_algs.end());
    for (std::size_t i = at; i < rest.size(); ++i)
        ralgs.push_back(x.algs[rest[i]]);

    Shape rs;
    for (std::size_t i = 0; i < x.batch; ++i)
        rs.push_back(x.t.dim(i));
    for (const auto& a : ralgs)
        rs.push_back(a->dim());
    auto rst = strides_of(rs);
    TensorBuilder out(x.field(), rs);

    // result position of each surviving leg of x
    std::vector<std::uint64_t> leg_stride(x.legs(), 0);
    for (std::size_t i = 0; i < rest.size(); ++i) {
        std::size_t pos = i < at ? i : i + out_algs.size();
        leg_stride[rest[i]] = rst[x.batch + pos];
    }
    // contribution of each map entry's outputs
    Decoded dm = decode(map);
    std::vector<std::uint64_t> mpart(map.nnz(), 0);
    for (std::size_t e = 0; e < map.nnz(); ++e)
        for (std::size_t o = 0; o < out_algs.size(); ++o)
            mpart[e] += dm.at(e)[r + o] * rst[x.batch + at + o];
    std::vector<std::uint64_t> in_stride(r);
    {
        std::uint64_t s = 1;
        for (std::size_t q = r; q-- > 0;) {
            in_stride[q] = s;
            s *= map.dim(q);
        }
    }

    Decoded dx = decode(x.t);
    const Entry* mbase = map.entries().data();
    for (std::size_t i = 0; i < x.t.nnz(); ++i) {
        const std::uint32_t* xi = dx.at(i);
        std::uint64_t base = 0, key = 0;
        for (std::size_t b = 0; b < x.batch; ++b)
            base += xi[b] * rst[b];
        for (std::size_t l = 0; l < x.legs(); ++l)
            base += xi[x.batch + l] * leg_stride[l];
        for (std::size_t q = 0; q < r; ++q)
            key += xi[x.batch + in[q]] * in_stride[q];
        const Scalar& xv = x.t.entries()[i].value;
        for (const auto& me : map.prefix_range(key, r))
            out.add_product(base + mpart[&me - mbase], xv, me.value);
    }
    return Elem{out.build(), x.batch, std::move(ralgs)};
}

Elem apply(const Elem& x, std::size_t leg, const Tensor& map, std::vector<AlgPtr> out_algs)
{
    return apply(x, std::vector<std::size_t>{leg}, map, std::move(out_algs), leg);
}

Elem permute(const Elem& x, const std::vector<std::size_t>& perm)
{
    if (perm.size() != x.legs())
        throw ShapeMismatch("permute: wrong permutation length");
    std::vector<std::size_t> full(x.batch);
    std::iota(full.begin(), full.end(), 0);
    std::vector<AlgPtr> a;
    for (auto p : perm) {
        full.push_back(x.batch + p);
        a.push_back(x.algs.at(p));
    }
    return Elem{x.t.permute(full), x.batch, std::move(a)};
}

Elem tensor(const Elem& x, const Elem& y)
{
    Tensor t = outer(x.t, y.t); // xb, xl, yb, yl
    const std::size_t xb = x.batch, xl = x.legs(), yb = y.batch, yl = y.legs();
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < xb; ++i)
        perm.push_back(i);
    for (std::size_t i = 0; i < yb; ++i)
        perm.push_back(xb + xl + i);
    for (std::size_t i = 0; i < xl; ++i)
        perm.push_back(xb + i);
    for (std::size_t i = 0; i < yl; ++i)
        perm.push_back(xb + xl + yb + i);
    std::vector<AlgPtr> a = x.algs;
    a.insert(a.end(), y.algs.begin(), y.algs.end());
    return Elem{t.permute(perm), xb + yb, std::move(a)};
}

Elem insert_unit(const Elem& x, std::size_t at, const AlgPtr& alg)
{
    if (at > x.legs())
        throw ShapeMismatch("insert_unit: position out of range");
    Elem u = Elem::constant(alg->unit(), {alg});
    Elem t = tensor(x, u);
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < at; ++i)
        perm.push_back(i);
    perm.push_back(x.legs());
    for (std::size_t i = at; i < x.legs(); ++i)
        perm.push_back(i);
    return permute(t, perm);
}

Elem merge_legs(const Elem& x, std::size_t a, std::size_t b)
{
    if (a == b || a >= x.legs() || b >= x.legs())
        throw ShapeMismatch("merge_legs: bad legs");
    if (x.algs[a]->dim() != x.algs[b]->dim())
        throw ShapeMismatch("merge_legs: legs of different dimension");
    const AlgPtr& alg = x.algs[a];
    return apply(x, {a, b}, alg->mult(), {alg}, std::min(a, b));
}

Elem right_mul(const Elem& x, std::size_t leg, const Tensor& v)
{
    return mul_at(x, Elem::constant(v, {x.algs.at(leg)}), {leg}, true);
}

Elem left_mul(const Tensor& v, const Elem& x, std::size_t leg)
{
    return mul_at(x, Elem::constant(v, {x.algs.at(leg)}), {leg}, false);
}

Elem invert(const Elem& x)
{
    if (x.batch != 0)
        throw ShapeMismatch("invert expects a single element");
    std::uint64_t N = 1;
    for (const auto& a : x.algs)
        N *= a->dim();
    Elem basis = Elem::basis(x.algs);
    // m[J, out]: coefficient of e_out in x e_J
    Elem xe = mul(x, basis);
    Tensor m = xe.t.reshape({N, N});
    Tensor A = m.permute({1, 0});
    Tensor one = Elem::unit(x.algs).t.reshape({N});
    auto y = solve_linear(A, one);
    if (!y)
        throw NotInvertible("element has no right inverse");
    Shape s = leg_shape(x.algs);
    Elem inv = Elem::constant(y->reshape(s), x.algs);
    Elem u = Elem::unit(x.algs);
    if (mul(x, inv).t != u.t || mul(inv, x).t != u.t)
        throw NotInvertible("right inverse is not a left inverse");
    return inv;
}

Elem evaluate(const Elem& x, const Tensor& weights)
{
    if (weights.rank() != x.batch)
        throw ShapeMismatch("evaluate: weight rank must equal batch count");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t b = 0; b < x.batch; ++b)
        pairs.push_back({b, b});
    Tensor t = contract(x.t, weights, pairs);
    return Elem{t, 0, x.algs};
}

} // namespace qhl
