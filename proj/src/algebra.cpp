#include "qhl/algebra.hpp"

#include "qhl/errors.hpp"
#include "qhl/legs.hpp"
#include "qhl/linalg.hpp"

namespace qhl {

AlgebraData::AlgebraData(Tensor mult, Tensor unit, std::string name)
    : dim_(unit.rank() == 1 ? unit.dim(0) : 0), mult_(std::move(mult)), unit_(std::move(unit)),
      name_(std::move(name))
{
    if (unit_.rank() != 1)
        throw ShapeMismatch("algebra unit must be a vector");
    if (mult_.shape() != Shape{dim_, dim_, dim_})
        throw ShapeMismatch("multiplication tensor must have shape [n,n,n]");
    if (mult_.field() != unit_.field())
        throw FieldMismatch("multiplication and unit over different fields");
    offsets_.assign(dim_ * dim_ + 1, 0);
    for (const auto& e : mult_.entries())
        ++offsets_[e.flat / dim_ + 1];
    for (std::size_t i = 1; i < offsets_.size(); ++i)
        offsets_[i] += offsets_[i - 1];
    if (unit_.nnz() == 1 && unit_.entries()[0].value.is_one())
        unit_index_ = unit_.entries()[0].flat;
}

Tensor AlgebraData::multiply(const Tensor& x, const Tensor& y) const
{
    if (x.shape() != Shape{dim_} || y.shape() != Shape{dim_})
        throw ShapeMismatch("multiply expects vectors of the algebra dimension");
    TensorBuilder out(field(), {dim_});
    for (const auto& a : x.entries())
        for (const auto& b : y.entries()) {
            Scalar ab = a.value * b.value;
            for (const auto& t : product(a.flat, b.flat))
                out.add_product(t.flat % dim_, ab, t.value);
        }
    return out.build();
}

AlgPtr AlgebraData::opposite() const
{
    std::string n = name_.empty() ? std::string() : name_ + "^op";
    return std::make_shared<const AlgebraData>(mult_.permute({1, 0, 2}), unit_, n);
}

AlgPtr make_algebra(Tensor mult, Tensor unit, std::string name)
{
    return std::make_shared<const AlgebraData>(std::move(mult), std::move(unit), std::move(name));
}

AlgPtr tensor_product(const AlgPtr& a, const AlgPtr& b)
{
    const std::size_t n = a->dim(), m = b->dim(), N = n * m;
    // (i,k,j,l,p,q) -> ((i,j),(k,l),(p,q))
    Tensor t = einsum("ijp,klq->ikjlpq", {&a->mult(), &b->mult()});
    Tensor mult = t.reshape({N, N, N});
    Tensor unit = outer(a->unit(), b->unit()).reshape({N});
    std::string name;
    if (!a->name().empty() || !b->name().empty())
        name = a->name() + "(x)" + b->name();
    return make_algebra(std::move(mult), std::move(unit), name);
}

AlgPtr ground_algebra(const FieldSpec& f)
{
    Tensor mult = Tensor::from_entries(f, {1, 1, 1}, {{0, Scalar::one(f)}});
    return make_algebra(std::move(mult), Tensor::basis_vector(f, 1, 0), "k");
}

VerificationReport is_associative(const AlgebraData& alg)
{
    VerificationReport r("associativity");
    const Tensor& m = alg.mult();
    Tensor lhs = einsum("ija,akb->ijkb", {&m, &m});
    Tensor rhs = einsum("jka,iab->ijkb", {&m, &m});
    r.expect_equal("assoc", lhs, rhs);
    return r;
}

VerificationReport is_unital(const AlgebraData& alg)
{
    VerificationReport r("unitality");
    const Tensor& m = alg.mult();
    const Tensor& u = alg.unit();
    Tensor id = Tensor::identity(alg.field(), alg.dim());
    r.expect_equal("unit-left", einsum("a,aib->ib", {&u, &m}), id);
    r.expect_equal("unit-right", einsum("a,iab->ib", {&u, &m}), id);
    return r;
}

Tensor invert_in_algebra(const AlgebraData& alg, const Tensor& x)
{
    auto p = std::make_shared<const AlgebraData>(alg);
    return invert(Elem::constant(x, {p})).t;
}

RadicalInfo radical_trace_form(const AlgebraData& alg)
{
    if (alg.field().kind() == FieldSpec::Kind::PrimeField)
        throw UnsupportedField("trace-form radical needs characteristic 0");
    const std::size_t n = alg.dim();
    TensorBuilder tr(alg.field(), {n});
    for (const auto& e : alg.mult().entries()) {
        std::size_t k = e.flat % n, j = (e.flat / n) % n, i = e.flat / (n * n);
        if (j == k)
            tr.add(i, e.value); // tr(L_{e_i}) = sum_j mult[i,j,j]
    }
    Tensor t = tr.build();
    Tensor form = einsum("ijk,k->ij", {&alg.mult(), &t});
    Nullspace ns = nullspace(form);
    return {ns.dim, std::move(ns.basis)};
}

std::size_t nilpotency_index(const AlgebraData& alg, const Tensor& x)
{
    Tensor p = x;
    for (std::size_t k = 1; k <= alg.dim() + 1; ++k) {
        if (p.is_zero())
            return k;
        p = alg.multiply(p, x);
    }
    return 0;
}

} // namespace qhl
