#pragma once

#include "qhl/report.hpp"
#include "qhl/tensor.hpp"

#include <memory>
#include <span>
#include <string>

namespace qhl {

/// Finite-dimensional algebra given by structure constants:
/// mult[i,j,k] is the coefficient of e_k in e_i e_j.
class AlgebraData
{
public:
    AlgebraData(Tensor mult, Tensor unit, std::string name = {});

    std::size_t dim() const noexcept { return dim_; }
    const FieldSpec& field() const noexcept { return mult_.field(); }
    const Tensor& mult() const noexcept { return mult_; }
    const Tensor& unit() const noexcept { return unit_; }
    const std::string& name() const noexcept { return name_; }

    /// Nonzero terms of e_i e_j; the output index is `flat % dim()`.
    std::span<const Entry> product(std::size_t i, std::size_t j) const
    {
        return {mult_.entries().data() + offsets_[i * dim_ + j],
                offsets_[i * dim_ + j + 1] - offsets_[i * dim_ + j]};
    }
    /// Product of two vectors of shape [n].
    Tensor multiply(const Tensor& x, const Tensor& y) const;
    /// Index of the unit if it is a basis vector.
    std::optional<std::size_t> unit_index() const noexcept { return unit_index_; }

    std::shared_ptr<const AlgebraData> opposite() const;

private:
    std::size_t dim_;
    Tensor mult_;
    Tensor unit_;
    std::string name_;
    std::vector<std::size_t> offsets_;
    std::optional<std::size_t> unit_index_;
};

using AlgPtr = std::shared_ptr<const AlgebraData>;

AlgPtr make_algebra(Tensor mult, Tensor unit, std::string name = {});
/// a ⊗ b with basis e_i ⊗ e_j at flat index i * dim(b) + j.
AlgPtr tensor_product(const AlgPtr& a, const AlgPtr& b);
/// The ground field as a 1-dimensional algebra.
AlgPtr ground_algebra(const FieldSpec& f);

/// (e_i e_j) e_k = e_i (e_j e_k) over all triples; witness (i,j,k,out).
VerificationReport is_associative(const AlgebraData& alg);
/// unit e_i = e_i unit = e_i; witness (i,out).
VerificationReport is_unital(const AlgebraData& alg);

/// y with x y = y x = 1 (both sides checked); throws NotInvertible.
Tensor invert_in_algebra(const AlgebraData& alg, const Tensor& x);

struct RadicalInfo
{
    std::size_t dim = 0;
    std::vector<Tensor> basis; // spans the radical
};
/// Null space of the trace form (x,y) -> tr(L_{xy}); equals the Jacobson
/// radical in characteristic 0. Throws UnsupportedField over F_p.
RadicalInfo radical_trace_form(const AlgebraData& alg);

/// Smallest k with x^k = 0, or 0 if x is not nilpotent.
std::size_t nilpotency_index(const AlgebraData& alg, const Tensor& x);

} // namespace qhl
