#pragma once

#include "qhl/field.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qhl {

using Index = std::vector<std::size_t>;
using Shape = std::vector<std::size_t>;

struct Entry
{
    std::uint64_t flat;
    Scalar value;
};

/// Sparse multi-index array over an exact field. Entries are kept sorted by
/// row-major flat index with no stored zeros, so the entries sharing a
/// leading multi-index prefix form one contiguous run. A slot table gives
/// O(1) lookup once more than half of the positions are filled.
class Tensor
{
public:
    Tensor() = default; // rank-0 zero over Q
    Tensor(const FieldSpec& field, Shape shape);

    /// Duplicate positions are summed and zeros dropped.
    static Tensor from_entries(const FieldSpec& field, Shape shape, std::vector<Entry> raw);
    static Tensor basis_vector(const FieldSpec& field, std::size_t n, std::size_t i);
    static Tensor identity(const FieldSpec& field, std::size_t n);
    static Tensor scalar(const Scalar& s);

    const FieldSpec& field() const noexcept { return field_; }
    const Shape& shape() const noexcept { return shape_; }
    std::size_t rank() const noexcept { return shape_.size(); }
    std::size_t dim(std::size_t leg) const { return shape_.at(leg); }
    std::uint64_t volume() const noexcept { return volume_; }
    std::size_t nnz() const noexcept { return entries_.size(); }
    bool is_zero() const noexcept { return entries_.empty(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    std::uint64_t flat(const Index& idx) const;
    Index unflat(std::uint64_t flat) const;
    std::uint64_t stride(std::size_t leg) const { return strides_.at(leg); }

    const Scalar* find(std::uint64_t flat) const;
    Scalar at(const Index& idx) const;
    Scalar at_flat(std::uint64_t flat) const;

    /// Entries whose first `prefix_rank` indices flatten to `prefix`.
    std::span<const Entry> prefix_range(std::uint64_t prefix, std::size_t prefix_rank) const;

    /// Same flat layout under a new shape of equal volume.
    Tensor reshape(Shape shape) const;
    /// Leg i of the result is leg perm[i] of this tensor.
    Tensor permute(const std::vector<std::size_t>& perm) const;
    Tensor scaled(const Scalar& s) const;

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    Tensor operator-() const { return scaled(-Scalar::one(field_)); }

    friend bool operator==(const Tensor& a, const Tensor& b);
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }
    /// Lexicographically first multi-index where the tensors differ.
    std::optional<Index> first_difference(const Tensor& o) const;

    std::string to_string() const;

private:
    void init_layout();
    void build_slots();

    FieldSpec field_;
    Shape shape_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t volume_ = 1;
    std::vector<Entry> entries_;
    std::vector<std::int32_t> slots_; // dense fallback, empty when sparse
};

/// Accumulates contributions at flat positions, then sorts and merges.
class TensorBuilder
{
public:
    TensorBuilder(const FieldSpec& field, Shape shape);

    void add(std::uint64_t flat, const Scalar& s);
    void add(const Index& idx, const Scalar& s);
    void add_product(std::uint64_t flat, const Scalar& a, const Scalar& b);
    std::uint64_t flat(const Index& idx) const;
    Tensor build();

private:
    Scalar& slot(std::uint64_t flat);

    FieldSpec field_;
    Shape shape_;
    std::vector<std::uint64_t> strides_;
    std::vector<Entry> acc_;
    std::vector<std::int32_t> dense_;
    std::unordered_map<std::uint64_t, std::uint32_t> map_;
    bool use_dense_ = false;
};

/// Sum over paired axes; the result carries the unpaired legs of t1 then t2.
Tensor contract(const Tensor& t1, const Tensor& t2,
                const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// Outer product, legs of a then b.
Tensor outer(const Tensor& a, const Tensor& b);

struct EinsumTerm
{
    const Tensor* tensor;
    std::vector<int> labels;
};

/// Sparse einsum over integer labels, contracted pairwise. A label missing
/// from the output is summed once no later term needs it.
Tensor einsum(const std::vector<EinsumTerm>& terms, const std::vector<int>& out);
/// Same with one character per label: einsum("ab,bc->ac", {&x, &y}).
Tensor einsum(const std::string& spec, const std::vector<const Tensor*>& tensors);

} // namespace qhl
