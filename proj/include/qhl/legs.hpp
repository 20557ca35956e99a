#pragma once

#include "qhl/algebra.hpp"

#include <vector>

namespace qhl {

/// An element of A_1 ⊗ ... ⊗ A_k, or a family of such elements indexed by
/// `batch` leading basis indices (a quantified Sweedler expression). The
/// tensor has the batch legs first, then one leg per tensor factor.
struct Elem
{
    Tensor t;
    std::size_t batch = 0;
    std::vector<AlgPtr> algs;

    std::size_t legs() const noexcept { return algs.size(); }
    const FieldSpec& field() const noexcept { return t.field(); }

    static Elem constant(Tensor t, std::vector<AlgPtr> algs);
    static Elem family(Tensor t, std::size_t batch, std::vector<AlgPtr> algs);
    /// 1 ⊗ ... ⊗ 1.
    static Elem unit(const std::vector<AlgPtr>& algs);
    /// The family of all basis tensors e_{i1} ⊗ ... ⊗ e_{ik}, batch = k.
    static Elem basis(const std::vector<AlgPtr>& algs);

    /// Same coefficients read in other algebras (e.g. opposites).
    Elem with_algs(std::vector<AlgPtr> algs) const;
};

/// x y in the tensor-product algebra; batch legs of x precede those of y.
Elem mul(const Elem& x, const Elem& y);
/// x (y placed on `positions`) when y_right, else (y placed) x; the other
/// legs of x are untouched.
Elem mul_at(const Elem& x, const Elem& y, const std::vector<std::size_t>& positions,
            bool y_right = true);

/// Feeds legs `in` of x (in order) to a multilinear map of shape
/// [d_in1, ..., d_inr, d_out1, ..., d_outs]; the outputs are inserted at
/// position `at` of the leg list that remains after removing `in`.
Elem apply(const Elem& x, const std::vector<std::size_t>& in, const Tensor& map,
           std::vector<AlgPtr> out_algs, std::size_t at);
/// Single-leg convenience: outputs replace leg `leg`.
Elem apply(const Elem& x, std::size_t leg, const Tensor& map, std::vector<AlgPtr> out_algs);

/// Leg i of the result is leg perm[i] of x (batch legs stay in front).
Elem permute(const Elem& x, const std::vector<std::size_t>& perm);
/// x ⊗ y: batch legs of x then y, then element legs of x then y.
Elem tensor(const Elem& x, const Elem& y);
/// Inserts a unit factor at leg position `at`.
Elem insert_unit(const Elem& x, std::size_t at, const AlgPtr& alg);

/// Multiplies leg a by leg b (a's algebra, a on the left); the product takes
/// the position min(a, b) among the remaining legs.
Elem merge_legs(const Elem& x, std::size_t a, std::size_t b);
/// Right (left) multiplication of one leg by a fixed vector.
Elem right_mul(const Elem& x, std::size_t leg, const Tensor& v);
Elem left_mul(const Tensor& v, const Elem& x, std::size_t leg);

/// Two-sided inverse of a constant element; throws NotInvertible.
Elem invert(const Elem& x);

/// Sum of the families over batch legs with a weight tensor:
/// result = sum_b w[b] x[b]. Used to evaluate a family at a vector.
Elem evaluate(const Elem& x, const Tensor& weights);

} // namespace qhl
