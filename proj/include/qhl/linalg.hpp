#pragma once

#include "qhl/tensor.hpp"

#include <optional>
#include <vector>

namespace qhl {

/// Row-major dense matrix used inside elimination routines.
struct DenseMatrix
{
    FieldSpec field;
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> a;

    DenseMatrix(const FieldSpec& f, std::size_t r, std::size_t c)
        : field(f), rows(r), cols(c), a(r * c, Scalar::zero(f))
    {
    }
    static DenseMatrix from_tensor(const Tensor& t); // rank 2
    Tensor to_tensor() const;
    Scalar& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(DenseMatrix& m);

/// One solution x of A x = b (A of shape [m,n], b of shape [m]), or nullopt
/// when the system is inconsistent. The solution is substituted back.
std::optional<Tensor> solve_linear(const Tensor& A, const Tensor& b);

/// Basis of {x : A x = 0} as the rows of a [k,n] tensor (k may be 0, in
/// which case the result has shape [1,n] and no entries: check `dim`).
struct Nullspace
{
    std::size_t dim = 0;
    std::vector<Tensor> basis; // each of shape [n]
};
Nullspace nullspace(const Tensor& A);
std::size_t matrix_rank(const Tensor& A);

/// Two-sided inverse of a square matrix; throws NotInvertible.
Tensor inverse_matrix(const Tensor& A);
/// Matrix product of [m,k] and [k,n].
Tensor matmul(const Tensor& A, const Tensor& B);
/// A applied to a vector.
Tensor matvec(const Tensor& A, const Tensor& x);

} // namespace qhl
