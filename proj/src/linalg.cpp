#include "qhl/linalg.hpp"

#include "qhl/errors.hpp"

namespace qhl {

DenseMatrix DenseMatrix::from_tensor(const Tensor& t)
{
    if (t.rank() != 2)
        throw ShapeMismatch("matrix must have rank 2");
    DenseMatrix m(t.field(), t.dim(0), t.dim(1));
    for (const auto& e : t.entries())
        m.a[e.flat] = e.value;
    return m;
}

Tensor DenseMatrix::to_tensor() const
{
    std::vector<Entry> e;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero())
            e.push_back({i, a[i]});
    return Tensor::from_entries(field, {rows, cols}, std::move(e));
}

std::vector<std::size_t> row_reduce(DenseMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m(p, c).is_zero())
            ++p;
        if (p == m.rows)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols; ++j)
            if (!m(r, j).is_zero())
                m(r, j) *= inv;
        std::vector<std::size_t> nz;
        for (std::size_t j = c; j < m.cols; ++j)
            if (!m(r, j).is_zero())
                nz.push_back(j);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            Scalar f = -m(i, c);
            for (std::size_t j : nz)
                m(i, j).add_product(f, m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Tensor matmul(const Tensor& A, const Tensor& B)
{
    if (A.rank() != 2 || B.rank() != 2 || A.dim(1) != B.dim(0))
        throw ShapeMismatch("matmul shapes");
    return contract(A, B, {{1, 0}});
}

Tensor matvec(const Tensor& A, const Tensor& x)
{
    if (A.rank() != 2 || x.rank() != 1 || A.dim(1) != x.dim(0))
        throw ShapeMismatch("matvec shapes");
    return contract(A, x, {{1, 0}});
}

std::optional<Tensor> solve_linear(const Tensor& A, const Tensor& b)
{
    if (A.rank() != 2 || b.rank() != 1 || b.dim(0) != A.dim(0))
        throw ShapeMismatch("solve_linear expects A [m,n] and b [m]");
    if (A.field() != b.field())
        throw FieldMismatch("solve_linear over different fields");
    const std::size_t m = A.dim(0), n = A.dim(1);
    DenseMatrix aug(A.field(), m, n + 1);
    for (const auto& e : A.entries())
        aug(e.flat / n, e.flat % n) = e.value;
    for (const auto& e : b.entries())
        aug(e.flat, n) = e.value;
    auto piv = row_reduce(aug);
    if (!piv.empty() && piv.back() == n)
        return std::nullopt;
    TensorBuilder x(A.field(), {n});
    for (std::size_t r = 0; r < piv.size(); ++r)
        x.add(piv[r], aug(r, n));
    Tensor sol = x.build();
    if (matvec(A, sol) != b)
        throw InternalInconsistency("solve_linear: substitution check failed");
    return sol;
}

Nullspace nullspace(const Tensor& A)
{
    if (A.rank() != 2)
        throw ShapeMismatch("nullspace expects a matrix");
    const std::size_t n = A.dim(1);
    DenseMatrix m = DenseMatrix::from_tensor(A);
    auto piv = row_reduce(m);
    std::vector<bool> is_piv(n, false);
    for (auto c : piv)
        is_piv[c] = true;
    Nullspace ns;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_piv[free])
            continue;
        TensorBuilder v(A.field(), {n});
        v.add(free, Scalar::one(A.field()));
        for (std::size_t r = 0; r < piv.size(); ++r)
            v.add(piv[r], -m(r, free));
        ns.basis.push_back(v.build());
    }
    ns.dim = ns.basis.size();
    return ns;
}

std::size_t matrix_rank(const Tensor& A)
{
    DenseMatrix m = DenseMatrix::from_tensor(A);
    return row_reduce(m).size();
}

Tensor inverse_matrix(const Tensor& A)
{
    if (A.rank() != 2 || A.dim(0) != A.dim(1))
        throw ShapeMismatch("inverse_matrix expects a square matrix");
    const std::size_t n = A.dim(0);
    DenseMatrix aug(A.field(), n, 2 * n);
    for (const auto& e : A.entries())
        aug(e.flat / n, e.flat % n) = e.value;
    for (std::size_t i = 0; i < n; ++i)
        aug(i, n + i) = Scalar::one(A.field());
    auto piv = row_reduce(aug);
    if (piv.size() < n || piv[n - 1] != n - 1)
        throw NotInvertible("singular matrix");
    TensorBuilder inv(A.field(), {n, n});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.add(i * n + j, aug(i, n + j));
    Tensor B = inv.build();
    Tensor id = Tensor::identity(A.field(), n);
    if (matmul(A, B) != id || matmul(B, A) != id)
        throw InternalInconsistency("inverse_matrix: two-sided check failed");
    return B;
}

} // namespace qhl
