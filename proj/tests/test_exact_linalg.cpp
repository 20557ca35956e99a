#include <doctest.h>

#include "qhl/algebra.hpp"
#include "qhl/errors.hpp"
#include "qhl/legs.hpp"
#include "qhl/linalg.hpp"

#include <random>

using namespace qhl;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long a, long b = 1)
{
    return Scalar(Q, mpq_class(a, b));
}

Tensor random_tensor(std::mt19937_64& rng, Shape shape, int density_pct = 60)
{
    Tensor probe(Q, shape);
    std::vector<Entry> e;
    for (std::uint64_t f = 0; f < probe.volume(); ++f) {
        if (static_cast<int>(rng() % 100) >= density_pct)
            continue;
        long v = static_cast<long>(rng() % 7) - 3;
        e.push_back({f, q(v, 1 + static_cast<long>(rng() % 3))});
    }
    return Tensor::from_entries(Q, shape, std::move(e));
}

AlgPtr group_algebra_z2()
{
    // e0 = 1, e1 = g
    std::vector<Entry> m = {{0, q(1)}, {3, q(1)}, {5, q(1)}, {6, q(1)}};
    return make_algebra(Tensor::from_entries(Q, {2, 2, 2}, m), Tensor::basis_vector(Q, 2, 0), "kZ2");
}

AlgPtr dual_numbers()
{
    // 1, x with x^2 = 0
    std::vector<Entry> m = {{0, q(1)}, {3, q(1)}, {5, q(1)}};
    return make_algebra(Tensor::from_entries(Q, {2, 2, 2}, m), Tensor::basis_vector(Q, 2, 0), "k[x]/x^2");
}

} // namespace

TEST_CASE("rational scalars are canonical")
{
    Scalar a = Scalar::parse(Q, "6/4");
    CHECK(a.to_string() == "3/2");
    CHECK(a * a.inverse() == Scalar::one(Q));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(Scalar::zero(Q).inverse(), NotInvertible);
    CHECK_THROWS_AS(Scalar::parse(Q, "1/x"), ParseError);
}

TEST_CASE("prime field arithmetic")
{
    FieldSpec F7 = FieldSpec::prime(7);
    Scalar a(F7, 3L), b(F7, -1L);
    CHECK(b.to_string() == "6");
    CHECK((a * a.inverse()).is_one());
    CHECK((a + Scalar(F7, 4L)).is_zero());
    CHECK(Scalar(F7, mpq_class(1, 2)) * Scalar(F7, 2L) == Scalar::one(F7));
    CHECK_THROWS_AS(FieldSpec::prime(9), UnsupportedField);
    CHECK_THROWS_AS(a + Scalar::one(Q), FieldMismatch);
}

TEST_CASE("cyclotomic fields reduce modulo Phi_n")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12).size() == 5);

    FieldSpec C3 = FieldSpec::cyclotomic(3);
    Scalar z = Scalar::root_of_unity(C3);
    Scalar z3 = z * z * z;
    CHECK(z3.is_one());
    CHECK(z * z + z + Scalar::one(C3) == Scalar::zero(C3));
    Scalar w = z + Scalar(C3, 2L);
    CHECK((w * w.inverse()).is_one());
    CHECK(w.to_string() == "[2,1]");

    FieldSpec C5 = FieldSpec::cyclotomic(5);
    Scalar y = Scalar::root_of_unity(C5);
    Scalar p = Scalar::one(C5);
    for (int i = 0; i < 5; ++i)
        p *= y;
    CHECK(p.is_one());
    CHECK(y.inverse() == y * y * y * y);
}

TEST_CASE("contract: identity and unit examples")
{
    std::mt19937_64 rng(1);
    Tensor v = random_tensor(rng, {4}, 100);
    CHECK(contract(Tensor::identity(Q, 4), v, {{1, 0}}) == v);

    AlgPtr a = group_algebra_z2();
    CHECK(contract(a->mult(), a->unit(), {{1, 0}}) == Tensor::identity(Q, 2));
}

TEST_CASE("contract agrees with a nested-loop evaluator")
{
    std::mt19937_64 rng(7);
    for (std::size_t n = 1; n <= 5; ++n) {
        Tensor A = random_tensor(rng, {n, n, n});
        Tensor B = random_tensor(rng, {n, n, n});
        // C[i,j,l,m] = sum_k A[i,k,j] B[l,k,m]
        Tensor C = contract(A, B, {{1, 1}});
        TensorBuilder naive(Q, {n, n, n, n});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t m = 0; m < n; ++m) {
                        Scalar s = Scalar::zero(Q);
                        for (std::size_t k = 0; k < n; ++k)
                            s.add_product(A.at({i, k, j}), B.at({l, k, m}));
                        naive.add({i, j, l, m}, s);
                    }
        CHECK(C == naive.build());
        // multilinearity in the first argument
        Tensor A2 = random_tensor(rng, {n, n, n});
        CHECK(contract(A + A2.scaled(q(2)), B, {{1, 1}}) ==
              C + contract(A2, B, {{1, 1}}).scaled(q(2)));
    }
    Tensor A = random_tensor(rng, {3, 3});
    CHECK_THROWS_AS(contract(A, random_tensor(rng, {4}), {{1, 0}}), ShapeMismatch);
}

TEST_CASE("einsum matches pairwise contraction")
{
    std::mt19937_64 rng(11);
    Tensor A = random_tensor(rng, {3, 4});
    Tensor B = random_tensor(rng, {4, 2});
    Tensor C = random_tensor(rng, {2, 3});
    Tensor abc = einsum("ij,jk,kl->il", {&A, &B, &C});
    CHECK(abc == matmul(matmul(A, B), C));
    Tensor tr = einsum("ij,jk,ki->", {&A, &B, &C});
    Scalar t = Scalar::zero(Q);
    Tensor P = matmul(matmul(A, B), C);
    for (std::size_t i = 0; i < 3; ++i)
        t += P.at({i, i});
    CHECK(tr.at({}) == t);
    // kept shared label (batched product)
    Tensor X = random_tensor(rng, {3, 3});
    Tensor Y = random_tensor(rng, {3, 3});
    Tensor had = einsum("ij,ij->ij", {&X, &Y});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(had.at({i, j}) == X.at({i, j}) * Y.at({i, j}));
    CHECK(einsum("ij->ji", {&X}) == X.permute({1, 0}));
}

TEST_CASE("tensor storage invariants")
{
    Tensor t = Tensor::from_entries(Q, {2, 2}, {{1, q(1)}, {1, q(-1)}, {2, q(0)}, {3, q(5)}});
    CHECK(t.nnz() == 1);
    CHECK(t.at({1, 1}) == q(5));
    CHECK_THROWS_AS(Tensor::from_entries(Q, {2}, {{2, q(1)}}), ShapeMismatch);
    Tensor d = Tensor::from_entries(Q, {2, 2}, {{0, q(1)}, {1, q(2)}, {3, q(3)}});
    CHECK(d.at({0, 1}) == q(2)); // slot-table path
    CHECK(d.first_difference(t) == Index{0, 0});
    CHECK(d.permute({1, 0}).at({1, 0}) == q(2));
}

TEST_CASE("solve_linear")
{
    std::mt19937_64 rng(3);
    Tensor b = random_tensor(rng, {4}, 100);
    CHECK(*solve_linear(Tensor::identity(Q, 4), b) == b);
    Tensor b1 = Tensor::basis_vector(Q, 3, 1);
    CHECK_FALSE(solve_linear(Tensor(Q, {3, 3}), b1).has_value());
    for (int trial = 0; trial < 10; ++trial) {
        Tensor A = random_tensor(rng, {4, 4}, 80);
        if (matrix_rank(A) < 4)
            continue;
        auto x = solve_linear(A, b);
        REQUIRE(x.has_value());
        CHECK(matvec(A, *x) == b);
        Tensor Ai = inverse_matrix(A);
        CHECK(matmul(A, Ai) == Tensor::identity(Q, 4));
    }
}

TEST_CASE("nullspace vectors are annihilated")
{
    std::mt19937_64 rng(5);
    Tensor A = random_tensor(rng, {3, 6}, 70);
    Nullspace ns = nullspace(A);
    CHECK(ns.dim == 6 - matrix_rank(A));
    for (const auto& v : ns.basis)
        CHECK(matvec(A, v).is_zero());
}

TEST_CASE("invert_in_algebra")
{
    AlgPtr a = group_algebra_z2();
    CHECK(invert_in_algebra(*a, a->unit()) == a->unit());
    CHECK_THROWS_AS(invert_in_algebra(*a, Tensor(Q, {2})), NotInvertible);
    // 1 + g is a zero divisor in kZ2, 2 + g is not
    Tensor z = Tensor::from_entries(Q, {2}, {{0, q(1)}, {1, q(1)}});
    CHECK_THROWS_AS(invert_in_algebra(*a, z), NotInvertible);
    Tensor x = Tensor::from_entries(Q, {2}, {{0, q(2)}, {1, q(1)}});
    Tensor y = invert_in_algebra(*a, x);
    CHECK(a->multiply(x, y) == a->unit());
    CHECK(a->multiply(y, x) == a->unit());

    // inside kZ2 ⊗ kZ2 ⊗ kZ2
    Elem u = Elem::unit({a, a, a});
    Tensor e = Tensor::from_entries(Q, {2, 2, 2}, {{0, q(3)}, {7, q(1)}, {5, q(-1)}});
    Elem inv = invert(Elem::constant(e, {a, a, a}));
    CHECK(mul(Elem::constant(e, {a, a, a}), inv).t == u.t);
}

TEST_CASE("is_associative and is_unital")
{
    AlgPtr k = ground_algebra(Q);
    CHECK(is_associative(*k).passed());
    AlgPtr a = group_algebra_z2();
    CHECK(is_associative(*a).passed());
    CHECK(is_unital(*a).passed());
    // perturb 1·g = g into 1·g = g + 1
    Tensor m = a->mult() + Tensor::from_entries(Q, {2, 2, 2}, {{2, q(1)}});
    AlgebraData bad(m, a->unit());
    auto r = is_associative(bad);
    REQUIRE_FALSE(r.passed());
    const auto* f = r.first_failure();
    CHECK(f->tag == "assoc");
    REQUIRE(f->witness.has_value());
    CHECK(f->witness->size() == 4);
}

TEST_CASE("radical via the trace form")
{
    CHECK(radical_trace_form(*group_algebra_z2()).dim == 0);
    AlgPtr d = dual_numbers();
    RadicalInfo r = radical_trace_form(*d);
    CHECK(r.dim == 1);
    CHECK(nilpotency_index(*d, r.basis[0]) == 2);
    FieldSpec F3 = FieldSpec::prime(3);
    AlgebraData fp(Tensor::from_entries(F3, {1, 1, 1}, {{0, Scalar::one(F3)}}),
                   Tensor::basis_vector(F3, 1, 0));
    CHECK_THROWS_AS(radical_trace_form(fp), UnsupportedField);
}

TEST_CASE("tensor product algebras and leg maps")
{
    AlgPtr a = group_algebra_z2();
    AlgPtr aa = tensor_product(a, a);
    CHECK(aa->dim() == 4);
    CHECK(is_associative(*aa).passed());
    CHECK(is_unital(*aa).passed());
    // opposite of a commutative algebra is itself
    CHECK(a->opposite()->mult() == a->mult());

    // apply the swap map on two legs
    Elem x = Elem::constant(Tensor::from_entries(Q, {2, 2}, {{1, q(1)}}), {a, a}); // 1 ⊗ g
    Elem sw = permute(x, {1, 0});
    CHECK(sw.t.at({1, 0}) == q(1));
    // multiplication as a two-input map merges legs
    Elem merged = apply(x, {0, 1}, a->mult(), {a}, 0);
    CHECK(merged.t == Tensor::basis_vector(Q, 2, 1));
    Elem ins = insert_unit(x, 1, a);
    CHECK(ins.t.at({0, 0, 1}) == q(1));
}
