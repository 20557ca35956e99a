#pragma once

#include "qhl/actions.hpp"

#include <string>
#include <vector>

namespace qhl {

enum class ProductKind {
    Smash,
    GeneralizedSmash,
    LRSmash,
    TwoSidedSmash,
    TwoSidedCrossed,
    DiagonalCrossed,
    QuantumDouble
};

std::string to_string(ProductKind k);

/// A product algebra on the tensor product of `factors` (flat index in
/// factor order, last factor fastest).
struct ProductAlgebra
{
    AlgPtr result;
    ProductKind kind = ProductKind::LRSmash;
    std::vector<AlgPtr> factors;

    const Tensor& mult() const { return result->mult(); }
    std::size_t dim() const { return result->dim(); }
};

/// Associativity and unitality, exhaustive over basis triples.
VerificationReport check_product(const ProductAlgebra& P);

/// fwd[i,j] is the coefficient of e_j in f(e_i); bwd likewise.
struct AlgebraIso
{
    Tensor fwd;
    Tensor bwd;
};

/// Two-sided inverse, unit to unit, multiplicativity on all basis pairs.
VerificationReport check_algebra_iso(const AlgebraData& from, const AlgebraData& to, const AlgebraIso& iso);
/// Composite g∘f.
AlgebraIso compose(const AlgebraIso& f, const AlgebraIso& g);

/// (x¹·a)(x²h₁·a') # x³h₂h'.
ProductAlgebra smash_product(const LeftModuleAlgebra& A);
/// (x̃¹_λ·a)(x̃²_λb₍₋₁₎·a') ⋉ x̃³_λb₍₀₎b'.
ProductAlgebra generalized_smash(const LeftModuleAlgebra& A, const LeftComoduleAlgebra& B);
/// 𝒜♮𝔸.
ProductAlgebra lr_smash(const BimoduleAlgebra& A, const BicomoduleAlgebra& U);
/// (1♮u)(1♮u') = 1♮uu' and (φ♮1)(1♮u) = φ·u₍₁₎♮u₍₀₎.
VerificationReport check_lr_smash_embedding(const BimoduleAlgebra& A, const BicomoduleAlgebra& U,
                                            const ProductAlgebra& P);
/// A ⋉ 𝔸 ⋊ B on A⊗𝔸⊗B.
ProductAlgebra two_sided_smash(const LeftModuleAlgebra& A, const BicomoduleAlgebra& U, const RightModuleAlgebra& B);
/// 𝔄 ⊳ 𝒜 ⊲ 𝔅 on 𝔄⊗𝒜⊗𝔅.
ProductAlgebra two_sided_crossed(const RightComoduleAlgebra& A, const BimoduleAlgebra& M, const LeftComoduleAlgebra& B);

/// (A⊗B)♮𝔸 → A⋉𝔸⋊B, (a⊗b)♮u ↦ a⋉u⋊b. Throws IsoCheckFailed.
AlgebraIso iso_phi(const LeftModuleAlgebra& A, const RightModuleAlgebra& B, const BicomoduleAlgebra& U);
/// 𝒜♮(𝔄⊗𝔅) → 𝔄⊳𝒜⊲𝔅, φ♮(𝔞⊗𝔟) ↦ 𝔞⊳φ⊲𝔟. Throws IsoCheckFailed.
AlgebraIso iso_tau(const BimoduleAlgebra& M, const RightComoduleAlgebra& A, const LeftComoduleAlgebra& B);

/// Ω ∈ H⊗H⊗𝔸⊗H⊗H, legs in that order.
struct OmegaElement
{
    Tensor omega;
};
OmegaElement omega_element(const BicomoduleAlgebra& U, const QuasiHopfAlgebra& H);

/// 𝒜⋈𝔸. H must be the quasi-Hopf algebra underlying both inputs.
ProductAlgebra diagonal_crossed(const BimoduleAlgebra& A, const BicomoduleAlgebra& U, const QuasiHopfAlgebra& H);

/// ν and ν⁻¹ as matrices, unverified.
AlgebraIso nu_maps(const BimoduleAlgebra& A, const BicomoduleAlgebra& U, const QuasiHopfAlgebra& H);
/// ν: 𝒜⋈𝔸 → 𝒜♮𝔸 and its inverse, verified (IsoCheckFailed).
AlgebraIso iso_nu(const BimoduleAlgebra& A, const BicomoduleAlgebra& U, const QuasiHopfAlgebra& H);
/// ν by the closed formula φ·u₍₁₎♮u₍₀₎ (ordinary Hopf case), unverified.
Tensor nu_hopf_formula(const BimoduleAlgebra& A, const BicomoduleAlgebra& U);
/// The identity relating Θ = Φ_{λ,ρ}, q̃ and θ = Φ_{λ,ρ}⁻¹ (tag "of4").
VerificationReport check_of4(const BicomoduleAlgebra& U, const QuasiHopfAlgebra& H);

/// For A⊗B: φ∘ν is multiplicative onto A⋉𝔸⋊B. For 𝔄⊗𝔅: τ∘ν onto 𝔄⊳𝒜⊲𝔅.
VerificationReport check_nu_phi_square(const LeftModuleAlgebra& A, const RightModuleAlgebra& B,
                                       const BicomoduleAlgebra& U, const QuasiHopfAlgebra& H);
VerificationReport check_nu_tau_square(const BimoduleAlgebra& M, const RightComoduleAlgebra& A,
                                       const LeftComoduleAlgebra& B, const QuasiHopfAlgebra& H);

/// H*♮H.
ProductAlgebra quantum_double(const QuasiHopfAlgebra& H);

/// 𝒜♮H ≅ 𝒜#H for cocommutative H, with h→φ = h₁·φ·S(h₂).
struct CocommutativeIso
{
    LeftModuleAlgebra adjoint;
    ProductAlgebra lr;
    ProductAlgebra smash;
    AlgebraIso iso;
};
/// Throws NotCocommutative, IsoCheckFailed.
CocommutativeIso cocommutative_iso(const BimoduleAlgebra& A, const QuasiHopfAlgebra& H);

/// Integral t with ε(t) = 1 (HypothesisFailed if none).
Tensor normalized_integral(const QuasiHopfAlgebra& H);
/// Distinguished grouplike of H, from a left integral of H*.
Tensor distinguished_grouplike(const QuasiHopfAlgebra& H);
/// Hypotheses (HypothesisFailed), then (uni), (int1), (int2) and the
/// radical of 𝒜♮H when 𝒜 is semisimple.
VerificationReport maschke_suite(const BimoduleAlgebra& A, const QuasiHopfAlgebra& H);

/// 𝒜⋉A with h·(φ⋉a) = h₁·φ ⋉ h₂·a, (φ⋉a)·h = φ·h ⋉ a.
BimoduleAlgebra yd_bimodule(const BimoduleAlgebra& M, const YDAlgebra& A);
/// A⋉𝔸 with ρ(a⋉u) = a⋉u₍₀₎ ⊗ u₍₁₎, λ(a⋉u) = a₍₋₁₎u₍₋₁₎ ⊗ a₍₀₎⋉u₍₀₎.
BicomoduleAlgebra yd_bicomodule(const YDAlgebra& A, const BicomoduleAlgebra& U);
/// (𝒜⋉A)♮𝔸 and 𝒜♮(A⋉𝔸) have equal structure constants; with A'
/// given, also (A'⋉A)⋉𝔸 and A'⋉(A⋉𝔸).
VerificationReport yd_identifications(const BimoduleAlgebra& M, const YDAlgebra& A, const BicomoduleAlgebra& U,
                                      const LeftModuleAlgebra* Aprime = nullptr);

/// 𝒜♮𝔸 and _F𝒜_{F⁻¹}♮^F𝔸^{F⁻¹} have equal structure constants.
VerificationReport twist_invariance(const BimoduleAlgebra& A, const BicomoduleAlgebra& U, const GaugeTwist& F);

} // namespace qhl
