#pragma once

#include "qhl/quasihopf.hpp"

namespace qhl {

// Map tensors: act_l[h,a,a'] (h·a), act_r[a,h,a'] (a·h), rho[a,a',h],
// lam[b,h,b']. Reassociators: Φ_ρ ∈ 𝔄⊗H⊗H, Φ_λ ∈ H⊗H⊗𝔅, Φ_{λ,ρ} ∈ H⊗𝔸⊗H.

struct LeftModuleAlgebra
{
    AlgPtr carrier;
    QBPtr H;
    Tensor act;
};

struct RightModuleAlgebra
{
    AlgPtr carrier;
    QBPtr H;
    Tensor act;
};

struct BimoduleAlgebra
{
    AlgPtr carrier;
    QBPtr H;
    Tensor act_l;
    Tensor act_r;

    /// B[h,φ,h',φ'] = coefficient of e_φ' in h·φ·h'.
    Tensor both() const;
};

struct RightComoduleAlgebra
{
    AlgPtr carrier;
    QBPtr H;
    Tensor rho;
    Tensor phi;
    Tensor phi_inv;
};

struct LeftComoduleAlgebra
{
    AlgPtr carrier;
    QBPtr H;
    Tensor lam;
    Tensor phi;
    Tensor phi_inv;
};

struct BicomoduleAlgebra
{
    LeftComoduleAlgebra left;
    RightComoduleAlgebra right;
    Tensor phi_lr;
    Tensor phi_lr_inv;

    const AlgPtr& carrier() const { return left.carrier; }
    const QBPtr& H() const { return left.H; }
};

/// p̃_ρ = x̃¹ ⊗ x̃²βS(x̃³), q̃_ρ = X̃¹ ⊗ S⁻¹(αX̃³)X̃², both in 𝔄⊗H.
struct PQElements
{
    Tensor p;
    Tensor q;
};

// Leg helpers. The result replaces leg `a`; leg `h` is consumed.
Elem act_left(const Elem& x, std::size_t h, std::size_t a, const Tensor& act);
Elem act_right(const Elem& x, std::size_t a, std::size_t h, const Tensor& act);

VerificationReport check_left_module_algebra(const LeftModuleAlgebra& A);
VerificationReport check_right_module_algebra(const RightModuleAlgebra& B);
VerificationReport check_bimodule_algebra(const BimoduleAlgebra& A);
VerificationReport check_right_comodule_algebra(const RightComoduleAlgebra& A);
VerificationReport check_left_comodule_algebra(const LeftComoduleAlgebra& B);
VerificationReport check_bicomodule_algebra(const BicomoduleAlgebra& A);

// Constructors; each validates its output (CheckFailed otherwise).
LeftModuleAlgebra make_left_module_algebra(AlgPtr carrier, QBPtr H, Tensor act, bool validate = true);
RightModuleAlgebra make_right_module_algebra(AlgPtr carrier, QBPtr H, Tensor act, bool validate = true);
BimoduleAlgebra make_bimodule_algebra(AlgPtr carrier, QBPtr H, Tensor act_l, Tensor act_r, bool validate = true);
RightComoduleAlgebra make_right_comodule_algebra(AlgPtr carrier, QBPtr H, Tensor rho, Tensor phi,
                                                 bool validate = true);
LeftComoduleAlgebra make_left_comodule_algebra(AlgPtr carrier, QBPtr H, Tensor lam, Tensor phi,
                                               bool validate = true);
BicomoduleAlgebra make_bicomodule_algebra(LeftComoduleAlgebra left, RightComoduleAlgebra right, Tensor phi_lr,
                                          bool validate = true);

/// h·a = ε(h)a and friends.
LeftModuleAlgebra trivial_left_module(AlgPtr carrier, QBPtr H);
RightModuleAlgebra trivial_right_module(AlgPtr carrier, QBPtr H);
/// Left module algebra with the right action given via ε.
BimoduleAlgebra as_bimodule(const LeftModuleAlgebra& A);
BimoduleAlgebra as_bimodule(const RightModuleAlgebra& B);
/// Validated: over a genuine quasi-bialgebra one side alone is usually not
/// a module algebra.
LeftModuleAlgebra left_part(const BimoduleAlgebra& A);
RightModuleAlgebra right_part(const BimoduleAlgebra& A);

/// b ↦ 1⊗b, a ↦ a⊗1 with trivial reassociators (needs Φ = 1⊗1⊗1).
LeftComoduleAlgebra trivial_left_comodule(AlgPtr carrier, QBPtr H);
RightComoduleAlgebra trivial_right_comodule(AlgPtr carrier, QBPtr H);
BicomoduleAlgebra trivial_bicomodule(AlgPtr carrier, QBPtr H);

/// H over itself: λ = ρ = Δ and Φ_λ = Φ_ρ = Φ_{λ,ρ} = Φ.
LeftComoduleAlgebra regular_left_comodule(QBPtr H);
RightComoduleAlgebra regular_right_comodule(QBPtr H);
BicomoduleAlgebra regular_bicomodule(QBPtr H);

/// h·a = h₁aS(h₂) and a·h = S(h₁)ah₂ (ordinary Hopf algebras).
LeftModuleAlgebra adjoint_left_module(const QuasiHopfAlgebra& H);
RightModuleAlgebra adjoint_right_module(const QuasiHopfAlgebra& H);

/// H* with convolution, unit ε and ⟨h⇀φ,h'⟩ = φ(h'h), ⟨φ↼h,h'⟩ = φ(hh').
BimoduleAlgebra dual_bimodule_algebra(QBPtr H);

PQElements pq_elements(const RightComoduleAlgebra& A, const QuasiHopfAlgebra& H);
/// (tpqr1), (tpqr1a), (tpqr2), (tpqr2a).
VerificationReport check_pq_elements(const RightComoduleAlgebra& A, const QuasiHopfAlgebra& H,
                                     const PQElements& pq);

/// A⊗B with h·(a⊗b)·h' = h·a ⊗ b·h'.
BimoduleAlgebra tensor_bimodule_algebra(const LeftModuleAlgebra& A, const RightModuleAlgebra& B);
/// 𝔄⊗𝔅 with ρ on 𝔄, λ on 𝔅 and Φ_{λ,ρ} = 1⊗1⊗1.
BicomoduleAlgebra tensor_bicomodule_algebra(const RightComoduleAlgebra& A, const LeftComoduleAlgebra& B);

/// _F𝒜_{F⁻¹} over H_F: φ∘φ' = (G¹·φ·F¹)(G²·φ'·F²).
BimoduleAlgebra twist_bimodule_algebra(const BimoduleAlgebra& A, const GaugeTwist& F, QBPtr HF);
/// Left and right module algebras twisted the same way (the other side acts via ε).
LeftModuleAlgebra twist_left_module(const LeftModuleAlgebra& A, const GaugeTwist& F, QBPtr HF);
RightModuleAlgebra twist_right_module(const RightModuleAlgebra& B, const GaugeTwist& F, QBPtr HF);
/// 𝔅^{F⁻¹}: Φ_λ(F⁻¹⊗1).
LeftComoduleAlgebra twist_left_comodule(const LeftComoduleAlgebra& B, const GaugeTwist& F, QBPtr HF);
/// ^F𝔄: (1⊗F)Φ_ρ.
RightComoduleAlgebra twist_right_comodule(const RightComoduleAlgebra& A, const GaugeTwist& F, QBPtr HF);
/// ^F𝔸^{F⁻¹}, same Φ_{λ,ρ}.
BicomoduleAlgebra twist_bicomodule_algebra(const BicomoduleAlgebra& A, const GaugeTwist& F, QBPtr HF);

/// Left action plus left coaction (ordinary bialgebra H).
struct YDAlgebra
{
    LeftModuleAlgebra module;
    LeftComoduleAlgebra comodule;
};
/// (yd) plus the module-algebra and comodule-algebra axioms.
VerificationReport check_yetter_drinfeld(const YDAlgebra& A);

} // namespace qhl
