#pragma once

#include "qhl/products.hpp"

#include <optional>

namespace qhl {

// Twisting data live over ordinary bialgebras (Φ = 1⊗1⊗1). Tensor layouts
// follow actions.hpp: act[h,a,a'], act_r[a,h,a'], coact[a,h,a'] (left),
// coact_r[a,a',h] (right).

struct LeftTwistingDatum
{
    AlgPtr carrier;
    QBPtr H;
    Tensor act;
    Tensor coact;
};

struct RightTwistingDatum
{
    AlgPtr carrier;
    QBPtr H;
    Tensor act_r;
    Tensor coact_r;
};

struct LRTwistingDatum
{
    AlgPtr carrier;
    QBPtr H;
    Tensor act_l;
    Tensor act_r;
    Tensor coact_l;
    Tensor coact_r;
};

/// Module/comodule algebra axioms plus (long).
VerificationReport check_datum(const LeftTwistingDatum& d);
/// Right analogues.
VerificationReport check_datum(const RightTwistingDatum& d);
/// Bimodule and bicomodule algebra axioms plus (a1)-(a4).
VerificationReport check_datum(const LRTwistingDatum& d);

LeftTwistingDatum left_datum(const LRTwistingDatum& d);
RightTwistingDatum right_datum(const LRTwistingDatum& d);
/// Trivial right action (via ε) and coaction (a ↦ a⊗1).
LRTwistingDatum as_lr_datum(const LeftTwistingDatum& d);
LRTwistingDatum as_lr_datum(const RightTwistingDatum& d);

/// 𝒜⊗𝔸 with h·(φ⊗u)·h' = h·φ·h' ⊗ u and the coactions of 𝔸 on the right
/// tensor factor (Hopf case).
LRTwistingDatum lr_datum(const BimoduleAlgebra& M, const BicomoduleAlgebra& U);
/// 𝒜⋉𝔸 with (φ⋉u)·h = φ·h ⋉ u and φ⋉u ↦ (φ⋉u₍₀₎)⊗u₍₁₎.
RightTwistingDatum gsm_right_datum(const BimoduleAlgebra& M, const BicomoduleAlgebra& U);

/// a⋆b = a₍₀₎(a₍₋₁₎·b)
AlgPtr star_product(const LeftTwistingDatum& d);
/// a◇b = (a·b₍₁₎)b₍₀₎
AlgPtr diamond_product(const RightTwistingDatum& d);
/// a•b = (a₍₀₎·b₍₁₎)(a₍₋₁₎·b₍₀₎)
AlgPtr bullet_product(const LRTwistingDatum& d);
/// (c1)-(c4) for the • product.
VerificationReport check_bullet_consequences(const LRTwistingDatum& d);

/// ⋆ then ◇ and ◇ then ⋆, each compared entrywise with •.
VerificationReport iterate_check(const LRTwistingDatum& d);

struct TwistedIso
{
    AlgPtr from;
    AlgPtr to;
    AlgebraIso iso;
    LeftTwistingDatum induced;
};

/// (A,•) → (A,⋆) over H⊗H^op, λ(a) = a₍₀₎·S⁻¹(a₍₁₎), λ⁻¹(a) = a₍₀₎·a₍₁₎.
/// Throws HypothesisFailed (induced datum invalid), IsoCheckFailed.
TwistedIso lambda_iso(const LRTwistingDatum& d, const QuasiHopfAlgebra& H);
/// (A,◇) → (A,⋆) over H^op with π(h⊗a) = a·h, ψ(a) = S⁻¹(a₍₁₎)⊗a₍₀₎.
TwistedIso right_to_left_iso(const RightTwistingDatum& d, const QuasiHopfAlgebra& H);

/// Subspace closed under the product: echelon basis rows plus structure
/// constants in that basis.
struct Subalgebra
{
    Tensor inclusion; // [k, n]
    AlgPtr alg;       // null when k = 0 or closure failed

    std::size_t dim() const { return alg ? alg->dim() : 0; }
};

struct InvariantsResult
{
    Subalgebra invariants;   // A^H
    Subalgebra coinvariants; // A^{co(H)}
    std::optional<LeftComoduleAlgebra> invariants_comodule;
    std::optional<LeftModuleAlgebra> coinvariants_module;
    bool commute = false;
    std::optional<Tensor> lambda; // [k_co·k_inv, n], λ(a⊗b) = ab
    bool injective = false;
    bool surjective = false;
    VerificationReport report;
};

InvariantsResult invariants_coinvariants(const LeftTwistingDatum& d);

} // namespace qhl
