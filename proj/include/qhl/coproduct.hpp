#pragma once

#include "qhl/quasihopf.hpp"

namespace qhl {

struct CoalgebraData
{
    Tensor comult; // [N,N,N]
    Tensor counit; // [N]
    std::string name;

    std::size_t dim() const { return counit.dim(0); }
    const FieldSpec& field() const { return counit.field(); }
};

/// Coassociativity and both counit laws.
VerificationReport check_coalgebra(const CoalgebraData& C);

/// e_i ↦ e_i⊗e_i.
CoalgebraData grouplike_coalgebra(const FieldSpec& f, std::size_t n);
/// Δ(e_ij) = Σ_k e_ik⊗e_kj, ε(e_ij) = δ_ij; basis index i*n+j.
CoalgebraData matrix_coalgebra(const FieldSpec& f, std::size_t n);
/// The coalgebra underlying a quasi-bialgebra.
CoalgebraData underlying_coalgebra(const QuasiBialgebra& H);

/// Coalgebra with a left coaction coact_l[c,h,c'] and a right coaction
/// coact_r[c,c',h] over an ordinary bialgebra.
struct BicomoduleCoalgebra
{
    CoalgebraData coalg;
    QBPtr H;
    Tensor coact_l;
    Tensor coact_r;
};

/// (lc), (rc), (bc), (lca), (rca) with the counit conditions.
VerificationReport check_bicomodule_coalgebra(const BicomoduleCoalgebra& C);

/// c ↦ 1⊗c and c ↦ c⊗1.
BicomoduleCoalgebra trivial_bicomodule_coalgebra(CoalgebraData C, QBPtr H);
/// H over itself with both coactions Δ (a bicomodule, but the comodule
/// coalgebra axioms fail unless H is trivial).
BicomoduleCoalgebra regular_bicomodule_coalgebra(QBPtr H);

/// Δ(c♮h) = (c₁⁽⁰⁾♮c₂⁽⁻¹⁾h₁)⊗(c₂⁽⁰⁾♮h₂c₁⁽¹⁾), ε = ε_C⊗ε_H, on C⊗H.
CoalgebraData lr_smash_coproduct(const BicomoduleCoalgebra& C);
/// Δ(c⊗h) = (c₁⊗c₂⁽⁻¹⁾h₁)⊗(c₂⁽⁰⁾⊗h₂), ignoring the right coaction.
CoalgebraData molnar_smash_coproduct(const BicomoduleCoalgebra& C);

} // namespace qhl
