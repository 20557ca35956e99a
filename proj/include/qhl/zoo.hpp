#pragma once

#include "qhl/actions.hpp"
#include "qhl/coproduct.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qhl {

/// Finite group by its Cayley table; validated on construction.
struct Group
{
    std::size_t order = 0;
    std::vector<std::size_t> table; // table[a * order + b] = ab
    std::vector<std::size_t> inverse;
    std::size_t identity = 0;
    std::string name;

    std::size_t mul(std::size_t a, std::size_t b) const { return table[a * order + b]; }
};

Group make_group(std::size_t order, std::vector<std::size_t> table, std::string name);
Group cyclic_group(std::size_t n);
Group direct_product(const Group& g, const Group& h);
Group symmetric_group_3();
Group dihedral_group_4();

/// kG with Δ(g) = g⊗g, S(g) = g⁻¹.
QHPtr group_algebra(const Group& G, const FieldSpec& f = FieldSpec::rationals());

/// ω(a,b,c) as a g×g×g table of field units.
using Cocycle = std::vector<Scalar>;
Cocycle trivial_cocycle(const Group& G, const FieldSpec& f);
/// ω(a,b,c) = ζ^{k a (b + c - (b+c mod n)) / n} on Z_n, ζ a primitive n-th
/// root of unity (−1 for n = 2, so rationals suffice there).
Cocycle cyclic_cocycle(std::size_t n, std::size_t k, const FieldSpec& f);
/// The coboundary of a 2-cochain μ: ω(a,b,c) = μ(b,c) μ(a,bc) / (μ(ab,c) μ(a,b)).
Cocycle coboundary(const Group& G, const std::vector<Scalar>& mu);
/// First violated (a,b,c,d) of the cocycle identity, if any.
std::optional<std::array<std::size_t, 4>> cocycle_violation(const Group& G, const Cocycle& w);

/// Φ_ω = Σ ω(a,b,c) e_a⊗e_b⊗e_c on k^G (no checks; for perturbation tests).
Tensor dual_group_phi(const Group& G, const Cocycle& w);
/// k^G with reassociator Φ_ω; α = 1 and β is solved for, then verified.
/// Throws NotACocycle, NoQuasiHopfStructure.
QHPtr dual_group_algebra(const Group& G, const Cocycle& w, std::string name = {});
QHPtr dual_group_algebra(const Group& G, const FieldSpec& f = FieldSpec::rationals());

/// Given S and α, solves the linear condition X¹βS(X²)αX³ = 1 for β.
std::optional<Tensor> solve_beta(const QuasiBialgebra& H, const Tensor& antipode, const Tensor& alpha);

/// Sweedler's 4-dimensional Hopf algebra, basis 1, g, x, gx.
QHPtr sweedler_h4(const FieldSpec& f = FieldSpec::rationals());

/// Fixed non-cocommutative gauge on H₄ used by the twisted examples.
GaugeTwist h4_gauge(const QuasiHopfAlgebra& H4);

/// k[u]/(u²) over k^G with reassociator: e_g·u = δ(g,l)u, u·e_g = δ(g,r)u.
/// Every product of three non-units vanishes, so any 3-cocycle works.
BimoduleAlgebra graded_dual_numbers(const QHPtr& H, std::size_t l, std::size_t r);

/// kG over itself: h·a = hah⁻¹, λ(a) = a⊗a.
YDAlgebra conjugation_yd(const Group& G, const FieldSpec& f = FieldSpec::rationals());

/// k^G as a coalgebra (Δ(e_g) = Σ e_a⊗e_{a⁻¹g}) graded on both sides over
/// kG: e_g ↦ g⊗e_g and e_g ↦ e_g⊗g.
BicomoduleCoalgebra grading_bicomodule_coalgebra(const Group& G, const FieldSpec& f = FieldSpec::rationals());

/// Named quasi-Hopf examples of the corpus, in a stable order.
struct NamedHopf
{
    std::string name;
    std::function<QHPtr()> make;
};
const std::vector<NamedHopf>& hopf_corpus();
/// Also accepts "sweedler" for H4.
QHPtr hopf_example(const std::string& name);
/// The group behind kG and k^G examples.
std::optional<Group> corpus_group(const std::string& name);

/// H over itself: H as bicomodule algebra (Δ, Φ), the adjoint module
/// algebras when Φ is trivial, and H*.
struct CanonicalStructures
{
    BicomoduleAlgebra regular;
    std::optional<LeftModuleAlgebra> left;
    std::optional<RightModuleAlgebra> right;
    BimoduleAlgebra dual;
};
CanonicalStructures canonical_structures(const QHPtr& H);

/// Left and right module algebras for a named example. One side of H* for
/// Hopf examples, graded dual numbers over k^G_ω, the twisted adjoint
/// action over H4_F.
LeftModuleAlgebra corpus_left_module(const std::string& name);
RightModuleAlgebra corpus_right_module(const std::string& name);

} // namespace qhl
