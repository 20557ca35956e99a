#pragma once

#include "qhl/legs.hpp"
#include "qhl/report.hpp"

#include <memory>
#include <optional>
#include <random>
#include <string>

namespace qhl {

/// (H, Δ, ε, Φ). comult[i,a,b] is the coefficient of e_a ⊗ e_b in Δ(e_i);
/// phi and phi_inv are elements of H ⊗ H ⊗ H.
struct QuasiBialgebra
{
    AlgPtr alg;
    Tensor comult;
    Tensor counit;
    Tensor phi;
    Tensor phi_inv;
    std::string name;

    std::size_t dim() const { return alg->dim(); }
    const FieldSpec& field() const { return alg->field(); }
    std::vector<AlgPtr> legs(std::size_t k) const { return std::vector<AlgPtr>(k, alg); }
    const Tensor& unit() const { return alg->unit(); }

    Elem Phi() const { return Elem::constant(phi, legs(3)); }
    Elem Phi_inv() const { return Elem::constant(phi_inv, legs(3)); }
    /// The family h -> Δ(h) over basis h.
    Elem delta_family() const { return Elem::family(comult, 1, legs(2)); }
    /// Δ^cop as a map tensor.
    Tensor comult_cop() const { return comult.permute({0, 2, 1}); }
    bool phi_is_trivial() const;
};

using QBPtr = std::shared_ptr<const QuasiBialgebra>;

/// Same pointer, or equal structure tensors.
bool same_structure(const QBPtr& a, const QBPtr& b);

/// Builds and validates (unless `validate` is false, for deliberately broken
/// test inputs). Φ⁻¹ is computed when absent; both-sided inverse checked.
QBPtr make_quasi_bialgebra(AlgPtr alg, Tensor comult, Tensor counit, Tensor phi,
                           std::optional<Tensor> phi_inv = std::nullopt, std::string name = {},
                           bool validate = true);

VerificationReport check_quasi_bialgebra(const QuasiBialgebra& H);

/// Quasi-bialgebra plus antipode data. antipode[i,j] is the coefficient of
/// e_j in S(e_i); S must be bijective and S⁻¹ is stored.
struct QuasiHopfAlgebra
{
    QBPtr base;
    Tensor antipode;
    Tensor antipode_inv;
    Tensor alpha;
    Tensor beta;
    std::string name;

    const QuasiBialgebra& qb() const { return *base; }
    std::size_t dim() const { return base->dim(); }
    const FieldSpec& field() const { return base->field(); }
    const AlgPtr& alg() const { return base->alg; }
    std::vector<AlgPtr> legs(std::size_t k) const { return base->legs(k); }
};

using QHPtr = std::shared_ptr<const QuasiHopfAlgebra>;

QHPtr make_quasi_hopf(QBPtr base, Tensor antipode, Tensor alpha, Tensor beta, std::string name = {},
                      bool validate = true);

VerificationReport check_quasi_hopf(const QuasiHopfAlgebra& H);

bool is_cocommutative(const QuasiBialgebra& H);

/// Invertible F ∈ H ⊗ H with (ε⊗id)(F) = (id⊗ε)(F) = 1.
struct GaugeTwist
{
    Tensor f;
    Tensor f_inv;
};

/// Validates normalization and invertibility; throws InvalidGauge.
GaugeTwist make_gauge(const QuasiBialgebra& H, Tensor f);
GaugeTwist trivial_gauge(const QuasiBialgebra& H);
/// F⁻¹ regarded as a gauge on H_F; twisting H_F by it gives back H.
GaugeTwist inverse_gauge(const GaugeTwist& F);
/// Sparse small-integer perturbation of 1⊗1, ε-normalized, rejected
/// until invertible and nontrivial.
GaugeTwist random_gauge(const QuasiBialgebra& H, std::mt19937_64& rng);

QBPtr twist(const QuasiBialgebra& H, const GaugeTwist& F, bool validate = true);
QHPtr twist(const QuasiHopfAlgebra& H, const GaugeTwist& F, bool validate = true);

/// The Drinfeld twist with its ingredients.
struct DrinfeldTwist
{
    Tensor A, B;        // in H^{⊗4}
    Tensor gamma, delta; // in H ⊗ H
    Tensor f, f_inv;     // in H ⊗ H
};

/// Evaluates the displayed formulas; asserts f f⁻¹ = f⁻¹ f = 1 and
/// f Δ(S(h)) f⁻¹ = (S⊗S)Δ^cop(h) for all basis h (InternalInconsistency).
DrinfeldTwist drinfeld_twist_f(const QuasiHopfAlgebra& H);
/// The (ca) identity as a report (witness = (h, a, b)).
VerificationReport check_drinfeld_twist(const QuasiHopfAlgebra& H, const DrinfeldTwist& d);

/// Ordinary bialgebra constructions used by the twisting data.
QBPtr opposite_bialgebra(const QuasiBialgebra& H);
QBPtr tensor_bialgebra(const QuasiBialgebra& H, const QuasiBialgebra& K);

} // namespace qhl
