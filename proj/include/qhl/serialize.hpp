#pragma once

#include "qhl/actions.hpp"
#include "qhl/coproduct.hpp"

#include <json.hpp>

#include <string>

namespace qhl {

using json = nlohmann::json;

// Structure files. Every document carries "structure" naming its kind;
// tensors are sparse entry lists [[i, j, ..., scalar]] in flat order,
// vectors and the antipode are dense. Scalars: "p/q" over Q, a decimal
// residue over F_p, an array of "p/q" coefficients over Q(z). Keys are
// sorted, so dump() of a parsed document reproduces it byte for byte.

json to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);
json to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const json& j);
json sparse_to_json(const Tensor& t);
Tensor sparse_from_json(const FieldSpec& f, const Shape& shape, const json& j);
/// Rank 1 or 2 only.
json dense_to_json(const Tensor& t);
Tensor dense_from_json(const FieldSpec& f, const Shape& shape, const json& j);

json to_json(const AlgebraData& A);
json to_json(const QuasiBialgebra& H);
json to_json(const QuasiHopfAlgebra& H);
json to_json(const CoalgebraData& C);
/// Module and comodule structures embed their quasi-Hopf algebra.
json to_json(const BimoduleAlgebra& A, const QuasiHopfAlgebra& H);
json to_json(const BicomoduleAlgebra& U, const QuasiHopfAlgebra& H);
json to_json(const YDAlgebra& Y, const QuasiHopfAlgebra& H);
json to_json(const BicomoduleCoalgebra& C, const QuasiHopfAlgebra& H);

/// Loaders throw ParseError on malformed documents. With `validate` the
/// structure checkers run and a failure throws CheckFailed; without it the
/// caller is expected to run them.
AlgPtr algebra_from_json(const json& j);
QBPtr quasi_bialgebra_from_json(const json& j, bool validate = true);
QHPtr quasi_hopf_from_json(const json& j, bool validate = true);
CoalgebraData coalgebra_from_json(const json& j);

struct LoadedBimodule
{
    QHPtr H;
    BimoduleAlgebra A;
};
struct LoadedBicomodule
{
    QHPtr H;
    BicomoduleAlgebra U;
};
struct LoadedYD
{
    QHPtr H;
    YDAlgebra Y;
};
struct LoadedBicomoduleCoalgebra
{
    QHPtr H;
    BicomoduleCoalgebra C;
};
LoadedBimodule bimodule_from_json(const json& j, bool validate = true);
LoadedBicomodule bicomodule_from_json(const json& j, bool validate = true);
LoadedYD yd_from_json(const json& j, bool validate = true);
LoadedBicomoduleCoalgebra bicomodule_coalgebra_from_json(const json& j, bool validate = true);

/// The "structure" key, checked against the known kinds.
std::string structure_kind(const json& j);
/// Parses then re-emits through the typed loaders (unvalidated); keeps a
/// "provenance" block.
json normalize(const json& j);

/// Two-space indented, trailing newline.
std::string dump(const json& j);
json parse_document(const std::string& text);
json read_document(const std::string& path);
void write_document(const json& j, const std::string& path);

} // namespace qhl
