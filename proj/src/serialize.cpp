#include "qhl/serialize.hpp"

#include "qhl/errors.hpp"

#include <fstream>
#include <sstream>

namespace qhl {

namespace {

template <class F>
auto parsing(const char* what, F&& body)
{
    try {
        return body();
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

void expect_kind(const json& j, std::initializer_list<const char*> kinds)
{
    const std::string k = structure_kind(j);
    for (const char* c : kinds)
        if (k == c)
            return;
    throw ParseError("unexpected structure '" + k + "'");
}

std::size_t dim_of(const json& j)
{
    auto n = j.at("dim").get<std::size_t>();
    if (n == 0)
        throw ParseError("dim must be positive");
    return n;
}

json algebra_fields(const AlgebraData& A, const std::string& name)
{
    return {{"name", name},
            {"field", to_json(A.field())},
            {"dim", A.dim()},
            {"unit", dense_to_json(A.unit())},
            {"mult", sparse_to_json(A.mult())}};
}

AlgPtr algebra_fields_from(const json& j)
{
    FieldSpec f = field_from_json(j.at("field"));
    const std::size_t n = dim_of(j);
    return make_algebra(sparse_from_json(f, {n, n, n}, j.at("mult")), dense_from_json(f, {n}, j.at("unit")),
                        j.at("name").get<std::string>());
}

json quasi_bialgebra_fields(const QuasiBialgebra& H, const std::string& name)
{
    json j = algebra_fields(*H.alg, name);
    j["comult"] = sparse_to_json(H.comult);
    j["counit"] = dense_to_json(H.counit);
    j["phi"] = sparse_to_json(H.phi);
    return j;
}

const json& section(const json& j, const char* key, const char* side)
{
    return j.at(key).at(side);
}

} // namespace

json to_json(const FieldSpec& f)
{
    switch (f.kind()) {
    case FieldSpec::Kind::Rationals: return {{"kind", "Q"}};
    case FieldSpec::Kind::PrimeField: return {{"kind", "Fp"}, {"p", f.parameter()}};
    case FieldSpec::Kind::Cyclotomic: return {{"kind", "Cyclotomic"}, {"n", f.parameter()}};
    }
    return {};
}

FieldSpec field_from_json(const json& j)
{
    return parsing("field", [&] {
        const std::string k = j.at("kind").get<std::string>();
        if (k == "Q")
            return FieldSpec::rationals();
        if (k == "Fp")
            return FieldSpec::prime(j.at("p").get<std::uint32_t>());
        if (k == "Cyclotomic")
            return FieldSpec::cyclotomic(j.at("n").get<std::uint32_t>());
        throw ParseError("unknown field kind '" + k + "'");
    });
}

json to_json(const Scalar& s)
{
    if (s.field().kind() != FieldSpec::Kind::Cyclotomic)
        return s.to_string();
    json a = json::array();
    for (const auto& c : s.coefficients())
        a.push_back(c.get_str());
    return a;
}

Scalar scalar_from_json(const FieldSpec& f, const json& j)
{
    if (f.kind() == FieldSpec::Kind::Cyclotomic) {
        if (!j.is_array() || j.size() != f.degree())
            throw ParseError("cyclotomic scalars are arrays of " + std::to_string(f.degree()) + " coefficients");
        std::vector<mpq_class> c;
        for (const auto& x : j) {
            if (!x.is_string())
                throw ParseError("coefficients are strings");
            c.push_back(Scalar::parse(FieldSpec::rationals(), x.get<std::string>()).rational());
        }
        return Scalar::from_coefficients(f, std::move(c));
    }
    if (!j.is_string())
        throw ParseError("scalars are strings");
    return Scalar::parse(f, j.get<std::string>());
}

json sparse_to_json(const Tensor& t)
{
    json a = json::array();
    for (const auto& e : t.entries()) {
        json row = json::array();
        for (auto i : t.unflat(e.flat))
            row.push_back(i);
        row.push_back(to_json(e.value));
        a.push_back(std::move(row));
    }
    return a;
}

Tensor sparse_from_json(const FieldSpec& f, const Shape& shape, const json& j)
{
    return parsing("tensor", [&] {
        if (!j.is_array())
            throw ParseError("tensor entries must be an array");
        TensorBuilder b(f, shape);
        for (const auto& row : j) {
            if (!row.is_array() || row.size() != shape.size() + 1)
                throw ParseError("entry " + row.dump() + " needs " + std::to_string(shape.size()) + " indices");
            Index idx;
            for (std::size_t k = 0; k < shape.size(); ++k) {
                auto i = row[k].get<std::size_t>();
                if (i >= shape[k])
                    throw ParseError("index out of range in " + row.dump());
                idx.push_back(i);
            }
            b.add(idx, scalar_from_json(f, row.back()));
        }
        return b.build();
    });
}

json dense_to_json(const Tensor& t)
{
    json a = json::array();
    if (t.rank() == 1) {
        for (std::size_t i = 0; i < t.dim(0); ++i)
            a.push_back(to_json(t.at({i})));
        return a;
    }
    if (t.rank() != 2)
        throw ShapeMismatch("dense output is for vectors and matrices");
    for (std::size_t i = 0; i < t.dim(0); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < t.dim(1); ++k)
            row.push_back(to_json(t.at({i, k})));
        a.push_back(std::move(row));
    }
    return a;
}

Tensor dense_from_json(const FieldSpec& f, const Shape& shape, const json& j)
{
    return parsing("dense tensor", [&] {
        TensorBuilder b(f, shape);
        if (!j.is_array() || j.size() != shape.at(0))
            throw ParseError("expected " + std::to_string(shape[0]) + " rows");
        for (std::size_t i = 0; i < shape[0]; ++i) {
            if (shape.size() == 1) {
                b.add(i, scalar_from_json(f, j[i]));
                continue;
            }
            if (!j[i].is_array() || j[i].size() != shape[1])
                throw ParseError("ragged matrix");
            for (std::size_t k = 0; k < shape[1]; ++k)
                b.add({i, k}, scalar_from_json(f, j[i][k]));
        }
        return b.build();
    });
}

json to_json(const AlgebraData& A)
{
    json j = algebra_fields(A, A.name());
    j["structure"] = "algebra";
    return j;
}

json to_json(const QuasiBialgebra& H)
{
    json j = quasi_bialgebra_fields(H, H.name);
    j["structure"] = "quasi-bialgebra";
    return j;
}

json to_json(const QuasiHopfAlgebra& H)
{
    json j = quasi_bialgebra_fields(H.qb(), H.name);
    j["structure"] = "quasi-hopf";
    j["antipode"] = dense_to_json(H.antipode);
    j["alpha"] = dense_to_json(H.alpha);
    j["beta"] = dense_to_json(H.beta);
    return j;
}

json to_json(const CoalgebraData& C)
{
    return {{"structure", "coalgebra"},
            {"name", C.name},
            {"field", to_json(C.field())},
            {"dim", C.dim()},
            {"comult", sparse_to_json(C.comult)},
            {"counit", dense_to_json(C.counit)}};
}

json to_json(const BimoduleAlgebra& A, const QuasiHopfAlgebra& H)
{
    if (!same_structure(A.H, H.base))
        throw StructureMismatch("bimodule algebra is not over " + H.name);
    return {{"structure", "bimodule-algebra"},
            {"carrier", to_json(*A.carrier)},
            {"hopf", to_json(H)},
            {"actions", {{"left", sparse_to_json(A.act_l)}, {"right", sparse_to_json(A.act_r)}}}};
}

json to_json(const BicomoduleAlgebra& U, const QuasiHopfAlgebra& H)
{
    if (!same_structure(U.H(), H.base))
        throw StructureMismatch("bicomodule algebra is not over " + H.name);
    return {{"structure", "bicomodule-algebra"},
            {"carrier", to_json(*U.carrier())},
            {"hopf", to_json(H)},
            {"coactions", {{"left", sparse_to_json(U.left.lam)}, {"right", sparse_to_json(U.right.rho)}}},
            {"reassociators",
             {{"left", sparse_to_json(U.left.phi)},
              {"right", sparse_to_json(U.right.phi)},
              {"mixed", sparse_to_json(U.phi_lr)}}}};
}

json to_json(const YDAlgebra& Y, const QuasiHopfAlgebra& H)
{
    if (!same_structure(Y.module.H, H.base))
        throw StructureMismatch("Yetter-Drinfeld algebra is not over " + H.name);
    return {{"structure", "yd-algebra"},
            {"carrier", to_json(*Y.module.carrier)},
            {"hopf", to_json(H)},
            {"actions", {{"left", sparse_to_json(Y.module.act)}}},
            {"coactions", {{"left", sparse_to_json(Y.comodule.lam)}}},
            {"reassociators", {{"left", sparse_to_json(Y.comodule.phi)}}}};
}

json to_json(const BicomoduleCoalgebra& C, const QuasiHopfAlgebra& H)
{
    if (!same_structure(C.H, H.base))
        throw StructureMismatch("bicomodule coalgebra is not over " + H.name);
    return {{"structure", "bicomodule-coalgebra"},
            {"coalgebra", to_json(C.coalg)},
            {"hopf", to_json(H)},
            {"coactions", {{"left", sparse_to_json(C.coact_l)}, {"right", sparse_to_json(C.coact_r)}}}};
}

std::string structure_kind(const json& j)
{
    static const char* const kinds[] = {"algebra",          "quasi-bialgebra",    "quasi-hopf",
                                        "coalgebra",        "bimodule-algebra",   "bicomodule-algebra",
                                        "yd-algebra",       "bicomodule-coalgebra"};
    if (!j.is_object() || !j.contains("structure") || !j["structure"].is_string())
        throw ParseError("document has no \"structure\" key");
    auto k = j["structure"].get<std::string>();
    for (const char* c : kinds)
        if (k == c)
            return k;
    throw ParseError("unknown structure '" + k + "'");
}

AlgPtr algebra_from_json(const json& j)
{
    expect_kind(j, {"algebra"});
    return parsing("algebra", [&] { return algebra_fields_from(j); });
}

QBPtr quasi_bialgebra_from_json(const json& j, bool validate)
{
    expect_kind(j, {"quasi-bialgebra", "quasi-hopf"});
    return parsing("quasi-bialgebra", [&] {
        AlgPtr A = algebra_fields_from(j);
        FieldSpec f = A->field();
        const std::size_t n = A->dim();
        return make_quasi_bialgebra(A, sparse_from_json(f, {n, n, n}, j.at("comult")),
                                    dense_from_json(f, {n}, j.at("counit")), sparse_from_json(f, {n, n, n}, j.at("phi")),
                                    std::nullopt, A->name(), validate);
    });
}

QHPtr quasi_hopf_from_json(const json& j, bool validate)
{
    expect_kind(j, {"quasi-hopf"});
    QBPtr base = quasi_bialgebra_from_json(j, validate);
    return parsing("quasi-hopf", [&] {
        FieldSpec f = base->field();
        const std::size_t n = base->dim();
        return make_quasi_hopf(base, dense_from_json(f, {n, n}, j.at("antipode")), dense_from_json(f, {n}, j.at("alpha")),
                               dense_from_json(f, {n}, j.at("beta")), base->name, validate);
    });
}

CoalgebraData coalgebra_from_json(const json& j)
{
    expect_kind(j, {"coalgebra"});
    return parsing("coalgebra", [&] {
        FieldSpec f = field_from_json(j.at("field"));
        const std::size_t n = dim_of(j);
        return CoalgebraData{sparse_from_json(f, {n, n, n}, j.at("comult")), dense_from_json(f, {n}, j.at("counit")),
                             j.at("name").get<std::string>()};
    });
}

LoadedBimodule bimodule_from_json(const json& j, bool validate)
{
    expect_kind(j, {"bimodule-algebra"});
    return parsing("bimodule algebra", [&] {
        QHPtr H = quasi_hopf_from_json(j.at("hopf"), validate);
        AlgPtr C = algebra_from_json(j.at("carrier"));
        const std::size_t n = C->dim(), d = H->dim();
        FieldSpec f = C->field();
        auto A = make_bimodule_algebra(C, H->base, sparse_from_json(f, {d, n, n}, section(j, "actions", "left")),
                                       sparse_from_json(f, {n, d, n}, section(j, "actions", "right")), validate);
        return LoadedBimodule{H, std::move(A)};
    });
}

LoadedBicomodule bicomodule_from_json(const json& j, bool validate)
{
    expect_kind(j, {"bicomodule-algebra"});
    return parsing("bicomodule algebra", [&] {
        QHPtr H = quasi_hopf_from_json(j.at("hopf"), validate);
        AlgPtr C = algebra_from_json(j.at("carrier"));
        const std::size_t n = C->dim(), d = H->dim();
        FieldSpec f = C->field();
        auto L = make_left_comodule_algebra(C, H->base, sparse_from_json(f, {n, d, n}, section(j, "coactions", "left")),
                                            sparse_from_json(f, {d, d, n}, section(j, "reassociators", "left")),
                                            validate);
        auto R = make_right_comodule_algebra(C, H->base, sparse_from_json(f, {n, n, d}, section(j, "coactions", "right")),
                                             sparse_from_json(f, {n, d, d}, section(j, "reassociators", "right")),
                                             validate);
        auto U = make_bicomodule_algebra(std::move(L), std::move(R),
                                         sparse_from_json(f, {d, n, d}, section(j, "reassociators", "mixed")), validate);
        return LoadedBicomodule{H, std::move(U)};
    });
}

LoadedYD yd_from_json(const json& j, bool validate)
{
    expect_kind(j, {"yd-algebra"});
    return parsing("Yetter-Drinfeld algebra", [&] {
        QHPtr H = quasi_hopf_from_json(j.at("hopf"), validate);
        AlgPtr C = algebra_from_json(j.at("carrier"));
        const std::size_t n = C->dim(), d = H->dim();
        FieldSpec f = C->field();
        auto M = make_left_module_algebra(C, H->base, sparse_from_json(f, {d, n, n}, section(j, "actions", "left")),
                                          validate);
        auto L = make_left_comodule_algebra(C, H->base, sparse_from_json(f, {n, d, n}, section(j, "coactions", "left")),
                                            sparse_from_json(f, {d, d, n}, section(j, "reassociators", "left")),
                                            validate);
        YDAlgebra Y{std::move(M), std::move(L)};
        if (validate)
            require_passed(check_yetter_drinfeld(Y), "Yetter-Drinfeld algebra " + C->name());
        return LoadedYD{H, std::move(Y)};
    });
}

LoadedBicomoduleCoalgebra bicomodule_coalgebra_from_json(const json& j, bool validate)
{
    expect_kind(j, {"bicomodule-coalgebra"});
    return parsing("bicomodule coalgebra", [&] {
        QHPtr H = quasi_hopf_from_json(j.at("hopf"), validate);
        CoalgebraData C = coalgebra_from_json(j.at("coalgebra"));
        const std::size_t n = C.dim(), d = H->dim();
        FieldSpec f = C.field();
        BicomoduleCoalgebra B{C, H->base, sparse_from_json(f, {n, d, n}, section(j, "coactions", "left")),
                              sparse_from_json(f, {n, n, d}, section(j, "coactions", "right"))};
        if (validate)
            require_passed(check_bicomodule_coalgebra(B), "bicomodule coalgebra " + C.name);
        return LoadedBicomoduleCoalgebra{H, std::move(B)};
    });
}

json normalize(const json& j)
{
    const std::string k = structure_kind(j);
    json out;
    if (k == "algebra")
        out = to_json(*algebra_from_json(j));
    else if (k == "quasi-bialgebra")
        out = to_json(*quasi_bialgebra_from_json(j, false));
    else if (k == "quasi-hopf")
        out = to_json(*quasi_hopf_from_json(j, false));
    else if (k == "coalgebra")
        out = to_json(coalgebra_from_json(j));
    else if (k == "bimodule-algebra") {
        auto m = bimodule_from_json(j, false);
        out = to_json(m.A, *m.H);
    } else if (k == "bicomodule-algebra") {
        auto u = bicomodule_from_json(j, false);
        out = to_json(u.U, *u.H);
    } else if (k == "yd-algebra") {
        auto y = yd_from_json(j, false);
        out = to_json(y.Y, *y.H);
    } else {
        auto c = bicomodule_coalgebra_from_json(j, false);
        out = to_json(c.C, *c.H);
    }
    if (j.contains("provenance"))
        out["provenance"] = j["provenance"];
    return out;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

json parse_document(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

json read_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

void write_document(const json& j, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write " + path);
    out << dump(j);
}

} // namespace qhl
