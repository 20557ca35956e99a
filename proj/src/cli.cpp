#include "qhl/cli.hpp"

#include "qhl/errors.hpp"
#include "qhl/serialize.hpp"
#include "qhl/suite.hpp"
#include "qhl/twisting.hpp"
#include "qhl/zoo.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace qhl {

namespace {

struct Context
{
    std::ostream& out;
    std::ostream& err;
    std::string command;
    std::uint64_t seed = 1;
    bool timing = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

json record_json(const CheckRecord& r, const std::string& prefix = {})
{
    json w = nullptr;
    if (r.witness)
        w = *r.witness;
    json j = {{"tag", prefix + r.tag}, {"status", to_string(r.status)}, {"witness", w}};
    if (!r.detail.empty())
        j["detail"] = r.detail;
    return j;
}

json report_header(const Context& c, bool passed)
{
    json j = {{"command", c.command}, {"seed", c.seed}, {"status", passed ? "pass" : "fail"}};
    if (c.timing)
        j["timing"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - c.start).count();
    return j;
}

void log_failures(const Context& c, const VerificationReport& r)
{
    for (const auto& rec : r.records()) {
        if (rec.status == Status::Pass)
            continue;
        c.err << "  " << to_string(rec.status) << " " << rec.tag;
        if (rec.witness) {
            c.err << " at (";
            for (std::size_t i = 0; i < rec.witness->size(); ++i)
                c.err << (i ? "," : "") << (*rec.witness)[i];
            c.err << ")";
        }
        if (!rec.detail.empty())
            c.err << ": " << rec.detail;
        c.err << "\n";
    }
}

int emit(const Context& c, const VerificationReport& r, json extra = json::object())
{
    json j = report_header(c, r.passed());
    j["records"] = json::array();
    for (const auto& rec : r.records())
        j["records"].push_back(record_json(rec));
    j.update(extra);
    c.out << dump(j);
    c.err << c.command << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.records().size() << " checks)\n";
    log_failures(c, r);
    return r.passed() ? 0 : 1;
}

std::string input_hash(const json& doc)
{
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << std::hash<std::string>{}(dump(doc));
    return s.str();
}

// Runs a checker, turning construction errors into failed records.
void checked(VerificationReport& r, const std::string& tag, const std::function<void()>& body)
{
    try {
        body();
    } catch (const HypothesisFailed& e) {
        r.fail(tag, std::nullopt, std::string("HypothesisFailed: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        r.fail(tag, std::nullopt, e.kind() + ": " + e.what());
    }
}

// ---- check

VerificationReport check_document(const json& doc, std::string kind)
{
    const std::string file_kind = structure_kind(doc);
    if (kind.empty())
        kind = file_kind;
    VerificationReport r("check " + kind);
    auto with_hopf = [&](const json& h) {
        checked(r, "hopf", [&] {
            auto H = quasi_hopf_from_json(h, false);
            r.merge(check_quasi_bialgebra(H->qb()), "hopf:");
            r.merge(check_quasi_hopf(*H), "hopf:");
        });
    };
    if (kind == "algebra" && file_kind == "algebra") {
        auto A = algebra_from_json(doc);
        r.merge(is_associative(*A));
        r.merge(is_unital(*A));
    } else if (kind == "quasi-bialgebra" && (file_kind == "quasi-bialgebra" || file_kind == "quasi-hopf")) {
        checked(r, "phi-invertible", [&] { r.merge(check_quasi_bialgebra(*quasi_bialgebra_from_json(doc, false))); });
    } else if (kind == "quasi-hopf" && file_kind == "quasi-hopf") {
        checked(r, "phi-invertible", [&] {
            auto H = quasi_hopf_from_json(doc, false);
            r.merge(check_quasi_bialgebra(H->qb()));
            r.merge(check_quasi_hopf(*H));
        });
    } else if (kind == "coalgebra" && file_kind == "coalgebra") {
        r.merge(check_coalgebra(coalgebra_from_json(doc)));
    } else if (kind == file_kind && kind == "bimodule-algebra") {
        with_hopf(doc.at("hopf"));
        checked(r, "load", [&] { r.merge(check_bimodule_algebra(bimodule_from_json(doc, false).A)); });
    } else if (kind == file_kind && kind == "bicomodule-algebra") {
        with_hopf(doc.at("hopf"));
        checked(r, "load", [&] { r.merge(check_bicomodule_algebra(bicomodule_from_json(doc, false).U)); });
    } else if (kind == file_kind && kind == "yd-algebra") {
        with_hopf(doc.at("hopf"));
        checked(r, "load", [&] { r.merge(check_yetter_drinfeld(yd_from_json(doc, false).Y)); });
    } else if (kind == file_kind && kind == "bicomodule-coalgebra") {
        with_hopf(doc.at("hopf"));
        checked(r, "load",
                [&] { r.merge(check_bicomodule_coalgebra(bicomodule_coalgebra_from_json(doc, false).C)); });
    } else {
        throw ParseError("a " + file_kind + " file cannot be checked as " + kind);
    }
    return r;
}

// ---- export

json export_part(const std::string& example, const std::string& part)
{
    auto H = hopf_example(example);
    if (part == "hopf")
        return to_json(*H);
    if (part == "dual")
        return to_json(dual_bimodule_algebra(H->base), *H);
    if (part == "regular")
        return to_json(regular_bicomodule(H->base), *H);
    if (part == "left")
        return to_json(as_bimodule(corpus_left_module(example)), *H);
    if (part == "right")
        return to_json(as_bimodule(corpus_right_module(example)), *H);
    if (part == "trivial-coalgebra")
        return to_json(trivial_bicomodule_coalgebra(underlying_coalgebra(H->qb()), H->base), *H);
    auto G = corpus_group(example);
    bool group_algebra = G && example.rfind("k^", 0) != 0;
    if (part == "yd" && group_algebra) {
        auto Y = conjugation_yd(*G);
        return to_json(Y, *H);
    }
    if (part == "grading-coalgebra" && group_algebra)
        return to_json(grading_bicomodule_coalgebra(*G), *H);
    throw InvalidStructure("no part '" + part + "' for " + example);
}

// ---- build

struct Inputs
{
    std::vector<json> docs;

    LoadedBimodule bimodule(std::size_t i) const { return bimodule_from_json(docs.at(i)); }
    LoadedBicomodule bicomodule(std::size_t i) const { return bicomodule_from_json(docs.at(i)); }
};

void need(const std::vector<std::string>& files, std::size_t n, const std::string& what)
{
    if (files.size() != n)
        throw ParseError(what + " takes " + std::to_string(n) + " input file(s)");
}

// The constructed algebra or coalgebra plus its structure check.
std::pair<json, VerificationReport> build(const std::string& what, const std::vector<std::string>& files)
{
    Inputs in;
    for (const auto& f : files)
        in.docs.push_back(read_document(f));
    auto product = [&](const ProductAlgebra& P) { return std::make_pair(to_json(*P.result), check_product(P)); };
    auto algebra = [&](const AlgPtr& A) {
        VerificationReport r("algebra");
        r.merge(is_associative(*A));
        r.merge(is_unital(*A));
        return std::make_pair(to_json(*A), r);
    };
    std::pair<json, VerificationReport> res;
    if (what == "smash") {
        need(files, 1, what);
        res = product(smash_product(left_part(in.bimodule(0).A)));
    } else if (what == "gsmash") {
        need(files, 2, what);
        res = product(generalized_smash(left_part(in.bimodule(0).A), in.bicomodule(1).U.left));
    } else if (what == "lr-smash") {
        need(files, 2, what);
        res = product(lr_smash(in.bimodule(0).A, in.bicomodule(1).U));
    } else if (what == "two-sided-smash") {
        need(files, 3, what);
        res = product(two_sided_smash(left_part(in.bimodule(0).A), in.bicomodule(1).U, right_part(in.bimodule(2).A)));
    } else if (what == "two-sided-crossed") {
        need(files, 3, what);
        res = product(two_sided_crossed(in.bicomodule(0).U.right, in.bimodule(1).A, in.bicomodule(2).U.left));
    } else if (what == "diagonal-crossed") {
        need(files, 2, what);
        auto m = in.bimodule(0);
        res = product(diagonal_crossed(m.A, in.bicomodule(1).U, *m.H));
    } else if (what == "double") {
        need(files, 1, what);
        res = product(quantum_double(*quasi_hopf_from_json(in.docs[0])));
    } else if (what == "lr-coproduct") {
        need(files, 1, what);
        auto D = lr_smash_coproduct(bicomodule_coalgebra_from_json(in.docs[0]).C);
        res = {to_json(D), check_coalgebra(D)};
    } else if (what == "bullet" || what == "star" || what == "diamond") {
        need(files, 2, what);
        auto m = in.bimodule(0);
        auto u = in.bicomodule(1);
        if (what == "bullet")
            res = algebra(bullet_product(lr_datum(m.A, u.U)));
        else if (what == "diamond")
            res = algebra(diamond_product(gsm_right_datum(m.A, u.U)));
        else
            res = algebra(lambda_iso(lr_datum(m.A, u.U), *m.H).to);
    } else {
        throw ParseError("unknown construction '" + what + "'");
    }
    json prov = {{"construction", what}, {"inputs", json::array()}};
    for (const auto& d : in.docs)
        prov["inputs"].push_back(input_hash(d));
    res.first["provenance"] = prov;
    return res;
}

// ---- verify-iso

VerificationReport verify_iso(const std::string& iso, const std::vector<std::string>& files, const Context& c,
                              std::size_t gauges)
{
    std::vector<json> docs;
    for (const auto& f : files)
        docs.push_back(read_document(f));
    VerificationReport r("verify-iso " + iso);
    // inputs are checked first; a broken input shows up with its own witness
    for (std::size_t i = 0; i < docs.size(); ++i)
        r.merge(check_document(docs[i], {}), "input" + std::to_string(i) + ":");
    auto M = [&](std::size_t i) { return bimodule_from_json(docs.at(i), false); };
    auto U = [&](std::size_t i) { return bicomodule_from_json(docs.at(i), false); };
    auto iso_records = [&](const std::string& tag, const AlgebraData& from, const AlgebraData& to,
                           const AlgebraIso& f) { r.merge(check_algebra_iso(from, to, f), tag + ":"); };

    checked(r, iso, [&] {
        if (iso == "phi") {
            need(files, 3, iso);
            auto a = M(0), b = M(1);
            auto u = U(2);
            auto A = left_part(a.A);
            auto B = right_part(b.A);
            auto T = tensor_bimodule_algebra(A, B);
            iso_records("phi", *lr_smash(T, u.U).result, *two_sided_smash(A, u.U, B).result, iso_phi(A, B, u.U));
            r.merge(check_nu_phi_square(A, B, u.U, *a.H));
        } else if (iso == "tau") {
            need(files, 3, iso);
            auto m = M(0);
            auto R = U(1).U.right;
            auto L = U(2).U.left;
            iso_records("tau", *lr_smash(m.A, tensor_bicomodule_algebra(R, L)).result,
                        *two_sided_crossed(R, m.A, L).result, iso_tau(m.A, R, L));
            r.merge(check_nu_tau_square(m.A, R, L, *m.H));
        } else if (iso == "nu") {
            need(files, 2, iso);
            auto m = M(0);
            auto u = U(1);
            auto nu = nu_maps(m.A, u.U, *m.H);
            iso_records("nu", *diagonal_crossed(m.A, u.U, *m.H).result, *lr_smash(m.A, u.U).result, nu);
        } else if (iso == "cocomm") {
            need(files, 1, iso);
            auto m = M(0);
            auto cc = cocommutative_iso(m.A, *m.H);
            iso_records("cocomm", *cc.lr.result, *cc.smash.result, cc.iso);
        } else if (iso == "lambda") {
            need(files, 2, iso);
            auto m = M(0);
            auto t = lambda_iso(lr_datum(m.A, U(1).U), *m.H);
            iso_records("lambda", *t.from, *t.to, t.iso);
        } else if (iso == "twist-invariance") {
            need(files, 2, iso);
            auto m = M(0);
            auto u = U(1);
            r.merge(twist_invariance(m.A, u.U, trivial_gauge(m.H->qb())), "F=1:");
            std::mt19937_64 rng(c.seed);
            for (std::size_t k = 0; k < gauges; ++k)
                r.merge(twist_invariance(m.A, u.U, random_gauge(m.H->qb(), rng)), "F" + std::to_string(k) + ":");
        } else if (iso == "iterate") {
            need(files, 2, iso);
            r.merge(iterate_check(lr_datum(M(0).A, U(1).U)));
        } else if (iso == "yd-identification") {
            need(files, 3, iso);
            auto m = M(0);
            auto y = yd_from_json(docs[1], false);
            r.merge(yd_identifications(m.A, y.Y, U(2).U));
        } else {
            throw ParseError("unknown isomorphism '" + iso + "'");
        }
    });
    return r;
}

// ---- suite

int suite(const Context& c, const std::string& example)
{
    SuiteOptions o;
    o.seed = c.seed;
    if (example != "all")
        o.examples = {example};
    auto results = run_suite(o);
    VerificationReport all("suite");
    json criteria = json::array();
    for (const auto& res : results) {
        all.merge(res.report, "c" + std::to_string(res.number) + ":");
        json cj = {{"number", res.number}, {"title", res.title}, {"status", res.report.passed() ? "pass" : "fail"}};
        if (c.timing)
            cj["seconds"] = res.seconds;
        criteria.push_back(cj);
        c.err << std::setw(3) << res.number << "  " << (res.report.passed() ? "pass" : "FAIL") << "  " << res.title
              << "\n";
    }
    return emit(c, all, {{"criteria", criteria}});
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quasi-Hopf algebra structure checker"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t seed = 1;
    bool timing = false;
    app.add_option("--seed", seed, "Seed for random gauges (QHL_SEED overrides)");
    app.add_flag("--timing", timing, "Include timings in reports");

    std::string file, kind, example, part = "hopf", output, what;
    std::vector<std::string> files;
    std::size_t gauges = 10;

    auto* check = app.add_subcommand("check", "Run the structure checker on a file");
    check->add_option("file", file)->required();
    check->add_option("--structure", kind, "Checker to run (default: the file's structure)");

    auto* exp = app.add_subcommand("export", "Write a corpus example as a structure file");
    exp->add_option("example", example)->required();
    exp->add_option("--part", part, "hopf, dual, regular, left, right, yd, trivial-coalgebra, grading-coalgebra");
    exp->add_option("-o,--output", output);

    auto* fmt = app.add_subcommand("format", "Parse a structure file and write it back canonically");
    fmt->add_option("file", file)->required();
    fmt->add_option("-o,--output", output);

    auto* bld = app.add_subcommand("build", "Build a product algebra or coproduct");
    bld->add_option("construction", what)->required();
    bld->add_option("inputs", files)->required();
    bld->add_option("-o,--output", output);

    auto* ver = app.add_subcommand("verify-iso", "Verify an isomorphism or identity");
    ver->add_option("iso", what)->required();
    ver->add_option("inputs", files)->required();
    ver->add_option("--gauges", gauges, "Random gauges for twist-invariance");

    auto* sui = app.add_subcommand("suite", "Run the acceptance matrix");
    std::string sel = "all";
    sui->add_option("--example", sel, "all or a corpus name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (const char* env = std::getenv("QHL_SEED")) {
        try {
            seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "QHL_SEED must be an integer\n";
            return 2;
        }
    }

    std::string command;
    for (int i = 1; i < argc; ++i)
        command += (i > 1 ? " " : "") + std::string(argv[i]);
    Context c{out, err, command, seed, timing};

    try {
        if (*check)
            return emit(c, check_document(read_document(file), kind));
        if (*exp || *fmt) {
            json doc = *exp ? export_part(example, part) : normalize(read_document(file));
            if (output.empty()) {
                out << dump(doc);
                return 0;
            }
            write_document(doc, output);
            VerificationReport r("write");
            r.pass("written", output);
            return emit(c, r, {{"output", output}});
        }
        if (*bld) {
            auto [doc, r] = build(what, files);
            if (output.empty() && r.passed()) {
                out << dump(doc);
                return 0;
            }
            if (!output.empty())
                write_document(doc, output);
            return emit(c, r, {{"output", output}, {"dim", doc.at("dim")}});
        }
        if (*ver)
            return emit(c, verify_iso(what, files, c, gauges));
        if (*sui)
            return suite(c, sel);
    } catch (const CheckFailed& e) {
        VerificationReport r;
        r.fail("input", std::nullopt, e.what());
        return emit(c, r);
    } catch (const IsoCheckFailed& e) {
        VerificationReport r;
        r.fail("iso", std::nullopt, e.what());
        return emit(c, r);
    } catch (const Error& e) {
        json j = {{"command", command}, {"status", "error"}, {"error", {{"kind", e.kind()}, {"message", e.what()}}}};
        out << dump(j);
        err << e.kind() << ": " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace qhl
