#include <doctest.h>

#include "qhl/cli.hpp"
#include "qhl/errors.hpp"
#include "qhl/serialize.hpp"
#include "qhl/zoo.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace qhl;
namespace fs = std::filesystem;

namespace {

struct Run
{
    int code;
    std::string out;
    json report;
};

Run qhl_run(std::vector<std::string> args)
{
    args.insert(args.begin(), "qhl");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(int(argv.size()), argv.data(), out, err);
    json j;
    try {
        j = json::parse(out.str());
    } catch (const json::exception&) {
    }
    return {code, out.str(), j};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir
{
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("qhl_cli_" + std::to_string(::getpid())))
    {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& f) const { return (path / f).string(); }
};

const CheckRecord* first_fail(const json& report)
{
    static CheckRecord rec;
    for (const auto& r : report.at("records"))
        if (r.at("status") == "fail") {
            rec.tag = r.at("tag");
            rec.witness.reset();
            if (!r.at("witness").is_null())
                rec.witness = r.at("witness").get<Index>();
            return &rec;
        }
    return nullptr;
}

} // namespace

TEST_CASE("scalars and fields round-trip")
{
    auto Q = FieldSpec::rationals();
    CHECK(to_json(Scalar(Q, mpq_class(-3, 4))) == "-3/4");
    CHECK(scalar_from_json(Q, "6/8") == Scalar(Q, mpq_class(3, 4)));
    auto F7 = FieldSpec::prime(7);
    CHECK(scalar_from_json(F7, "10") == Scalar(F7, 3L));
    auto C3 = FieldSpec::cyclotomic(3);
    Scalar z = Scalar::root_of_unity(C3);
    CHECK(scalar_from_json(C3, to_json(z * z)) == z * z);
    CHECK_THROWS_AS(scalar_from_json(C3, "1"), ParseError);
    CHECK(field_from_json(to_json(C3)) == C3);
    CHECK_THROWS_AS(field_from_json(json{{"kind", "R"}}), ParseError);
}

TEST_CASE("structure documents round-trip byte for byte")
{
    for (const char* name : {"kZ2", "kS3", "H4", "k^Z3_omega", "H4_F"}) {
        auto H = hopf_example(name);
        for (const json& doc : {to_json(*H), to_json(dual_bimodule_algebra(H->base), *H),
                                to_json(regular_bicomodule(H->base), *H)}) {
            std::string text = dump(doc);
            CHECK_MESSAGE(dump(normalize(parse_document(text))) == text, name);
        }
    }
    auto F5 = group_algebra(cyclic_group(3), FieldSpec::prime(5));
    std::string text = dump(to_json(*F5));
    auto back = quasi_hopf_from_json(parse_document(text));
    CHECK(back->qb().comult == F5->qb().comult);
    CHECK(dump(to_json(*back)) == text);
}

TEST_CASE("check")
{
    TempDir tmp;
    REQUIRE(qhl_run({"export", "kZ2", "-o", tmp / "kZ2.json"}).code == 0);
    auto ok = qhl_run({"check", tmp / "kZ2.json", "--structure", "quasi-hopf"});
    CHECK(ok.code == 0);
    CHECK(ok.report.at("status") == "pass");

    // perturbed Φ on the 3-cocycle example
    json doc = to_json(*hopf_example("k^Z2_omega"));
    for (auto& e : doc["phi"])
        if (e.back() == "-1")
            e.back() = "2";
    write_document(doc, tmp / "bad.json");
    auto bad = qhl_run({"check", tmp / "bad.json"});
    CHECK(bad.code == 1);
    auto f = first_fail(bad.report);
    REQUIRE(f);
    CHECK(f->witness.has_value());

    std::ofstream(tmp / "garbage.json") << "{\"structure\": ";
    CHECK(qhl_run({"check", tmp / "garbage.json"}).code == 2);
    CHECK(qhl_run({"check", tmp / "missing.json"}).code == 2);
    CHECK(qhl_run({"check", tmp / "kZ2.json", "--structure", "coalgebra"}).code == 2);
    CHECK(qhl_run({"frobnicate"}).code == 2);
}

TEST_CASE("build")
{
    TempDir tmp;
    for (const char* part : {"hopf", "dual", "regular", "left"})
        REQUIRE(qhl_run({"export", "kS3", "--part", part, "-o", tmp / (std::string(part) + ".json")}).code == 0);
    REQUIRE(qhl_run({"export", "kZ2", "-o", tmp / "kZ2.json"}).code == 0);

    auto d = qhl_run({"build", "double", tmp / "kZ2.json", "-o", tmp / "D.json"});
    CHECK(d.code == 0);
    CHECK(d.report.at("dim") == 4);
    json D = read_document(tmp / "D.json");
    CHECK(D.at("provenance").at("construction") == "double");

    // trivial right action: the generalized smash product
    CHECK(qhl_run({"build", "lr-smash", tmp / "left.json", tmp / "regular.json", "-o", tmp / "lr.json"}).code == 0);
    CHECK(qhl_run({"build", "gsmash", tmp / "left.json", tmp / "regular.json", "-o", tmp / "gs.json"}).code == 0);
    CHECK(read_document(tmp / "lr.json").at("mult") == read_document(tmp / "gs.json").at("mult"));

    // the twisted product of the canonical datum
    CHECK(qhl_run({"build", "bullet", tmp / "dual.json", tmp / "regular.json", "-o", tmp / "b.json"}).code == 0);
    CHECK(qhl_run({"build", "lr-smash", tmp / "dual.json", tmp / "regular.json", "-o", tmp / "l.json"}).code == 0);
    CHECK(read_document(tmp / "b.json").at("mult") == read_document(tmp / "l.json").at("mult"));
    CHECK(qhl_run({"build", "star", tmp / "dual.json", tmp / "regular.json", "-o", tmp / "s.json"}).code == 0);
    CHECK(qhl_run({"build", "diagonal-crossed", tmp / "dual.json", tmp / "regular.json", "-o", tmp / "dc.json"})
              .code == 0);
    CHECK(read_document(tmp / "s.json").at("mult") == read_document(tmp / "dc.json").at("mult"));

    // built files round-trip, provenance included
    CHECK(qhl_run({"format", tmp / "b.json", "-o", tmp / "b2.json"}).code == 0);
    CHECK(slurp(tmp / "b.json") == slurp(tmp / "b2.json"));
    CHECK(qhl_run({"build", "lr-smash", tmp / "dual.json"}).code == 2);
}

TEST_CASE("verify-iso")
{
    TempDir tmp;
    REQUIRE(qhl_run({"export", "H4", "--part", "dual", "-o", tmp / "dual.json"}).code == 0);
    REQUIRE(qhl_run({"export", "H4", "--part", "regular", "-o", tmp / "reg.json"}).code == 0);
    CHECK(qhl_run({"verify-iso", "nu", tmp / "dual.json", tmp / "reg.json"}).code == 0);
    CHECK(qhl_run({"verify-iso", "twist-invariance", tmp / "dual.json", tmp / "reg.json", "--gauges", "0"}).code == 0);
    CHECK(qhl_run({"verify-iso", "cocomm", tmp / "dual.json"}).code == 1);

    // corrupt one action coefficient; ν stops being multiplicative
    json doc = read_document(tmp / "dual.json");
    doc["actions"]["left"][3].back() = "5";
    write_document(doc, tmp / "bad.json");
    auto r = qhl_run({"verify-iso", "nu", tmp / "bad.json", tmp / "reg.json"});
    CHECK(r.code == 1);
    bool located = false;
    for (const auto& rec : r.report.at("records"))
        if (rec.at("tag") == "nu:multiplicative" && rec.at("status") == "fail")
            located = rec.at("witness").size() == 3;
    CHECK(located);
}

TEST_CASE("seeded reports are reproducible")
{
    TempDir tmp;
    REQUIRE(qhl_run({"export", "kZ2", "--part", "dual", "-o", tmp / "d.json"}).code == 0);
    REQUIRE(qhl_run({"export", "kZ2", "--part", "regular", "-o", tmp / "r.json"}).code == 0);
    auto a = qhl_run({"verify-iso", "twist-invariance", tmp / "d.json", tmp / "r.json", "--seed", "9"});
    auto b = qhl_run({"verify-iso", "twist-invariance", tmp / "d.json", tmp / "r.json", "--seed", "9"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("suite on a single example")
{
    auto r = qhl_run({"suite", "--example", "sweedler"});
    CHECK(r.code == 0);
    bool expected = false;
    for (const auto& rec : r.report.at("records"))
        expected |= rec.at("status") == "expected-fail";
    CHECK(expected);
    CHECK(qhl_run({"suite", "--example", "nonesuch"}).code == 2);
}
