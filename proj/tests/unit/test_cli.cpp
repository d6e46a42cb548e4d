#include <doctest.h>

#include "qbundle/cli.hpp"

using namespace qb;

TEST_CASE("algebra and coalgebra survive a JSON round trip") {
    FinAlgebra A = example_cyclic(3).A();
    json j = algebra_to_json(A);
    FinAlgebra B = algebra_from_json(j);
    CHECK(algebra_to_json(B) == j);
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t k = 0; k < A.dim(); ++k) CHECK(A.product(i, k) == B.product(i, k));

    Transported T = entwining_from_factorisation(example_cyclic(2));
    json c = coalgebra_to_json(*T.C);
    CHECK(coalgebra_to_json(coalgebra_from_json(c)) == c);
}

TEST_CASE("scalars from JSON") {
    CHECK(scalar_from_json(json(3)) == Scalar(3));
    CHECK(scalar_from_json(json("-2/6")) == Scalar(mpq_class(-1, 3)));
    CHECK_THROWS_AS(scalar_from_json(json("1/")), ManifestError);
    CHECK_THROWS_AS(scalar_from_json(json(1.5)), ManifestError);
    try {
        scalar_from_json(json("2*+3"));
    } catch (const ManifestError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("manifest validation") {
    json ok = {{"kind", "factorisation"}, {"name", "x"}, {"payload", json::object()}, {"checks", {"factorisation"}}};
    CHECK(parse_manifest(ok).checks.size() == 1);
    json m = ok;
    m["extra"] = 1;
    CHECK_THROWS_AS(parse_manifest(m), ManifestError);
    m = ok;
    m["kind"] = "sheaf";
    CHECK_THROWS_AS(parse_manifest(m), ManifestError);
    m = ok;
    m["checks"] = {"factorisation", "factorisation"};
    CHECK_THROWS_AS(parse_manifest(m), ManifestError);
    m = ok;
    m["checks"] = {"projector"};
    CHECK_THROWS_AS(parse_manifest(m), ManifestError);
    m = ok;
    m["checks"] = json::array();
    CHECK_THROWS_AS(parse_manifest(m), ManifestError);
    m["checks"] = {{{"name", "forms"}, {"params", {{"degree", 2}, {"bogus", 1}}}}};
    m["payload"] = preset_export("quaternions", {})["payload"];
    CHECK_THROWS_AS(run_manifest(parse_manifest(m), {}), ManifestError);
}

TEST_CASE("presets run and reports are deterministic") {
    for (auto& name : {"example26", "example27", "quaternions", "entwining26"}) {
        PresetArgs a;
        a.n = 2;
        json j = preset_export(name, a);
        CHECK(j == preset_export(name, a));
        Manifest m = parse_manifest(j);
        RunOptions o;
        o.seed = 5;
        RunResult r1 = run_manifest(m, o);
        CHECK_MESSAGE(r1.ok(), report_text(r1));
        o.jobs = 2;
        RunResult r2 = run_manifest(m, o);
        CHECK(report_json(r1).dump() == report_json(r2).dump());
        CHECK(report_json(r1)["config"]["seed"] == 5);
    }
    CHECK_THROWS_AS(preset_export("nothing", {}), ManifestError);
    PresetArgs off;
    off.point = {"1/2", "1/2"};
    CHECK_THROWS_AS(preset_export("example27", off), ManifestError);
}

TEST_CASE("a failing expectation is reported with a witness; dependants are skipped") {
    json j = preset_export("example27", {});
    for (auto& c : j["checks"])
        if (c.is_object() && c["name"] == "galois") c["params"]["m_dim"] = 2;
    RunResult r = run_manifest(parse_manifest(j), {});
    CHECK_FALSE(r.ok());
    json rep = report_json(r);
    bool witness = false, skipped = false;
    for (auto& x : rep["results"]) {
        if (x["status"] == "fail" && x.contains("witness")) witness = true;
        if (x["status"] == "skipped") skipped = true;
    }
    CHECK(witness);
    CHECK(skipped);
    CHECK(rep["summary"]["ok"] == false);
}
