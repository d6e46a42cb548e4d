/* cli.hpp
 * -------
 * Manifests, the check scheduler behind `qbundle run` and `qbundle
 * monopole`, JSON reports and preset export.
 *
 * Manifest layout (schemas/manifest.schema.json):
 *   {"kind": "factorisation" | "entwining" | "monopole", "name": ...,
 *    "payload": {...}, "checks": [{"name": ..., "params": {...}}, ...]}
 * Scalars are strings in the parse_scalar grammar.  Vectors are lists of
 * [label, scalar]; tensors are lists of [label, .., label, scalar].
 */
#pragma once

#include "qbundle/entwine.hpp"
#include "qbundle/monopole.hpp"

#include <json.hpp>

#include <stdexcept>

namespace qb {

using json = nlohmann::json;

// malformed or inconsistent manifest; maps to exit code 2
struct ManifestError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckSpec {
    std::string name;
    json params = json::object();
};

struct Manifest {
    std::string kind, name;
    json payload;
    std::vector<CheckSpec> checks;
};

Manifest parse_manifest(const json& j);
Manifest load_manifest(const std::string& path);

struct RunOptions {
    unsigned seed = 1;
    unsigned jobs = 1;
    std::optional<int> degree;   // overrides the manifest truncation / forms degree
    bool timings = false;        // timings make the JSON report run-dependent
};

struct CheckOutcome {
    CheckSpec spec;
    Report report;
    double seconds = 0;
};

struct RunResult {
    Manifest manifest;
    RunOptions options;
    std::vector<CheckOutcome> checks;   // manifest order
    bool ok() const;
};

// check names accepted for a manifest kind
std::vector<std::string> known_checks(const std::string& kind);

// builds the objects, then runs the checks; prerequisites run first and
// a check whose prerequisite failed is reported as skipped
RunResult run_manifest(const Manifest& m, const RunOptions& o);

json report_json(const RunResult& r);
std::string report_text(const RunResult& r);

// ---- (de)serialisation of the structure-constant payloads ----------------------------

Scalar scalar_from_json(const json& j, std::optional<int> field_order = std::nullopt);
json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j, std::optional<int> field_order = std::nullopt);
json algebra_to_json(const FinAlgebra& a);
FinAlgebra algebra_from_json(const json& j, std::optional<int> field_order = std::nullopt);
json coalgebra_to_json(const FinCoalgebra& c);
FinCoalgebra coalgebra_from_json(const json& j, std::optional<int> field_order = std::nullopt);

// ---- presets ------------------------------------------------------------------------

struct PresetArgs {
    int n = 3;
    std::pair<std::string, std::string> point{"3/5", "4/5"};   // circle point c, s
    int degree = 8;
};
std::vector<std::string> preset_names();
// manifest with its default checks; throws ManifestError for unknown names
json preset_export(const std::string& name, const PresetArgs& a);

}  // namespace qb
