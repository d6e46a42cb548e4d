// qbundle: run manifests, verify the monopole, export presets.
//   exit 0 all checks pass, 1 a check failed, 2 bad input, 3 internal error
#include "qbundle/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace qb;

namespace {

void write_json(const json& j, const std::string& path) {
    std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ManifestError("cannot write " + path);
    out << text;
}

int finish(const RunResult& r, const std::string& out_path) {
    std::cout << report_text(r);
    if (!out_path.empty()) write_json(report_json(r), out_path);
    return r.ok() ? 0 : 1;
}

// "q=3/2,s=1/4"
std::pair<std::string, std::string> parse_specialize(const std::string& text) {
    std::string q, s;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        auto eq = part.find('=');
        if (eq == std::string::npos) throw ManifestError("--specialize expects q=Q,s=S");
        std::string k = part.substr(0, eq), v = part.substr(eq + 1);
        if (k == "q") q = v;
        else if (k == "s") s = v;
        else throw ManifestError("--specialize knows only q and s, got '" + k + "'");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (q.empty() || s.empty()) throw ManifestError("--specialize expects both q=Q and s=S");
    parse_scalar(q);   // report malformed values with their position
    parse_scalar(s);
    return {q, s};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qbundle: exact checks for algebra factorisations, coalgebra bundles and the q-monopole"};
    app.require_subcommand(1);

    RunOptions opts;
    std::string out_path;
    int degree = -1;

    auto* run = app.add_subcommand("run", "run the checks of a manifest");
    std::string manifest_path;
    run->add_option("manifest", manifest_path, "manifest JSON file")->required();
    run->add_option("--out", out_path, "write the JSON report here");
    run->add_option("--jobs", opts.jobs, "checks run concurrently")->check(CLI::PositiveNumber);
    run->add_option("--seed", opts.seed, "seed for randomised spot checks");
    run->add_option("--degree", degree, "truncation degree (monopole) or forms degree")->check(CLI::NonNegativeNumber);
    run->add_flag("--timings", opts.timings, "include timings in the JSON report");

    auto* mono = app.add_subcommand("monopole", "verify the q-monopole on the quantum spheres");
    int n = 3, mdeg = 8;
    std::string verify = "all", special;
    mono->add_option("--n", n, "largest grouplike index")->check(CLI::PositiveNumber);
    mono->add_option("--degree", mdeg, "truncation degree for pi")->check(CLI::Range(2, 12));
    mono->add_option("--verify", verify, "suite name or all");
    mono->add_option("--specialize", special, "fix the parameters, q=Q,s=S");
    mono->add_option("--out", out_path, "write the JSON report here");
    mono->add_option("--jobs", opts.jobs, "suites run concurrently")->check(CLI::PositiveNumber);
    mono->add_option("--seed", opts.seed, "seed for randomised spot checks");
    mono->add_flag("--timings", opts.timings, "include timings in the JSON report");

    auto* exp = app.add_subcommand("preset-export", "print the manifest of a built-in example");
    std::string preset;
    PresetArgs pa;
    std::string point;
    exp->add_option("name", preset, "example26, example27, quaternions, entwining26 or monopole")->required();
    exp->add_option("--n", pa.n, "n for example26, entwining26 and monopole");
    exp->add_option("--point", point, "circle point c,s for example27");
    exp->add_option("--degree", pa.degree, "truncation degree for monopole");
    exp->add_option("--out", out_path, "write the manifest here instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run) {
            if (degree >= 0) opts.degree = degree;
            Manifest m = load_manifest(manifest_path);
            return finish(run_manifest(m, opts), out_path);
        }
        if (*mono) {
            json payload = {{"n", n}, {"degree", mdeg}};
            if (!special.empty()) {
                auto [q, s] = parse_specialize(special);
                payload["q"] = q;
                payload["s"] = s;
            }
            json checks = json::array();
            if (verify == "all")
                for (auto& s : monopole_suites()) checks.push_back(s);
            else
                checks.push_back(verify);
            Manifest m = parse_manifest({{"kind", "monopole"}, {"name", "monopole"}, {"payload", payload}, {"checks", checks}});
            return finish(run_manifest(m, opts), out_path);
        }
        if (*exp) {
            if (!point.empty()) {
                auto comma = point.find(',');
                if (comma == std::string::npos) throw ManifestError("--point expects c,s");
                pa.point = {point.substr(0, comma), point.substr(comma + 1)};
            }
            write_json(preset_export(preset, pa), out_path);
            return 0;
        }
    } catch (const ManifestError& e) {
        std::cerr << "qbundle: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "qbundle: " << e.what() << "\n";
        return 2;
    } catch (const UnknownGenerator& e) {
        std::cerr << "qbundle: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "qbundle: internal error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
