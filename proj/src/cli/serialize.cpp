// JSON forms of scalars, vectors and structure-constant (co)algebras.
#include "qbundle/cli.hpp"

#include <algorithm>
#include <fstream>

namespace qb {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ManifestError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::vector<std::string> labels_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ManifestError(where + ": basis must be a non-empty list of labels");
    std::vector<std::string> out;
    for (auto& x : j) {
        if (!x.is_string()) throw ManifestError(where + ": labels must be strings");
        out.push_back(x.get<std::string>());
    }
    std::vector<std::string> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ManifestError(where + ": repeated label");
    return out;
}

std::string label_at(const json& j, const FinSpace& S, const std::string& where) {
    if (!j.is_string()) throw ManifestError(where + ": expected a label");
    std::string l = j.get<std::string>();
    if (!S.contains(l)) throw ManifestError(where + ": unknown label '" + l + "'");
    return l;
}

}  // namespace

Scalar scalar_from_json(const json& j, std::optional<int> field_order) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) throw ManifestError("scalar must be a string or an integer");
    try {
        return parse_scalar(j.get<std::string>(), field_order);
    } catch (const ParseError& e) {
        throw ManifestError("malformed scalar \"" + j.get<std::string>() + "\": " + e.what());
    }
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (auto& [k, x] : v) out.push_back({k, x.str()});
    return out;
}

Vec vec_from_json(const json& j, std::optional<int> field_order) {
    if (!j.is_array()) throw ManifestError("vector must be a list of [label, scalar]");
    Vec v;
    for (auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string()) throw ManifestError("vector entry must be [label, scalar]");
        v[e[0].get<std::string>()] += scalar_from_json(e[1], field_order);
    }
    std::erase_if(v, [](auto& kv) { return kv.second.is_zero(); });
    return v;
}

json algebra_to_json(const FinAlgebra& a) {
    json mul = json::array();
    const auto& L = a.space().labels();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k)
            if (const Vec& p = a.product(i, k); !p.empty()) mul.push_back({L[i], L[k], vec_to_json(p)});
    return {{"basis", L}, {"unit", vec_to_json(a.one())}, {"mul", mul}};
}

FinAlgebra algebra_from_json(const json& j, std::optional<int> fo) {
    FinSpace S(labels_from_json(field(j, "basis", "algebra"), "algebra"));
    std::vector<Vec> table(S.dim() * S.dim());
    for (auto& e : field(j, "mul", "algebra")) {
        if (!e.is_array() || e.size() != 3) throw ManifestError("algebra.mul entries are [a, b, vector]");
        std::size_t a = S.index(label_at(e[0], S, "algebra.mul")), b = S.index(label_at(e[1], S, "algebra.mul"));
        Vec p = vec_from_json(e[2], fo);
        for (auto& [k, x] : p) label_at(json(k), S, "algebra.mul");
        table[a * S.dim() + b] = std::move(p);
    }
    Vec unit = vec_from_json(field(j, "unit", "algebra"), fo);
    for (auto& [k, x] : unit) label_at(json(k), S, "algebra.unit");
    return FinAlgebra(std::move(S), std::move(table), std::move(unit));
}

json coalgebra_to_json(const FinCoalgebra& c) {
    json comult = json::array(), counit = json::array();
    for (auto& l : c.space().labels()) {
        json terms = json::array();
        for (Tensor t = c.comult(l); auto& [k, x] : t.terms()) terms.push_back({k[0], k[1], x.str()});
        comult.push_back({l, terms});
        if (Scalar e = c.counit(l); !e.is_zero()) counit.push_back({l, e.str()});
    }
    return {{"basis", c.space().labels()}, {"comult", comult}, {"counit", counit}};
}

FinCoalgebra coalgebra_from_json(const json& j, std::optional<int> fo) {
    FinSpace S(labels_from_json(field(j, "basis", "coalgebra"), "coalgebra"));
    std::vector<Tensor> comult(S.dim(), Tensor("CC"));
    for (auto& e : field(j, "comult", "coalgebra")) {
        if (!e.is_array() || e.size() != 2 || !e[1].is_array()) throw ManifestError("coalgebra.comult entries are [c, terms]");
        std::size_t c = S.index(label_at(e[0], S, "coalgebra.comult"));
        for (auto& t : e[1]) {
            if (!t.is_array() || t.size() != 3) throw ManifestError("coalgebra.comult terms are [c1, c2, scalar]");
            comult[c].add({label_at(t[0], S, "coalgebra.comult"), label_at(t[1], S, "coalgebra.comult")},
                          scalar_from_json(t[2], fo));
        }
    }
    std::vector<Scalar> counit(S.dim());
    for (auto& [k, x] : vec_from_json(field(j, "counit", "coalgebra"), fo))
        counit[S.index(label_at(json(k), S, "coalgebra.counit"))] = x;
    return FinCoalgebra(std::move(S), std::move(comult), std::move(counit));
}

// ---- manifests ------------------------------------------------------------------------

Manifest parse_manifest(const json& j) {
    if (!j.is_object()) throw ManifestError("manifest must be a JSON object");
    for (auto& [k, v] : j.items())
        if (k != "kind" && k != "name" && k != "payload" && k != "checks" && k != "description")
            throw ManifestError("unknown manifest field \"" + k + "\"");
    Manifest m;
    const json& kind = field(j, "kind", "manifest");
    if (!kind.is_string()) throw ManifestError("kind must be a string");
    m.kind = kind.get<std::string>();
    if (m.kind != "factorisation" && m.kind != "entwining" && m.kind != "monopole")
        throw ManifestError("unknown kind \"" + m.kind + "\"");
    m.name = j.value("name", std::string());
    m.payload = field(j, "payload", "manifest");
    if (!m.payload.is_object()) throw ManifestError("payload must be an object");
    const json& checks = field(j, "checks", "manifest");
    if (!checks.is_array() || checks.empty()) throw ManifestError("checks must be a non-empty list");
    auto known = known_checks(m.kind);
    for (auto& c : checks) {
        CheckSpec s;
        if (c.is_string()) {
            s.name = c.get<std::string>();
        } else if (c.is_object() && c.contains("name") && c["name"].is_string()) {
            s.name = c["name"].get<std::string>();
            if (c.contains("params")) s.params = c["params"];
            if (!s.params.is_object()) throw ManifestError("params of \"" + s.name + "\" must be an object");
        } else {
            throw ManifestError("each check is a name or {\"name\": ..., \"params\": {...}}");
        }
        if (std::find(known.begin(), known.end(), s.name) == known.end())
            throw ManifestError("unknown check \"" + s.name + "\" for kind " + m.kind);
        for (auto& prev : m.checks)
            if (prev.name == s.name) throw ManifestError("check \"" + s.name + "\" listed twice");
        m.checks.push_back(std::move(s));
    }
    return m;
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ManifestError("cannot read manifest " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ManifestError(path + ": " + e.what());
    }
    return parse_manifest(j);
}

}  // namespace qb
