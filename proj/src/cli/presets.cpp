// Manifests for the built-in examples.
#include "qbundle/cli.hpp"

namespace qb {

namespace {

json factorisation_payload(const Factorisation& F) {
    json psi = json::array();
    for (auto& a : F.A().space().labels())
        for (auto& u : F.P().space().labels()) {
            json terms = json::array();
            for (auto& [k, x] : F(a, u).terms()) terms.push_back({k[0], k[1], x.str()});
            psi.push_back({a, u, terms});
        }
    return {{"A", algebra_to_json(F.A())}, {"P", algebra_to_json(F.P())}, {"psi", psi}};
}

json copoint_json(const Factorisation& F, const Copoint& e) {
    json out = json::array();
    for (std::size_t i = 0; i < e.values.size(); ++i) out.push_back({F.A().space().label(i), vec_to_json(e.values[i])});
    return out;
}

// chi# as representatives in P (x) P (x) A
json chi_sharp_json(const GaloisData& G) {
    json out = json::array();
    for (auto& u : G.P.space().labels()) {
        Tensor t = G.lift(G.sharp(Vec{{u, Scalar(1)}}));
        json terms = json::array();
        for (auto& [k, x] : t.terms()) terms.push_back({k[0], k[1], k[2], x.str()});
        out.push_back({u, terms});
    }
    return out;
}

json check(const std::string& name, json params = json::object()) {
    if (params.empty()) return name;
    return {{"name", name}, {"params", std::move(params)}};
}

json example26(int n) {
    if (n < 2) throw ManifestError("example26 needs n >= 2");
    Factorisation F = example_cyclic(n);
    Copoint e = example_cyclic_character(F);
    Report r;
    GaloisData G = action_from_copoint(F, e, r);
    G.chi_sharp = example_cyclic_chi_sharp(G, n);
    json p = factorisation_payload(F);
    p["copoint"] = copoint_json(F, e);
    p["chi_sharp"] = chi_sharp_json(G);
    json checks = {check("factorisation"), check("cross_product"),   check("copoint"),
                   check("galois", {{"m_dim", 1}}), check("chi_sharp_formula"), check("galois_product"),
                   check("cleft"),         check("forms", {{"degree", 2}}), check("bridge")};
    return {{"kind", "factorisation"}, {"name", "example26 n=" + std::to_string(n)}, {"payload", p}, {"checks", checks}};
}

json example27(const std::string& c, const std::string& s) {
    Scalar cs = parse_scalar(c), ss = parse_scalar(s);
    if (!(cs * cs + ss * ss == Scalar(1))) throw ManifestError("example27 needs a point with c^2 + s^2 = 1");
    Factorisation F = example_cyclic(2);
    json p = factorisation_payload(F);
    p["copoint"] = copoint_json(F, example_circle_copoint(F, cs, ss));
    bool axis = ss.is_zero();
    json checks = {check("factorisation"),
                   check("copoint"),
                   check("galois", {{"m_dim", 1}}),
                   check("chi_determinant", {{"expect", "1"}}),
                   check("galois_product"),
                   check("cleft"),
                   check("module_algebra", {{"expect", axis}}),
                   check("copoint_feasibility", {{"expect_rational", true}, {"witness", {c, s}}}),
                   check("bridge")};
    return {{"kind", "factorisation"}, {"name", "example27 point=(" + c + "," + s + ")"}, {"payload", p}, {"checks", checks}};
}

json quaternions() {
    Factorisation F = example_quaternions();
    json checks = {check("factorisation"), check("cross_product"),
                   check("copoint_feasibility", {{"expect_rational", false}, {"witness", {"i", "0"}}}),
                   check("forms", {{"degree", 2}}), check("bridge")};
    return {{"kind", "factorisation"}, {"name", "quaternions"}, {"payload", factorisation_payload(F)}, {"checks", checks}};
}

// the cyclic example moved to the coalgebra side
json entwining26(int n) {
    if (n < 2) throw ManifestError("entwining26 needs n >= 2");
    Factorisation F = example_cyclic(n);
    Transported T = entwining_from_factorisation(F);
    json psi = json::array();
    for (auto& c : T.C->space().labels())
        for (auto& u : T.P->space().labels()) {
            json terms = json::array();
            for (Tensor t = T.E.psi(c, u); auto& [k, x] : t.terms()) terms.push_back({k[0], k[1], x.str()});
            psi.push_back({c, u, terms});
        }
    Tensor et = copoint_to_tensor(example_cyclic_character(F), F.A(), *T.C);
    json copoint = json::array();
    for (auto& [k, x] : et.terms()) copoint.push_back({k[0], k[1], x.str()});
    json p = {{"P", algebra_to_json(*T.P)}, {"C", coalgebra_to_json(*T.C)}, {"psi", psi}, {"copoint", copoint}};
    json checks = {check("algebra"),  check("coalgebra"), check("entwining"),
                   check("copoint"),  check("coaction"),  check("fixed_subalgebra", {{"m_dim", 1}}),
                   check("galois"),   check("connection")};
    return {{"kind", "entwining"}, {"name", "entwining26 n=" + std::to_string(n)}, {"payload", p}, {"checks", checks}};
}

json monopole(int n, int degree) {
    json checks = json::array();
    for (auto& s : monopole_suites()) checks.push_back(s);
    return {{"kind", "monopole"},
            {"name", "monopole"},
            {"payload", {{"n", n}, {"degree", degree}, {"q", "q"}, {"s", "s"}}},
            {"checks", checks}};
}

}  // namespace

std::vector<std::string> preset_names() { return {"example26", "example27", "quaternions", "entwining26", "monopole"}; }

json preset_export(const std::string& name, const PresetArgs& a) {
    try {
        if (name == "example26") return example26(a.n);
        if (name == "example27") return example27(a.point.first, a.point.second);
        if (name == "quaternions") return quaternions();
        if (name == "entwining26") return entwining26(a.n);
        if (name == "monopole") return monopole(a.n, a.degree);
    } catch (const ParseError& e) {
        throw ManifestError(std::string("bad preset argument: ") + e.what());
    }
    throw ManifestError("unknown preset \"" + name + "\"");
}

}  // namespace qb
