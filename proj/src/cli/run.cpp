// Check scheduling for manifests, and the reports.
#include "qbundle/cli.hpp"

#include <chrono>
#include <future>
#include <set>
#include <sstream>

namespace qb {

namespace {

// ---- parameters ---------------------------------------------------------------------

struct ParamReader {
    const CheckSpec& spec;
    std::set<std::string> allowed;

    void validate() const {
        for (auto& [k, v] : spec.params.items())
            if (!allowed.count(k)) throw ManifestError("check \"" + spec.name + "\" has no parameter \"" + k + "\"");
    }
    const json* get(const std::string& k) const {
        auto it = spec.params.find(k);
        return it == spec.params.end() ? nullptr : &*it;
    }
    std::optional<int> integer(const std::string& k) const {
        const json* v = get(k);
        if (!v) return std::nullopt;
        if (!v->is_number_integer()) throw ManifestError(spec.name + "." + k + " must be an integer");
        return v->get<int>();
    }
    bool boolean(const std::string& k, bool def) const {
        const json* v = get(k);
        if (!v) return def;
        if (!v->is_boolean()) throw ManifestError(spec.name + "." + k + " must be true or false");
        return v->get<bool>();
    }
    std::optional<Scalar> scalar(const std::string& k) const {
        const json* v = get(k);
        if (!v) return std::nullopt;
        return scalar_from_json(*v);
    }
};

const json& need(const json& payload, const char* key, const std::string& kind) {
    if (!payload.contains(key)) throw ManifestError(kind + " payload needs \"" + key + "\"");
    return payload.at(key);
}

void no_extra_keys(const json& payload, std::initializer_list<const char*> keys, const std::string& kind) {
    for (auto& [k, v] : payload.items())
        if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; }))
            throw ManifestError(kind + " payload has unknown field \"" + k + "\"");
}

std::optional<int> field_order(const json& payload) {
    if (!payload.contains("field_order")) return std::nullopt;
    if (!payload["field_order"].is_number_integer() || payload["field_order"].get<int>() < 1)
        throw ManifestError("field_order must be a positive integer");
    return payload["field_order"].get<int>();
}

// a two-leg table [[x, y, [[l1, l2, scalar], ..]], ..] as a function of (x, y)
std::map<std::pair<Key, Key>, Tensor> pair_table(const json& j, const FinSpace& X, const FinSpace& Y,
                                                 const FinSpace& L1, const FinSpace& L2, const std::string& profile,
                                                 std::optional<int> fo, const std::string& where) {
    if (!j.is_array()) throw ManifestError(where + " must be a list");
    std::map<std::pair<Key, Key>, Tensor> out;
    auto lab = [&](const json& l, const FinSpace& S) {
        if (!l.is_string() || !S.contains(l.get<std::string>()))
            throw ManifestError(where + ": unknown label " + l.dump());
        return l.get<std::string>();
    };
    for (auto& e : j) {
        if (!e.is_array() || e.size() != 3 || !e[2].is_array()) throw ManifestError(where + " entries are [x, y, terms]");
        auto key = std::make_pair(lab(e[0], X), lab(e[1], Y));
        Tensor t(profile);
        for (auto& term : e[2]) {
            if (!term.is_array() || term.size() != 3) throw ManifestError(where + " terms are [l1, l2, scalar]");
            t.add({lab(term[0], L1), lab(term[1], L2)}, scalar_from_json(term[2], fo));
        }
        if (!out.emplace(key, std::move(t)).second) throw ManifestError(where + ": repeated entry");
    }
    return out;
}

Tensor table_value(const std::map<std::pair<Key, Key>, Tensor>& t, const Key& x, const Key& y, const std::string& profile) {
    auto it = t.find({x, y});
    return it == t.end() ? Tensor(profile) : it->second;
}

// ---- kinds --------------------------------------------------------------------------

using CheckFn = std::function<Report(const CheckSpec&)>;

struct CheckDef {
    std::vector<std::string> deps;
    std::set<std::string> params;
    CheckFn fn;
};

class Context {
public:
    virtual ~Context() = default;
    std::map<std::string, CheckDef> defs;
};

class FactorisationContext : public Context {
public:
    FactorisationContext(const json& p, const RunOptions& o) : opts_(o) {
        no_extra_keys(p, {"A", "P", "psi", "copoint", "chi_sharp", "field_order"}, "factorisation");
        auto fo = field_order(p);
        FinAlgebra A = algebra_from_json(need(p, "A", "factorisation"), fo);
        FinAlgebra P = algebra_from_json(need(p, "P", "factorisation"), fo);
        auto table = pair_table(need(p, "psi", "factorisation"), A.space(), P.space(), P.space(), A.space(), "PA", fo,
                                "psi");
        F_ = Factorisation::from_function(A, P, [&](const Key& a, const Key& u) { return table_value(table, a, u, "PA"); });
        if (p.contains("copoint")) {
            const json& c = p["copoint"];
            if (!c.is_array()) throw ManifestError("copoint must be a list of [a, vector]");
            Copoint e;
            e.values.resize(A.dim());
            std::vector<bool> seen(A.dim());
            for (auto& entry : c) {
                if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
                    !A.space().contains(entry[0].get<std::string>()))
                    throw ManifestError("copoint entries are [a, vector] with a in the basis of A");
                std::size_t i = A.space().index(entry[0].get<std::string>());
                e.values[i] = vec_from_json(entry[1], fo);
                for (auto& [k, x] : e.values[i])
                    if (!P.space().contains(k)) throw ManifestError("copoint value uses unknown label '" + k + "'");
                seen[i] = true;
            }
            e_ = std::move(e);
        }
        if (p.contains("chi_sharp")) {
            const json& c = p["chi_sharp"];
            if (!c.is_array()) throw ManifestError("chi_sharp must be a list of [u, terms]");
            for (auto& entry : c) {
                if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() || !entry[1].is_array() ||
                    !P.space().contains(entry[0].get<std::string>()))
                    throw ManifestError("chi_sharp entries are [u, [[x, y, a, scalar], ..]]");
                Tensor t("PPA");
                for (auto& term : entry[1]) {
                    if (!term.is_array() || term.size() != 4) throw ManifestError("chi_sharp terms are [x, y, a, scalar]");
                    for (int k = 0; k < 3; ++k)
                        if (!term[k].is_string() || !(k < 2 ? P : A).space().contains(term[k].get<std::string>()))
                            throw ManifestError("chi_sharp uses an unknown label " + term[k].dump());
                    t.add({term[0].get<std::string>(), term[1].get<std::string>(), term[2].get<std::string>()},
                          scalar_from_json(term[3], fo));
                }
                chi_sharp_[entry[0].get<std::string>()] = std::move(t);
            }
        }
        define();
    }

private:
    const Copoint& copoint() const {
        if (!e_) throw ManifestError("this check needs a copoint in the payload");
        return *e_;
    }

    struct Galois {
        GaloisData G;
        Report built;
        bool sharp = false;
    };
    const Galois& galois() {
        std::call_once(g_once_, [&] {
            g_ = std::make_unique<Galois>();
            g_->G = action_from_copoint(F_, copoint(), g_->built);
            g_->sharp = find_chi_sharp(g_->G);
        });
        return *g_;
    }
    const GaloisData& with_sharp() {
        const Galois& g = galois();
        if (!g.sharp) throw ManifestError("no translation map; the bundle is not Galois");
        return g.G;
    }

    void define() {
        defs["factorisation"] = {{}, {}, [&](const CheckSpec&) { return check_factorisation(F_); }};
        defs["cross_product"] = {{}, {}, [&](const CheckSpec&) {
                                     FinAlgebra X = cross_product(F_);
                                     Report r = check_algebra(X);
                                     r.add("dimension", X.dim() == F_.A().dim() * F_.P().dim(),
                                           "dim X = " + std::to_string(X.dim()));
                                     return r;
                                 }};
        defs["copoint"] = {{}, {}, [&](const CheckSpec&) { return check_copoint(F_, copoint()); }};
        defs["galois"] = {{"copoint"}, {"m_dim", "expect_chi_sharp"}, [&](const CheckSpec& s) {
                              ParamReader pr{s, {}};
                              const Galois& g = galois();
                              Report r = g.built;
                              if (auto m = pr.integer("m_dim"))
                                  r.add("m_dim", g.G.M.size() == std::size_t(*m), "dim M = " + std::to_string(g.G.M.size()));
                              bool want = pr.boolean("expect_chi_sharp", true);
                              r.add("chi_sharp_exists", g.sharp == want, g.sharp ? "found" : "none");
                              if (g.sharp) r.merge(verify_translation(g.G));
                              return r;
                          }};
        defs["chi_sharp_formula"] = {{"galois"}, {}, [&](const CheckSpec&) {
                                         if (chi_sharp_.empty()) throw ManifestError("chi_sharp_formula needs payload.chi_sharp");
                                         const GaloisData& G = galois().G;
                                         LinearMap L(G.P.space(), tensor_space(G.Q.space, G.A.space()));
                                         for (auto& [u, t] : chi_sharp_) {
                                             Vec img;
                                             Tensor qa = apply_pair(
                                                 t, 0, [&](const Key& x, const Key& y) { return G.proj(Tensor::pure("PP", {x, y})); },
                                                 "Q");
                                             for (auto& [k, c] : qa.terms()) img[pair_label(k[0], k[1])] += c;
                                             std::erase_if(img, [](auto& kv) { return kv.second.is_zero(); });
                                             L.set(u, img);
                                         }
                                         Report r = check_chi_sharp(G, L);
                                         if (galois().sharp) r.add("matches_solved", L == *G.chi_sharp, "");
                                         return r;
                                     }};
        defs["galois_product"] = {{"galois"}, {}, [&](const CheckSpec&) {
                                      GaloisProduct gp = galois_product(with_sharp());
                                      Report r;
                                      r.add("factorisation_recovered", same_factorisation(gp.F, F_), "");
                                      r.add("copoint_recovered", gp.e.values == copoint().values, "");
                                      return r;
                                  }};
        defs["cleft"] = {{"galois"}, {"expect"}, [&](const CheckSpec& s) {
                             ParamReader pr{s, {}};
                             const GaloisData& G = galois().G;
                             auto cl = find_cleaving(G);
                             bool want = pr.boolean("expect", true);
                             Report r;
                             r.add("cleaving_found", bool(cl) == want, cl ? "found" : "none");
                             if (cl) r.merge(trivialisation_ops(F_, copoint(), G, *cl));
                             return r;
                         }};
        defs["module_algebra"] = {{"galois"}, {"expect"}, [&](const CheckSpec& s) {
                                      ParamReader pr{s, {}};
                                      bool got = module_algebra_criterion(galois().G);
                                      Report r;
                                      r.add("criterion", got == pr.boolean("expect", true),
                                            std::string("criterion ") + (got ? "holds" : "fails"));
                                      return r;
                                  }};
        defs["chi_determinant"] = {{"galois"}, {"expect"}, [&](const CheckSpec& s) {
                                       ParamReader pr{s, {}};
                                       Scalar d = example_circle_chi_determinant(galois().G);
                                       Report r;
                                       auto want = pr.scalar("expect");
                                       r.add("value", !want ? !d.is_zero() : d == *want, "det = " + d.str());
                                       return r;
                                   }};
        defs["copoint_feasibility"] = {{}, {"expect_rational", "witness"}, [&](const CheckSpec& s) {
                                           ParamReader pr{s, {}};
                                           CopointFeasibility cf = copoint_feasibility_dim2(F_);
                                           Report r = cf.report;
                                           bool want = pr.boolean("expect_rational", cf.rational);
                                           r.add("rational", cf.rational == want,
                                                 cf.rational ? "solvable over Q" : cf.certificate);
                                           if (const json* w = pr.get("witness")) {
                                               if (!w->is_array() || w->size() != 2)
                                                   throw ManifestError("witness must be [alpha, beta]");
                                               std::pair<Scalar, Scalar> ab{scalar_from_json((*w)[0]), scalar_from_json((*w)[1])};
                                               bool found = std::find(cf.witnesses.begin(), cf.witnesses.end(), ab) !=
                                                            cf.witnesses.end();
                                               r.add("witness", found, "(" + ab.first.str() + ", " + ab.second.str() + ") not found");
                                           }
                                           return r;
                                       }};
        defs["forms"] = {{}, {"degree"}, [&](const CheckSpec& s) {
                             ParamReader pr{s, {}};
                             int d = opts_.degree.value_or(pr.integer("degree").value_or(2));
                             Report r = check_forms_factorisation(F_, d);
                             return r;
                         }};
        defs["bridge"] = {{}, {}, [&](const CheckSpec&) { return duality_bridge(F_, e_); }};
    }

    RunOptions opts_;
    Factorisation F_;
    std::optional<Copoint> e_;
    std::map<Key, Tensor> chi_sharp_;
    std::once_flag g_once_;
    std::unique_ptr<Galois> g_;
};

class EntwiningContext : public Context {
public:
    explicit EntwiningContext(const json& p) {
        no_extra_keys(p, {"P", "C", "psi", "copoint", "field_order"}, "entwining");
        auto fo = field_order(p);
        P_ = std::make_shared<FinAlgebra>(algebra_from_json(need(p, "P", "entwining"), fo));
        C_ = std::make_shared<FinCoalgebra>(coalgebra_from_json(need(p, "C", "entwining"), fo));
        auto table = pair_table(need(p, "psi", "entwining"), C_->space(), P_->space(), P_->space(), C_->space(), "PC",
                                fo, "psi");
        E_.P = P_;
        E_.C = C_;
        E_.psi = [table](const Key& c, const Key& u) { return table_value(table, c, u, "PC"); };
        E_.psi_inv = finite_psi_inverse(E_, *P_, *C_);
        if (p.contains("copoint")) {
            const json& c = p["copoint"];
            Tensor et("PC");
            if (c.is_object() && c.contains("grouplike") && c["grouplike"].is_string()) {
                std::string g = c["grouplike"].get<std::string>();
                if (!C_->space().contains(g)) throw ManifestError("copoint grouplike '" + g + "' is not in C");
                for (auto& [k, x] : P_->one()) et.add({k, g}, x);
            } else if (c.is_array()) {
                for (auto& t : c) {
                    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() ||
                        !P_->space().contains(t[0].get<std::string>()) || !C_->space().contains(t[1].get<std::string>()))
                        throw ManifestError("copoint terms are [u, c, scalar]");
                    et.add({t[0].get<std::string>(), t[1].get<std::string>()}, scalar_from_json(t[2], fo));
                }
            } else {
                throw ManifestError("copoint is {\"grouplike\": c} or a list of [u, c, scalar]");
            }
            et_ = std::move(et);
        }
        T_ = all_pairs(P_->space().labels(), C_->space().labels());
        define();
    }

private:
    const Coaction& coaction() {
        std::call_once(once_, [&] {
            if (!et_) throw ManifestError("this check needs a copoint in the payload");
            D_ = std::make_unique<Coaction>(E_, *et_);
        });
        if (!D_) throw ManifestError("this check needs a copoint in the payload");
        return *D_;
    }

    void define() {
        defs["algebra"] = {{}, {}, [&](const CheckSpec&) { return check_algebra(*P_); }};
        defs["coalgebra"] = {{}, {}, [&](const CheckSpec&) { return check_coalgebra(*C_); }};
        defs["entwining"] = {{}, {}, [&](const CheckSpec&) {
                                 Report r = check_entwining(E_, T_);
                                 r.add("bijective", bool(E_.psi_inv), "psi is singular");
                                 return r;
                             }};
        defs["copoint"] = {{}, {}, [&](const CheckSpec&) {
                               if (!et_) throw ManifestError("this check needs a copoint in the payload");
                               return check_copoint_tensor(E_, *et_);
                           }};
        defs["coaction"] = {{"copoint"}, {}, [&](const CheckSpec&) { return check_coaction(coaction(), T_); }};
        defs["fixed_subalgebra"] = {{"coaction"}, {"m_dim"}, [&](const CheckSpec& s) {
                                        ParamReader pr{s, {}};
                                        std::vector<Vec> span;
                                        for (auto& l : P_->space().labels()) span.push_back(Vec{{l, Scalar(1)}});
                                        auto M = fixed_subalgebra(coaction(), span);
                                        Report r;
                                        r.add("contains_unit", !M.empty(), "M = 0");
                                        if (auto m = pr.integer("m_dim"))
                                            r.add("m_dim", M.size() == std::size_t(*m), "dim M = " + std::to_string(M.size()));
                                        return r;
                                    }};
        defs["galois"] = {{"coaction"}, {"expect"}, [&](const CheckSpec& s) {
                              ParamReader pr{s, {}};
                              CoGalois G = galois_chi(coaction(), *P_, *C_);
                              Report r;
                              r.add("chi_bijective", bool(G.chi_inv) == pr.boolean("expect", true),
                                    G.chi_inv ? "bijective" : "not bijective");
                              return r;
                          }};
        defs["connection"] = {{"coaction"}, {"expect"}, [&](const CheckSpec& s) {
                                  ParamReader pr{s, {}};
                                  const Coaction& D = coaction();
                                  ConnectionSolution sol = solve_connection_form(D, *P_, *C_);
                                  Report r;
                                  r.add("exists", bool(sol.particular) == pr.boolean("expect", true),
                                        sol.particular ? "found" : "none");
                                  if (sol.particular) {
                                      ConnectionForm w = connection_from_table(*sol.particular);
                                      auto keys = C_->space().labels();
                                      r.merge(verify_connection_form(D, w, keys));
                                      r.merge(strongness_check(D, w, keys));
                                      if (E_.psi_inv) r.merge(left_strongness_check(D, w, keys));
                                  }
                                  return r;
                              }};
    }

    std::shared_ptr<FinAlgebra> P_;
    std::shared_ptr<FinCoalgebra> C_;
    Entwining E_;
    std::optional<Tensor> et_;
    TestSet T_;
    std::once_flag once_;
    std::unique_ptr<Coaction> D_;
};

class MonopoleContext : public Context {
public:
    MonopoleContext(const json& p, const RunOptions& o) : seed_(o.seed) {
        no_extra_keys(p, {"n", "degree", "q", "s"}, "monopole");
        auto integer = [&](const char* k, int def) {
            if (!p.contains(k)) return def;
            if (!p[k].is_number_integer()) throw ManifestError(std::string("monopole.") + k + " must be an integer");
            return p[k].get<int>();
        };
        int n = integer("n", 3), d = o.degree.value_or(integer("degree", 8));
        if (d < 2) throw ManifestError("monopole degree must be at least 2");
        Scalar q = p.contains("q") ? scalar_from_json(p["q"]) : Scalar::q();
        Scalar s = p.contains("s") ? scalar_from_json(p["s"]) : Scalar::s();
        try {
            mp_ = std::make_unique<Monopole>(n, d, q, s);
            // the splitting needs 1 + q^2k s^2 invertible for |k| < n
            for (int k = -n; k <= n; ++k) (void)mp_->i(k);
        } catch (const std::invalid_argument& e) {
            throw ManifestError(std::string("monopole parameters: ") + e.what());
        } catch (const DivisionByZero&) {
            throw ManifestError("monopole parameters make 1 + q^2k s^2 vanish");
        }
        params_.n = n;
        params_.d = d;
        if (!is_formal(*mp_)) {
            params_.q0 = q.str();
            params_.s0 = s.str();
        }
        for (auto& name : monopole_suites())
            defs[name] = {{}, {}, [this, name](const CheckSpec&) { return tagged(run_monopole_suite(*mp_, name, seed_)); }};
        defs["all"] = {{}, {}, [this](const CheckSpec&) { return tagged(run_monopole_suite(*mp_, "all", seed_)); }};
    }

private:
    Report tagged(const Report& in) const {
        Report out;
        for (auto r : in.results()) {
            if (!r.params.n) r.params.n = params_.n;
            if (!r.params.d) r.params.d = params_.d;
            if (!r.params.q0 && params_.q0) r.params.q0 = params_.q0;
            if (!r.params.s0 && params_.s0) r.params.s0 = params_.s0;
            if (r.status == Status::skipped) out.skip(r.check, r.witness, r.params);
            else out.add(r.check, r.status == Status::pass, r.witness, r.params);
        }
        return out;
    }

    unsigned seed_;
    Params params_;
    std::unique_ptr<Monopole> mp_;
};

std::unique_ptr<Context> make_context(const Manifest& m, const RunOptions& o) {
    if (m.kind == "factorisation") return std::make_unique<FactorisationContext>(m.payload, o);
    if (m.kind == "entwining") return std::make_unique<EntwiningContext>(m.payload);
    return std::make_unique<MonopoleContext>(m.payload, o);
}

// a check that throws for bad input reports a manifest error, not an internal one
Report guarded(const CheckDef& def, const CheckSpec& spec) {
    try {
        return def.fn(spec);
    } catch (const ManifestError&) {
        throw;
    } catch (const DivisionByZero& e) {
        throw ManifestError("check \"" + spec.name + "\": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw ManifestError("check \"" + spec.name + "\": " + e.what());
    } catch (const std::domain_error& e) {
        throw ManifestError("check \"" + spec.name + "\": " + e.what());
    }
}

}  // namespace

std::vector<std::string> known_checks(const std::string& kind) {
    if (kind == "factorisation")
        return {"factorisation", "cross_product", "copoint", "galois", "chi_sharp_formula", "galois_product", "cleft",
                "module_algebra", "chi_determinant", "copoint_feasibility", "forms", "bridge"};
    if (kind == "entwining")
        return {"algebra", "coalgebra", "entwining", "copoint", "coaction", "fixed_subalgebra", "galois", "connection"};
    if (kind == "monopole") {
        auto s = monopole_suites();
        s.push_back("all");
        return s;
    }
    throw ManifestError("unknown kind \"" + kind + "\"");
}

bool RunResult::ok() const {
    for (auto& c : checks)
        if (!c.report.ok()) return false;
    return true;
}

RunResult run_manifest(const Manifest& m, const RunOptions& o) {
    RunResult res;
    res.manifest = m;
    res.options = o;
    auto ctx = make_context(m, o);

    for (auto& spec : m.checks) ParamReader{spec, ctx->defs.at(spec.name).params}.validate();

    // prerequisites not listed still run, but stay out of the report
    std::vector<CheckSpec> all = m.checks;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (auto& d : ctx->defs.at(all[i].name).deps)
            if (std::none_of(all.begin(), all.end(), [&](auto& c) { return c.name == d; })) all.push_back({d, json::object()});

    std::map<std::string, CheckOutcome> done;
    std::vector<std::string> pending;
    for (auto& c : all) pending.push_back(c.name);
    auto spec_of = [&](const std::string& n) {
        return *std::find_if(all.begin(), all.end(), [&](auto& c) { return c.name == n; });
    };
    unsigned jobs = std::max(1u, o.jobs);

    while (!pending.empty()) {
        // every check whose prerequisites are settled forms the next wave
        std::vector<std::string> wave, rest;
        for (auto& n : pending) {
            auto& deps = ctx->defs.at(n).deps;
            bool ready = std::all_of(deps.begin(), deps.end(), [&](auto& d) { return done.count(d); });
            (ready ? wave : rest).push_back(n);
        }
        if (wave.empty()) throw std::logic_error("cyclic check dependencies");
        for (std::size_t start = 0; start < wave.size(); start += jobs) {
            std::vector<std::pair<std::string, std::future<CheckOutcome>>> running;
            for (std::size_t k = start; k < std::min(wave.size(), start + jobs); ++k) {
                const std::string& n = wave[k];
                CheckSpec spec = spec_of(n);
                std::string failed_dep;
                for (auto& d : ctx->defs.at(n).deps)
                    if (!done.at(d).report.ok()) failed_dep = d;
                auto task = [&ctx, spec, failed_dep]() {
                    CheckOutcome out;
                    out.spec = spec;
                    if (!failed_dep.empty()) {
                        out.report.skip(spec.name, "prerequisite \"" + failed_dep + "\" failed");
                        return out;
                    }
                    auto t0 = std::chrono::steady_clock::now();
                    out.report.merge(guarded(ctx->defs.at(spec.name), spec), spec.name);
                    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                    return out;
                };
                running.emplace_back(n, jobs == 1 ? std::async(std::launch::deferred, task)
                                                  : std::async(std::launch::async, task));
            }
            for (auto& [n, f] : running) done.emplace(n, f.get());
        }
        pending = std::move(rest);
    }
    for (auto& spec : m.checks) res.checks.push_back(std::move(done.at(spec.name)));
    return res;
}

// ---- reports ----------------------------------------------------------------------------

json report_json(const RunResult& r) {
    json results = json::array(), checks = json::array();
    std::size_t pass = 0, fail = 0, skipped = 0;
    for (auto& c : r.checks) {
        json entry = {{"name", c.spec.name}, {"status", c.report.ok() ? "pass" : "fail"}, {"results", c.report.results().size()}};
        if (r.options.timings) entry["seconds"] = c.seconds;
        checks.push_back(entry);
        for (auto& x : c.report.results()) {
            json params = json::object();
            if (x.params.n) params["n"] = *x.params.n;
            if (x.params.d) params["d"] = *x.params.d;
            if (x.params.q0) params["q0"] = *x.params.q0;
            if (x.params.s0) params["s0"] = *x.params.s0;
            json j = {{"check", x.check}, {"params", params}, {"status", status_name(x.status)}};
            if (!x.witness.empty()) j["witness"] = x.witness;
            results.push_back(j);
            (x.status == Status::pass ? pass : x.status == Status::fail ? fail : skipped)++;
        }
    }
    json config = {{"seed", r.options.seed}};
    if (r.options.degree) config["degree"] = *r.options.degree;
    return {{"tool", "qbundle"},
            {"manifest", {{"kind", r.manifest.kind}, {"name", r.manifest.name}}},
            {"config", config},
            {"checks", checks},
            {"results", results},
            {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}, {"ok", r.ok()}}}};
}

std::string report_text(const RunResult& r) {
    std::ostringstream out;
    out << r.manifest.kind << (r.manifest.name.empty() ? "" : " \"" + r.manifest.name + "\"") << ", seed " << r.options.seed
        << "\n";
    std::size_t pass = 0, fail = 0, skipped = 0;
    for (auto& c : r.checks) {
        std::size_t cp = 0, cf = 0, cs = 0;
        for (auto& x : c.report.results()) (x.status == Status::pass ? cp : x.status == Status::fail ? cf : cs)++;
        pass += cp, fail += cf, skipped += cs;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f s", c.seconds);
        out << (cf ? "FAIL " : "pass ") << c.spec.name << "  (" << cp << " passed";
        if (cf) out << ", " << cf << " failed";
        if (cs) out << ", " << cs << " skipped";
        out << ", " << secs << ")\n";
        for (auto& x : c.report.results())
            if (x.status == Status::fail) out << "    " << x.check << (x.witness.empty() ? "" : ": " + x.witness) << "\n";
    }
    out << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
    return out.str();
}

}  // namespace qb
