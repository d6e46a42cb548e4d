// Finite-dimensional dictionary between entwinings (P, C, psi) and
// factorisations (A, P, Psi) with A = C^{*op}.
//
// With c_k dual to the basis e_k of A:
//   Psi(e_j (x) u) = sum_k psi(c_k (x) u)[v, c_j] v (x) e_k
//   e~(e_j) = sum_u e~[u, c_j] u
#include "qbundle/entwine.hpp"

#include <stdexcept>

namespace qb {

namespace {

Vec unit_vec(const Key& k) { return Vec{{k, Scalar(1)}}; }

std::vector<std::string> c_labels(const FinAlgebra& A) {
    std::vector<std::string> l;
    for (auto& a : A.space().labels()) l.push_back("c(" + a + ")");
    return l;
}

using PairTable = std::map<std::pair<Key, Key>, Tensor>;

}  // namespace

std::function<Tensor(const Key&, const Key&)> finite_psi_inverse(const Entwining& E, const FinAlgebra& P,
                                                                 const FinCoalgebra& C) {
    FinSpace cp = tensor_space(C.space(), P.space()), pc = tensor_space(P.space(), C.space());
    LinearMap m(cp, pc);
    for (auto& c : C.space().labels())
        for (auto& u : P.space().labels()) {
            Vec img;
            for (Tensor t = E(c, u); auto& [k, x] : t.terms()) img[pair_label(k[0], k[1])] += x;
            m.set(pair_label(c, u), img);
        }
    auto inv = inverse(m.matrix());
    if (!inv) return {};
    LinearMap mi(pc, cp, *inv);
    PairTable table;
    std::size_t np = P.dim();
    for (auto& u : P.space().labels())
        for (auto& c : C.space().labels()) {
            Tensor t("CP");
            for (auto& [l, x] : mi(pair_label(u, c))) {
                std::size_t i = cp.index(l);
                t.add({C.space().label(i / np), P.space().label(i % np)}, x);
            }
            table[{u, c}] = std::move(t);
        }
    return [table = std::move(table)](const Key& u, const Key& c) { return table.at({u, c}); };
}

Transported entwining_from_factorisation(const Factorisation& F) {
    const FinAlgebra& A = F.A();
    const FinAlgebra& P = F.P();
    auto CL = c_labels(A);
    Transported T;
    T.P = std::make_shared<FinAlgebra>(P);
    T.C = std::make_shared<FinCoalgebra>(codualize(A, CL));
    PairTable table;
    for (auto& c : CL)
        for (auto& u : P.space().labels()) table[{c, u}] = Tensor("PC");
    for (std::size_t j = 0; j < A.dim(); ++j)
        for (auto& u : P.space().labels())
            for (auto& [k, x] : F(A.space().label(j), u).terms())
                table[{CL[A.space().index(k[1])], u}].add({k[0], CL[j]}, x);
    T.E.P = T.P;
    T.E.C = T.C;
    T.E.psi = [table = std::move(table)](const Key& c, const Key& u) { return table.at({c, u}); };
    T.E.psi_inv = finite_psi_inverse(T.E, *T.P, *T.C);
    return T;
}

Factorisation factorisation_from_entwining(const Entwining& E, const FinAlgebra& P, const FinCoalgebra& C,
                                           std::vector<std::string> a_labels) {
    FinAlgebra A = dualize(C, std::move(a_labels));
    const auto& CL = C.space().labels();
    const auto& AL = A.space().labels();
    std::vector<Tensor> psi;
    for (std::size_t j = 0; j < A.dim(); ++j)
        for (auto& u : P.space().labels()) {
            Tensor t("PA");
            for (std::size_t k = 0; k < C.dim(); ++k)
                for (Tensor t2 = E(CL[k], u); auto& [idx, x] : t2.terms())
                    if (idx[1] == CL[j]) t.add({idx[0], AL[k]}, x);
            psi.push_back(std::move(t));
        }
    return Factorisation(std::move(A), P, std::move(psi));
}

Tensor copoint_to_tensor(const Copoint& e, const FinAlgebra& A, const FinCoalgebra& C) {
    Tensor t("PC");
    for (std::size_t j = 0; j < A.dim(); ++j)
        for (auto& [u, x] : e.values[j]) t.add({u, C.space().label(j)}, x);
    return t;
}

Copoint tensor_to_copoint(const Tensor& et, const FinAlgebra& A, const FinCoalgebra& C, const FinAlgebra&) {
    Copoint e;
    e.values.resize(A.dim());
    for (auto& [k, x] : et.terms()) e.values[C.space().index(k[1])][k[0]] += x;
    return e;
}

CMap cleaving_to_map(const Tensor& phi, const FinAlgebra& A, const FinCoalgebra& C) {
    std::map<Key, Vec> m;
    for (auto& c : C.space().labels()) m[c];
    for (auto& [k, x] : phi.terms()) m[C.space().label(A.space().index(k[1]))][k[0]] += x;
    return [m = std::move(m)](const Key& c) { return m.at(c); };
}

Report duality_bridge(const Factorisation& F, const std::optional<Copoint>& e) {
    Report r;
    const FinAlgebra& A = F.A();
    const FinAlgebra& P = F.P();
    Transported T = entwining_from_factorisation(F);
    const FinCoalgebra& C = *T.C;
    TestSet ts = all_pairs(P.space().labels(), C.space().labels());

    Report rf = check_factorisation(F), re = check_entwining(T.E, ts);
    r.add("axioms.agree", rf.ok() == re.ok(),
          std::string("factor ") + (rf.ok() ? "pass" : "fail") + ", entwine " + (re.ok() ? "pass" : "fail"));

    Factorisation back = factorisation_from_entwining(T.E, P, C, A.space().labels());
    r.add("double_transport.factorisation", same_factorisation(back, F), "");
    Transported T2 = entwining_from_factorisation(back);
    bool same = true;
    for (auto& c : C.space().labels())
        for (auto& u : P.space().labels()) same = same && T2.E(c, u) == T.E(c, u);
    r.add("double_transport.entwining", same, "");

    if (!e) return r;
    Tensor et = copoint_to_tensor(*e, A, C);
    Copoint e2 = tensor_to_copoint(et, A, C, P);
    bool rt = true;
    for (std::size_t j = 0; j < A.dim(); ++j) rt = rt && e2.values[j] == e->values[j];
    r.add("copoint.round_trip", rt, "");
    Report cf = check_copoint(F, *e), ce = check_copoint_tensor(T.E, et);
    r.add("copoint.agree", cf.ok() == ce.ok(),
          std::string("factor ") + (cf.ok() ? "pass" : "fail") + ", entwine " + (ce.ok() ? "pass" : "fail"));
    if (!cf.ok() || !ce.ok()) return r;

    Report tmp;
    GaloisData G = action_from_copoint(F, *e, tmp);
    Coaction D(T.E, et);
    CoGalois CG = galois_chi(D, P, C);
    r.add("M.agree", same_subspace(G.M, CG.M), "");
    // a |> u is Delta_P(u) paired with a on the C leg; the factor-side chi
    // acts on the first tensor factor, so it is compared with Delta_P(u) v
    auto paired = [&](const Tensor& pc, std::size_t j) {
        Vec out;
        for (auto& [k, x] : pc.terms())
            if (k[1] == C.space().label(j)) out[k[0]] += x;
        return out;
    };
    bool act_same = true;
    for (std::size_t j = 0; j < A.dim(); ++j)
        for (auto& u : P.space().labels())
            act_same = act_same && G.act(A.space().label(j), unit_vec(u)) == paired(D.delta(u), j);
    r.add("action.agree", act_same, "");
    bool chi_same = true;
    for (auto& q : G.Q.space.labels()) {
        Tensor qt = Tensor::pure("Q", {q});
        Tensor first("PC");
        for (Tensor rep = G.lift(qt); auto& [k, x] : rep.terms())
            first += mul_leg_right(D.delta(k[0]), 0, unit_vec(k[1]), P).scaled(x);
        for (std::size_t j = 0; j < A.dim(); ++j)
            chi_same = chi_same && G.chi_of(unit_vec(A.space().label(j)), qt) == paired(first, j);
    }
    r.add("chi.agree", chi_same, "");
    bool galois_f = find_chi_sharp(G);
    r.add("galois.agree", galois_f == CG.chi_inv.has_value(),
          std::string("chi# ") + (galois_f ? "exists" : "missing") + ", chi^-1 " + (CG.chi_inv ? "exists" : "missing"));
    return r;
}

}  // namespace qb
