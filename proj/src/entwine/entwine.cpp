// Entwinings, copoint tensors, coactions and the coalgebra Galois map.
#include "qbundle/entwine.hpp"

#include <stdexcept>

namespace qb {

namespace {

Vec unit_vec(const Key& k) { return Vec{{k, Scalar(1)}}; }

std::string show(const Tensor& t) { return t.str(); }

}  // namespace

Tensor Entwining::through(const Key& c, const Tensor& w) const {
    return through(tensor(Tensor::pure("C", {c}), w));
}

Tensor Entwining::through(const Tensor& cw) const {
    std::size_t n = cw.arity() - 1;
    if (n == 0) return cw;
    return twist_through(cw, 0, n, psi, 'C');
}

Tensor Entwining::back(const Tensor& wc) const {
    if (!psi_inv) throw std::logic_error("entwining has no inverse");
    std::size_t n = wc.arity() - 1;
    Tensor t = wc;
    for (std::size_t i = n; i-- > 0;) {
        std::string out = t.profile().substr(i, 2);
        std::swap(out[0], out[1]);
        t = apply_pair(t, i, psi_inv, out);
    }
    return t;
}

TestSet all_pairs(std::vector<Key> p, std::vector<Key> c) {
    TestSet T;
    for (auto& u : p)
        for (auto& v : p) T.p_pairs.emplace_back(u, v);
    T.p = std::move(p);
    T.c = std::move(c);
    return T;
}

Report check_entwining(const Entwining& E, const TestSet& T) {
    Report r;
    const Algebra& P = *E.P;
    const Coalgebra& C = *E.C;
    Tensor one = from_vec(P.one(), 'P');

    std::string w;
    for (auto& c : T.c) {
        Tensor lhs = E.through(c, one), rhs = tensor(one, Tensor::pure("C", {c}));
        if (lhs != rhs && w.empty()) w = "c=" + c;
    }
    r.add("psi.unit_P", w.empty(), w);

    w.clear();
    for (auto& c : T.c) {
        for (auto& [u, v] : T.p_pairs) {
            Tensor lhs = E.through(c, from_vec(P.mul(unit_vec(u), unit_vec(v)), 'P'));
            Tensor rhs = contract_adjacent(E.through(c, Tensor::pure("PP", {u, v})), 0, P);
            if (lhs != rhs) {
                w = "c=" + c + " u=" + u + " v=" + v + ": " + show(lhs) + " vs " + show(rhs);
                break;
            }
        }
        if (!w.empty()) break;
    }
    r.add("psi.multiplicative_P", w.empty(), w);

    w.clear();
    std::string w2;
    for (auto& c : T.c)
        for (auto& u : T.p) {
            Tensor pc = E(c, u);
            Tensor lhs = apply_leg(pc, 1, [&](const Key& x) { return C.comult(x); }, "CC");
            Tensor t = tensor(C.comult(c), Tensor::pure("P", {u}));
            t = apply_pair(t, 1, E.psi, "PC");
            t = apply_pair(t, 0, E.psi, "PC");
            if (lhs != t && w.empty()) w = "c=" + c + " u=" + u;
            Tensor e1 = eval_leg(pc, 1, [&](const Key& x) { return C.counit(x); });
            Tensor e2 = Tensor::pure("P", {u}, C.counit(c));
            if (e1 != e2 && w2.empty()) w2 = "c=" + c + " u=" + u;
        }
    r.add("psi.comultiplicative_C", w.empty(), w);
    r.add("psi.counit_C", w2.empty(), w2);
    return r;
}

// ---- coactions --------------------------------------------------------------

Coaction::Coaction(Entwining E, Tensor e_tilde) : E_(std::move(E)), et_(std::move(e_tilde)) {
    if (et_.profile() != "PC") throw std::invalid_argument("copoint tensor must have profile PC");
}

Coaction Coaction::copointed(Entwining E, const Key& e) { return copointed(std::move(E), Vec{{e, Scalar(1)}}); }

Coaction Coaction::copointed(Entwining E, const Vec& e) {
    Tensor et = tensor(E.P->one(), e, "PC");
    Coaction D(std::move(E), std::move(et));
    D.e_ = e;
    return D;
}

Tensor Coaction::delta(const Vec& u) const {
    Tensor out("PC");
    if (e_) {
        for (auto& [g, x] : *e_)
            for (auto& [k, c] : u) out += E_(g, k).scaled(x * c);
        return out;
    }
    for (auto& [idx, ce] : et_.terms())
        for (auto& [k, c] : u) out += mul_leg_left(unit_vec(idx[0]), E_(idx[1], k), 0, *E_.P).scaled(ce * c);
    return out;
}

Tensor Coaction::delta_forms(const Tensor& w) const {
    std::string prof(w.arity(), 'P');
    prof += 'C';
    Tensor out(prof);
    if (e_) {
        for (auto& [g, x] : *e_) out += E_.through(g, w).scaled(x);
        return out;
    }
    for (auto& [idx, ce] : et_.terms()) {
        Tensor t = E_.through(idx[1], w);
        out += mul_leg_left(unit_vec(idx[0]), t, 0, *E_.P).scaled(ce);
    }
    return out;
}

Tensor Coaction::chi_tilde(const Tensor& w) const {
    Tensor out("PC");
    for (auto& [idx, c] : w.terms()) out += mul_leg_left(unit_vec(idx[0]), delta(idx[1]), 0, *E_.P).scaled(c);
    return out;
}

Tensor Coaction::left_delta(const Vec& u) const {
    return E_.back(mul_leg_left(u, et_, 0, *E_.P));
}

Report check_copoint_tensor(const Entwining& E, const Tensor& et) {
    Report r;
    Tensor lhs("PCC");
    for (auto& [a, ca] : et.terms())
        for (auto& [b, cb] : et.terms()) {
            Tensor t = mul_leg_left(unit_vec(a[0]), E(a[1], b[0]), 0, *E.P);
            lhs += tensor(t, Tensor::pure("C", {b[1]})).scaled(ca * cb);
        }
    Tensor rhs = apply_leg(et, 1, [&](const Key& x) { return E.C->comult(x); }, "CC");
    r.add("copoint.comultiplicative", lhs == rhs, show(lhs) + " vs " + show(rhs));
    Tensor e = eval_leg(et, 1, [&](const Key& x) { return E.C->counit(x); });
    r.add("copoint.counit", e == from_vec(E.P->one(), 'P'), show(e));
    return r;
}

Report check_coaction(const Coaction& D, const TestSet& T) {
    Report r;
    const Entwining& E = D.entwining();
    const Algebra& P = *E.P;
    r.add("coaction.e_tilde", D.delta(P.one()) == D.e_tilde(), show(D.delta(P.one())));
    std::string wc, wa, wm;
    for (auto& u : T.p) {
        Tensor du = D.delta(u);
        if (eval_leg(du, 1, [&](const Key& x) { return E.C->counit(x); }) != Tensor::pure("P", {u}) && wc.empty())
            wc = "u=" + u;
        Tensor l = apply_leg(du, 0, [&](const Key& x) { return D.delta(x); }, "PC");
        Tensor rr = apply_leg(du, 1, [&](const Key& x) { return E.C->comult(x); }, "CC");
        if (l != rr && wa.empty()) wa = "u=" + u;
    }
    for (auto& [u, v] : T.p_pairs) {
        Tensor lhs = D.delta(P.mul(unit_vec(u), unit_vec(v)));
        Tensor t = apply_pair(tensor(D.delta(u), Tensor::pure("P", {v})), 1, E.psi, "PC");
        Tensor rhs = contract_adjacent(t, 0, P);
        if (lhs != rhs && wm.empty()) wm = "u=" + u + " v=" + v;
    }
    r.add("coaction.counit", wc.empty(), wc);
    r.add("coaction.coassociative", wa.empty(), wa);
    r.add("coaction.entwined", wm.empty(), wm);
    return r;
}

namespace {

// coordinates of a family of tensors in a common key index
struct TensorIndex {
    std::map<Tensor::Index, std::size_t> idx;
    std::size_t at(const Tensor::Index& k) {
        auto [it, fresh] = idx.emplace(k, idx.size());
        return it->second;
    }
};

}  // namespace

std::size_t tensor_rank(const std::vector<Tensor>& ts) {
    TensorIndex ix;
    std::vector<std::map<std::size_t, Scalar>> rows;
    for (auto& t : ts) {
        std::map<std::size_t, Scalar> row;
        for (auto& [k, c] : t.terms()) row[ix.at(k)] = c;
        rows.push_back(std::move(row));
    }
    SparseSystem s(ix.idx.size());
    for (auto& row : rows) s.add(row);
    return s.rank();
}

// kernel of the linear map sum x_i span_i |-> sum x_i f(span_i)
std::vector<Column> tensor_kernel(const std::vector<Tensor>& images) {
    TensorIndex ix;
    for (auto& t : images)
        for (auto& [k, c] : t.terms()) ix.at(k);
    Matrix m(ix.idx.size(), images.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        for (auto& [k, c] : images[j].terms()) m.at(ix.at(k), j) = c;
    if (m.rows() == 0) {
        std::vector<Column> all;
        for (std::size_t j = 0; j < images.size(); ++j) {
            Column e(images.size());
            e[j] = Scalar(1);
            all.push_back(e);
        }
        return all;
    }
    return kernel(m);
}

std::vector<Vec> fixed_subalgebra(const Coaction& D, const std::vector<Vec>& span) {
    std::vector<Tensor> img;
    for (auto& m : span) img.push_back(D.delta(m) - mul_leg_left(m, D.e_tilde(), 0, *D.entwining().P));
    std::vector<Vec> out;
    for (auto& k : tensor_kernel(img)) {
        Vec v;
        for (std::size_t j = 0; j < span.size(); ++j)
            if (!k[j].is_zero()) axpy(v, k[j], span[j]);
        if (!is_zero(v)) out.push_back(std::move(v));
    }
    return out;
}

Report check_entwined_module(const Entwining& E, const EntwinedModule& V, const TestSet& T) {
    Report r;
    auto act_t = [&](const Key& v, const Key& u) { return from_vec(V.act(v, u), 'V'); };
    std::string w;
    for (auto& v : V.basis) {
        for (auto& u : T.p) {
            Tensor lhs = apply_leg(act_t(v, u), 0, V.coact, "VC");
            Tensor t = apply_pair(tensor(V.coact(v), Tensor::pure("P", {u})), 1, E.psi, "PC");
            Tensor rhs = apply_pair(t, 0, act_t, "V");
            if (lhs != rhs) {
                w = "v=" + v + " u=" + u + ": " + show(lhs) + " vs " + show(rhs);
                break;
            }
        }
        if (!w.empty()) break;
    }
    r.add("module.entwined", w.empty(), w);
    return r;
}

Report check_forms_comodule(const Coaction& D, const std::vector<Tensor>& forms, const TestSet& T) {
    Report r;
    const Entwining& E = D.entwining();
    const Algebra& P = *E.P;
    std::string wf, wm, wa;
    for (auto& w : forms) {
        std::size_t n = w.arity();
        Tensor dw = D.delta_forms(w);
        if (!is_form(dw, P, n) && wf.empty()) wf = show(w);
        // coassociativity: apply Delta to the form legs of each term
        Tensor l(std::string(n, 'P') + "CC");
        for (auto& [idx, c] : dw.terms()) {
            Tensor::Index head(idx.begin(), idx.begin() + static_cast<long>(n));
            l += tensor(D.delta_forms(Tensor::pure(std::string(n, 'P'), head)), Tensor::pure("C", {idx[n]})).scaled(c);
        }
        Tensor rr = apply_leg(dw, n, [&](const Key& x) { return E.C->comult(x); }, "CC");
        if (l != rr && wa.empty()) wa = show(w);
        for (auto& u : T.p) {
            Tensor lhs = D.delta_forms(right_mul(w, unit_vec(u), P, n - 1));
            Tensor t = apply_pair(tensor(dw, Tensor::pure("P", {u})), n, E.psi, "PC");
            Tensor rhs = contract_adjacent(t, n - 1, P);
            if (lhs != rhs && wm.empty()) wm = show(w) + " u=" + u;
        }
    }
    r.add("forms.coaction_values_are_forms", wf.empty(), wf);
    r.add("forms.coassociative", wa.empty(), wa);
    r.add("forms.entwined", wm.empty(), wm);
    return r;
}

Report check_cov_d(const Entwining& E, const std::vector<Tensor>& forms, const std::vector<Key>& c_keys) {
    Report r;
    std::string w;
    for (auto& f : forms)
        for (auto& c : c_keys) {
            Tensor lhs = E.through(c, d(f, *E.P));
            Tensor rhs = d(E.through(c, f), *E.P, f.arity());
            if (lhs != rhs && w.empty()) w = "c=" + c + " w=" + show(f);
        }
    r.add("psi_bullet.commutes_with_d", w.empty(), w);
    return r;
}

// ---- Galois map ---------------------------------------------------------------

CoGalois galois_chi(const Coaction& D, const FinAlgebra& P, const FinCoalgebra& C) {
    CoGalois G;
    std::vector<Vec> basis;
    for (auto& l : P.space().labels()) basis.push_back(unit_vec(l));
    for (auto& m : fixed_subalgebra(D, basis)) G.M.push_back(P.space().coords(m));

    FinSpace pp = tensor_space(P.space(), P.space());
    std::vector<Column> sub;
    const auto& PL = P.space().labels();
    for (auto& mc : G.M) {
        Vec mv = P.space().vec(mc);
        for (auto& u : PL)
            for (auto& v : PL) {
                Vec rel;
                for (auto& [k, c] : P.mul(unit_vec(u), mv)) rel[pair_label(k, v)] += c;
                for (auto& [k, c] : P.mul(mv, unit_vec(v))) rel[pair_label(u, k)] -= c;
                if (!is_zero(rel)) sub.push_back(pp.coords(rel));
            }
    }
    G.Q = quotient(pp, sub);
    FinSpace pc = tensor_space(P.space(), C.space());
    G.chi = LinearMap(G.Q.space, pc);
    std::size_t np = P.dim();
    for (auto& q : G.Q.space.labels()) {
        Tensor rep("PP");
        for (auto& [l, c] : G.Q.section(q)) {
            std::size_t i = pp.index(l);
            rep.add({PL[i / np], PL[i % np]}, c);
        }
        Vec img;
        for (Tensor t = D.chi_tilde(rep); auto& [k, c] : t.terms()) img[pair_label(k[0], k[1])] += c;
        G.chi.set(q, img);
    }
    // a non-square chi is simply not bijective
    if (G.chi.matrix().rows() == G.chi.matrix().cols())
        if (auto inv = inverse(G.chi.matrix())) G.chi_inv = LinearMap(pc, G.Q.space, *inv);
    return G;
}

Entwining entwining_from_galois(const CoGalois& G, const Coaction& D, const FinAlgebra& P, const FinCoalgebra& C) {
    if (!G.chi_inv) throw std::invalid_argument("chi is not invertible");
    const Vec one = P.one();
    FinSpace pp = tensor_space(P.space(), P.space());
    std::size_t np = P.dim();
    auto Pp = std::make_shared<FinAlgebra>(P);
    std::map<std::pair<Key, Key>, Tensor> table;
    for (auto& c : C.space().labels()) {
        Vec oc;
        for (auto& [k, x] : one) oc[pair_label(k, c)] += x;
        Tensor rep("PP");
        for (auto& [q, x] : (*G.chi_inv)(oc))
            for (auto& [l, y] : G.Q.section(q)) {
                std::size_t i = pp.index(l);
                rep.add({P.space().label(i / np), P.space().label(i % np)}, x * y);
            }
        for (auto& u : P.space().labels()) table[{c, u}] = D.chi_tilde(right_mul(rep, unit_vec(u), P, 1));
    }
    Entwining E;
    E.P = Pp;
    E.C = std::make_shared<FinCoalgebra>(C);
    E.psi = [table = std::move(table)](const Key& c, const Key& u) { return table.at({c, u}); };
    return E;
}

}  // namespace qb
