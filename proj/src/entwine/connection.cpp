// Connection one-forms, the projections Pi and Pi-bar, strongness and
// connections on trivial bundles.
#include "qbundle/entwine.hpp"

#include <stdexcept>

namespace qb {

namespace {

Vec unit_vec(const Key& k) { return Vec{{k, Scalar(1)}}; }

std::string show(const Tensor& t) { return t.str(); }

Tensor key_t(const Key& c) { return Tensor::pure("C", {c}); }

// u dv = u (x) v - uv (x) 1
Tensor u_dv(const Algebra& P, const Vec& u, const Vec& v) {
    return tensor(u, v, "PP") - tensor(P.mul(u, v), P.one(), "PP");
}

std::vector<Tensor> spanning_forms(const Algebra& P, const std::vector<Key>& p) {
    std::vector<Tensor> out;
    for (auto& u : p)
        for (auto& v : p)
            if (Tensor t = u_dv(P, unit_vec(u), unit_vec(v)); !t.is_zero()) out.push_back(std::move(t));
    return out;
}

std::vector<Tensor> horizontal_forms(const Algebra& P, const std::vector<Key>& p, const std::vector<Vec>& m_span) {
    std::vector<Tensor> out;
    for (auto& m : m_span) {
        Tensor dm = d(m, P);
        for (auto& u : p)
            for (auto& v : p)
                if (Tensor t = right_mul(left_mul(unit_vec(u), dm, P), unit_vec(v), P, 1); !t.is_zero())
                    out.push_back(std::move(t));
    }
    return out;
}

Tensor sum_over_coproduct(const Coalgebra& C, const Key& c, const std::function<Tensor(const Key&, const Key&)>& f,
                          const std::string& profile) {
    Tensor out(profile);
    for (Tensor dc = C.comult(c); auto& [k, x] : dc.terms()) out += f(k[0], k[1]).scaled(x);
    return out;
}

}  // namespace

Report verify_connection_form(const Coaction& D, const ConnectionForm& omega, const std::vector<Key>& c_keys) {
    Report r;
    const Entwining& E = D.entwining();
    const Algebra& P = *E.P;
    const Coalgebra& C = *E.C;

    std::string w;
    for (auto& c : c_keys)
        if (!is_form(omega(c), P) && w.empty()) w = "c=" + c;
    r.add("omega.values_are_forms", w.empty(), w);

    Tensor i("PP");
    for (auto& [idx, x] : D.e_tilde().terms()) i += left_mul(unit_vec(idx[0]), omega(idx[1]), P).scaled(x);
    r.add("omega.i", i.is_zero(), show(i));

    w.clear();
    for (auto& c : c_keys) {
        Tensor lhs = D.chi_tilde(omega(c));
        Tensor rhs = tensor(from_vec(P.one(), 'P'), key_t(c)) - D.e_tilde().scaled(C.counit(c));
        if (lhs != rhs && w.empty()) w = "c=" + c + ": " + show(lhs) + " vs " + show(rhs);
    }
    r.add("omega.ii", w.empty(), w);

    w.clear();
    for (auto& c : c_keys) {
        Tensor lhs = sum_over_coproduct(C, c, [&](const Key& a, const Key& b) { return E.through(a, omega(b)); }, "PPC");
        Tensor rhs = sum_over_coproduct(C, c, [&](const Key& a, const Key& b) { return tensor(omega(a), key_t(b)); }, "PPC");
        if (lhs != rhs && w.empty()) w = "c=" + c + ": " + show(lhs) + " vs " + show(rhs);
    }
    r.add("omega.iii", w.empty(), w);
    return r;
}

Tensor apply_Pi(const Coaction& D, const ConnectionForm& omega, const Tensor& w) {
    const Algebra& P = *D.entwining().P;
    Tensor out("PP");
    for (auto& [idx, x] : w.terms())
        for (Tensor dv = D.delta(idx[1]); auto& [k, y] : dv.terms())
            out += left_mul(P.mul(unit_vec(idx[0]), unit_vec(k[0])), omega(k[1]), P).scaled(x * y);
    return out;
}

Report check_Pi(const Coaction& D, const ConnectionForm& omega, const std::vector<Key>& p,
                const std::vector<Vec>& m_span) {
    Report r;
    const Algebra& P = *D.entwining().P;
    std::string wi, wl, wc, wh;
    for (auto& f : spanning_forms(P, p)) {
        Tensor pf = apply_Pi(D, omega, f);
        if (apply_Pi(D, omega, pf) != pf && wi.empty()) wi = show(f);
        if (D.chi_tilde(pf) != D.chi_tilde(f) && wc.empty()) wc = show(f);
        for (auto& x : p)
            if (apply_Pi(D, omega, left_mul(unit_vec(x), f, P)) != left_mul(unit_vec(x), pf, P) && wl.empty())
                wl = "x=" + x + " w=" + show(f);
    }
    for (auto& h : horizontal_forms(P, p, m_span))
        if (!apply_Pi(D, omega, h).is_zero() && wh.empty()) wh = show(h);
    r.add("Pi.idempotent", wi.empty(), wi);
    r.add("Pi.left_linear", wl.empty(), wl);
    r.add("Pi.vertical_part", wc.empty(), wc);
    r.add("Pi.kills_horizontal", wh.empty(), wh);
    return r;
}

namespace {

// dim ker f on Omega^1 and dim P(Omega^1 M)P for a projection f
Report kernel_vs_horizontal(const FinAlgebra& P, const std::vector<Vec>& m_span,
                            const std::function<Tensor(const Tensor&)>& f, const std::string& name) {
    Report r;
    const auto& PL = P.space().labels();
    auto forms = spanning_forms(P, PL);
    std::vector<Tensor> img;
    for (auto& w : forms) img.push_back(f(w));
    std::size_t omega1 = tensor_rank(forms), ker = omega1 - tensor_rank(img);
    auto hor = horizontal_forms(P, PL, m_span);
    std::size_t h = tensor_rank(hor);
    bool killed = true;
    for (auto& x : hor) killed = killed && f(x).is_zero();
    r.add(name + ".kernel_is_horizontal", killed && h == ker,
          "dim ker " + std::to_string(ker) + ", dim P(dM)P " + std::to_string(h));
    return r;
}

}  // namespace

Report check_Pi_kernel(const Coaction& D, const ConnectionForm& omega, const FinAlgebra& P,
                       const std::vector<Vec>& m_span) {
    return kernel_vs_horizontal(P, m_span, [&](const Tensor& w) { return apply_Pi(D, omega, w); }, "Pi");
}

Report strongness_check(const Coaction& D, const ConnectionForm& omega, const std::vector<Key>& c_keys) {
    Report r;
    if (!D.grouplike()) {
        r.skip("strong.right", "bundle is not copointed");
        return r;
    }
    const Entwining& E = D.entwining();
    const Algebra& P = *E.P;
    Tensor e = from_vec(*D.grouplike(), 'C');
    Tensor oo = tensor(P.one(), P.one(), "PP");
    std::string w;
    for (auto& c : c_keys) {
        Tensor lhs = apply_leg(omega(c), 1, [&](const Key& x) { return D.delta(x); }, "PC");
        Tensor rhs = tensor(oo, key_t(c)) - tensor(oo, e).scaled(E.C->counit(c)) +
                     sum_over_coproduct(*E.C, c, [&](const Key& a, const Key& b) { return tensor(omega(a), key_t(b)); }, "PPC");
        if (lhs != rhs && w.empty()) w = "c=" + c + ": " + show(lhs - rhs);
    }
    r.add("strong.right", w.empty(), w);
    return r;
}

Report left_strongness_check(const Coaction& D, const ConnectionForm& omega, const std::vector<Key>& c_keys) {
    Report r;
    const Entwining& E = D.entwining();
    if (!D.grouplike() || !E.psi_inv) {
        r.skip("strong.left", "needs a grouplike e and psi^-1");
        return r;
    }
    const Algebra& P = *E.P;
    Tensor e = from_vec(*D.grouplike(), 'C');
    Tensor oo = tensor(P.one(), P.one(), "PP");
    std::string w;
    for (auto& c : c_keys) {
        Tensor lhs = apply_leg(omega(c), 0, [&](const Key& x) { return D.left_delta(unit_vec(x)); }, "CP");
        Tensor rhs = tensor(key_t(c), oo) - tensor(e, oo).scaled(E.C->counit(c)) +
                     sum_over_coproduct(*E.C, c, [&](const Key& a, const Key& b) { return tensor(key_t(a), omega(b)); }, "CPP");
        if (lhs != rhs && w.empty()) w = "c=" + c + ": " + show(lhs - rhs);
    }
    r.add("strong.left", w.empty(), w);
    return r;
}

// sigma o chi_L: sum x (x) y |-> sum omega(x_(1)) x_(oo) y
Tensor apply_Pi_bar(const Coaction& D, const ConnectionForm& omega, const Tensor& w) {
    const Algebra& P = *D.entwining().P;
    Tensor out("PP");
    for (auto& [idx, x] : w.terms())
        for (Tensor ld = D.left_delta(unit_vec(idx[0])); auto& [k, y] : ld.terms())
            out += right_mul(omega(k[0]), P.mul(unit_vec(k[1]), unit_vec(idx[1])), P, 1).scaled(x * y);
    return out;
}

namespace {

// chi_L(u (x) v) = u_(1) (x) u_(oo) v
Tensor chi_left(const Coaction& D, const Tensor& w) {
    const Algebra& P = *D.entwining().P;
    Tensor out("CP");
    for (auto& [idx, x] : w.terms())
        out += mul_leg_right(D.left_delta(unit_vec(idx[0])), 1, unit_vec(idx[1]), P).scaled(x);
    return out;
}

// left coaction on forms: psi^-(n) (w e~)
Tensor left_delta_forms(const Coaction& D, const Tensor& w) {
    const Entwining& E = D.entwining();
    std::size_t n = w.arity();
    Tensor t(std::string(n, 'P') + "C");
    for (auto& [idx, x] : D.e_tilde().terms())
        t += tensor(mul_leg_right(w, n - 1, unit_vec(idx[0]), *E.P), key_t(idx[1])).scaled(x);
    return E.back(t);
}

}  // namespace

Report left_theory(const Coaction& D, const ConnectionForm& omega, const TestSet& T, const std::vector<Vec>& m_span) {
    Report r;
    const Entwining& E = D.entwining();
    const Algebra& P = *E.P;
    const Coalgebra& C = *E.C;
    if (!E.psi_inv) {
        r.skip("left", "psi^-1 unavailable");
        return r;
    }
    std::string w1, w2;
    for (auto& c : T.c)
        for (auto& u : T.p) {
            Tensor cu = Tensor::pure("CP", {c, u}), uc = Tensor::pure("PC", {u, c});
            if (E.back(E.through(cu)) != cu && w1.empty()) w1 = "c=" + c + " u=" + u;
            if (E.through(E.back(uc)) != uc && w2.empty()) w2 = "c=" + c + " u=" + u;
        }
    r.add("psi_inv.left_inverse", w1.empty(), w1);
    r.add("psi_inv.right_inverse", w2.empty(), w2);
    r.add("left_delta.unit", D.left_delta(P.one()) == E.back(D.e_tilde()), "");

    std::string wc, wa;
    for (auto& u : T.p) {
        Tensor lu = D.left_delta(unit_vec(u));
        if (eval_leg(lu, 0, [&](const Key& x) { return C.counit(x); }) != Tensor::pure("P", {u}) && wc.empty())
            wc = "u=" + u;
        Tensor l = apply_leg(lu, 1, [&](const Key& x) { return D.left_delta(unit_vec(x)); }, "CP");
        Tensor rr = apply_leg(lu, 0, [&](const Key& x) { return C.comult(x); }, "CC");
        if (l != rr && wa.empty()) wa = "u=" + u;
    }
    r.add("left_delta.counit", wc.empty(), wc);
    r.add("left_delta.coassociative", wa.empty(), wa);

    Tensor pe = E.back(D.e_tilde());
    std::string wm;
    for (auto& m : m_span)
        if (D.left_delta(m) != mul_leg_right(pe, 1, m, P) && wm.empty()) wm = show(from_vec(m, 'P'));
    r.add("left_delta.M_characterisation", wm.empty(), wm);

    std::string wi, wl, wh, wv, wpsi, wcov;
    auto Pb = [&](const Tensor& w) { return apply_Pi_bar(D, omega, w); };
    for (auto& f : spanning_forms(P, T.p)) {
        Tensor pf = Pb(f);
        if (Pb(pf) != pf && wi.empty()) wi = show(f);
        for (auto& x : T.p)
            if (Pb(right_mul(f, unit_vec(x), P, 1)) != right_mul(pf, unit_vec(x), P, 1) && wl.empty())
                wl = "x=" + x + " w=" + show(f);
        if (chi_left(D, pf) != chi_left(D, f) && wv.empty()) wv = show(f);
        if (E.through(chi_left(D, f)) != D.chi_tilde(f) && wpsi.empty()) wpsi = show(f);
    }
    for (auto& h : horizontal_forms(P, T.p, m_span))
        if (!Pb(h).is_zero() && wh.empty()) wh = show(h);
    // D-bar u = du - Pi-bar(du) is left covariant
    for (auto& u : T.p) {
        Tensor du = d(unit_vec(u), P);
        Tensor Du = du - Pb(du);
        Tensor lhs = left_delta_forms(D, Du);
        Tensor rhs("CPP");
        for (Tensor lu = D.left_delta(unit_vec(u)); auto& [k, x] : lu.terms()) {
            Tensor dk = d(unit_vec(k[1]), P);
            rhs += tensor(key_t(k[0]), dk - Pb(dk)).scaled(x);
        }
        if (lhs != rhs && wcov.empty()) wcov = "u=" + u;
    }
    r.add("Pi_bar.idempotent", wi.empty(), wi);
    r.add("Pi_bar.right_linear", wl.empty(), wl);
    r.add("Pi_bar.vertical_part", wv.empty(), wv);
    r.add("chi_left.psi_conjugate", wpsi.empty(), wpsi);
    r.add("Pi_bar.kills_horizontal", wh.empty(), wh);
    r.add("D_bar.left_covariant", wcov.empty(), wcov);
    return r;
}

Report check_Pi_bar_kernel(const Coaction& D, const ConnectionForm& omega, const FinAlgebra& P,
                           const std::vector<Vec>& m_span) {
    return kernel_vs_horizontal(P, m_span, [&](const Tensor& w) { return apply_Pi_bar(D, omega, w); }, "Pi_bar");
}

// ---- trivial bundles --------------------------------------------------------------

std::optional<std::vector<Vec>> convolution_inverse(const FinCoalgebra& C, const FinAlgebra& P, const CMap& phi) {
    std::size_t nc = C.dim(), np = P.dim();
    const auto& CL = C.space().labels();
    const auto& PL = P.space().labels();
    // unknown X[c][x]; equation sum X(c_1) phi(c_2) = eps(c) 1
    Matrix a(nc * np, nc * np);
    Column b(nc * np);
    for (std::size_t k = 0; k < nc; ++k) {
        Column one = P.space().coords(scaled(P.one(), C.counit(CL[k])));
        for (std::size_t i = 0; i < np; ++i) b[k * np + i] = one[i];
        for (Tensor dc = C.comult(CL[k]); auto& [idx, x] : dc.terms()) {
            std::size_t c1 = C.space().index(idx[0]);
            Vec p2 = phi(idx[1]);
            for (std::size_t j = 0; j < np; ++j) {
                Column prod = P.space().coords(P.mul(unit_vec(PL[j]), p2));
                for (std::size_t i = 0; i < np; ++i) a.at(k * np + i, c1 * np + j) += x * prod[i];
            }
        }
    }
    Solution s = solve(a, b);
    if (!s.feasible) return std::nullopt;
    std::vector<Vec> inv(nc);
    for (std::size_t c = 0; c < nc; ++c)
        for (std::size_t j = 0; j < np; ++j)
            if (!s.particular[c * np + j].is_zero()) inv[c][PL[j]] = s.particular[c * np + j];
    // two-sided
    for (std::size_t k = 0; k < nc; ++k) {
        Vec acc;
        for (Tensor dc = C.comult(CL[k]); auto& [idx, x] : dc.terms())
            axpy(acc, x, P.mul(phi(idx[0]), inv[C.space().index(idx[1])]));
        if (acc != scaled(P.one(), C.counit(CL[k]))) return std::nullopt;
    }
    return inv;
}

Report check_cleaving_map(const Coaction& D, const CMap& phi, const CMap& phi_inv, const std::vector<Key>& c_keys) {
    Report r;
    const Entwining& E = D.entwining();
    const Algebra& P = *E.P;
    const Coalgebra& C = *E.C;
    std::string wl, wr, wcov, wcov1;
    for (auto& c : c_keys) {
        Vec l, rr;
        Tensor cov("PC"), cov1("PC");
        for (Tensor dc = C.comult(c); auto& [k, x] : dc.terms()) {
            axpy(l, x, P.mul(phi_inv(k[0]), phi(k[1])));
            axpy(rr, x, P.mul(phi(k[0]), phi_inv(k[1])));
            cov += tensor(from_vec(phi(k[0]), 'P'), key_t(k[1])).scaled(x);
            for (auto& [u, y] : phi_inv(k[1])) cov1 += E(k[0], u).scaled(x * y);
        }
        Vec e = scaled(P.one(), C.counit(c));
        if (l != e && wl.empty()) wl = "c=" + c;
        if (rr != e && wr.empty()) wr = "c=" + c;
        if (D.delta(phi(c)) != cov && wcov.empty()) wcov = "c=" + c;
        if (cov1 != mul_leg_left(phi_inv(c), D.e_tilde(), 0, P) && wcov1.empty()) wcov1 = "c=" + c;
    }
    r.add("phi.convolution_left_inverse", wl.empty(), wl);
    r.add("phi.convolution_right_inverse", wr.empty(), wr);
    r.add("phi.covariant", wcov.empty(), wcov);
    r.add("phi_inv.covariant", wcov1.empty(), wcov1);
    if (D.grouplike()) {
        Vec pe;
        for (auto& [g, x] : *D.grouplike()) axpy(pe, x, phi(g));
        r.add("phi.normalised", pe == P.one(), "");
    }
    return r;
}

ConnectionForm trivial_connection(const Coaction& D, const CMap& phi, const CMap& phi_inv, const OneFormMap& alpha) {
    const Entwining& E = D.entwining();
    auto P = E.P;
    auto C = E.C;
    return [P, C, phi, phi_inv, alpha](const Key& c) {
        Tensor out("PP");
        for (Tensor dc = C->comult(c); auto& [k, x] : dc.terms()) {
            out += left_mul(phi_inv(k[0]), d(phi(k[1]), *P), *P).scaled(x);
            for (Tensor d2 = C->comult(k[1]); auto& [k2, y] : d2.terms()) {
                Tensor a = alpha(k2[0]);
                if (a.is_zero()) continue;
                out += right_mul(left_mul(phi_inv(k[0]), a, *P), phi(k2[1]), *P, 1).scaled(x * y);
            }
        }
        return out;
    };
}

ConnectionSolution solve_connection_form(const Coaction& D, const FinAlgebra& P, const FinCoalgebra& C,
                                         unsigned conditions) {
    const Entwining& E = D.entwining();
    const auto& PL = P.space().labels();
    const auto& CL = C.space().labels();
    std::size_t np = P.dim();
    std::map<std::string, std::size_t> rows;
    std::vector<std::map<std::size_t, Scalar>> eqs;
    std::vector<Scalar> rhs;
    auto row = [&](const std::string& tag, const Tensor::Index& k) {
        std::string key = tag;
        for (auto& x : k) key += "#" + x;
        auto [it, fresh] = rows.emplace(key, eqs.size());
        if (fresh) {
            eqs.emplace_back();
            rhs.emplace_back();
        }
        return it->second;
    };
    auto add = [&](const std::string& tag, const Tensor& t, std::size_t var, const Scalar& s) {
        for (auto& [k, x] : t.terms()) eqs[row(tag, k)][var] += x * s;
    };
    for (std::size_t ck = 0; ck < CL.size(); ++ck)
        for (std::size_t a = 0; a < np; ++a)
            for (std::size_t b = 0; b < np; ++b) {
                std::size_t var = (ck * np + a) * np + b;
                Tensor ab = Tensor::pure("PP", {PL[a], PL[b]});
                add("form" + CL[ck], from_vec(P.mul(unit_vec(PL[a]), unit_vec(PL[b])), 'P'), var, Scalar(1));
                for (auto& [idx, x] : D.e_tilde().terms())
                    if ((conditions & 1) && idx[1] == CL[ck]) add("i", left_mul(unit_vec(idx[0]), ab, P), var, x);
                if (conditions & 2) add("ii" + CL[ck], D.chi_tilde(ab), var, Scalar(1));
                if (conditions & 4)
                for (auto& c : CL)
                    for (Tensor dc = C.comult(c); auto& [k, x] : dc.terms()) {
                        if (k[1] == CL[ck]) add("iii" + c, E.through(k[0], ab), var, x);
                        if (k[0] == CL[ck]) add("iii" + c, tensor(ab, key_t(k[1])), var, -x);
                    }
            }
    for (auto& c : CL) {
        if (!(conditions & 2)) break;
        Tensor t = tensor(from_vec(P.one(), 'P'), key_t(c)) - D.e_tilde().scaled(C.counit(c));
        for (auto& [k, x] : t.terms()) rhs[row("ii" + c, k)] += x;
    }
    SparseSystem sys(CL.size() * np * np);
    for (std::size_t i = 0; i < eqs.size(); ++i) sys.add(eqs[i], rhs[i]);
    ConnectionSolution out;
    Solution s = sys.solve();
    if (!s.feasible) return out;
    out.freedom = s.kernel.size();
    auto to_forms = [&](const Column& x) {
        std::map<Key, Tensor> m;
        for (std::size_t ck = 0; ck < CL.size(); ++ck) {
            Tensor t("PP");
            for (std::size_t a = 0; a < np; ++a)
                for (std::size_t b = 0; b < np; ++b)
                    if (auto& v = x[(ck * np + a) * np + b]; !v.is_zero()) t.add({PL[a], PL[b]}, v);
            m[CL[ck]] = std::move(t);
        }
        return m;
    };
    out.particular = to_forms(s.particular);
    for (auto& k : s.kernel) out.kernel.push_back(to_forms(k));
    return out;
}

ConnectionForm connection_from_table(std::map<Key, Tensor> table) {
    return [table = std::move(table)](const Key& c) { return table.at(c); };
}

}  // namespace qb
