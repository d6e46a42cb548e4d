// Factorisations, copoints, Galois actions and translation maps.
#include "qbundle/factor.hpp"

#include <stdexcept>

namespace qb {

namespace {

Vec unit_vec(const Key& k) { return Vec{{k, Scalar(1)}}; }

std::string show(const Vec& v) { return from_vec(v, 'P').str(); }

bool in_span(const std::vector<Column>& basis, const Column& v) {
    if (basis.empty()) {
        for (auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    return solve(Matrix::from_columns(basis, v.size()), v).feasible;
}

}  // namespace

// ---- Factorisation ----------------------------------------------------------

Factorisation::Factorisation(FinAlgebra A, FinAlgebra P, std::vector<Tensor> psi)
    : A_(std::move(A)), P_(std::move(P)), psi_(std::move(psi)) {
    if (psi_.size() != A_.dim() * P_.dim()) throw std::invalid_argument("Psi table has wrong size");
    for (auto& t : psi_) {
        if (t.profile() != "PA") throw std::invalid_argument("Psi values must have profile PA");
        for (auto& [k, c] : t.terms()) {
            P_.space().index(k[0]);
            A_.space().index(k[1]);
        }
    }
}

Factorisation Factorisation::from_function(FinAlgebra A, FinAlgebra P,
                                           const std::function<Tensor(const Key&, const Key&)>& f) {
    std::vector<Tensor> psi;
    for (auto& a : A.space().labels())
        for (auto& u : P.space().labels()) psi.push_back(f(a, u));
    return Factorisation(std::move(A), std::move(P), std::move(psi));
}

Factorisation Factorisation::flip(FinAlgebra A, FinAlgebra P) {
    return from_function(std::move(A), std::move(P),
                         [](const Key& a, const Key& u) { return Tensor::pure("PA", {u, a}); });
}

const Tensor& Factorisation::operator()(const Key& a, const Key& u) const {
    return psi_[A_.space().index(a) * P_.dim() + P_.space().index(u)];
}

Tensor Factorisation::operator()(const Vec& a, const Vec& u) const {
    Tensor r("PA");
    for (auto& [ka, ca] : a)
        for (auto& [ku, cu] : u) r += (*this)(ka, ku).scaled(ca * cu);
    return r;
}

Tensor Factorisation::apply(const Tensor& t, std::size_t i) const {
    return apply_pair(t, i, [this](const Key& a, const Key& u) { return (*this)(a, u); }, "PA");
}

LinearMap Factorisation::as_map() const {
    LinearMap m(tensor_space(A_.space(), P_.space()), tensor_space(P_.space(), A_.space()));
    for (auto& a : A_.space().labels())
        for (auto& u : P_.space().labels()) {
            Vec img;
            for (auto& [k, c] : (*this)(a, u).terms()) img[pair_label(k[0], k[1])] += c;
            m.set(pair_label(a, u), img);
        }
    return m;
}

FinAlgebra cross_product(const Factorisation& F) {
    const auto &A = F.A(), &P = F.P();
    std::size_t na = A.dim();
    FinSpace s = tensor_space(P.space(), A.space());
    auto m = [&](std::size_t i, std::size_t j) {
        const Key &u = P.space().label(i / na), &a = A.space().label(i % na);
        const Key &v = P.space().label(j / na), &b = A.space().label(j % na);
        Tensor t = mul_leg_left(unit_vec(u), F(a, v), 0, P);
        t = mul_leg_right(t, 1, unit_vec(b), A);
        Vec out;
        for (auto& [k, c] : t.terms()) out[pair_label(k[0], k[1])] += c;
        return out;
    };
    Vec unit;
    for (auto& [k1, c1] : P.one())
        for (auto& [k2, c2] : A.one()) unit[pair_label(k1, k2)] += c1 * c2;
    return FinAlgebra::from_function(s, m, unit);
}

Report check_factorisation(const Factorisation& F) {
    Report r;
    const auto &A = F.A(), &P = F.P();
    const auto &AL = A.space().labels(), &PL = P.space().labels();
    std::string bad;

    for (auto& a : AL)
        for (auto& b : AL)
            for (auto& u : PL) {
                if (!bad.empty()) break;
                Tensor lhs = F(A.mul(unit_vec(a), unit_vec(b)), unit_vec(u));
                Tensor t = F.apply(F.apply(Tensor::pure("AAP", {a, b, u}), 1), 0);
                if (contract_adjacent(t, 1, A) != lhs) bad = "a=" + a + " b=" + b + " u=" + u;
            }
    r.add("psi.multiplicative_A", bad.empty(), bad);
    bad.clear();

    for (auto& u : PL)
        if (bad.empty() && F(A.one(), unit_vec(u)) != tensor(unit_vec(u), A.one(), "PA")) bad = "u=" + u;
    r.add("psi.unit_A", bad.empty(), bad);
    bad.clear();

    for (auto& a : AL)
        for (auto& u : PL)
            for (auto& v : PL) {
                if (!bad.empty()) break;
                Tensor lhs = F(unit_vec(a), P.mul(unit_vec(u), unit_vec(v)));
                Tensor t = F.apply(F.apply(Tensor::pure("APP", {a, u, v}), 0), 1);
                if (contract_adjacent(t, 0, P) != lhs) bad = "a=" + a + " u=" + u + " v=" + v;
            }
    r.add("psi.multiplicative_P", bad.empty(), bad);
    bad.clear();

    for (auto& a : AL)
        if (bad.empty() && F(unit_vec(a), P.one()) != tensor(P.one(), unit_vec(a), "PA")) bad = "a=" + a;
    r.add("psi.unit_P", bad.empty(), bad);

    FinAlgebra X = cross_product(F);
    Report rx = check_algebra(X);
    r.merge(rx, "X");
    r.add("X.dimension", X.dim() == A.dim() * P.dim(), std::to_string(X.dim()));

    // P (x) 1 and 1 (x) A are subalgebras with (1 (x) a)(u (x) 1) = Psi(a (x) u)
    bad.clear();
    auto embed_P = [&](const Vec& u) {
        Vec out;
        for (auto& [k, c] : u)
            for (auto& [k1, c1] : A.one()) out[pair_label(k, k1)] += c * c1;
        return out;
    };
    auto embed_A = [&](const Vec& a) {
        Vec out;
        for (auto& [k1, c1] : P.one())
            for (auto& [k, c] : a) out[pair_label(k1, k)] += c * c1;
        return out;
    };
    for (auto& u : PL)
        for (auto& v : PL)
            if (bad.empty() && X.mul(embed_P(unit_vec(u)), embed_P(unit_vec(v))) != embed_P(P.mul(unit_vec(u), unit_vec(v))))
                bad = "P: " + u + "," + v;
    for (auto& a : AL)
        for (auto& b : AL)
            if (bad.empty() && X.mul(embed_A(unit_vec(a)), embed_A(unit_vec(b))) != embed_A(A.mul(unit_vec(a), unit_vec(b))))
                bad = "A: " + a + "," + b;
    for (auto& a : AL)
        for (auto& u : PL) {
            if (!bad.empty()) break;
            Vec want;
            for (auto& [k, c] : F(a, u).terms()) want[pair_label(k[0], k[1])] += c;
            if (X.mul(embed_A(unit_vec(a)), embed_P(unit_vec(u))) != want) bad = "cross: " + a + "," + u;
        }
    r.add("X.subalgebras_and_cross_relations", bad.empty(), bad);
    return r;
}

// ---- copoints ---------------------------------------------------------------

Vec Copoint::operator()(const Vec& a, const FinAlgebra& A) const {
    Vec out;
    for (auto& [k, c] : a) axpy(out, c, values.at(A.space().index(k)));
    return out;
}

Copoint Copoint::character(const FinAlgebra& A, const FinAlgebra& P, const std::vector<Scalar>& e) {
    if (e.size() != A.dim()) throw std::invalid_argument("character has wrong length");
    Copoint c;
    for (auto& x : e) c.values.push_back(scaled(P.one(), x));
    return c;
}

namespace {

// Psi(a (x) u)^(1) e~(Psi(a (x) u)^(2))
Vec act_through(const Factorisation& F, const Copoint& e, const Vec& a, const Vec& u) {
    Vec out;
    for (Tensor tt = F(a, u); auto& [k, c] : tt.terms()) axpy(out, c, F.P().mul(unit_vec(k[0]), e.values.at(F.A().space().index(k[1]))));
    return out;
}

}  // namespace

Report check_copoint(const Factorisation& F, const Copoint& e) {
    Report r;
    const auto &A = F.A(), &P = F.P();
    if (e.values.size() != A.dim()) throw std::invalid_argument("copoint has wrong number of values");
    r.add("copoint.unit", e(A.one(), A) == P.one(), show(e(A.one(), A)));
    std::string bad;
    for (auto& a : A.space().labels())
        for (auto& b : A.space().labels()) {
            if (!bad.empty()) break;
            Vec lhs = e(A.mul(unit_vec(a), unit_vec(b)), A);
            Vec rhs = act_through(F, e, unit_vec(a), e(unit_vec(b), A));
            if (lhs != rhs) bad = "a=" + a + " b=" + b + ": " + show(lhs) + " vs " + show(rhs);
        }
    r.add("copoint.multiplicative", bad.empty(), bad);
    return r;
}

// ---- Galois data --------------------------------------------------------------

Vec GaloisData::act(const Key& a, const Vec& u) const {
    Vec out;
    for (auto& [k, c] : u) axpy(out, c, action(pair_label(a, k)));
    return out;
}

Vec GaloisData::act(const Vec& a, const Vec& u) const {
    Vec out;
    for (auto& [k, c] : a) axpy(out, c, act(k, u));
    return out;
}

Tensor GaloisData::lift(const Tensor& q) const {
    const FinSpace& amb = Q.section.codomain();
    std::size_t np = P.dim();
    return apply_leg(
        q, 0,
        [&](const Key& k) {
            Tensor t("PP");
            for (auto& [l, c] : Q.section(k)) {
                std::size_t i = amb.index(l);
                t.add({P.space().label(i / np), P.space().label(i % np)}, c);
            }
            return t;
        },
        "PP");
}

Tensor GaloisData::proj(const Tensor& pp) const {
    return apply_pair(
        pp, 0, [&](const Key& u, const Key& v) { return from_vec(Q.projection(pair_label(u, v)), 'Q'); }, "Q");
}

Tensor GaloisData::act_Q(const Vec& a, const Tensor& q) const {
    Tensor t = apply_leg(lift(q), 0, [&](const Key& u) { return from_vec(act(a, unit_vec(u)), 'P'); }, "P");
    return proj(t);
}

Tensor GaloisData::sharp(const Vec& u) const {
    if (!chi_sharp) throw std::logic_error("no translation map");
    const FinSpace& cod = chi_sharp->codomain();
    std::size_t na = A.dim();
    Tensor t("QA");
    for (auto& [l, c] : (*chi_sharp)(u)) {
        std::size_t i = cod.index(l);
        t.add({Q.space.label(i / na), A.space().label(i % na)}, c);
    }
    return t;
}

Vec GaloisData::chi_of(const Vec& a, const Tensor& q) const {
    Vec out;
    for (auto& [ka, ca] : a)
        for (auto& [k, c] : q.terms()) axpy(out, ca * c, chi(pair_label(ka, k[0])));
    return out;
}

namespace {

LinearMap action_map(const FinAlgebra& A, const FinAlgebra& P, const std::function<Vec(const Key&, const Key&)>& f) {
    LinearMap m(tensor_space(A.space(), P.space()), P.space());
    for (auto& a : A.space().labels())
        for (auto& u : P.space().labels()) m.set(pair_label(a, u), f(a, u));
    return m;
}

}  // namespace

std::vector<Column> invariant_subalgebra(const FinAlgebra& A, const FinAlgebra& P, const LinearMap& action,
                                         const Copoint& e) {
    std::size_t np = P.dim();
    Matrix m(A.dim() * np, np);
    for (std::size_t j = 0; j < np; ++j) {
        Vec u = unit_vec(P.space().label(j));
        for (std::size_t ia = 0; ia < A.dim(); ++ia) {
            const Key& a = A.space().label(ia);
            Vec diff = action(pair_label(a, P.space().label(j)));
            axpy(diff, Scalar(-1), P.mul(e.values[ia], u));
            Column c = P.space().coords(diff);
            for (std::size_t i = 0; i < np; ++i) m.at(ia * np + i, j) = c[i];
        }
    }
    return kernel(m);
}

bool same_subspace(const std::vector<Column>& a, const std::vector<Column>& b) {
    if (a.empty() || b.empty()) return image_basis(a).size() == image_basis(b).size() && image_basis(a).empty();
    std::vector<Column> all = a;
    all.insert(all.end(), b.begin(), b.end());
    std::size_t r = image_basis(all).size();
    return r == image_basis(a).size() && r == image_basis(b).size();
}

GaloisData galois_from_action(const FinAlgebra& A, const FinAlgebra& P, const LinearMap& action) {
    GaloisData G;
    G.A = A;
    G.P = P;
    G.action = action;
    std::size_t np = P.dim(), na = A.dim();
    const auto& PL = P.space().labels();

    // M = {m : a |> (u m) = (a |> u) m}
    Matrix m(na * np * np, np);
    for (std::size_t j = 0; j < np; ++j) {
        Vec mv = unit_vec(PL[j]);
        for (std::size_t ia = 0; ia < na; ++ia)
            for (std::size_t iu = 0; iu < np; ++iu) {
                Vec u = unit_vec(PL[iu]);
                Vec diff = G.act(A.space().label(ia), P.mul(u, mv));
                axpy(diff, Scalar(-1), P.mul(G.act(A.space().label(ia), u), mv));
                Column c = P.space().coords(diff);
                for (std::size_t i = 0; i < np; ++i) m.at((ia * np + iu) * np + i, j) = c[i];
            }
    }
    G.M = kernel(m);

    // P (x)_M P
    FinSpace pp = tensor_space(P.space(), P.space());
    std::vector<Column> sub;
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

    // chi(a (x) [u (x) v]) = (a |> u) v on representatives
    G.chi = LinearMap(tensor_space(A.space(), G.Q.space), P.space());
    for (auto& a : A.space().labels())
        for (auto& q : G.Q.space.labels()) {
            Vec img;
            for (Tensor tt = G.lift(Tensor::pure("Q", {q})); auto& [idx, c] : tt.terms())
                axpy(img, c, P.mul(G.act(a, unit_vec(idx[0])), unit_vec(idx[1])));
            G.chi.set(pair_label(a, q), img);
        }
    return G;
}

GaloisData action_from_copoint(const Factorisation& F, const Copoint& e, Report& r) {
    const auto &A = F.A(), &P = F.P();
    r.merge(check_copoint(F, e));
    LinearMap action =
        action_map(A, P, [&](const Key& a, const Key& u) { return act_through(F, e, unit_vec(a), unit_vec(u)); });
    GaloisData G = galois_from_action(A, P, action);

    std::string bad;
    for (auto& a : A.space().labels())
        for (auto& b : A.space().labels())
            for (auto& u : P.space().labels()) {
                if (!bad.empty()) break;
                Vec lhs = G.act(A.mul(unit_vec(a), unit_vec(b)), unit_vec(u));
                if (lhs != G.act(a, G.act(b, unit_vec(u)))) bad = "a=" + a + " b=" + b + " u=" + u;
            }
    for (auto& u : P.space().labels())
        if (bad.empty() && G.act(A.one(), unit_vec(u)) != unit_vec(u)) bad = "unit on " + u;
    r.add("action.module", bad.empty(), bad);

    // a |> (u v) = Psi(a (x) u)^(1) (Psi(a (x) u)^(2) |> v)
    bad.clear();
    for (auto& a : A.space().labels())
        for (auto& u : P.space().labels())
            for (auto& v : P.space().labels()) {
                if (!bad.empty()) break;
                Vec rhs;
                for (auto& [k, c] : F(a, u).terms()) axpy(rhs, c, P.mul(unit_vec(k[0]), G.act(k[1], unit_vec(v))));
                if (G.act(a, P.mul(unit_vec(u), unit_vec(v))) != rhs) bad = "a=" + a + " u=" + u + " v=" + v;
            }
    r.add("action.psi_module", bad.empty(), bad);

    std::vector<Column> M1 = invariant_subalgebra(A, P, action, e);
    r.add("M.characterisations_agree", same_subspace(M1, G.M),
          "dims " + std::to_string(M1.size()) + " vs " + std::to_string(G.M.size()));
    bad.clear();
    for (auto& x : G.M)
        for (auto& y : G.M) {
            if (!bad.empty()) break;
            if (!in_span(G.M, P.space().coords(P.mul(P.space().vec(x), P.space().vec(y))))) bad = "product leaves M";
        }
    if (bad.empty() && !in_span(G.M, P.space().coords(P.one()))) bad = "1 not in M";
    r.add("M.subalgebra", bad.empty(), bad);
    return G;
}

// ---- translation map ----------------------------------------------------------

bool find_chi_sharp(GaloisData& G) {
    std::size_t np = G.P.dim(), nq = G.Q.space.dim(), na = G.A.dim();
    auto X = [&](std::size_t u, std::size_t q, std::size_t a) { return (u * nq + q) * na + a; };
    SparseSystem sys(np * nq * na);

    // chi(e_a (x) x) coordinates
    std::vector<std::vector<Column>> chi(na, std::vector<Column>(nq));
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t x = 0; x < nq; ++x)
            chi[a][x] = G.P.space().coords(G.chi(pair_label(G.A.space().label(a), G.Q.space.label(x))));

    // Tr_A(chi# o chi) = id
    for (std::size_t x = 0; x < nq; ++x)
        for (std::size_t q = 0; q < nq; ++q) {
            std::map<std::size_t, Scalar> row;
            for (std::size_t a = 0; a < na; ++a)
                for (std::size_t u = 0; u < np; ++u)
                    if (!chi[a][x][u].is_zero()) row[X(u, q, a)] += chi[a][x][u];
            Scalar rhs(q == x ? 1 : 0);
            if (row.empty()) {
                if (!rhs.is_zero()) return false;
                continue;
            }
            sys.add(row, rhs);
            if (!sys.consistent()) return false;
        }
    // (chi (x) id)(id (x) chi#) = flip
    for (std::size_t u = 0; u < np; ++u)
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = 0; b < na; ++b)
                for (std::size_t v = 0; v < np; ++v) {
                    std::map<std::size_t, Scalar> row;
                    for (std::size_t q = 0; q < nq; ++q)
                        if (!chi[a][q][v].is_zero()) row[X(u, q, b)] += chi[a][q][v];
                    Scalar rhs(v == u && a == b ? 1 : 0);
                    if (row.empty()) {
                        if (!rhs.is_zero()) return false;
                        continue;
                    }
                    sys.add(row, rhs);
                    if (!sys.consistent()) return false;
                }
    Solution s = sys.solve(false);
    if (!s.feasible) return false;
    LinearMap chs(G.P.space(), tensor_space(G.Q.space, G.A.space()));
    for (std::size_t u = 0; u < np; ++u)
        for (std::size_t q = 0; q < nq; ++q)
            for (std::size_t a = 0; a < na; ++a) chs.matrix().at(q * na + a, u) = s.particular[X(u, q, a)];
    G.chi_sharp = std::move(chs);
    return true;
}

Report check_chi_sharp(const GaloisData& G0, const LinearMap& chs) {
    GaloisData G = G0;
    G.chi_sharp = chs;
    Report r;
    const auto &A = G.A, &P = G.P;
    std::string bad;
    for (auto& x : G.Q.space.labels()) {
        Tensor acc("Q");
        for (auto& a : A.space().labels()) {
            Tensor img = G.sharp(G.chi_of(unit_vec(a), Tensor::pure("Q", {x})));
            acc += eval_leg(img, 1, [&](const Key& b) { return Scalar(b == a ? 1 : 0); });
        }
        if (acc != Tensor::pure("Q", {x})) {
            bad = "[" + x + "]";
            break;
        }
    }
    r.add("galois.trace_identity", bad.empty(), bad);
    bad.clear();
    for (auto& a : A.space().labels())
        for (auto& u : P.space().labels()) {
            if (!bad.empty()) break;
            Tensor s = G.sharp(unit_vec(u));
            Tensor img("PA");
            for (auto& [k, c] : s.terms())
                for (auto& [p, cp] : G.chi_of(unit_vec(a), Tensor::pure("Q", {k[0]}))) img.add({p, k[1]}, c * cp);
            if (img != Tensor::pure("PA", {u, a})) bad = "a=" + a + " u=" + u;
        }
    r.add("galois.flip_identity", bad.empty(), bad);
    return r;
}

Report verify_translation(const GaloisData& G) {
    Report r;
    const auto &A = G.A, &P = G.P;
    Tensor t = G.sharp(P.one());
    std::string bad;
    // (a) chi# a = a |> chi#
    for (auto& a : A.space().labels()) {
        Tensor lhs = mul_leg_right(t, 1, unit_vec(a), A);
        Tensor rhs = apply_leg(t, 0, [&](const Key& q) { return G.act_Q(unit_vec(a), Tensor::pure("Q", {q})); }, "Q");
        if (lhs != rhs) {
            bad = "a=" + a;
            break;
        }
    }
    r.add("translation.a", bad.empty(), bad);
    bad.clear();
    // (b) chi#(uv) = chi#(u)^(1) v (x) chi#(u)^(2)
    for (auto& u : P.space().labels())
        for (auto& v : P.space().labels()) {
            if (!bad.empty()) break;
            Tensor lhs = G.sharp(P.mul(unit_vec(u), unit_vec(v)));
            Tensor lifted = G.lift(G.sharp(unit_vec(u)));   // "PPA"
            Tensor rhs = G.proj(mul_leg_right(lifted, 1, unit_vec(v), P));
            if (lhs != rhs) bad = "u=" + u + " v=" + v;
        }
    r.add("translation.b", bad.empty(), bad);
    bad.clear();
    // (c) chi#^(1) (chi#^(2) |> u) = u (x)_M 1
    Tensor lifted = G.lift(t);
    for (auto& u : P.space().labels()) {
        Tensor acc("PP");
        for (auto& [k, c] : lifted.terms())
            for (auto& [w, cw] : P.mul(unit_vec(k[1]), G.act(k[2], unit_vec(u)))) acc.add({k[0], w}, c * cw);
        Tensor want = tensor(unit_vec(u), P.one(), "PP");
        if (G.proj(acc) != G.proj(want)) {
            bad = "u=" + u;
            break;
        }
    }
    r.add("translation.c", bad.empty(), bad);
    return r;
}

// ---- Galois product -----------------------------------------------------------

GaloisProduct galois_product(const GaloisData& G) {
    if (!G.chi_sharp) throw std::invalid_argument("action is not Galois: no translation map");
    const auto &A = G.A, &P = G.P;
    Tensor lifted = G.lift(G.sharp(P.one()));   // x (x) y (x) b
    Factorisation F = Factorisation::from_function(A, P, [&](const Key& a, const Key& u) {
        Tensor out("PA");
        for (auto& [k, c] : lifted.terms()) {
            Vec ux = P.mul(unit_vec(u), unit_vec(k[0]));
            Vec img = P.mul(G.act(unit_vec(a), ux), unit_vec(k[1]));
            for (auto& [p, cp] : img) out.add({p, k[2]}, c * cp);
        }
        return out;
    });
    Copoint e;
    for (auto& a : A.space().labels()) e.values.push_back(G.act(a, P.one()));
    return {std::move(F), std::move(e)};
}

bool same_factorisation(const Factorisation& a, const Factorisation& b) {
    if (!(a.A().space() == b.A().space()) || !(a.P().space() == b.P().space())) return false;
    for (auto& x : a.A().space().labels())
        for (auto& u : a.P().space().labels())
            if (a(x, u) != b(x, u)) return false;
    return true;
}

// ---- dim 2 copoint reduction ------------------------------------------------

CopointFeasibility copoint_feasibility_dim2(const Factorisation& F) {
    const auto &A = F.A(), &P = F.P();
    if (A.dim() != 2 || P.dim() != 2) throw std::invalid_argument("copoint reduction needs dim A = dim P = 2");
    auto other = [](const FinAlgebra& B) -> Key {
        if (B.one().size() != 1) throw std::invalid_argument("unit must be a basis element");
        const Key& one = B.one().begin()->first;
        return B.space().label(0) == one ? B.space().label(1) : B.space().label(0);
    };
    Key x = other(A), y = other(P);
    Key one_a = A.one().begin()->first, one_p = P.one().begin()->first;
    auto scalar_of = [](const Vec& v, const Key& k) -> std::optional<Scalar> {
        if (v.size() != 1 || v.begin()->first != k) return std::nullopt;
        return v.begin()->second;
    };
    // x^2 = kappa, y^2 = tau, Psi(x (x) y) = sigma y (x) x
    auto kappa = scalar_of(A.mul(unit_vec(x), unit_vec(x)), one_a);
    auto tau = scalar_of(P.mul(unit_vec(y), unit_vec(y)), one_p);
    Tensor pxy = F(x, y);
    std::optional<Scalar> sigma;
    if (pxy.size() == 1 && pxy.terms().begin()->first == Tensor::Index{y, x}) sigma = pxy.terms().begin()->second;
    bool ok_shape = kappa && tau && sigma && F(x, one_p) == Tensor::pure("PA", {one_p, x}) &&
                    (*sigma == Scalar(-1)) && (*kappa == Scalar(1) || *kappa == Scalar(-1)) &&
                    (*tau == Scalar(1) || *tau == Scalar(-1));
    if (!ok_shape) throw std::invalid_argument("general copoint solving is not supported for this factorisation");

    // e~(x) = a + b y:  x |> e~(x) = (a + sigma b y)(a + b y) = a^2 + sigma tau b^2 (+ (1 + sigma) a b y)
    CopointFeasibility out;
    Scalar st = *sigma * *tau;
    out.imaginary_beta = st == Scalar(-1);
    out.sign = *kappa == Scalar(1) ? 1 : -1;
    Scalar i = Scalar::zeta(4);
    std::vector<std::pair<Scalar, Scalar>> w;
    if (out.sign == 1) {
        out.rational = true;
        w = {{Scalar(1), Scalar(0)}, {Scalar(-1), Scalar(0)}};
        // rational points of the circle from t = 1/2, 2/3
        for (auto t : {Scalar(mpq_class(1, 2)), Scalar(mpq_class(2, 3))}) {
            Scalar d = Scalar(1) + t * t;
            w.push_back({(Scalar(1) - t * t) / d, Scalar(2) * t / d});
        }
    } else {
        out.rational = false;
        out.certificate = "alpha^2 + beta^2 is a sum of squares, so >= 0 > -1 for rational alpha, beta";
        w = {{i, Scalar(0)}};
    }
    for (auto& [al, be] : w) {
        Scalar b = out.imaginary_beta ? be * i : be;
        Copoint e;
        e.values.resize(2);
        e.values[A.space().index(one_a)] = P.one();
        Vec ex;
        if (!al.is_zero()) ex[one_p] = al;
        if (!b.is_zero()) ex[y] = b;
        e.values[A.space().index(x)] = ex;
        Report rc = check_copoint(F, e);
        out.report.add("witness(" + al.str() + "," + be.str() + ")", rc.ok() && al * al + be * be == Scalar(out.sign),
                       rc.failures());
        out.witnesses.push_back({al, be});
        out.copoints.push_back(std::move(e));
    }
    out.report.add("rational_solvability", out.rational == (out.sign == 1), out.certificate);
    return out;
}

}  // namespace qb
