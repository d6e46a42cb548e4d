// Grouplike lifts, the splitting i, the connection one-form and the
// completeness certificate for pi.
#include "qbundle/monopole.hpp"

#include <random>
#include <stdexcept>

namespace qb {

namespace {

Vec unit_vec(const Key& k) { return Vec{{k, Scalar(1)}}; }

// x w y with x acting on the first leg and y on the last
Tensor sandwich(const NCPoly& x, const Tensor& w, const NCPoly& y, const Algebra& P) {
    return mul_leg_right(mul_leg_left(x.terms(), w, 0, P), w.arity() - 1, y.terms(), P);
}

const Scalar& checked_q(const Scalar& q) {
    if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
    return q;
}

}  // namespace

Monopole::Monopole(int N, int degree, Scalar q, Scalar s)
    : N_(N),
      q_(std::move(q)),
      s_(std::move(s)),
      P_(preset_suq2(checked_q(q_))),
      pi_(P_, q_, s_, degree),
      C_(std::make_shared<QuotientCoalgebra>(N)) {
    if (N < 1) throw std::invalid_argument("grouplike bound must be at least 1");
    alpha = NCPoly::gen(P_, "a");
    beta = NCPoly::gen(P_, "b");
    gamma = NCPoly::gen(P_, "c");
    delta = NCPoly::gen(P_, "d");
    Scalar qi = q_.inverse(), s2m1 = s_ * s_ - Scalar(1);
    xi = s_ * (alpha * alpha - qi * (beta * beta)) + (s2m1 * qi) * (alpha * beta);
    eta = s_ * (q_ * (gamma * gamma) - delta * delta) + s2m1 * (gamma * delta);
    zeta = s_ * (q_ * (alpha * gamma) - beta * delta) + (s2m1 * q_) * (beta * gamma);
}

NCPoly Monopole::G(int m) const {
    NCPoly out = one();
    for (int k = 0; k < std::abs(m); ++k)
        out = out * (m > 0 ? alpha + (q_.pow(k) * s_) * beta : delta - (q_.pow(-k) * s_) * gamma);
    return out;
}

NCPoly Monopole::i(int m) const {
    NCPoly out = one();
    for (int k = 0; k < std::abs(m); ++k) {
        int e = m > 0 ? k : -k;
        Scalar a = q_.pow(e) * s_, den = (Scalar(1) + a * a).inverse();
        NCPoly f = m > 0 ? alpha + a * (beta + gamma) + (a * a) * delta : delta - a * (beta + gamma) + (a * a) * alpha;
        out = out * (den * f);
    }
    return out;
}

Tensor Monopole::omega_direct(int m) const {
    {
        std::lock_guard lk(mu_);
        if (auto it = omega_cache_.find(m); it != omega_cache_.end()) return it->second;
    }
    Tensor t = apply_leg(i(m).coproduct(), 0, [&](const Key& w) { return from_vec(P_->antipode(unit_vec(w)), 'P'); },
                         "P");
    std::lock_guard lk(mu_);
    return omega_cache_.emplace(m, std::move(t)).first->second;
}

Tensor Monopole::omega_recursive(int m) const {
    Tensor w = Tensor::pure("PP", {Key(), Key()});
    for (int n = 0; n < std::abs(m); ++n) {
        Tensor next("PP");
        if (m > 0) {
            Scalar a = q_.pow(n) * s_;
            next = sandwich(delta - (q_ * a) * gamma, w, alpha + a * beta, *P_) +
                   sandwich(a * alpha - q_.inverse() * beta, w, a * delta + gamma, *P_);
            next = next.scaled((Scalar(1) + a * a).inverse());
        } else {
            Scalar a = q_.pow(-n) * s_;
            next = sandwich(q_ * gamma + a * delta, w, a * alpha - beta, *P_) +
                   sandwich(alpha + (q_.inverse() * a) * beta, w, delta - a * gamma, *P_);
            next = next.scaled((Scalar(1) + a * a).inverse());
        }
        w = std::move(next);
    }
    return w;
}

Entwining Monopole::entwining() const {
    Entwining E;
    E.P = P_;
    E.C = C_;
    E.psi = [this](const Key& c, const Key& u) {
        Tensor out("PC");
        for (Tensor du = P_->coproduct_word(u); auto& [k, x] : du.terms())
            for (auto& [g, y] : pi_.act(c, unit_vec(k[1]))) out.add({k[0], g}, x * y);
        return out;
    };
    // psi^-1(u (x) c) = c <| S^-1 u_(2) (x) u_(1)
    E.psi_inv = [this](const Key& u, const Key& c) {
        Tensor out("CP");
        for (Tensor du = P_->coproduct_word(u); auto& [k, x] : du.terms())
            for (auto& [g, y] : pi_.act(c, P_->antipode_inv(unit_vec(k[1])))) out.add({g, k[0]}, x * y);
        return out;
    };
    return E;
}

Coaction Monopole::coaction() const { return Coaction::copointed(entwining(), Key("e")); }

ConnectionForm Monopole::omega() const {
    return [this](const Key& c) {
        return omega_direct(g_index(c)) - Tensor::pure("PP", {Key(), Key()}, C_->counit(c));
    };
}

Tensor Monopole::pi_legs(const Tensor& t, std::size_t leg) const {
    return apply_leg(t, leg, [&](const Key& w) { return from_vec(pi_(unit_vec(w)), 'C'); }, "C");
}

std::array<NCPoly, 2> Monopole::column_v() const { return {alpha + s_ * beta, gamma + s_ * delta}; }

std::array<NCPoly, 2> Monopole::row_w() const {
    return {delta - (q_ * s_) * gamma, s_ * alpha - q_.inverse() * beta};
}

std::array<std::array<NCPoly, 2>, 2> Monopole::projector() const {
    Scalar k = (Scalar(1) + s_ * s_).inverse();
    Scalar qi2 = q_.pow(-2);
    return {{{k * (one() - zeta), k * xi}, {k * (-eta), k * (constant(s_ * s_) + qi2 * zeta)}}};
}

std::vector<Vec> Monopole::m_span(int k) const {
    {
        std::lock_guard lk(mu_);
        if (auto it = m_cache_.find(k); it != m_cache_.end()) return it->second;
    }
    std::vector<Vec> span;
    for (auto& w : P_->basis_upto(k)) span.push_back(unit_vec(w));
    std::vector<Vec> M = fixed_subalgebra(coaction(), span);
    std::lock_guard lk(mu_);
    return m_cache_.emplace(k, std::move(M)).first->second;
}

// ---- pi certificate ---------------------------------------------------------------

std::vector<Vec> j_rows(const Monopole& mp, int top) {
    std::vector<Vec> rows;
    if (top < 2) return rows;
    const auto& P = mp.P();
    std::array<NCPoly, 3> js{mp.xi - mp.constant(mp.s()), mp.eta + mp.constant(mp.s()), mp.zeta};
    for (auto& j : js)
        for (auto& w : P->basis_upto(top - 2)) rows.push_back((j * NCPoly(P, unit_vec(w))).terms());
    return rows;
}

namespace {

// words of degree <= top, highest degree first, so that echelon rows with
// a pivot of degree <= d have no higher terms
std::vector<Word> words_high_first(const Presentation& P, int top) {
    auto words = P.basis_upto(top);
    std::stable_sort(words.begin(), words.end(), [&](const Word& a, const Word& b) { return P.degree(a) > P.degree(b); });
    return words;
}

}  // namespace

PiCertificate pi_certificate(const Monopole& mp, int d, unsigned seed, int exact_upto) {
    PiCertificate c;
    c.d = d;
    const auto& P = mp.P();
    c.dim_P = P->basis_upto(d).size();

    const PiReducer& pi = mp.pi();
    auto pe = [&](const NCPoly& x) { return pi.act("e", x.terms()); };
    c.kills_J = check_action_relations().ok() && pe(mp.xi - mp.constant(mp.s())).empty() &&
                pe(mp.eta + mp.constant(mp.s())).empty() && pe(mp.zeta).empty();
    c.hits_basis = true;
    for (int m = -d; m <= d; ++m) c.hits_basis = c.hits_basis && pe(mp.G(m)) == unit_vec(g_label(m));

    auto words = words_high_first(*P, d + 2);
    std::map<Key, std::size_t> col;
    for (auto& w : words) col.emplace(w, col.size());
    auto rows = j_rows(mp, d + 2);
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse;
    for (auto& r : rows) {
        std::vector<std::pair<std::size_t, Scalar>> row;
        for (auto& [w, x] : r) row.emplace_back(col.at(w), x);
        sparse.push_back(std::move(row));
    }
    auto low = [&](const std::vector<std::size_t>& pivots) {
        std::size_t n = 0;
        for (auto p : pivots) n += P->degree(words[p]) <= d;
        return n;
    };
    std::mt19937 rng(seed);
    std::vector<std::size_t> seen;
    for (int attempt = 0; attempt < 6 && seen.size() < 2; ++attempt) {
        mpq_class q0(static_cast<long>(rng() % 97 + 2), static_cast<long>(rng() % 89 + 1));
        mpq_class s0(static_cast<long>(rng() % 83 + 1), static_cast<long>(rng() % 79 + 2));
        q0.canonicalize();
        s0.canonicalize();
        if (auto pv = specialized_pivots_modp(sparse, words.size(), q0, s0)) seen.push_back(low(*pv));
    }
    if (!seen.empty()) c.rank_J = seen.front();
    c.points_agree = seen.size() == 2 && seen[0] == seen[1];

    if (d <= exact_upto) {
        SparseSystem S(words.size());
        for (auto& r : rows) {
            std::map<std::size_t, Scalar> row;
            for (auto& [w, x] : r) row[col.at(w)] = x;
            S.add(row);
        }
        c.rank_J_exact = low(S.pivots());
    }
    return c;
}

std::optional<Vec> pi_by_elimination(const Monopole& mp, const Vec& x, int d, const mpq_class& q0,
                                     const mpq_class& s0) {
    const auto& P = mp.P();
    auto words = P->basis_upto(d + 2);
    std::map<Key, std::size_t> row;
    for (auto& w : words) row.emplace(w, row.size());
    Cyclo cq(q0), cs(s0);
    auto at = [&](const Scalar& v) { return Scalar(v.specialize(cq, cs)); };

    std::vector<Vec> cols;
    for (int m = -d; m <= d; ++m) cols.push_back(mp.G(m).terms());
    for (auto& r : j_rows(mp, d + 2)) cols.push_back(std::move(r));
    Matrix A(words.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (auto& [w, v] : cols[j]) A.at(row.at(w), j) = at(v);
    Column b(words.size());
    for (auto& [w, v] : x) {
        if (P->degree(w) > d) throw std::domain_error("element above the elimination degree");
        b[row.at(w)] = at(v);
    }
    Solution sol = solve(A, b);
    if (!sol.feasible) return std::nullopt;
    Vec out;
    for (int m = -d; m <= d; ++m)
        if (const Scalar& v = sol.particular[std::size_t(m + d)]; !v.is_zero()) out[g_label(m)] = v;
    return out;
}

}  // namespace qb
