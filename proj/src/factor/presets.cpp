// Small factorisations used throughout the tests and the manifests.
#include "qbundle/factor.hpp"

#include <stdexcept>

namespace qb {

namespace {

std::string power_label(const std::string& g, int k) {
    return k == 0 ? "1" : k == 1 ? g : g + "^" + std::to_string(k);
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

// Psi(h^m (x) g^k) = q^{mk} g^k (x) h^m
Factorisation example_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    FinAlgebra A = group_algebra_cyclic(n, "h"), P = group_algebra_cyclic(n, "g");
    Scalar q = Scalar::zeta(n);
    std::vector<Tensor> psi;
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k) psi.push_back(Tensor::pure("PA", {power_label("g", k), power_label("h", m)}, q.pow(m * k)));
    return Factorisation(std::move(A), std::move(P), std::move(psi));
}

Copoint example_cyclic_character(const Factorisation& F) {
    int n = static_cast<int>(F.A().dim());
    Scalar q = Scalar::zeta(n);
    std::vector<Scalar> e;
    for (int m = 0; m < n; ++m) e.push_back(q.pow(m));
    return Copoint::character(F.A(), F.P(), e);
}

Factorisation example_quaternions() {
    auto two = [](const std::string& x) {
        return FinAlgebra::from_function(
            FinSpace({"1", x}),
            [x](std::size_t i, std::size_t j) {
                if (i == 1 && j == 1) return Vec{{"1", Scalar(-1)}};
                return Vec{{i + j == 0 ? "1" : x, Scalar(1)}};
            },
            Vec{{"1", Scalar(1)}});
    };
    return Factorisation::from_function(two("j"), two("i"), [](const Key& a, const Key& u) {
        return Tensor::pure("PA", {u, a}, Scalar(a == "j" && u == "i" ? -1 : 1));
    });
}

// e~(h) = c + i s g
Copoint example_circle_copoint(const Factorisation& F, const Scalar& c, const Scalar& s) {
    if (F.A().dim() != 2) throw std::invalid_argument("circle copoint needs n = 2");
    Copoint e;
    e.values.resize(2);
    e.values[F.A().space().index("1")] = Vec{{"1", Scalar(1)}};
    Vec eh;
    if (!c.is_zero()) eh["1"] = c;
    if (!s.is_zero()) eh["g"] = Scalar::zeta(4) * s;
    e.values[F.A().space().index("h")] = eh;
    return e;
}

// chi#(g^m) = n^-1 sum_{a,b} q^{-ab} g^{b-1} (x) g^{m-b+1} (x) h^a
LinearMap example_cyclic_chi_sharp(const GaloisData& G, int n) {
    Scalar q = Scalar::zeta(n), inv_n = Scalar(1) / Scalar(n);
    LinearMap chs(G.P.space(), tensor_space(G.Q.space, G.A.space()));
    for (int m = 0; m < n; ++m) {
        Tensor t("PPA");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                t.add({power_label("g", mod(b - 1, n)), power_label("g", mod(m - b + 1, n)), power_label("h", a)},
                      inv_n * q.pow(-a * b));
        Vec img;
        for (Tensor tt = G.proj(t); auto& [k, c] : tt.terms()) img[pair_label(k[0], k[1])] += c;
        chs.set(power_label("g", m), img);
    }
    return chs;
}

// x |-> sum_a f^a (x) chi(e_a (x) x), with f^1 = (1 + c)/2, f^h = (1 - c)/2.
// Domain ordered g^k (x) g^l by (k, l); codomain c^k (x) g^l by (l, k).  Ordering
// the codomain by (k, l) as well flips the sign.
Scalar example_circle_chi_determinant(const GaloisData& G) {
    if (G.A.dim() != 2 || G.P.dim() != 2 || G.Q.space.dim() != 4)
        throw std::invalid_argument("determinant is defined for the n = 2 circle example");
    const Scalar half = Scalar(mpq_class(1, 2));
    Matrix m(4, 4);
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
            std::string q = pair_label(power_label("g", k), power_label("g", l));
            Column c1 = G.P.space().coords(G.chi(pair_label("1", q)));
            Column ch = G.P.space().coords(G.chi(pair_label("h", q)));
            std::size_t col = static_cast<std::size_t>(2 * k + l);
            for (std::size_t p = 0; p < 2; ++p) {
                m.at(2 * p, col) = half * (c1[p] + ch[p]);       // c^0 (x) g^p
                m.at(2 * p + 1, col) = half * (c1[p] - ch[p]);   // c^1 (x) g^p
            }
        }
    return determinant(m);
}

bool module_algebra_criterion(const GaloisData& G) {
    Vec hg = G.act("h", Vec{{"g", Scalar(1)}});
    return G.P.mul(hg, hg) == G.P.one();
}

Factorisation trivial_factorisation(const FinAlgebra& P) {
    FinAlgebra k = FinAlgebra::from_function(
        FinSpace({"1"}), [](std::size_t, std::size_t) { return Vec{{"1", Scalar(1)}}; }, Vec{{"1", Scalar(1)}});
    return Factorisation::flip(std::move(k), P);
}

}  // namespace qb
