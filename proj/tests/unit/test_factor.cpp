#include <doctest.h>

#include "qbundle/factor.hpp"

using namespace qb;

namespace {

Vec v1(const Key& k, Scalar c = Scalar(1)) { return Vec{{k, c}}; }

std::string gp(int k) { return k == 0 ? "1" : k == 1 ? "g" : "g^" + std::to_string(k); }
std::string hp(int k) { return k == 0 ? "1" : k == 1 ? "h" : "h^" + std::to_string(k); }

// clock and shift: g = diag(q^i), h e_i = e_{i-1}, so h g = q g h
Matrix clock(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::zeta(n).pow(i);
    return m;
}
Matrix shift_down(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at((i + n - 1) % n, i) = Scalar(1);
    return m;
}
Matrix power(const Matrix& m, int k) {
    Matrix r = Matrix::identity(m.rows());
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
}

GaloisData circle(const Scalar& c, const Scalar& s, Report& r) {
    Factorisation F = example_cyclic(2);
    return action_from_copoint(F, example_circle_copoint(F, c, s), r);
}

}  // namespace

TEST_CASE("cyclic factorisation is the matrix algebra") {
    for (int n = 2; n <= 4; ++n) {
        Factorisation F = example_cyclic(n);
        Report r = check_factorisation(F);
        CHECK_MESSAGE(r.ok(), r.failures());
        FinAlgebra X = cross_product(F);
        CHECK(X.dim() == static_cast<std::size_t>(n * n));
        // u (x) a -> matrix(u) matrix(a) is multiplicative and bijective
        Matrix g = clock(n), h = shift_down(n);
        auto rep = [&](std::size_t i) {
            return power(g, static_cast<int>(i) / n) * power(h, static_cast<int>(i) % n);
        };
        auto rep_vec = [&](const Vec& v) {
            Matrix out(n, n);
            for (auto& [k, c] : v) {
                Matrix t = rep(X.space().index(k));
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) out.at(a, b) += c * t.at(a, b);
            }
            return out;
        };
        bool mult = true;
        for (std::size_t i = 0; i < X.dim(); ++i)
            for (std::size_t j = 0; j < X.dim(); ++j)
                if (rep_vec(X.product(i, j)) != rep(i) * rep(j)) mult = false;
        CHECK(mult);
        Matrix flat(n * n, n * n);
        for (std::size_t i = 0; i < X.dim(); ++i) {
            Matrix t = rep(i);
            for (int a = 0; a < n * n; ++a) flat.at(a, i) = t.at(a / n, a % n);
        }
        CHECK(rank(flat) == static_cast<std::size_t>(n * n));
    }
}

TEST_CASE("flip and quaternions pass; a broken Psi does not") {
    FinAlgebra z2h = group_algebra_cyclic(2, "h"), z2g = group_algebra_cyclic(2, "g");
    CHECK(check_factorisation(Factorisation::flip(z2h, z2g)).ok());
    CHECK(check_factorisation(example_quaternions()).ok());
    Factorisation bad = Factorisation::from_function(z2h, z2g, [](const Key& a, const Key& u) {
        return Tensor::pure("PA", {u, a}, Scalar(a == "h" && u == "g" ? 2 : 1));
    });
    Report r = check_factorisation(bad);
    CHECK_FALSE(r.ok());
    CHECK(r.failures().find("psi.multiplicative_A") != std::string::npos);
}

TEST_CASE("cyclic action and translation map") {
    for (int n = 2; n <= 4; ++n) {
        Factorisation F = example_cyclic(n);
        Report r;
        GaloisData G = action_from_copoint(F, example_cyclic_character(F), r);
        CHECK_MESSAGE(r.ok(), r.failures());
        Scalar q = Scalar::zeta(n);
        for (int m = 0; m < n; ++m) CHECK(G.act("h", v1(gp(m))) == v1(gp(m), q.pow(m + 1)));
        CHECK(G.M.size() == 1);
        CHECK(G.Q.space.dim() == static_cast<std::size_t>(n * n));

        LinearMap formula = example_cyclic_chi_sharp(G, n);
        Report rc = check_chi_sharp(G, formula);
        CHECK_MESSAGE(rc.ok(), rc.failures());
        REQUIRE(find_chi_sharp(G));
        CHECK(*G.chi_sharp == formula);
        Report rt = verify_translation(G);
        CHECK_MESSAGE(rt.ok(), rt.failures());

        GaloisProduct gp2 = galois_product(G);
        CHECK(same_factorisation(gp2.F, F));
        for (int m = 0; m < n; ++m)
            for (int k = 0; k < n; ++k) CHECK(gp2.F(hp(m), gp(k)) == Tensor::pure("PA", {gp(k), hp(m)}, q.pow(m * k)));
        for (int m = 0; m < n; ++m) CHECK(gp2.e.values[static_cast<std::size_t>(m)] == v1("1", q.pow(m)));
    }
}

TEST_CASE("circle copoints") {
    Scalar i = Scalar::zeta(4);
    for (auto [c, s] : {std::pair{mpq_class(3, 5), mpq_class(4, 5)}, std::pair{mpq_class(5, 13), mpq_class(12, 13)}}) {
        Report r;
        GaloisData G = circle(Scalar(c), Scalar(s), r);
        CHECK_MESSAGE(r.ok(), r.failures());
        // h |> g^k = (-1)^k g^k (c + i s g)
        Vec e{{"1", Scalar(c)}, {"g", i * Scalar(s)}};
        CHECK(G.act("h", v1("1")) == e);
        CHECK(G.act("h", v1("g")) == G.P.mul(v1("g", Scalar(-1)), e));
        CHECK(G.M.size() == 1);
        CHECK(example_circle_chi_determinant(G) == Scalar(1));
        REQUIRE(find_chi_sharp(G));
        CHECK(verify_translation(G).ok());
        GaloisProduct back = galois_product(G);
        CHECK(same_factorisation(back.F, example_cyclic(2)));
        auto cl = find_cleaving(G);
        REQUIRE(cl);
        Report tr = trivialisation_ops(example_cyclic(2), example_circle_copoint(example_cyclic(2), Scalar(c), Scalar(s)), G, *cl);
        CHECK_MESSAGE(tr.ok(), tr.failures());
        CHECK_FALSE(module_algebra_criterion(G));
    }
    for (long c : {1L, -1L}) {
        Report r;
        GaloisData G = circle(Scalar(c), Scalar(0), r);
        CHECK(r.ok());
        CHECK(module_algebra_criterion(G));
    }
}

TEST_CASE("copoint feasibility in dimension two") {
    auto circ = copoint_feasibility_dim2(example_cyclic(2));
    CHECK(circ.sign == 1);
    CHECK(circ.imaginary_beta);
    CHECK(circ.rational);
    CHECK(circ.report.ok());
    bool has35 = false;
    for (auto& [a, b] : circ.witnesses)
        if (a == Scalar(mpq_class(3, 5)) && b == Scalar(mpq_class(4, 5))) has35 = true;
    CHECK(has35);

    auto quat = copoint_feasibility_dim2(example_quaternions());
    CHECK(quat.sign == -1);
    CHECK_FALSE(quat.rational);
    CHECK_FALSE(quat.certificate.empty());
    REQUIRE(quat.witnesses.size() == 1);
    CHECK(quat.witnesses[0].first == Scalar::zeta(4));
    CHECK(quat.witnesses[0].second == Scalar(0));
    CHECK(check_copoint(example_quaternions(), quat.copoints[0]).ok());

    // direct oracle: e~(j) = a + b i with rational a, b fails for a grid of values
    Factorisation Q = example_quaternions();
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            Copoint e{{v1("1"), Vec{{"1", Scalar(a)}, {"i", Scalar(b)}}}};
            for (auto it = e.values[1].begin(); it != e.values[1].end();)
                it = it->second.is_zero() ? e.values[1].erase(it) : std::next(it);
            CHECK_FALSE(check_copoint(Q, e).ok());
        }
    CHECK_THROWS(copoint_feasibility_dim2(example_cyclic(3)));
}

TEST_CASE("trivial and degenerate cases") {
    FinAlgebra P = group_algebra_cyclic(3, "g");
    Factorisation T = trivial_factorisation(P);
    CHECK(check_factorisation(T).ok());
    Report r;
    GaloisData G = action_from_copoint(T, Copoint{{P.one()}}, r);
    CHECK(r.ok());
    CHECK(G.M.size() == 3);
    REQUIRE(find_chi_sharp(G));
    // chi#(u) = [u (x) 1] (x) 1
    for (auto& u : P.space().labels())
        CHECK(G.sharp(v1(u)) == tensor(G.proj(tensor(v1(u), P.one(), "PP")), Tensor::pure("A", {"1"})));
    CHECK(verify_translation(G).ok());
    CHECK(same_factorisation(galois_product(G).F, T));
    auto cl = find_cleaving(G);
    REQUIRE(cl);
    CHECK(trivialisation_ops(T, Copoint{{P.one()}}, G, *cl).ok());

    // trivial copoint on a commuting factorisation: M = P
    FinAlgebra z2h = group_algebra_cyclic(2, "h"), z2g = group_algebra_cyclic(2, "g");
    Factorisation fl = Factorisation::flip(z2h, z2g);
    Report r2;
    GaloisData G2 = action_from_copoint(fl, Copoint::character(z2h, z2g, {Scalar(1), Scalar(1)}), r2);
    CHECK(r2.ok());
    CHECK(G2.M.size() == 2);

    // the zero action is not Galois
    LinearMap zero(tensor_space(z2h.space(), z2g.space()), z2g.space());
    GaloisData G3 = galois_from_action(z2h, z2g, zero);
    CHECK_FALSE(find_chi_sharp(G3));
    CHECK_THROWS(galois_product(G3));
}

TEST_CASE("gauge transformations and associated bundles on the circle") {
    Factorisation F = example_cyclic(2);
    Scalar c(mpq_class(3, 5)), s(mpq_class(4, 5)), i = Scalar::zeta(4);
    Copoint e = example_circle_copoint(F, c, s);
    Report r;
    GaloisData G = action_from_copoint(F, e, r);
    REQUIRE(find_chi_sharp(G));
    auto cl = find_cleaving(G);
    REQUIRE(cl);

    Tensor one = unit_PA(G.P, G.A);
    Tensor f = conjugate_gauge(*cl, Tensor::pure("PA", {"1", "h"}), G.P, G.A);
    Report ra = automorphism_ops(F, G, f, one);
    CHECK_MESSAGE(ra.ok(), ra.failures());
    Report rb = automorphism_ops(F, G, f, f);
    CHECK_MESSAGE(rb.ok(), rb.failures());
    CHECK(automorphism_map(G, one) == LinearMap::identity(G.P.space()));
    // an element of P (x) 1 outside M is not a gauge element
    CHECK_FALSE(is_gauge_element(F, Tensor::pure("PA", {"g", "1"}), nullptr));

    // V_R one-dimensional with h acting by -1
    Matrix id1 = Matrix::identity(1), minus(1, 1);
    minus.at(0, 0) = Scalar(-1);
    FinModule VR{FinSpace({"v"}), {id1, minus}, true};
    CHECK(check_module(G.A, VR).ok());
    AssociatedBundle E = associated_E(G, VR);
    // oracle: h |> on P in the basis (1, g) is [[c, -i s], [i s, -c]]; E = its (-1)-eigenspace
    Matrix h(2, 2);
    h.at(0, 0) = c, h.at(0, 1) = -(i * s), h.at(1, 0) = i * s, h.at(1, 1) = -c;
    for (std::size_t k = 0; k < 2; ++k) CHECK(G.P.space().coords(G.act("h", v1(G.P.space().label(k)))) == h.column(k));
    CHECK(E.basis.size() == kernel(h + Matrix::identity(2)).size());
    CHECK(E.basis.size() == 1);
    CHECK(E.m_action.size() == 1);

    // V_L = A with the regular action
    Matrix lh(2, 2);
    lh.at(1, 0) = Scalar(1), lh.at(0, 1) = Scalar(1);
    FinModule VL{FinSpace({"1", "h"}), {Matrix::identity(2), lh}, false};
    CHECK(check_module(G.A, VL).ok());
    AssociatedBundle Eb = associated_Ebar(F, e, G, VL);
    CHECK(Eb.basis.size() == 2);
    Report rs = cleft_sections(F, G, *cl, VL, VR);
    CHECK_MESSAGE(rs.ok(), rs.failures());
}

TEST_CASE("Psi extends to forms") {
    for (int n = 2; n <= 3; ++n) {
        Report r = check_forms_factorisation(example_cyclic(n), 2);
        CHECK_MESSAGE(r.ok(), r.failures());
    }
    Report rq = check_forms_factorisation(example_quaternions(), 2);
    CHECK_MESSAGE(rq.ok(), rq.failures());
    // h passes through d g with the character
    Factorisation F = example_cyclic(2);
    Tensor dg = d(v1("g"), F.P());
    CHECK(psi_bullet(F, "h", dg) == tensor(dg, Tensor::pure("A", {"h"})).scaled(Scalar(-1)));
}
