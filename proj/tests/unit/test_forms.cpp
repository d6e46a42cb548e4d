#include <doctest.h>

#include "qbundle/forms.hpp"

#include <random>

using namespace qb;

namespace {

Vec rnd_vec(std::mt19937& rng, const FinAlgebra& P) {
    std::uniform_int_distribution<int> c(-2, 2);
    Vec v;
    for (auto& l : P.space().labels())
        if (int x = c(rng)) v[l] = Scalar(x);
    return v;
}

// random form of degree k: u0 du1 ... duk
Tensor rnd_form(std::mt19937& rng, const FinAlgebra& P, std::size_t k) {
    Tensor w = from_vec(rnd_vec(rng, P), 'P');
    for (std::size_t i = 0; i < k; ++i) w = wedge(w, d(rnd_vec(rng, P), P), P);
    return w;
}

}  // namespace

TEST_CASE("universal calculus") {
    FinAlgebra P = matrix_algebra(2);
    std::mt19937 rng(7);
    Vec u{{"e12", Scalar(1)}};
    CHECK(d(u, P) == tensor(P.one(), u, "PP") - tensor(u, P.one(), "PP"));
    CHECK(d(P.one(), P).is_zero());
    for (int t = 0; t < 6; ++t) {
        for (std::size_t k = 0; k < 3; ++k) {
            Tensor w = rnd_form(rng, P, k);
            CHECK(is_form(w, P));
            CHECK(is_form(d(w, P), P));
            CHECK(d(d(w, P), P).is_zero());
        }
        for (std::size_t k = 0; k < 2; ++k) {
            Tensor a = rnd_form(rng, P, k), b = rnd_form(rng, P, 1);
            Tensor lhs = d(wedge(a, b, P), P);
            Tensor rhs = wedge(d(a, P), b, P) + wedge(a, d(b, P), P).scaled(Scalar(k % 2 ? -1 : 1));
            CHECK(lhs == rhs);
        }
    }
    // u (x) v with uv != 0 is not a form
    CHECK_FALSE(is_form(tensor(u, Vec{{"e21", Scalar(1)}}, "PP"), P));
    CHECK(is_form(tensor(u, u, "PP"), P));
}

TEST_CASE("twisting and span tests") {
    // flip twist moves the trailing key to the end
    Twist flip = [](const Key& x, const Key& u) { return Tensor::pure("PC", {u, x}); };
    Tensor t = Tensor::pure("CPP", {"c", "a", "b"});
    CHECK(twist_through(t, 0, 2, flip, 'C') == Tensor::pure("PPC", {"a", "b", "c"}));

    std::vector<Tensor> gens = {Tensor::pure("PP", {"x", "y"}) + Tensor::pure("PP", {"y", "x"}),
                                Tensor::pure("PP", {"x", "x"})};
    auto c = span_coords(gens, Tensor::pure("PP", {"x", "y"}).scaled(Scalar(2)) + Tensor::pure("PP", {"y", "x"}).scaled(Scalar(2)) +
                                   Tensor::pure("PP", {"x", "x"}).scaled(Scalar(-1)));
    REQUIRE(c);
    CHECK((*c)[0] == Scalar(2));
    CHECK((*c)[1] == Scalar(-1));
    CHECK_FALSE(span_coords(gens, Tensor::pure("PP", {"y", "y"})));

    std::vector<Vec> m = {Vec{{"x", Scalar(1)}, {"y", Scalar(1)}}};
    Tensor in = Tensor::pure("PPP", {"a", "x", "x"}) + Tensor::pure("PPP", {"a", "x", "y"}) +
                Tensor::pure("PPP", {"a", "y", "x"}) + Tensor::pure("PPP", {"a", "y", "y"});
    CHECK(in_P_tensor_span(in, m));
    CHECK_FALSE(in_P_tensor_span(Tensor::pure("PPP", {"a", "x", "y"}), m));
}

TEST_CASE("sparse elimination matches dense solve") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> c(-3, 3), z(0, 2);
    for (int t = 0; t < 20; ++t) {
        std::size_t rows = 3 + t % 4, cols = 2 + t % 5;
        Matrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (z(rng) == 0) a.at(i, j) = Scalar(c(rng));
        Column b(rows);
        for (auto& x : b) x = Scalar(c(rng));
        if (t % 2 == 0) {   // consistent right-hand side
            Column x0(cols);
            for (auto& x : x0) x = Scalar(c(rng));
            b = a.apply(x0);
        }
        SparseSystem sys(cols);
        for (std::size_t i = 0; i < rows; ++i) {
            std::map<std::size_t, Scalar> row;
            for (std::size_t j = 0; j < cols; ++j)
                if (!a.at(i, j).is_zero()) row[j] = a.at(i, j);
            sys.add(row, b[i]);
        }
        Solution dense = solve(a, b), sparse = sys.solve();
        CHECK(sys.consistent() == dense.feasible);
        CHECK(sparse.feasible == dense.feasible);
        CHECK(sys.rank() == rank(a));
        if (!sparse.feasible) continue;
        CHECK(a.apply(sparse.particular) == b);
        CHECK(sparse.kernel.size() == cols - rank(a));
        for (auto& k : sparse.kernel) CHECK(a.apply(k) == Column(rows, Scalar(0)));
    }
}
