#include "qbundle/monopole.hpp"

#include <doctest.h>

using namespace qb;

namespace {

const Monopole& formal() {
    static const Monopole mp(3, 8);
    return mp;
}

void expect_ok(const Report& r) {
    INFO(r.failures());
    CHECK(r.ok());
}

Vec unit(const Key& k) { return Vec{{k, Scalar(1)}}; }

}  // namespace

TEST_CASE("grouplike labels") {
    CHECK(g_label(0) == "e");
    CHECK(g_label(3) == "g+3");
    CHECK(g_label(-2) == "g-2");
    for (int m = -5; m <= 5; ++m) CHECK(g_index(g_label(m)) == m);
    CHECK_THROWS_AS(g_index("g+0"), std::invalid_argument);
    CHECK_THROWS_AS(g_index("h"), std::invalid_argument);
    CHECK_THROWS_AS(g_index("g+2x"), std::invalid_argument);
    QuotientCoalgebra C(2);
    CHECK(C.basis().size() == 5);
    CHECK(C.comult("g-2") == Tensor::pure("CC", {"g-2", "g-2"}));
}

TEST_CASE("pi on generators") {
    const Monopole& mp = formal();
    Scalar s = Scalar::s(), den = (Scalar(1) + s * s).inverse();
    // e <| alpha = (g1 + s^2 g-1)/(1+s^2), computed by hand
    Vec want{{"g+1", den}, {"g-1", s * s * den}};
    CHECK(mp.pi()(mp.alpha) == want);
    Vec wb{{"g+1", s * den}, {"g-1", -s * den}};
    CHECK(mp.pi()(mp.beta) == wb);
    CHECK(mp.pi()(mp.gamma) == wb);
    CHECK(mp.pi()(mp.one()) == unit("e"));
    CHECK(mp.pi()(mp.xi) == Vec{{"e", s}});
    CHECK(mp.pi()(mp.zeta).empty());
    CHECK_THROWS_AS(mp.pi()(mp.alpha.pow(9)), std::domain_error);
}

TEST_CASE("pi suite") { expect_ok(check_pi(formal(), 7)); }

TEST_CASE("pi certificate dimensions") {
    const Monopole& mp = formal();
    // dim P_{<=d} = sum (k+1)^2
    std::size_t dims[] = {1, 5, 14, 30, 55};
    for (int d = 0; d <= 4; ++d) {
        PiCertificate c = pi_certificate(mp, d, 3, 2);
        CHECK(c.dim_P == dims[d]);
        CHECK(c.quotient_dim() == std::size_t(2 * d + 1));
        CHECK(c.ok());
    }
}

TEST_CASE("grouplikes and splitting") {
    expect_ok(check_grouplikes(formal(), 3));
    expect_ok(check_splitting(formal(), 3));
}

TEST_CASE("omega") {
    const Monopole& mp = formal();
    expect_ok(check_omega(mp, 3));
    CHECK(mp.omega_direct(0) == Tensor::pure("PP", {Key(), Key()}));
}

TEST_CASE("connection") { expect_ok(check_connection(formal(), 1)); }

TEST_CASE("projector") { expect_ok(check_projector(formal())); }

TEST_CASE("grassmann") {
    const Monopole& mp = formal();
    expect_ok(check_grassmann_samples(mp));
    CHECK_THROWS_AS(check_grassmann(mp, mp.alpha, mp.one()), std::invalid_argument);
}

TEST_CASE("frame") {
    const Monopole& mp = formal();
    expect_ok(check_frame_samples(mp));
    Tensor th = frame_theta(mp, mp.zeta);
    CHECK(frame_s(mp, frame_r(mp, th)) == th);
}

TEST_CASE("invariant subset") { expect_ok(check_invariant_subset(formal(), 1)); }

TEST_CASE("specialisations") {
    const Monopole& mp = formal();
    for (auto [a, b] : {std::pair{mpq_class(1), mpq_class(0)}, std::pair{mpq_class(3, 2), mpq_class(2, 7)}}) {
        Monopole sp(3, 8, Scalar(a), Scalar(b));
        expect_ok(check_specialization(mp, sp, Cyclo(a), Cyclo(b)));
        expect_ok(check_grouplikes(sp, 2));
        expect_ok(check_projector(sp));
        expect_ok(check_frame_samples(sp));
    }
    // the classical bundle: s = 0 makes pi(beta) vanish
    Monopole cl(2, 4, Scalar(1), Scalar(0));
    CHECK(cl.pi()(cl.beta).empty());
    CHECK(!is_formal(cl));
    CHECK(is_formal(mp));
}

TEST_CASE("constructor and suite names") {
    CHECK_THROWS_AS(Monopole(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Monopole(1, 4, Scalar(0)), std::invalid_argument);
    CHECK_THROWS_AS(run_monopole_suite(formal(), "nope"), std::invalid_argument);
    CHECK(monopole_suites().size() == 10);
}
