// Acceptance run: one line per criterion, exit 1 if any fails.
#include "qbundle/entwine.hpp"
#include "qbundle/factor.hpp"
#include "qbundle/monopole.hpp"
#include "qbundle/ncpoly.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace qb;

namespace {

// collects named outcomes; a criterion passes when it has any and none failed
class Criterion {
public:
    void expect(bool ok, const std::string& what) {
        ++count_;
        if (!ok) fail_ += (fail_.empty() ? "" : "; ") + what;
    }
    // every result of r passes and each listed name occurs in it
    void report(const Report& r, const std::string& where, std::initializer_list<const char*> names = {}) {
        expect(!r.results().empty(), where + ": empty report");
        for (auto& x : r.results())
            if (x.status == Status::fail) expect(false, where + "." + x.check + (x.witness.empty() ? "" : " (" + x.witness + ")"));
            else ++count_;
        for (const char* n : names) {
            bool seen = false;
            for (auto& x : r.results())
                if (x.check.find(n) != std::string::npos && x.status == Status::pass) seen = true;
            expect(seen, where + ": no passing " + n);
        }
    }
    bool ok() const { return count_ > 0 && fail_.empty(); }
    std::size_t count() const { return count_; }
    const std::string& failures() const { return fail_; }

private:
    std::size_t count_ = 0;
    std::string fail_;
};

std::string gp(int k) { return k == 0 ? "1" : k == 1 ? "g" : "g^" + std::to_string(k); }
std::string hp(int k) { return k == 0 ? "1" : k == 1 ? "h" : "h^" + std::to_string(k); }

void c1(Criterion& c) {
    for (int n = 2; n <= 4; ++n) {
        Factorisation F = example_cyclic(n);
        std::string at = "n=" + std::to_string(n);
        c.report(check_factorisation(F), at, {"psi.multiplicative_A", "psi.unit_A", "psi.multiplicative_P"});
        FinAlgebra X = cross_product(F);
        c.expect(X.dim() == std::size_t(n * n), at + ": dim X = " + std::to_string(X.dim()));
        c.report(check_algebra(X), at + ".X");
    }
}

void c2(Criterion& c) {
    for (int n = 2; n <= 4; ++n) {
        std::string at = "n=" + std::to_string(n);
        Factorisation F = example_cyclic(n);
        Report r;
        GaloisData G = action_from_copoint(F, example_cyclic_character(F), r);
        c.report(r, at + ".action");
        LinearMap formula = example_cyclic_chi_sharp(G, n);
        c.report(check_chi_sharp(G, formula), at + ".formula");
        G.chi_sharp = formula;
        c.report(verify_translation(G), at, {"translation.a", "translation.b", "translation.c"});
        GaloisProduct back = galois_product(G);
        c.expect(same_factorisation(back.F, F), at + ": galois product differs from the input");
        Scalar q = Scalar::zeta(n);
        for (int m = 0; m < n; ++m)
            for (int k = 0; k < n; ++k)
                c.expect(back.F(hp(m), gp(k)) == Tensor::pure("PA", {gp(k), hp(m)}, q.pow(m * k)),
                         at + ": Psi(" + hp(m) + "," + gp(k) + ")");
    }
}

void c3(Criterion& c) {
    Factorisation F = example_cyclic(2);
    for (auto [cs, sn] : {std::pair{mpq_class(3, 5), mpq_class(4, 5)}, std::pair{mpq_class(5, 13), mpq_class(12, 13)}}) {
        std::string at = "(" + cs.get_str() + "," + sn.get_str() + ")";
        Copoint e = example_circle_copoint(F, Scalar(cs), Scalar(sn));
        Report r;
        GaloisData G = action_from_copoint(F, e, r);
        c.report(r, at + ".action");
        bool k1 = G.M.size() == 1;
        for (std::size_t i = 0; k1 && i < G.M[0].size(); ++i)
            k1 = G.M[0][i].is_zero() != (G.P.space().label(i) == "1");
        c.expect(k1, at + ": M is not k1");
        c.expect(example_circle_chi_determinant(G) == Scalar(1), at + ": det chi != 1");
        c.expect(find_chi_sharp(G), at + ": no chi#");
        if (G.chi_sharp) c.report(verify_translation(G), at);
        auto cl = find_cleaving(G);
        c.expect(bool(cl), at + ": not cleft");
        if (cl) c.report(trivialisation_ops(F, e, G, *cl), at + ".cleft");
        c.expect(!module_algebra_criterion(G), at + ": module-algebra criterion holds");
    }
    for (long x : {1L, -1L}) {
        Report r;
        GaloisData G = action_from_copoint(F, example_circle_copoint(F, Scalar(x), Scalar(0)), r);
        c.report(r, "(" + std::to_string(x) + ",0).action");
        c.expect(module_algebra_criterion(G), "(" + std::to_string(x) + ",0): module-algebra criterion fails");
    }
}

void c4(Criterion& c) {
    CopointFeasibility cf = copoint_feasibility_dim2(example_quaternions());
    c.report(cf.report, "feasibility");
    c.expect(!cf.rational, "copoint found over Q");
    c.expect(!cf.certificate.empty(), "no infeasibility certificate");
    std::pair<Scalar, Scalar> w{Scalar::zeta(4), Scalar(0)};
    c.expect(std::find(cf.witnesses.begin(), cf.witnesses.end(), w) != cf.witnesses.end(), "(i,0) is not a witness");
    c.expect(!cf.copoints.empty(), "no verified copoint over Q(i)");
}

void c5(Criterion& c) {
    auto P = preset_suq2();
    ConfluenceReport cr = check_confluence(*P, 4);
    c.expect(!cr.pairs.empty(), "no critical pairs");
    c.expect(cr.ok(), "unresolved critical pair");
    for (int d = 0; d <= 6; ++d)
        c.expect(pbw_count(*P, d) == std::size_t((d + 1) * (d + 1)), "irreducible words in degree " + std::to_string(d));
    auto hopf = check_hopf_axioms(*P);
    c.expect(!hopf.empty(), "no Hopf checks");
    for (auto& h : hopf) c.expect(h.ok, h.axiom + " on " + h.generator);
}

void c6(Criterion& c, const Monopole& mp) {
    for (int d = 0; d <= 6; ++d) {
        PiCertificate pc = pi_certificate(mp, d, 1);
        c.expect(pc.ok() && pc.quotient_dim() == std::size_t(2 * d + 1),
                 "d=" + std::to_string(d) + ": quotient dim " + std::to_string(pc.quotient_dim()));
    }
    c.report(check_pi(mp, 1), "pi", {"elimination_agrees", "right_module_map"});
}

void c7(Criterion& c, const Monopole& mp) {
    c.report(check_grouplikes(mp, 3), "grouplike",
             {"coproduct", "counit", "action_plus_gamma", "action_plus_beta", "action_minus_gamma", "action_minus_beta"});
    c.report(check_splitting(mp, 3), "splitting", {"splits", "right_covariant", "left_covariant"});
    c.report(check_omega(mp, 3), "omega", {"recursion_matches_direct"});
}

void c8(Criterion& c, const Monopole& mp) {
    Coaction D = mp.coaction();
    std::vector<Key> keys;
    for (int m : {0, 1, -1, 2, -2}) keys.push_back(g_label(m));
    c.report(verify_connection_form(D, mp.omega(), keys), "connection", {"omega.i", "omega.ii", "omega.iii"});
    c.report(strongness_check(D, mp.omega(), keys), "strong");
    c.report(check_connection(mp, 3), "suite", {"strong.right", "strong.left"});
    c.report(check_omega(mp, 3), "omega", {"display_g1"});
}

void c9(Criterion& c, const Monopole& mp) {
    c.report(check_projector(mp), "projector",
             {"key_relation", "idempotent", "entries_coinvariant", "classical_trace"});
    c.report(check_grassmann_samples(mp), "grassmann", {"(1,0)", "(0,1)", "(xi,eta)", "nabla_is_dp_p"});
}

void c10(Criterion& c, const Monopole& mp) {
    c.report(check_frame_samples(mp, 1), "frame",
             {"xi-s.frame.theta_strongly_tensorial", "eta+s.frame.theta_strongly_tensorial",
              "zeta.frame.theta_strongly_tensorial", "theta_horizontal", "s_after_r", "r_after_s",
              "torsion_is_form", "torsion_strongly_tensorial", "torsion_horizontal"});
}

void c11(Criterion& c) {
    auto bridge = [&](const std::string& at, const Factorisation& F, std::optional<Copoint> e) {
        c.report(duality_bridge(F, e), at);
    };
    for (int n = 2; n <= 4; ++n) {
        Factorisation F = example_cyclic(n);
        bridge("cyclic n=" + std::to_string(n), F, example_cyclic_character(F));
    }
    Factorisation F2 = example_cyclic(2);
    for (auto [x, y] : {std::pair{mpq_class(3, 5), mpq_class(4, 5)}, std::pair{mpq_class(5, 13), mpq_class(12, 13)},
                        std::pair{mpq_class(1), mpq_class(0)}, std::pair{mpq_class(-1), mpq_class(0)}})
        bridge("circle (" + x.get_str() + "," + y.get_str() + ")", F2, example_circle_copoint(F2, Scalar(x), Scalar(y)));
    bridge("quaternions", example_quaternions(), std::nullopt);
    FinAlgebra z3 = group_algebra_cyclic(3, "g");
    bridge("trivial Z3", trivial_factorisation(z3), std::nullopt);
    FinAlgebra z2h = group_algebra_cyclic(2, "h"), z2g = group_algebra_cyclic(2, "g");
    Factorisation flip = Factorisation::flip(z2h, z2g);
    bridge("flip", flip, Copoint::character(z2h, z2g, {Scalar(1), Scalar(-1)}));
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    int failed = 0;
    auto run = [&](int k, const char* what, const std::function<void(Criterion&)>& body) {
        Criterion c;
        auto t0 = clock::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        char line[64];
        std::snprintf(line, sizeof line, "%.1fs", secs);
        std::cout << "criterion " << k << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << what << "  [" << c.count()
                  << " checks, " << line << "]";
        if (!c.ok()) std::cout << "\n    " << c.failures();
        std::cout << std::endl;
        if (!c.ok()) ++failed;
    };

    run(1, "factorisation axioms, X associative of dim n^2", c1);
    run(2, "chi# Galois identities, translation identities, round trip", c2);
    run(3, "circle copoints: M, det chi, chi#, cleft, module-algebra criterion", c3);
    run(4, "quaternion copoint: none over Q, (i,0) over Q(i)", c4);
    run(5, "SU_q(2): confluence to degree 4, (d+1)^2 words, Hopf axioms", c5);

    Monopole mp(3, 8);
    run(6, "pi certificate dim = 2d+1 for d <= 6", [&](Criterion& c) { c6(c, mp); });
    run(7, "grouplikes, action identities, splitting, recursion = direct", [&](Criterion& c) { c7(c, mp); });
    run(8, "omega is a strong connection, omega(g+1) display", [&](Criterion& c) { c8(c, mp); });
    run(9, "projector, idempotent, coinvariant, Grassmann identity, classical trace", [&](Criterion& c) { c9(c, mp); });
    run(10, "frame resolution, r/s round trips, torsion tensorial", [&](Criterion& c) { c10(c, mp); });
    run(11, "duality bridge on the finite examples", c11);

    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria pass")) << std::endl;
    return failed ? 1 : 0;
}
