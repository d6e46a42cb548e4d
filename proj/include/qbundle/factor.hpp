/* factor.hpp
 * ----------
 * Algebra factorisations X = P A given by Psi : A (x) P -> P (x) A, their
 * copoints, Galois actions, translation maps, trivialisations,
 * automorphisms and associated bundles.  Everything is finite-dimensional
 * and exact.
 *
 * Tensor profiles: 'P' and 'A' for the two algebras, 'Q' for P (x)_M P.
 */
#pragma once

#include "qbundle/forms.hpp"

namespace qb {

class Factorisation {
public:
    Factorisation() = default;
    // psi[a * dim P + u] is Psi(e_a (x) e_u), profile "PA"
    Factorisation(FinAlgebra A, FinAlgebra P, std::vector<Tensor> psi);
    static Factorisation from_function(FinAlgebra A, FinAlgebra P,
                                       const std::function<Tensor(const Key&, const Key&)>& f);
    static Factorisation flip(FinAlgebra A, FinAlgebra P);

    const FinAlgebra& A() const { return A_; }
    const FinAlgebra& P() const { return P_; }
    const Tensor& operator()(const Key& a, const Key& u) const;   // "PA"
    Tensor operator()(const Vec& a, const Vec& u) const;
    // twist the A leg at position i past the P leg at i+1
    Tensor apply(const Tensor& t, std::size_t i) const;
    LinearMap as_map() const;

private:
    FinAlgebra A_, P_;
    std::vector<Tensor> psi_;
};

Report check_factorisation(const Factorisation& F);
FinAlgebra cross_product(const Factorisation& F);   // X on P (x) A, labels "u|a"

// e~ : A -> P as images of the A basis
struct Copoint {
    std::vector<Vec> values;
    Vec operator()(const Vec& a, const FinAlgebra& A) const;
    static Copoint character(const FinAlgebra& A, const FinAlgebra& P, const std::vector<Scalar>& e);
};

Report check_copoint(const Factorisation& F, const Copoint& e);

struct GaloisData {
    FinAlgebra A, P;
    LinearMap action;                   // A (x) P -> P
    std::vector<Column> M;              // basis of M inside P
    Quotient Q;                         // P (x)_M P
    LinearMap chi;                      // A (x) Q -> P
    std::optional<LinearMap> chi_sharp; // P -> Q (x) A

    Vec act(const Key& a, const Vec& u) const;
    Vec act(const Vec& a, const Vec& u) const;
    Tensor act_Q(const Vec& a, const Tensor& q) const;   // on the first factor of [u (x) v]
    Tensor lift(const Tensor& q) const;                  // "Q" -> "PP" representative
    Tensor proj(const Tensor& pp) const;                 // "PP" -> "Q"
    Tensor sharp(const Vec& u) const;                    // "QA"
    Vec chi_of(const Vec& a, const Tensor& q) const;
};

// a |> u = Psi(a (x) u)^(1) e~(Psi(a (x) u)^(2)); records the action and M
// checks into the report
GaloisData action_from_copoint(const Factorisation& F, const Copoint& e, Report& r);
// M from the characterisation a |> (u m) = (a |> u) m
GaloisData galois_from_action(const FinAlgebra& A, const FinAlgebra& P, const LinearMap& action);

std::vector<Column> invariant_subalgebra(const FinAlgebra& A, const FinAlgebra& P, const LinearMap& action,
                                         const Copoint& e);
bool same_subspace(const std::vector<Column>& a, const std::vector<Column>& b);

// solves both Galois identities for chi#; sets G.chi_sharp on success
bool find_chi_sharp(GaloisData& G);
Report check_chi_sharp(const GaloisData& G, const LinearMap& chs);
Report verify_translation(const GaloisData& G);

struct GaloisProduct {
    Factorisation F;
    Copoint e;
};
GaloisProduct galois_product(const GaloisData& G);
bool same_factorisation(const Factorisation& a, const Factorisation& b);

// ---- dim 2 copoint reduction -------------------------------------------

struct CopointFeasibility {
    int sign = 0;                // normalised equation alpha^2 + beta^2 = sign
    bool imaginary_beta = false; // beta was rescaled by i to reach that form
    bool rational = false;       // solvable over Q
    std::string certificate;     // sum-of-squares argument when not
    std::vector<std::pair<Scalar, Scalar>> witnesses;   // normalised (alpha, beta)
    std::vector<Copoint> copoints;                      // witnesses mapped back, each verified
    Report report;
};
// A = span{1, x}, P = span{1, y}, e~(x) = a + b y
CopointFeasibility copoint_feasibility_dim2(const Factorisation& F);

// ---- trivial bundles ------------------------------------------------------

// elements of P (x) A^op as "PA" tensors
Tensor mul_PAop(const Tensor& x, const Tensor& y, const FinAlgebra& P, const FinAlgebra& A);
Tensor unit_PA(const FinAlgebra& P, const FinAlgebra& A);
std::optional<Tensor> inverse_PAop(const Tensor& x, const FinAlgebra& P, const FinAlgebra& A);

struct Cleaving {
    Tensor phi, phi_inv;
};
// solves Phi a = a |> Phi and picks an invertible solution
std::optional<Cleaving> find_cleaving(const GaloisData& G);
Report trivialisation_ops(const Factorisation& F, const Copoint& e, const GaloisData& G, const Cleaving& c);
LinearMap chi_sharp_from_cleaving(const GaloisData& G, const Cleaving& c);

// ---- automorphisms --------------------------------------------------------

bool is_gauge_element(const Factorisation& F, const Tensor& f, std::string* witness = nullptr);
LinearMap automorphism_map(const GaloisData& G, const Tensor& f);
Report automorphism_ops(const Factorisation& F, const GaloisData& G, const Tensor& f, const Tensor& g);
// Phi gamma Phi^-1 for gamma in M (x) A^op
Tensor conjugate_gauge(const Cleaving& c, const Tensor& gamma, const FinAlgebra& P, const FinAlgebra& A);

// ---- associated bundles ---------------------------------------------------

// module given by one matrix per A basis element (columns = images)
struct FinModule {
    FinSpace space;
    std::vector<Matrix> act;
    bool right = false;
};
Report check_module(const FinAlgebra& A, const FinModule& V);
Column module_act(const FinAlgebra& A, const FinModule& V, const Vec& a, const Column& v);

struct AssociatedBundle {
    FinSpace ambient;               // V (x) P or P (x) V
    std::vector<Column> basis;
    std::vector<Matrix> m_action;   // one per M basis vector, in `basis` coordinates
};
AssociatedBundle associated_E(const GaloisData& G, const FinModule& VR);
AssociatedBundle associated_Ebar(const Factorisation& F, const Copoint& e, const GaloisData& G,
                                 const FinModule& VL);
// cleft sections: Hom(V_L, M) <-> Hom_A(V_L, P) and Hom(V_R, M) <-> Hom(V_R, P)_0
Report cleft_sections(const Factorisation& F, const GaloisData& G, const Cleaving& c, const FinModule& VL,
                      const FinModule& VR);

// ---- forms ----------------------------------------------------------------

// Psi^(n+1) on A (x) P^(n+1); the A leg is leg 0
Tensor psi_bullet(const Factorisation& F, const Key& a, const Tensor& w);
Report check_forms_factorisation(const Factorisation& F, int degree);

// ---- presets --------------------------------------------------------------

// A = C Z_n generated by h, P = C Z_n generated by g, q = zeta_n
Factorisation example_cyclic(int n);
Copoint example_cyclic_character(const Factorisation& F);
Factorisation example_quaternions();
Copoint example_circle_copoint(const Factorisation& F, const Scalar& c, const Scalar& s);
// closed-form translation map for the cyclic example
LinearMap example_cyclic_chi_sharp(const GaloisData& G, int n);
// chi as a map P (x) P -> A* (x) P in the bases {g^k (x) g^l}, {c^k (x) g^l},
// c the nontrivial character of Z_2 (n = 2 only)
Scalar example_circle_chi_determinant(const GaloisData& G);
// (h |> g)^2 = 1
bool module_algebra_criterion(const GaloisData& G);
// trivial bundle with A = k
Factorisation trivial_factorisation(const FinAlgebra& P);

}  // namespace qb
