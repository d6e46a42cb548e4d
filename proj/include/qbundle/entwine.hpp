/* entwine.hpp
 * -----------
 * Entwining structures psi : C (x) P -> P (x) C, copoint tensors,
 * coactions, connection one-forms, strongness, the left-handed theory
 * and the dictionary with algebra factorisations when C is finite.
 *
 * P and C are reached only through the Algebra / Coalgebra interfaces, so
 * the same checks run on structure-constant examples and on presented
 * algebras truncated to a degree.  Every check runs over explicit test
 * sets of P keys and C keys supplied by the caller.
 */
#pragma once

#include "qbundle/factor.hpp"

#include <memory>

namespace qb {

struct Entwining {
    std::shared_ptr<const Algebra> P;
    std::shared_ptr<const Coalgebra> C;
    Twist psi;                                   // (c, u) -> "PC"
    std::function<Tensor(const Key&, const Key&)> psi_inv;   // (u, c) -> "CP", optional

    Tensor operator()(const Key& c, const Key& u) const { return psi(c, u); }
    // c (x) w  ->  w' (x) c' through all legs of w
    Tensor through(const Key& c, const Tensor& w) const;
    Tensor through(const Tensor& cw) const;    // leading C leg
    // w (x) c  ->  c' (x) w' with psi^-1, trailing C leg
    Tensor back(const Tensor& wc) const;
};

struct TestSet {
    std::vector<Key> p;                         // elements of P to test on
    std::vector<std::pair<Key, Key>> p_pairs;   // products to test
    std::vector<Key> c;                         // elements of C
};
TestSet all_pairs(std::vector<Key> p, std::vector<Key> c);

Report check_entwining(const Entwining& E, const TestSet& T);

// ---- coactions ------------------------------------------------------------

class Coaction {
public:
    Coaction(Entwining E, Tensor e_tilde);   // e_tilde has profile "PC"
    static Coaction copointed(Entwining E, const Key& e);
    static Coaction copointed(Entwining E, const Vec& e);   // e a grouplike combination

    const Entwining& entwining() const { return E_; }
    const Tensor& e_tilde() const { return et_; }
    const std::optional<Vec>& grouplike() const { return e_; }

    Tensor delta(const Vec& u) const;                       // "PC"
    Tensor delta(const Key& u) const { return delta(Vec{{u, Scalar(1)}}); }
    Tensor delta_forms(const Tensor& w) const;              // all legs P; appends C
    Tensor chi_tilde(const Tensor& w) const;                // "PP" -> "PC"
    Tensor left_delta(const Vec& u) const;                  // psi^-1(u e~), "CP"

private:
    Entwining E_;
    Tensor et_;
    std::optional<Vec> e_;
};

Report check_copoint_tensor(const Entwining& E, const Tensor& e_tilde);
Report check_coaction(const Coaction& D, const TestSet& T);

// M inside the span of the given P elements: {m : Delta_P(m) = m e~}
std::vector<Vec> fixed_subalgebra(const Coaction& D, const std::vector<Vec>& span);

// compatibility Delta_V(v <| u) = v_0 <| psi(v_1 (x) u) for a right P-module
// and right C-comodule given on keys ('V' legs)
struct EntwinedModule {
    std::vector<Key> basis;
    std::function<Vec(const Key& v, const Key& u)> act;
    std::function<Tensor(const Key& v)> coact;   // "VC"
};
Report check_entwined_module(const Entwining& E, const EntwinedModule& V, const TestSet& T);
// the same law for Omega^n P with right multiplication and Delta_{Omega^n P}
Report check_forms_comodule(const Coaction& D, const std::vector<Tensor>& forms, const TestSet& T);
// psi^n o (id (x) d) = (d (x) id) o psi^(n-1) on the given forms
Report check_cov_d(const Entwining& E, const std::vector<Tensor>& forms, const std::vector<Key>& c_keys);

std::size_t tensor_rank(const std::vector<Tensor>& ts);
// kernel of the map x |-> sum_j x_j images[j]
std::vector<Column> tensor_kernel(const std::vector<Tensor>& images);

// psi^-1 by inverting psi as a matrix on C (x) P; empty function if singular
std::function<Tensor(const Key&, const Key&)> finite_psi_inverse(const Entwining& E, const FinAlgebra& P,
                                                                 const FinCoalgebra& C);

// ---- Galois map (finite P) --------------------------------------------------

struct CoGalois {
    Quotient Q;          // P (x)_M P
    LinearMap chi;       // Q -> P (x) C
    std::optional<LinearMap> chi_inv;
    std::vector<Column> M;
};
CoGalois galois_chi(const Coaction& D, const FinAlgebra& P, const FinCoalgebra& C);
// psi(c (x) u) = chi(chi^-1(1 (x) c) u)
Entwining entwining_from_galois(const CoGalois& G, const Coaction& D, const FinAlgebra& P, const FinCoalgebra& C);

// ---- connections --------------------------------------------------------------

using ConnectionForm = std::function<Tensor(const Key& c)>;   // "PP"

Report verify_connection_form(const Coaction& D, const ConnectionForm& omega, const std::vector<Key>& c_keys);
// finite case: all omega satisfying (i)-(iii) with values in Omega^1 P, by
// one linear solve (particular solution + homogeneous directions)
struct ConnectionSolution {
    std::optional<std::map<Key, Tensor>> particular;
    std::vector<std::map<Key, Tensor>> kernel;
    std::size_t freedom = 0;
};
// conditions: bit 0 = (i), bit 1 = (ii), bit 2 = (iii)
ConnectionSolution solve_connection_form(const Coaction& D, const FinAlgebra& P, const FinCoalgebra& C,
                                         unsigned conditions = 7);
ConnectionForm connection_from_table(std::map<Key, Tensor> table);

// Pi(sum u (x) v) = sum u v_0 omega(v_1) on Omega^1
Tensor apply_Pi(const Coaction& D, const ConnectionForm& omega, const Tensor& w);
// Pi^2 = Pi, left P-linearity and Pi(u dm v) = 0 on the spanning forms u dv
Report check_Pi(const Coaction& D, const ConnectionForm& omega, const std::vector<Key>& p, const std::vector<Vec>& m_span);
// finite P: ker Pi = P (Omega^1 M) P by dimensions
Report check_Pi_kernel(const Coaction& D, const ConnectionForm& omega, const FinAlgebra& P, const std::vector<Vec>& m_span);

// (id (x) Delta_P) omega(c) = 1 (x) 1 (x) c - eps(c) 1 (x) 1 (x) e + omega(c_1) (x) c_2
Report strongness_check(const Coaction& D, const ConnectionForm& omega, const std::vector<Key>& c_keys);
// the left form; needs psi^-1
Report left_strongness_check(const Coaction& D, const ConnectionForm& omega, const std::vector<Key>& c_keys);

// Pi-bar = sigma o chi_L, i.e. Pi-bar(sum x (x) y) = sum omega(x_(1)) x_(oo) y;
// on (du) v this is -omega(u_(1)) u_(oo) v
Tensor apply_Pi_bar(const Coaction& D, const ConnectionForm& omega, const Tensor& w);
Report left_theory(const Coaction& D, const ConnectionForm& omega, const TestSet& T, const std::vector<Vec>& m_span);
Report check_Pi_bar_kernel(const Coaction& D, const ConnectionForm& omega, const FinAlgebra& P,
                           const std::vector<Vec>& m_span);

// ---- trivial bundles ------------------------------------------------------------

using CMap = std::function<Vec(const Key& c)>;   // C -> P
using OneFormMap = std::function<Tensor(const Key& c)>;   // C -> Omega^1

std::optional<std::vector<Vec>> convolution_inverse(const FinCoalgebra& C, const FinAlgebra& P, const CMap& phi);
Report check_cleaving_map(const Coaction& D, const CMap& phi, const CMap& phi_inv, const std::vector<Key>& c_keys);
// omega(c) = Phi^-1(c_1) alpha(c_2) Phi(c_3) + Phi^-1(c_1) d Phi(c_2)
ConnectionForm trivial_connection(const Coaction& D, const CMap& phi, const CMap& phi_inv, const OneFormMap& alpha);

// ---- duality with factorisations ----------------------------------------------------

struct Transported {
    std::shared_ptr<FinAlgebra> P;
    std::shared_ptr<FinCoalgebra> C;
    Entwining E;
};
// C = codualize(A) with labels "c(a)"; A = C^{*op}
Transported entwining_from_factorisation(const Factorisation& F);
Factorisation factorisation_from_entwining(const Entwining& E, const FinAlgebra& P, const FinCoalgebra& C,
                                           std::vector<std::string> a_labels = {});
Tensor copoint_to_tensor(const Copoint& e, const FinAlgebra& A, const FinCoalgebra& C);
Copoint tensor_to_copoint(const Tensor& et, const FinAlgebra& A, const FinCoalgebra& C, const FinAlgebra& P);
// Phi in P (x) A^op as a map C -> P
CMap cleaving_to_map(const Tensor& phi, const FinAlgebra& A, const FinCoalgebra& C);

// runs both sides and compares verdicts, M, chi and the double transports
Report duality_bridge(const Factorisation& F, const std::optional<Copoint>& e);

}  // namespace qb
