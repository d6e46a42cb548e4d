/* monopole.hpp
 * ------------
 * The monopole bundle over the two-parameter quantum spheres: the
 * quotient coalgebra C = SU_q(2)/J with its grouplike basis, the
 * projection pi, the bicovariant splitting i, the connection one-form,
 * the projector and the frame resolution theta with its torsion.
 *
 * C is kept abstractly by labels e = g0, "g+n" = g_n, "g-n" = g_{-n}.
 * pi is the right action of SU_q(2) on C applied to e; see PiReducer.
 * q and s are either the formal parameters or rational constants.
 */
#pragma once

#include "qbundle/entwine.hpp"
#include "qbundle/ncpoly.hpp"

#include <array>
#include <mutex>

namespace qb {

std::string g_label(int m);   // 0 -> "e", 2 -> "g+2", -1 -> "g-1"
int g_index(const Key& label);

class QuotientCoalgebra : public Coalgebra {
public:
    explicit QuotientCoalgebra(int N) : N_(N) {}
    int bound() const { return N_; }
    Tensor comult(const Key& c) const override;   // c (x) c
    Scalar counit(const Key& c) const override;   // 1
    std::vector<Key> basis() const override;      // e, g+1, g-1, .., up to N
private:
    int N_;
};

// pi(x) = e <| x for the right action
//   g_m <| alpha = (g_{m+1} + a^2 g_{m-1}) / (1 + a^2)
//   g_m <| beta = g_m <| gamma = a (g_{m+1} - g_{m-1}) / (1 + a^2)
//   g_m <| delta = (a^2 g_{m+1} + g_{m-1}) / (1 + a^2),     a = q^m s
class PiReducer {
public:
    PiReducer(PresentationPtr P, Scalar q, Scalar s, int degree);

    int degree() const { return d_; }
    const PresentationPtr& presentation() const { return P_; }

    // C coordinates of [x]; throws std::domain_error when deg x > degree()
    Vec operator()(const Vec& x) const;
    Vec operator()(const NCPoly& x) const { return (*this)(x.terms()); }
    Vec act(const Key& c, const Vec& x) const;   // c <| x, unbounded degree
    Vec act(const Vec& c, const Vec& x) const;

private:
    using CVec = std::map<int, Scalar>;
    const CVec& act_word(int m, const Word& w) const;
    CVec act_gen(int m, char g) const;

    PresentationPtr P_;
    Scalar q_, s_;
    int d_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, Word>, CVec> cache_;
};

// J_{<=d} is span{j m : j in {xi - s, eta + s, zeta}, deg m <= d} cut down to
// P_{<=d}; products of lower degree alone miss elements such as beta - gamma
struct PiCertificate {
    int d = 0;
    std::size_t dim_P = 0, rank_J = 0;          // rank_J from echelon forms mod p at random points
    std::optional<std::size_t> rank_J_exact;    // exact elimination over Q(q, s), small d only
    bool kills_J = false, hits_basis = false, points_agree = false;
    std::size_t quotient_dim() const { return dim_P - rank_J; }
    bool ok() const {
        return kills_J && hits_basis && points_agree && quotient_dim() == std::size_t(2 * d + 1) &&
               (!rank_J_exact || *rank_J_exact == rank_J);
    }
};

// the action formulas respect the SU_q(2) relations for every m, checked
// with a = q^m s formal
Report check_action_relations();

class Monopole {
public:
    // N bounds the grouplike index, degree the pi truncation
    explicit Monopole(int N = 3, int degree = 8, Scalar q = Scalar::q(), Scalar s = Scalar::s());

    int N() const { return N_; }
    const Scalar& q() const { return q_; }
    const Scalar& s() const { return s_; }
    const PresentationPtr& P() const { return P_; }
    const PiReducer& pi() const { return pi_; }
    const std::shared_ptr<const QuotientCoalgebra>& C() const { return C_; }

    NCPoly alpha, beta, gamma, delta;   // generators
    NCPoly xi, eta, zeta;               // generators of M
    NCPoly one() const { return NCPoly(P_, Scalar(1)); }
    NCPoly constant(const Scalar& c) const { return NCPoly(P_, c); }

    NCPoly G(int m) const;   // lift of g_m as a product; G(0) = 1
    NCPoly i(int m) const;   // bicovariant splitting
    Tensor omega_direct(int m) const;      // S i(g)_(1) (x) i(g)_(2)
    Tensor omega_recursive(int m) const;   // by the recursion from 1 (x) 1

    Entwining entwining() const;   // psi(c (x) h) = h_(1) (x) c <| h_(2), with psi^-1
    Coaction coaction() const;     // copointed at e
    ConnectionForm omega() const;  // omega(c) = omega_direct(c) - eps(c) 1 (x) 1

    Tensor pi_legs(const Tensor& t, std::size_t leg) const;   // pi on one P leg

    // 2x2 projector and the vectors it factors through
    std::array<std::array<NCPoly, 2>, 2> projector() const;
    std::array<NCPoly, 2> column_v() const;   // (alpha + s beta, gamma + s delta)
    std::array<NCPoly, 2> row_w() const;      // (delta - q s gamma, s alpha - q^-1 beta)

    // basis of M in degree <= k (fixed elements of the coaction)
    std::vector<Vec> m_span(int k) const;

private:
    int N_;
    Scalar q_, s_;
    PresentationPtr P_;
    PiReducer pi_;
    std::shared_ptr<const QuotientCoalgebra> C_;
    mutable std::mutex mu_;
    mutable std::map<int, Tensor> omega_cache_;
    mutable std::map<int, std::vector<Vec>> m_cache_;
};

// ---- verification suites ------------------------------------------------------

// kills_J and hits_basis are exact and give quotient_dim >= 2d+1
PiCertificate pi_certificate(const Monopole& mp, int d, unsigned seed = 1, int exact_upto = 3);
// the products j m with deg m <= top - 2
std::vector<Vec> j_rows(const Monopole& mp, int top);
// coordinates of [x] found by solving x = sum c_m G(m) + (element of J_{<=d})
// with q, s substituted; does not use the action.  nullopt if no solution.
std::optional<Vec> pi_by_elimination(const Monopole& mp, const Vec& x, int d, const mpq_class& q0,
                                     const mpq_class& s0);
Report check_pi(const Monopole& mp, unsigned seed = 1);
Report check_grouplikes(const Monopole& mp, int N);
Report check_splitting(const Monopole& mp, int N);
Report check_omega(const Monopole& mp, int N);
Report check_connection(const Monopole& mp, int N);
Report check_projector(const Monopole& mp);
Report check_grassmann(const Monopole& mp, const NCPoly& x, const NCPoly& y);
Report check_grassmann_samples(const Monopole& mp);   // (1,0), (0,1), (xi,eta)

// theta(v) = S v_(1) (x) v_(2) on V = M^+; throws std::invalid_argument
// unless v is in M with eps(v) = 0
Tensor frame_theta(const Monopole& mp, const NCPoly& v);
Tensor frame_r(const Monopole& mp, const Tensor& w);         // m (x) m' -> m m'_(1) (x) m'_(2)
Tensor frame_s(const Monopole& mp, const Tensor& w);         // u (x) v -> u S v_(1) (x) v_(2)
Tensor frame_torsion(const Monopole& mp, const NCPoly& v);   // D-bar theta (v)
Report check_frame(const Monopole& mp, const NCPoly& v, bool torsion = true);
// xi - s, eta + s, zeta; r, s_theta on dxi, deta, dzeta.  With formal q, s the
// torsion checks run at q = 1, s = 0 and at a seeded rational point.
Report check_frame_samples(const Monopole& mp, unsigned seed = 1);

// spot check: the psi^2-invariant part of span{x (x) m} lies in M (x) M
Report check_invariant_subset(const Monopole& mp, int p_degree);

// coefficientwise substitution q = q0, s = s0
Vec specialize(const Vec& v, const Cyclo& q0, const Cyclo& s0);
Tensor specialize(const Tensor& t, const Cyclo& q0, const Cyclo& s0);

// the formal objects specialised at (q0, s0) against the same objects built
// with q0, s0 as constants: pi on samples, i, omega, the projector
Report check_specialization(const Monopole& formal, const Monopole& special, const Cyclo& q0, const Cyclo& s0);
bool is_formal(const Monopole& mp);   // q and s are the free parameters

// named suites: pi, grouplike, splitting, omega, connection, projector,
// grassmann, frame, invariant, specialize; "all" runs every one.  The
// specialize suite needs formal parameters and compares q = 1, s = 0 and a
// seeded rational point.
std::vector<std::string> monopole_suites();
Report run_monopole_suite(const Monopole& mp, const std::string& suite, unsigned seed = 1);

}  // namespace qb
