/* scalar.hpp
 * ----------
 * Exact coefficients: Q(zeta_n) extended by two commuting
 * transcendentals q and s, kept as reduced fractions.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qb {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

int euler_phi(int n);

// Element of Q(zeta_n) in the power basis 1, z, .., z^{phi(n)-1}.
// Orders n = 2 mod 4 are folded to n/2; elements that happen to be
// rational are demoted to order 1.
class Cyclo {
public:
    Cyclo() : c_(1) {}
    Cyclo(long v) : c_{mpq_class(v)} {}
    Cyclo(const mpq_class& v) : c_{v} {}
    static Cyclo zeta(int n);

    int order() const { return order_; }
    bool is_zero() const { return order_ == 1 && sgn(c_[0]) == 0; }
    bool is_one() const { return order_ == 1 && c_[0] == 1; }
    bool is_rational() const { return order_ == 1; }
    const mpq_class& rational() const { return c_[0]; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    Cyclo lifted(int m) const;   // same element written in order m (order() | m)

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& b);
    Cyclo& operator-=(const Cyclo& b);
    Cyclo& operator*=(const Cyclo& b);
    Cyclo inverse() const;
    Cyclo pow(long e) const;

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
    friend bool operator==(const Cyclo& a, const Cyclo& b);

    std::string str() const;
    bool needs_parens() const;   // true when str() is a sum

private:
    Cyclo(int n, std::vector<mpq_class> c) : order_(n), c_(std::move(c)) { normalize(); }
    void normalize();

    int order_ = 1;
    std::vector<mpq_class> c_;
};

// Sparse polynomial in q, s with Cyclo coefficients, terms sorted by
// decreasing graded-lex monomial (total degree, then q degree).
class Poly {
public:
    struct Term {
        int eq = 0, es = 0;
        Cyclo c;
    };

    Poly() = default;
    Poly(const Cyclo& c);
    static Poly monomial(const Cyclo& c, int eq, int es);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].eq == 0 && t_[0].es == 0); }
    bool is_one() const { return t_.size() == 1 && t_[0].eq == 0 && t_[0].es == 0 && t_[0].c.is_one(); }
    bool is_monomial() const { return t_.size() == 1; }
    const std::vector<Term>& terms() const { return t_; }
    const Term& lead() const { return t_.front(); }

    int deg_q() const;
    int deg_s() const;
    int min_q() const;
    int min_s() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Cyclo& c) const;
    Poly shifted(int dq, int ds) const;   // times q^dq s^ds (dq, ds may be negative if exact)
    Poly divexact(const Poly& b) const;   // throws if b does not divide
    Poly monic() const;                   // leading coefficient 1
    Cyclo eval(const Cyclo& q0, const Cyclo& s0) const;
    friend bool operator==(const Poly& a, const Poly& b);

    std::string str() const;

    static bool mono_less(int aq, int as, int bq, int bs) {
        int da = aq + as, db = bq + bs;
        return da != db ? da < db : aq < bq;
    }

private:
    explicit Poly(std::vector<Term> t) : t_(std::move(t)) {}
    friend Poly from_sorted(std::vector<Term>);
    std::vector<Term> t_;
};

Poly gcd(const Poly& a, const Poly& b);

// Reduced fraction num/den, den monic.  Equality is identity of the
// canonical representatives.
class Scalar {
public:
    Scalar() : den_(Cyclo(1)) {}
    Scalar(long v) : num_(Cyclo(v)), den_(Cyclo(1)) { if (v == 0) num_ = Poly(); }
    Scalar(const mpq_class& v);
    Scalar(const Cyclo& c);
    static Scalar q() { return Scalar(Poly::monomial(Cyclo(1), 1, 0), Poly(Cyclo(1)), true); }
    static Scalar s() { return Scalar(Poly::monomial(Cyclo(1), 0, 1), Poly(Cyclo(1)), true); }
    static Scalar zeta(int n) { return Scalar(Cyclo::zeta(n)); }
    static Scalar fraction(const Poly& n, const Poly& d);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    std::optional<Cyclo> constant() const;

    Scalar operator-() const { return Scalar(-num_, den_, true); }
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b) { return *this += -b; }
    Scalar& operator*=(const Scalar& b);
    Scalar& operator/=(const Scalar& b) { return *this *= b.inverse(); }
    Scalar inverse() const;
    Scalar pow(long e) const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    // substitute q=q0, s=s0; throws DivisionByZero when the denominator vanishes
    Cyclo specialize(const Cyclo& q0, const Cyclo& s0) const;

    std::string str() const;

private:
    Scalar(Poly n, Poly d, bool /*canonical*/) : num_(std::move(n)), den_(std::move(d)) {}
    Poly num_, den_;
};

// Grammar (see README):  expr := term (('+'|'-') term)*
//   term := unary (('*'|'/') unary)*   unary := ('+'|'-') unary | power
//   power := atom ('^' '-'? int)?      atom := int | 'i' | 'zeta(' int ')' | 'q' | 's' | '(' expr ')'
// When fixed_order is given, zeta(m) must have m dividing it.
Scalar parse_scalar(std::string_view text, std::optional<int> fixed_order = std::nullopt);

inline std::string to_string(const Scalar& a) { return a.str(); }

}  // namespace qb
