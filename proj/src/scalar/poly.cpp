// sparse bivariate polynomials over Q(zeta) and their gcd

#include "qbundle/scalar.hpp"

#include <algorithm>
#include <map>

namespace qb {

namespace {

bool term_before(const Poly::Term& a, const Poly::Term& b) {
    return Poly::mono_less(b.eq, b.es, a.eq, a.es);
}

}  // namespace

Poly from_sorted(std::vector<Poly::Term> t) { return Poly(std::move(t)); }

Poly::Poly(const Cyclo& c) {
    if (!c.is_zero()) t_.push_back({0, 0, c});
}

Poly Poly::monomial(const Cyclo& c, int eq, int es) {
    Poly p;
    if (!c.is_zero()) p.t_.push_back({eq, es, c});
    return p;
}

int Poly::deg_q() const {
    int d = 0;
    for (auto& t : t_) d = std::max(d, t.eq);
    return d;
}
int Poly::deg_s() const {
    int d = 0;
    for (auto& t : t_) d = std::max(d, t.es);
    return d;
}
int Poly::min_q() const {
    int d = t_.empty() ? 0 : t_[0].eq;
    for (auto& t : t_) d = std::min(d, t.eq);
    return d;
}
int Poly::min_s() const {
    int d = t_.empty() ? 0 : t_[0].es;
    for (auto& t : t_) d = std::min(d, t.es);
    return d;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool subtract) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    std::vector<Poly::Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && term_before(x[i], y[j]))) {
            out.push_back(x[i++]);
        } else if (i == x.size() || term_before(y[j], x[i])) {
            out.push_back(y[j++]);
            if (subtract) out.back().c = -out.back().c;
        } else {
            Cyclo c = subtract ? x[i].c - y[j].c : x[i].c + y[j].c;
            if (!c.is_zero()) out.push_back({x[i].eq, x[i].es, std::move(c)});
            ++i, ++j;
        }
    }
    return from_sorted(std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
    if (b.is_zero()) return a;
    return merge(a, b, true);
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_monomial()) return a.scaled(b.lead().c).shifted(b.lead().eq, b.lead().es);
    if (a.is_monomial()) return b.scaled(a.lead().c).shifted(a.lead().eq, a.lead().es);
    std::vector<Poly::Term> acc;
    acc.reserve(a.terms().size() * b.terms().size());
    for (auto& x : a.terms())
        for (auto& y : b.terms()) acc.push_back({x.eq + y.eq, x.es + y.es, x.c * y.c});
    std::sort(acc.begin(), acc.end(), term_before);
    std::vector<Poly::Term> out;
    for (auto& t : acc) {
        if (!out.empty() && out.back().eq == t.eq && out.back().es == t.es) {
            out.back().c += t.c;
        } else {
            if (!out.empty() && out.back().c.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    return from_sorted(std::move(out));
}

Poly Poly::scaled(const Cyclo& c) const {
    if (c.is_zero()) return {};
    if (c.is_one()) return *this;
    Poly r = *this;
    for (auto& t : r.t_) t.c *= c;
    return r;
}

Poly Poly::shifted(int dq, int ds) const {
    Poly r = *this;
    for (auto& t : r.t_) {
        t.eq += dq;
        t.es += ds;
        if (t.eq < 0 || t.es < 0) throw std::logic_error("negative exponent in shift");
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || lead().c.is_one()) return *this;
    return scaled(lead().c.inverse());
}

Poly Poly::divexact(const Poly& b) const {
    if (b.is_zero()) throw DivisionByZero();
    if (b.is_monomial()) return scaled(b.lead().c.inverse()).shifted(-b.lead().eq, -b.lead().es);
    Poly r = *this, quo;
    Cyclo inv = b.lead().c.inverse();
    while (!r.is_zero()) {
        const Term& lt = r.lead();
        int dq = lt.eq - b.lead().eq, ds = lt.es - b.lead().es;
        if (dq < 0 || ds < 0) throw std::logic_error("inexact polynomial division");
        Poly m = monomial(lt.c * inv, dq, ds);
        quo = quo + m;
        r = r - m * b;
    }
    return quo;
}

Cyclo Poly::eval(const Cyclo& q0, const Cyclo& s0) const {
    std::map<int, Cyclo> qp, sp;
    auto power = [](std::map<int, Cyclo>& cache, const Cyclo& x, int e) -> const Cyclo& {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        return cache.emplace(e, x.pow(e)).first->second;
    };
    Cyclo r;
    for (auto& t : t_) r += t.c * power(qp, q0, t.eq) * power(sp, s0, t.es);
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i) {
        const auto& x = a.t_[i];
        const auto& y = b.t_[i];
        if (x.eq != y.eq || x.es != y.es || !(x.c == y.c)) return false;
    }
    return true;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto& t : t_) {
        bool unit_mono = t.eq == 0 && t.es == 0;
        std::string mono;
        if (t.eq) mono += t.eq == 1 ? "q" : "q^" + std::to_string(t.eq);
        if (t.es) {
            if (!mono.empty()) mono += "*";
            mono += t.es == 1 ? "s" : "s^" + std::to_string(t.es);
        }
        if (t.c.is_rational()) {
            mpq_class c = t.c.rational();
            bool neg = sgn(c) < 0;
            if (neg) c = -c;
            if (!out.empty() || neg) out += neg ? "-" : "+";
            if (unit_mono) out += c.get_str();
            else if (c == 1) out += mono;
            else out += c.get_str() + "*" + mono;
        } else {
            if (!out.empty()) out += "+";
            out += "(" + t.c.str() + ")";
            if (!unit_mono) out += "*" + mono;
        }
    }
    return out;
}

// ---- gcd -------------------------------------------------------------

namespace {

// dense univariate polynomial in q, low degree first
using UPoly = std::vector<Cyclo>;

void utrim(UPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UPoly usub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    utrim(a);
    return a;
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    utrim(r);
    return r;
}

// remainder of a by b (b nonzero); quotient optional
UPoly urem(UPoly a, const UPoly& b, UPoly* quo = nullptr) {
    utrim(a);
    std::size_t db = b.size() - 1;
    Cyclo inv = b.back().inverse();
    if (quo) quo->assign(a.size() >= b.size() ? a.size() - db : 0, Cyclo());
    while (!a.empty() && a.size() - 1 >= db) {
        std::size_t k = a.size() - 1;
        Cyclo c = a[k] * inv;
        if (quo) (*quo)[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
        a.pop_back();
        utrim(a);
    }
    return a;
}

UPoly umonic(UPoly a) {
    if (a.empty() || a.back().is_one()) return a;
    Cyclo inv = a.back().inverse();
    for (auto& x : a) x *= inv;
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = urem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(std::move(a));
}

UPoly udiv(const UPoly& a, const UPoly& b) {
    UPoly quo;
    UPoly r = urem(a, b, &quo);
    if (!r.empty()) throw std::logic_error("inexact univariate division");
    utrim(quo);
    return quo;
}

bool uis_const(const UPoly& a) { return a.size() <= 1; }

// polynomial in s with coefficients in K[q]
using BPoly = std::vector<UPoly>;

BPoly to_bpoly(const Poly& p) {
    BPoly r(p.deg_s() + 1);
    for (auto& t : p.terms()) {
        auto& u = r[t.es];
        if (static_cast<int>(u.size()) <= t.eq) u.resize(t.eq + 1);
        u[t.eq] = t.c;
    }
    return r;
}

Poly from_bpoly(const BPoly& b) {
    std::vector<Poly::Term> t;
    for (std::size_t es = 0; es < b.size(); ++es)
        for (std::size_t eq = 0; eq < b[es].size(); ++eq)
            if (!b[es][eq].is_zero()) t.push_back({static_cast<int>(eq), static_cast<int>(es), b[es][eq]});
    std::sort(t.begin(), t.end(), term_before);
    return from_sorted(std::move(t));
}

void btrim(BPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

UPoly content(const BPoly& a) {
    UPoly g;
    for (auto& c : a) {
        if (c.empty()) continue;
        g = g.empty() ? umonic(c) : ugcd(g, c);
        if (uis_const(g)) break;
    }
    return g;
}

BPoly divide_content(BPoly a, const UPoly& c) {
    if (uis_const(c)) {
        if (c.empty()) return a;
        Cyclo inv = c[0].inverse();
        for (auto& u : a)
            for (auto& x : u) x *= inv;
        return a;
    }
    for (auto& u : a)
        if (!u.empty()) u = udiv(u, c);
    return a;
}

// pseudo remainder of a by b in K[q][s]
BPoly prem(BPoly a, const BPoly& b) {
    btrim(a);
    std::size_t db = b.size() - 1;
    const UPoly& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        std::size_t k = a.size() - 1;
        UPoly la = a[k];
        for (auto& u : a) u = umul(u, lb);
        for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = usub(a[k - db + j], umul(la, b[j]));
        a.pop_back();
        btrim(a);
    }
    return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(Cyclo(1));
    int mq = std::min(a.min_q(), b.min_q());
    int ms = std::min(a.min_s(), b.min_s());
    Poly mono = Poly::monomial(Cyclo(1), mq, ms);
    if (a.is_monomial() || b.is_monomial()) return mono;
    if (a == b) return a.monic();
    Poly x = a.shifted(-a.min_q(), -a.min_s());
    Poly y = b.shifted(-b.min_q(), -b.min_s());
    if (x.is_constant() || y.is_constant()) return mono;

    BPoly A = to_bpoly(x), B = to_bpoly(y);
    UPoly ca = content(A), cb = content(B);
    UPoly c = ugcd(ca, cb);
    A = divide_content(std::move(A), ca);
    B = divide_content(std::move(B), cb);
    if (A.size() < B.size()) std::swap(A, B);
    while (B.size() > 1) {
        BPoly r = prem(A, B);
        A = std::move(B);
        if (r.empty()) {
            B.clear();
            break;
        }
        B = divide_content(r, content(r));
    }
    BPoly g;
    if (B.size() == 1) g = BPoly{UPoly{Cyclo(1)}};   // constant in s: primitive parts coprime
    else g = A;
    g = divide_content(g, content(g));
    for (auto& u : g) u = umul(u, c);
    Poly r = from_bpoly(g);
    return (r * mono).monic();
}

}  // namespace qb
