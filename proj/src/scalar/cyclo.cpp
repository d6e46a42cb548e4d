// cyclotomic field arithmetic in the power basis

#include "qbundle/scalar.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace qb {

namespace {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

ZPoly compute_cyclotomic(int n);

const ZPoly& cyclotomic(int n) {
    static std::recursive_mutex mu;
    static std::map<int, ZPoly> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, compute_cyclotomic(n)).first->second;
}

// x^n - 1 divided by Phi_d for every proper divisor d
ZPoly compute_cyclotomic(int n) {
    ZPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        const ZPoly& f = cyclotomic(d);
        int df = static_cast<int>(f.size()) - 1;
        int dp = static_cast<int>(p.size()) - 1;
        ZPoly qt(dp - df + 1, 0);
        for (int k = dp; k >= df; --k) {
            mpz_class c = p[k];
            if (c == 0) continue;
            qt[k - df] = c;
            for (int j = 0; j <= df; ++j) p[k - df + j] -= c * f[j];
        }
        p = std::move(qt);
    }
    return p;
}

void trim(QPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

// reduce a dense polynomial modulo Phi_n, result has length phi(n)
std::vector<mpq_class> reduce_mod(std::vector<mpq_class> a, int n) {
    const ZPoly& f = cyclotomic(n);
    int df = static_cast<int>(f.size()) - 1;
    for (int k = static_cast<int>(a.size()) - 1; k >= df; --k) {
        if (sgn(a[k]) == 0) continue;
        mpq_class c = a[k];
        for (int j = 0; j <= df; ++j) a[k - df + j] -= c * f[j];
    }
    a.resize(df);
    return a;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

void qdivmod(QPoly a, const QPoly& b, QPoly& quo, QPoly& rem) {
    trim(a);
    int db = static_cast<int>(b.size()) - 1;
    quo.assign(a.size() > b.size() - 1 ? a.size() - db : 0, 0);
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int k = static_cast<int>(a.size()) - 1;
        mpq_class c = a[k] / b[db];
        quo[k - db] = c;
        for (int j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
        trim(a);
    }
    rem = std::move(a);
}

}  // namespace

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

Cyclo Cyclo::zeta(int n) {
    if (n <= 0) throw std::invalid_argument("zeta order must be positive");
    if (n == 1) return Cyclo(1);
    if (n % 4 == 2) {
        int m = n / 2;
        if (m == 1) return Cyclo(-1);
        return -zeta(m).pow((m + 1) / 2);
    }
    std::vector<mpq_class> c(euler_phi(n));
    if (c.size() == 1) return Cyclo(1);
    c[1] = 1;
    return Cyclo(n, std::move(c));
}

void Cyclo::normalize() {
    if (order_ == 1) return;
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (sgn(c_[k]) != 0) return;
    c_.resize(1);
    order_ = 1;
}

Cyclo Cyclo::lifted(int m) const {
    if (m == order_) return *this;
    if (m % order_) throw std::logic_error("lift to non-multiple order");
    int step = m / order_;
    std::vector<mpq_class> a((c_.size() - 1) * step + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) a[k * step] = c_[k];
    if (m == 1) return Cyclo(a[0]);
    Cyclo r;
    r.order_ = m;
    r.c_ = reduce_mod(std::move(a), m);
    return r;
}

namespace {
int common_order(int a, int b) { return std::lcm(a, b); }
}  // namespace

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& b) {
    if (order_ == 1 && b.order_ == 1) {
        c_[0] += b.c_[0];
        return *this;
    }
    int m = common_order(order_, b.order_);
    if (order_ != m) *this = lifted(m);
    if (b.order_ == m) {
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += b.c_[k];
    } else {
        Cyclo t = b.lifted(m);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += t.c_[k];
    }
    normalize();
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& b) { return *this += -b; }

Cyclo& Cyclo::operator*=(const Cyclo& b) {
    if (b.order_ == 1) {
        for (auto& x : c_) x *= b.c_[0];
        if (sgn(b.c_[0]) == 0) { order_ = 1; c_.assign(1, 0); }
        return *this;
    }
    if (order_ == 1) {
        mpq_class a = c_[0];
        *this = b;
        for (auto& x : c_) x *= a;
        if (sgn(a) == 0) { order_ = 1; c_.assign(1, 0); }
        return *this;
    }
    int m = common_order(order_, b.order_);
    Cyclo x = lifted(m), y = b.lifted(m);
    c_ = reduce_mod(qmul(x.c_, y.c_), m);
    order_ = m;
    normalize();
    return *this;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (order_ == 1) return Cyclo(mpq_class(1) / c_[0]);
    // extended Euclid: u*a + v*f = 1
    const ZPoly& fz = cyclotomic(order_);
    QPoly f(fz.begin(), fz.end());
    QPoly a = c_;
    trim(a);
    QPoly r0 = f, r1 = a, s0, s1{1};
    while (!(r1.size() == 1)) {
        QPoly quo, rem;
        qdivmod(r0, r1, quo, rem);
        QPoly s2 = qsub(s0, qmul(quo, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) throw std::logic_error("non-invertible cyclotomic element");
    }
    for (auto& x : s1) x /= r1[0];
    Cyclo r;
    r.order_ = order_;
    r.c_ = reduce_mod(std::move(s1), order_);
    if (r.c_.size() < c_.size()) r.c_.resize(c_.size());
    r.normalize();
    return r;
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    if (a.order_ == 1 || b.order_ == 1) return false;
    int m = std::lcm(a.order_, b.order_);
    return a.lifted(m).c_ == b.lifted(m).c_;
}

bool Cyclo::needs_parens() const {
    return order_ != 1;
}

std::string Cyclo::str() const {
    if (order_ == 1) return c_[0].get_str();
    std::string gen = order_ == 4 ? "i" : "zeta(" + std::to_string(order_) + ")";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const mpq_class& x = c_[k];
        if (sgn(x) == 0) continue;
        mpq_class ax = abs(x);
        if (!out.empty() || sgn(x) < 0) out += sgn(x) < 0 ? "-" : "+";
        if (k == 0) {
            out += ax.get_str();
            continue;
        }
        if (ax != 1) out += ax.get_str() + "*";
        out += gen;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace qb
