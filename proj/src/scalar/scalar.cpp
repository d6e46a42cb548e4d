// reduced fractions over Q(zeta)[q,s] and the literal parser

#include "qbundle/scalar.hpp"

#include <cctype>
#include <numeric>

namespace qb {

Scalar::Scalar(const mpq_class& v) : den_(Cyclo(1)) {
    if (sgn(v) != 0) num_ = Poly(Cyclo(v));
}

Scalar::Scalar(const Cyclo& c) : num_(c), den_(Cyclo(1)) {}

Scalar Scalar::fraction(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw DivisionByZero();
    if (n.is_zero()) return Scalar();
    Poly g = gcd(n, d);
    Poly nn = g.is_one() ? n : n.divexact(g);
    Poly dd = g.is_one() ? d : d.divexact(g);
    if (!dd.lead().c.is_one()) {
        Cyclo inv = dd.lead().c.inverse();
        nn = nn.scaled(inv);
        dd = dd.scaled(inv);
    }
    return Scalar(std::move(nn), std::move(dd), true);
}

std::optional<Cyclo> Scalar::constant() const {
    if (!is_constant()) return std::nullopt;
    if (num_.is_zero()) return Cyclo();
    return num_.lead().c;
}

Scalar& Scalar::operator+=(const Scalar& b) {
    if (b.is_zero()) return *this;
    if (is_zero()) return *this = b;
    if (den_.is_one() && b.den_.is_one()) {
        num_ = num_ + b.num_;
        return *this;
    }
    if (den_ == b.den_) {
        Poly n = num_ + b.num_;
        return *this = fraction(n, den_);
    }
    // Henrici: only the shared part of the denominators can cancel
    Poly g = gcd(den_, b.den_);
    if (g.is_one()) {
        Poly n = num_ * b.den_ + b.num_ * den_;
        Poly d = den_ * b.den_;
        if (n.is_zero()) return *this = Scalar();
        num_ = std::move(n);
        den_ = std::move(d);
        return *this;
    }
    Poly bg = den_.divexact(g), dg = b.den_.divexact(g);
    Poly n = num_ * dg + b.num_ * bg;
    if (n.is_zero()) return *this = Scalar();
    Poly h = gcd(n, g);
    Poly d = bg * b.den_;
    if (!h.is_one()) {
        n = n.divexact(h);
        d = d.divexact(h);
    }
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
    if (is_zero() || b.is_zero()) return *this = Scalar();
    if (den_.is_one() && b.den_.is_one()) {
        num_ = num_ * b.num_;
        return *this;
    }
    Poly g1 = gcd(num_, b.den_), g2 = gcd(b.num_, den_);
    Poly a = g1.is_one() ? num_ : num_.divexact(g1);
    Poly d = g1.is_one() ? b.den_ : b.den_.divexact(g1);
    Poly c = g2.is_one() ? b.num_ : b.num_.divexact(g2);
    Poly e = g2.is_one() ? den_ : den_.divexact(g2);
    num_ = a * c;
    den_ = e * d;
    if (!den_.lead().c.is_one()) {
        Cyclo inv = den_.lead().c.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Cyclo inv = num_.lead().c.inverse();
    return Scalar(den_.scaled(inv), num_.scaled(inv), true);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Cyclo Scalar::specialize(const Cyclo& q0, const Cyclo& s0) const {
    Cyclo d = den_.eval(q0, s0);
    if (d.is_zero()) throw DivisionByZero();
    return num_.eval(q0, s0) / d;
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    auto wrap = [](const Poly& p) {
        std::string t = p.str();
        bool simple = true;
        for (char c : t) simple = simple && (std::isalnum(static_cast<unsigned char>(c)) || c == '^');
        return simple ? t : "(" + t + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

// ---- parser ----------------------------------------------------------

namespace {

class Parser {
public:
    Parser(std::string_view t, std::optional<int> order) : text_(t), order_(order) {}

    Scalar parse() {
        Scalar r = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Scalar expr() {
        Scalar r = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                r += term();
            } else if (peek('-')) {
                ++pos_;
                r -= term();
            } else {
                return r;
            }
        }
    }

    Scalar term() {
        Scalar r = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                r *= unary();
            } else if (peek('/')) {
                std::size_t at = ++pos_;
                Scalar d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                r /= d;
            } else {
                return r;
            }
        }
    }

    Scalar unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (!peek('^')) return base;
        ++pos_;
        bool neg = false;
        if (peek('-')) {
            neg = true;
            ++pos_;
        }
        skip();
        std::size_t at = pos_;
        long e = integer();
        if (neg) {
            if (base.is_zero()) throw ParseError("division by zero", at);
            e = -e;
        }
        return base.pow(e);
    }

    long integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 9) {
            pos_ = start;
            fail("exponent too large");
        }
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    Scalar atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Scalar(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start)))));
        }
        if (c == '(') {
            ++pos_;
            Scalar r = expr();
            expect(')');
            return r;
        }
        if (text_.substr(pos_, 5) == "zeta(") {
            std::size_t at = pos_;
            pos_ += 5;
            long n = integer();
            expect(')');
            if (n <= 0) throw ParseError("zeta order must be positive", at);
            check_order(static_cast<int>(n), at);
            return Scalar::zeta(static_cast<int>(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string_view id = text_.substr(start, pos_ - start);
            if (id == "q") return Scalar::q();
            if (id == "s") return Scalar::s();
            if (id == "i") {
                check_order(4, start);
                return Scalar::zeta(4);
            }
            pos_ = start;
            fail("unknown identifier '" + std::string(id) + "'");
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    void check_order(int n, std::size_t at) {
        if (!order_) return;
        int canon = n % 4 == 2 ? n / 2 : n;
        if (*order_ % canon != 0 && *order_ % n != 0)
            throw ParseError("inconsistent cyclotomic orders: zeta(" + std::to_string(n) + ") in order " +
                                 std::to_string(*order_) + " context",
                             at);
    }

    std::string_view text_;
    std::optional<int> order_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, std::optional<int> fixed_order) {
    return Parser(text, fixed_order).parse();
}

}  // namespace qb
