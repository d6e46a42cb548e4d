/* ncpoly.hpp
 * ----------
 * Noncommutative polynomials modulo a terminating rewriting system,
 * with optional Hopf structure on the generators.
 *
 * Words are std::string whose bytes are generator indices.  The word
 * order is graded (by generator weight), then lexicographic in the
 * generator order.
 */
#pragma once

#include "qbundle/tensor.hpp"

#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace qb {

using Word = std::string;

struct UnknownGenerator : std::invalid_argument {
    explicit UnknownGenerator(const std::string& s) : std::invalid_argument("unknown generator symbol '" + s + "'") {}
};

struct Rule {
    Word lhs;
    Vec rhs;   // keys are words, not necessarily reduced
};

struct HopfData {
    std::vector<Tensor> coproduct;   // per generator, profile "PP"
    std::vector<Scalar> counit;
    std::vector<Vec> antipode;
    std::vector<Vec> antipode_inv;
};

class Presentation : public Algebra {
public:
    Presentation(std::vector<std::string> generators, std::vector<int> degrees, std::vector<Rule> rules);

    const std::vector<std::string>& generators() const { return gens_; }
    const std::vector<int>& degrees() const { return deg_; }
    const std::vector<Rule>& rules() const { return rules_; }

    int index(const std::string& symbol) const;
    Word word(const std::vector<std::string>& symbols) const;
    Word gen(const std::string& symbol) const { return Word(1, static_cast<char>(index(symbol))); }
    int degree(const Word& w) const;
    bool word_less(const Word& a, const Word& b) const;
    bool irreducible(const Word& w) const;

    Vec reduce(const Word& w) const;
    Vec reduce(const Vec& raw) const;
    Vec mul(const Key& a, const Key& b) const override;
    using Algebra::mul;
    Vec one() const override { return Vec{{Key(), Scalar(1)}}; }
    std::string render(const Key& w) const override;

    std::vector<Word> irreducible_words(int degree) const;
    std::vector<Word> basis_upto(int degree) const;

    // copy without the rule whose leading word is lhs (Hopf data dropped)
    std::shared_ptr<Presentation> without_rule(const Word& lhs) const;

    void set_hopf(HopfData h) { hopf_ = std::move(h); }
    std::shared_ptr<Presentation> with_hopf(HopfData h) const;
    bool has_hopf() const { return hopf_.has_value(); }
    const HopfData& hopf() const;

    Tensor coproduct(const Vec& x) const;
    Scalar counit(const Vec& x) const;
    Vec antipode(const Vec& x) const;
    Vec antipode_inv(const Vec& x) const;
    Tensor coproduct_word(const Word& w) const;
    Vec antipode_word(const Word& w, bool inverse) const;

private:
    Vec mul_gen(const Word& u, char x) const;
    Vec mul_word(const Word& u, const Word& r) const;

    std::vector<std::string> gens_;
    std::vector<int> deg_;
    std::vector<Rule> rules_;
    std::optional<HopfData> hopf_;

    mutable std::shared_mutex mu_;
    mutable std::unordered_map<Word, Vec> gen_cache_;   // key: u + x
    mutable std::unordered_map<Word, Vec> pair_cache_;  // key: a + '\xff' + b
    mutable std::unordered_map<Word, Tensor> delta_cache_;
    mutable std::unordered_map<Word, Vec> s_cache_, sinv_cache_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

// Value type wrapper for arithmetic in a presented algebra.
class NCPoly {
public:
    NCPoly() = default;
    explicit NCPoly(PresentationPtr p) : p_(std::move(p)) {}
    NCPoly(PresentationPtr p, Vec terms) : p_(std::move(p)), t_(std::move(terms)) {}
    NCPoly(PresentationPtr p, const Scalar& c);
    static NCPoly gen(PresentationPtr p, const std::string& symbol);
    static NCPoly from_raw(PresentationPtr p, const Vec& raw) { return NCPoly(p, p->reduce(raw)); }

    const Vec& terms() const { return t_; }
    const PresentationPtr& presentation() const { return p_; }
    bool is_zero() const { return t_.empty(); }
    int degree() const;

    NCPoly operator-() const { return NCPoly(p_, scaled(t_, Scalar(-1))); }
    NCPoly& operator+=(const NCPoly& b);
    NCPoly& operator-=(const NCPoly& b);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const Scalar& c, const NCPoly& a) { return NCPoly(a.p_, scaled(a.t_, c)); }
    friend NCPoly operator*(const NCPoly& a, const Scalar& c) { return NCPoly(a.p_, scaled(a.t_, c)); }
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }
    NCPoly pow(int e) const;

    Tensor coproduct() const { return p_->coproduct(t_); }
    Scalar counit() const { return p_->counit(t_); }
    NCPoly antipode() const { return NCPoly(p_, p_->antipode(t_)); }
    NCPoly antipode_inv() const { return NCPoly(p_, p_->antipode_inv(t_)); }

    std::string str() const;

private:
    PresentationPtr p_;
    Vec t_;
};

// ---- critical pairs ----------------------------------------------------

struct CriticalPair {
    Word overlap;
    std::size_t rule1 = 0, rule2 = 0;
    bool resolved = false;
    Vec difference;   // normal form of (reduct1 - reduct2)
};

struct ConfluenceReport {
    int max_degree = 0;
    std::vector<CriticalPair> pairs;
    bool ok() const;
};

ConfluenceReport check_confluence(const Presentation& p, int max_degree);
std::size_t pbw_count(const Presentation& p, int degree);

struct HopfCheck {
    std::string axiom;
    std::string generator;
    bool ok = false;
};
std::vector<HopfCheck> check_hopf_axioms(const Presentation& p);

// ---- presets ------------------------------------------------------------
// suq2 generators in order b < c < a < d, standing for beta, gamma,
// alpha, delta of the 2x2 quantum matrix ((a, b), (c, d)).
PresentationPtr preset_suq2();
PresentationPtr preset_suq2(const Scalar& q);   // q a constant or the formal q
PresentationPtr preset_group_algebra(int n);
PresentationPtr preset_quaternions();
PresentationPtr preset_zn_times_zn(int n);
PresentationPtr preset(const std::string& name, int n = 2);

}  // namespace qb
