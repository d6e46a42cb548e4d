// rewriting to normal form, Hopf maps on words

#include "qbundle/ncpoly.hpp"

#include <algorithm>
#include <mutex>

namespace qb {

Presentation::Presentation(std::vector<std::string> generators, std::vector<int> degrees, std::vector<Rule> rules)
    : gens_(std::move(generators)), deg_(std::move(degrees)), rules_(std::move(rules)) {
    if (deg_.empty()) deg_.assign(gens_.size(), 1);
    if (deg_.size() != gens_.size()) throw std::invalid_argument("one degree per generator required");
    if (gens_.size() > 100) throw std::invalid_argument("too many generators");
    for (int d : deg_)
        if (d <= 0) throw std::invalid_argument("generator degrees must be positive");
    for (auto& r : rules_) {
        if (r.lhs.empty()) throw std::invalid_argument("empty rule leading word");
        for (char c : r.lhs)
            if (static_cast<std::size_t>(c) >= gens_.size()) throw std::invalid_argument("rule uses unknown generator");
        for (auto& [w, c] : r.rhs) {
            (void)c;
            if (!word_less(w, r.lhs))
                throw std::invalid_argument("rule " + render(r.lhs) + " -> " + render(w) + " does not decrease the word order");
        }
    }
}

int Presentation::index(const std::string& symbol) const {
    auto it = std::find(gens_.begin(), gens_.end(), symbol);
    if (it == gens_.end()) throw UnknownGenerator(symbol);
    return static_cast<int>(it - gens_.begin());
}

Word Presentation::word(const std::vector<std::string>& symbols) const {
    Word w;
    for (auto& s : symbols) w.push_back(static_cast<char>(index(s)));
    return w;
}

int Presentation::degree(const Word& w) const {
    int d = 0;
    for (char c : w) d += deg_[static_cast<std::size_t>(c)];
    return d;
}

bool Presentation::word_less(const Word& a, const Word& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a < b;
}

bool Presentation::irreducible(const Word& w) const {
    for (auto& r : rules_)
        if (w.find(r.lhs) != Word::npos) return false;
    return true;
}

Vec Presentation::mul_gen(const Word& u, char x) const {
    Word w = u;
    w.push_back(x);
    {
        std::shared_lock lock(mu_);
        auto it = gen_cache_.find(w);
        if (it != gen_cache_.end()) return it->second;
    }
    const Rule* hit = nullptr;
    for (auto& r : rules_) {
        if (r.lhs.size() <= w.size() && w.compare(w.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) {
            hit = &r;
            break;
        }
    }
    Vec out;
    if (!hit) {
        out.emplace(w, Scalar(1));
    } else {
        Word pre = w.substr(0, w.size() - hit->lhs.size());
        for (auto& [r, c] : hit->rhs) axpy(out, c, mul_word(pre, r));
    }
    std::unique_lock lock(mu_);
    gen_cache_.emplace(w, out);
    return out;
}

Vec Presentation::mul_word(const Word& u, const Word& r) const {
    Vec acc{{u, Scalar(1)}};
    for (char x : r) {
        Vec next;
        for (auto& [w, c] : acc) axpy(next, c, mul_gen(w, x));
        acc = std::move(next);
    }
    return acc;
}

Vec Presentation::mul(const Key& a, const Key& b) const {
    if (a.empty()) return Vec{{b, Scalar(1)}};
    if (b.empty()) return Vec{{a, Scalar(1)}};
    if (b.size() == 1) return mul_gen(a, b[0]);
    Word key = a;
    key.push_back('\xff');
    key += b;
    {
        std::shared_lock lock(mu_);
        auto it = pair_cache_.find(key);
        if (it != pair_cache_.end()) return it->second;
    }
    Vec out = mul_word(a, b);
    std::unique_lock lock(mu_);
    pair_cache_.emplace(key, out);
    return out;
}

Vec Presentation::reduce(const Word& w) const {
    for (char c : w)
        if (static_cast<std::size_t>(c) >= gens_.size()) throw std::invalid_argument("word uses unknown generator");
    return mul_word(Word(), w);
}

Vec Presentation::reduce(const Vec& raw) const {
    Vec out;
    for (auto& [w, c] : raw) axpy(out, c, reduce(w));
    return out;
}

std::string Presentation::render(const Key& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += "*";
        out += gens_[static_cast<std::size_t>(w[i])];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::vector<Word> Presentation::irreducible_words(int degree) const {
    std::vector<Word> out;
    std::vector<Word> stack{Word()};
    while (!stack.empty()) {
        Word w = std::move(stack.back());
        stack.pop_back();
        int d = this->degree(w);
        if (d == degree) {
            out.push_back(w);
            continue;
        }
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            if (d + deg_[g] > degree) continue;
            Word v = w;
            v.push_back(static_cast<char>(g));
            bool bad = false;
            for (auto& r : rules_)
                if (r.lhs.size() <= v.size() && v.compare(v.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) {
                    bad = true;
                    break;
                }
            if (!bad) stack.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> Presentation::basis_upto(int degree) const {
    std::vector<Word> out;
    for (int d = 0; d <= degree; ++d) {
        auto w = irreducible_words(d);
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

std::shared_ptr<Presentation> Presentation::without_rule(const Word& lhs) const {
    std::vector<Rule> kept;
    for (auto& r : rules_)
        if (r.lhs != lhs) kept.push_back(r);
    return std::make_shared<Presentation>(gens_, deg_, std::move(kept));
}

std::shared_ptr<Presentation> Presentation::with_hopf(HopfData h) const {
    auto p = std::make_shared<Presentation>(gens_, deg_, rules_);
    p->set_hopf(std::move(h));
    return p;
}

const HopfData& Presentation::hopf() const {
    if (!hopf_) throw std::logic_error("presentation carries no Hopf data");
    return *hopf_;
}

Tensor Presentation::coproduct_word(const Word& w) const {
    const HopfData& h = hopf();
    if (w.empty()) return Tensor::pure("PP", {Word(), Word()});
    if (w.size() == 1) return h.coproduct[static_cast<std::size_t>(w[0])];
    {
        std::shared_lock lock(mu_);
        auto it = delta_cache_.find(w);
        if (it != delta_cache_.end()) return it->second;
    }
    Tensor left = coproduct_word(w.substr(0, w.size() - 1));
    const Tensor& right = h.coproduct[static_cast<std::size_t>(w.back())];
    Tensor out = mul_legwise(left, right, {this, this});
    std::unique_lock lock(mu_);
    delta_cache_.emplace(w, out);
    return out;
}

Tensor Presentation::coproduct(const Vec& x) const {
    Tensor out("PP");
    for (auto& [w, c] : x) out += coproduct_word(w).scaled(c);
    return out;
}

Scalar Presentation::counit(const Vec& x) const {
    const HopfData& h = hopf();
    Scalar out;
    for (auto& [w, c] : x) {
        Scalar e = c;
        for (char g : w) {
            e *= h.counit[static_cast<std::size_t>(g)];
            if (e.is_zero()) break;
        }
        out += e;
    }
    return out;
}

Vec Presentation::antipode_word(const Word& w, bool inverse) const {
    const HopfData& h = hopf();
    if (w.empty()) return one();
    const auto& table = inverse ? h.antipode_inv : h.antipode;
    if (w.size() == 1) return table[static_cast<std::size_t>(w[0])];
    auto& cache = inverse ? sinv_cache_ : s_cache_;
    {
        std::shared_lock lock(mu_);
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
    }
    // anti-multiplicative: S(u x) = S(x) S(u)
    Vec out = mul(table[static_cast<std::size_t>(w.back())], antipode_word(w.substr(0, w.size() - 1), inverse));
    std::unique_lock lock(mu_);
    cache.emplace(w, out);
    return out;
}

Vec Presentation::antipode(const Vec& x) const {
    Vec out;
    for (auto& [w, c] : x) axpy(out, c, antipode_word(w, false));
    return out;
}

Vec Presentation::antipode_inv(const Vec& x) const {
    Vec out;
    for (auto& [w, c] : x) axpy(out, c, antipode_word(w, true));
    return out;
}

// ---- NCPoly -------------------------------------------------------------

NCPoly::NCPoly(PresentationPtr p, const Scalar& c) : p_(std::move(p)) {
    if (!c.is_zero()) t_.emplace(Word(), c);
}

NCPoly NCPoly::gen(PresentationPtr p, const std::string& symbol) {
    Word w = p->gen(symbol);
    Vec v = p->reduce(w);
    return NCPoly(std::move(p), std::move(v));
}

int NCPoly::degree() const {
    int d = 0;
    for (auto& [w, c] : t_) d = std::max(d, p_->degree(w));
    return d;
}

NCPoly& NCPoly::operator+=(const NCPoly& b) {
    if (!p_) p_ = b.p_;
    axpy(t_, Scalar(1), b.t_);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& b) {
    if (!p_) p_ = b.p_;
    axpy(t_, Scalar(-1), b.t_);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    const PresentationPtr& p = a.p_ ? a.p_ : b.p_;
    if (!p) return NCPoly();
    return NCPoly(p, p->mul(a.t_, b.t_));
}

NCPoly NCPoly::pow(int e) const {
    NCPoly r(p_, Scalar(1));
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

std::string NCPoly::str() const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Word, Scalar>> items(t_.begin(), t_.end());
    std::sort(items.begin(), items.end(), [&](auto& x, auto& y) { return p_->word_less(y.first, x.first); });
    std::string out;
    for (auto& [w, c] : items) {
        if (!out.empty()) out += " + ";
        if (w.empty()) out += "(" + c.str() + ")";
        else if (c.is_one()) out += p_->render(w);
        else out += "(" + c.str() + ")*" + p_->render(w);
    }
    return out;
}

// ---- confluence ------------------------------------------------------------

bool ConfluenceReport::ok() const {
    return std::all_of(pairs.begin(), pairs.end(), [](auto& p) { return p.resolved; });
}

ConfluenceReport check_confluence(const Presentation& p, int max_degree) {
    ConfluenceReport rep;
    rep.max_degree = max_degree;
    const auto& rules = p.rules();
    auto reduct = [&](const Word& pre, const Rule& r, const Word& post) {
        Vec raw;
        for (auto& [w, c] : r.rhs) axpy(raw, c, Vec{{pre + w + post, Scalar(1)}});
        return p.reduce(raw);
    };
    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& a = rules[i].lhs;
            const Word& b = rules[j].lhs;
            // overlap: proper suffix of a equals proper prefix of b
            for (std::size_t k = 1; k < a.size() && k < b.size(); ++k) {
                if (a.compare(a.size() - k, k, b, 0, k) != 0) continue;
                Word w = a + b.substr(k);
                if (p.degree(w) > max_degree) continue;
                Vec left = reduct("", rules[i], b.substr(k));
                Vec right = reduct(a.substr(0, a.size() - k), rules[j], "");
                CriticalPair cp{w, i, j, false, left};
                axpy(cp.difference, Scalar(-1), right);
                cp.resolved = cp.difference.empty();
                rep.pairs.push_back(std::move(cp));
            }
            // inclusion: b strictly inside a
            if (i != j && b.size() < a.size()) {
                for (std::size_t pos = a.find(b); pos != Word::npos; pos = a.find(b, pos + 1)) {
                    if (p.degree(a) > max_degree) break;
                    Vec left = reduct("", rules[i], "");
                    Vec right = reduct(a.substr(0, pos), rules[j], a.substr(pos + b.size()));
                    CriticalPair cp{a, i, j, false, left};
                    axpy(cp.difference, Scalar(-1), right);
                    cp.resolved = cp.difference.empty();
                    rep.pairs.push_back(std::move(cp));
                }
            }
        }
    }
    return rep;
}

std::size_t pbw_count(const Presentation& p, int degree) { return p.irreducible_words(degree).size(); }

std::vector<HopfCheck> check_hopf_axioms(const Presentation& p) {
    std::vector<HopfCheck> out;
    const HopfData& h = p.hopf();
    for (std::size_t g = 0; g < p.generators().size(); ++g) {
        const std::string& name = p.generators()[g];
        Word w(1, static_cast<char>(g));
        Vec x = p.reduce(w);
        Tensor d = p.coproduct(x);
        // (D (x) id) D = (id (x) D) D
        Tensor l = apply_leg(d, 0, [&](const Key& k) { return p.coproduct_word(k); }, "PP");
        Tensor r = apply_leg(d, 1, [&](const Key& k) { return p.coproduct_word(k); }, "PP");
        out.push_back({"coassociativity", name, l == r});
        // (eps (x) id) D = id = (id (x) eps) D
        Vec el = as_vec(eval_leg(d, 0, [&](const Key& k) { return p.counit(Vec{{k, Scalar(1)}}); }));
        Vec er = as_vec(eval_leg(d, 1, [&](const Key& k) { return p.counit(Vec{{k, Scalar(1)}}); }));
        out.push_back({"left counit", name, el == x});
        out.push_back({"right counit", name, er == x});
        // m (S (x) id) D = eps 1 = m (id (x) S) D, and the same for S^-1 with opposite product
        Vec eps = scaled(p.one(), p.counit(x));
        Vec ls, rs, li, ri;
        for (auto& [k, c] : d.terms()) {
            axpy(ls, c, p.mul(p.antipode_word(k[0], false), Vec{{k[1], Scalar(1)}}));
            axpy(rs, c, p.mul(Vec{{k[0], Scalar(1)}}, p.antipode_word(k[1], false)));
            axpy(li, c, p.mul(Vec{{k[1], Scalar(1)}}, p.antipode_word(k[0], true)));
            axpy(ri, c, p.mul(p.antipode_word(k[1], true), Vec{{k[0], Scalar(1)}}));
        }
        out.push_back({"left antipode", name, ls == eps});
        out.push_back({"right antipode", name, rs == eps});
        out.push_back({"left inverse antipode", name, li == eps});
        out.push_back({"right inverse antipode", name, ri == eps});
        out.push_back({"S S^-1 = id", name, p.antipode(p.antipode_inv(x)) == x && p.antipode_inv(p.antipode(x)) == x});
    }
    for (auto& r : p.rules()) {
        // both sides evaluated without reducing the rule itself
        Tensor diff("PP");
        {
            Tensor acc = Tensor::pure("PP", {Word(), Word()});
            for (char g : r.lhs) acc = mul_legwise(acc, h.coproduct[static_cast<std::size_t>(g)], {&p, &p});
            diff = acc;
            for (auto& [w, c] : r.rhs) {
                Tensor t = Tensor::pure("PP", {Word(), Word()});
                for (char g : w) t = mul_legwise(t, h.coproduct[static_cast<std::size_t>(g)], {&p, &p});
                diff -= t.scaled(c);
            }
        }
        out.push_back({"coproduct respects relation", p.render(r.lhs), diff.is_zero()});
        Scalar el;
        {
            Scalar e(1);
            for (char g : r.lhs) e *= h.counit[static_cast<std::size_t>(g)];
            el = e;
            for (auto& [w, c] : r.rhs) {
                Scalar t = c;
                for (char g : w) t *= h.counit[static_cast<std::size_t>(g)];
                el -= t;
            }
        }
        out.push_back({"counit respects relation", p.render(r.lhs), el.is_zero()});
        for (bool inv : {false, true}) {
            const auto& table = inv ? h.antipode_inv : h.antipode;
            Vec acc = p.one();
            for (char g : r.lhs) acc = p.mul(table[static_cast<std::size_t>(g)], acc);
            for (auto& [w, c] : r.rhs) {
                Vec t = p.one();
                for (char g : w) t = p.mul(table[static_cast<std::size_t>(g)], t);
                axpy(acc, -c, t);
            }
            out.push_back({inv ? "inverse antipode respects relation" : "antipode respects relation", p.render(r.lhs),
                           acc.empty()});
        }
    }
    return out;
}

}  // namespace qb
