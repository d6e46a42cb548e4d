// The coalgebra C = SU_q(2)/J with grouplike basis, and pi as a right action.
#include "qbundle/monopole.hpp"

#include <stdexcept>

namespace qb {

std::string g_label(int m) {
    if (m == 0) return "e";
    return m > 0 ? "g+" + std::to_string(m) : "g-" + std::to_string(-m);
}

int g_index(const Key& label) {
    if (label == "e") return 0;
    if (label.size() < 3 || label[0] != 'g' || (label[1] != '+' && label[1] != '-'))
        throw std::invalid_argument("not a grouplike label: '" + label + "'");
    std::size_t used = 0;
    int n = std::stoi(label.substr(2), &used);
    if (used != label.size() - 2 || n <= 0) throw std::invalid_argument("not a grouplike label: '" + label + "'");
    return label[1] == '+' ? n : -n;
}

Tensor QuotientCoalgebra::comult(const Key& c) const {
    g_index(c);
    return Tensor::pure("CC", {c, c});
}

Scalar QuotientCoalgebra::counit(const Key& c) const {
    g_index(c);
    return Scalar(1);
}

std::vector<Key> QuotientCoalgebra::basis() const {
    std::vector<Key> b{"e"};
    for (int n = 1; n <= N_; ++n) {
        b.push_back(g_label(n));
        b.push_back(g_label(-n));
    }
    return b;
}

PiReducer::PiReducer(PresentationPtr P, Scalar q, Scalar s, int degree)
    : P_(std::move(P)), q_(std::move(q)), s_(std::move(s)), d_(degree) {
    if (P_->generators() != std::vector<std::string>{"b", "c", "a", "d"})
        throw std::invalid_argument("pi needs the suq2 presentation");
}

PiReducer::CVec PiReducer::act_gen(int m, char g) const {
    Scalar a = q_.pow(m) * s_, a2 = a * a, den = (Scalar(1) + a2).inverse();
    CVec out;
    auto put = [&](int k, const Scalar& x) {
        if (!x.is_zero()) out[k] += x;
    };
    switch (g) {
        case 2:   // alpha
            put(m + 1, den);
            put(m - 1, a2 * den);
            break;
        case 0:   // beta
        case 1:   // gamma
            put(m + 1, a * den);
            put(m - 1, -a * den);
            break;
        case 3:   // delta
            put(m + 1, a2 * den);
            put(m - 1, den);
            break;
        default: throw std::logic_error("bad generator");
    }
    return out;
}

const PiReducer::CVec& PiReducer::act_word(int m, const Word& w) const {
    auto key = std::make_pair(m, w);
    {
        std::lock_guard lk(mu_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    CVec out;
    if (w.empty()) {
        out[m] = Scalar(1);
    } else {
        const CVec& prev = act_word(m, w.substr(0, w.size() - 1));
        for (auto& [k, x] : prev)
            for (auto& [j, y] : act_gen(k, w.back())) out[j] += x * y;
        std::erase_if(out, [](auto& kv) { return kv.second.is_zero(); });
    }
    std::lock_guard lk(mu_);
    return cache_.emplace(key, std::move(out)).first->second;
}

Vec PiReducer::operator()(const Vec& x) const {
    for (auto& [w, c] : x)
        if (P_->degree(w) > d_)
            throw std::domain_error("degree " + std::to_string(P_->degree(w)) + " exceeds the pi truncation " +
                                    std::to_string(d_) + "; raise the degree bound");
    return act("e", x);
}

Vec PiReducer::act(const Key& c, const Vec& x) const {
    int m = g_index(c);
    Vec out;
    for (auto& [w, coef] : x)
        for (auto& [k, y] : act_word(m, w)) out[g_label(k)] += coef * y;
    std::erase_if(out, [](auto& kv) { return kv.second.is_zero(); });
    return out;
}

Vec PiReducer::act(const Vec& c, const Vec& x) const {
    Vec out;
    for (auto& [k, y] : c) axpy(out, y, act(k, x));
    return out;
}

Report check_action_relations() {
    Report r;
    auto P = preset_suq2();
    PiReducer R(P, Scalar::q(), Scalar::s(), 0);
    std::string w;
    for (auto& rule : P->rules()) {
        Vec lhs = R.act("e", Vec{{rule.lhs, Scalar(1)}}), rhs = R.act("e", rule.rhs);
        if (lhs != rhs && w.empty()) w = P->render(rule.lhs);
    }
    r.add("pi.action_respects_relations", w.empty(), w);
    return r;
}

}  // namespace qb
