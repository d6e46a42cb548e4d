// universal calculus

#include "qbundle/forms.hpp"

#include <stdexcept>

namespace qb {

Tensor d(const Tensor& w, const Algebra& P, std::size_t form_legs) {
    std::string prof = w.profile();
    prof.insert(prof.begin(), 'P');
    Tensor r(prof);
    Vec one = P.one();
    for (std::size_t k = 0; k <= form_legs; ++k) {
        Scalar sign(k % 2 ? -1 : 1);
        for (auto& [idx, c] : w.terms())
            for (auto& [u, cu] : one) {
                Tensor::Index kk = idx;
                kk.insert(kk.begin() + static_cast<long>(k), u);
                r.add(kk, sign * c * cu);
            }
    }
    return r;
}

Tensor d(const Vec& u, const Algebra& P) { return d(from_vec(u, 'P'), P, 1); }

bool is_form(const Tensor& w, const Algebra& P, std::size_t form_legs) {
    for (std::size_t i = 0; i + 1 < form_legs; ++i)
        if (!contract_adjacent(w, i, P).is_zero()) return false;
    return true;
}

Tensor wedge(const Tensor& a, const Tensor& b, const Algebra& P) {
    if (a.arity() == 0 || b.arity() == 0) throw std::logic_error("wedge of empty tensors");
    return contract_adjacent(tensor(a, b), a.arity() - 1, P);
}

Tensor left_mul(const Vec& u, const Tensor& w, const Algebra& P) { return mul_leg_left(u, w, 0, P); }

Tensor right_mul(const Tensor& w, const Vec& u, const Algebra& P, std::size_t leg) {
    return mul_leg_right(w, leg, u, P);
}

Tensor twist_through(const Tensor& t, std::size_t at, std::size_t n, const Twist& f, char kind) {
    Tensor r = t;
    for (std::size_t i = 0; i < n; ++i) {
        std::string out{'P', kind};
        r = apply_pair(r, at + i, f, out);
    }
    return r;
}

std::optional<Column> span_coords(const std::vector<Tensor>& gens, const Tensor& target) {
    std::map<Tensor::Index, std::size_t> rows;
    auto row_of = [&](const Tensor::Index& k) {
        auto it = rows.find(k);
        if (it == rows.end()) it = rows.emplace(k, rows.size()).first;
        return it->second;
    };
    std::vector<std::map<std::size_t, Scalar>> eq;
    auto ensure = [&](std::size_t r) {
        if (eq.size() <= r) eq.resize(r + 1);
    };
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (auto& [k, c] : gens[j].terms()) {
            std::size_t r = row_of(k);
            ensure(r);
            eq[r][j] += c;
        }
    std::vector<Scalar> rhs;
    for (auto& [k, c] : target.terms()) {
        std::size_t r = row_of(k);
        ensure(r);
        if (rhs.size() <= r) rhs.resize(r + 1);
        rhs[r] = c;
    }
    rhs.resize(eq.size());
    SparseSystem sys(gens.size());
    for (std::size_t r = 0; r < eq.size(); ++r) {
        if (eq[r].empty()) {
            if (!rhs[r].is_zero()) return std::nullopt;
            continue;
        }
        sys.add(eq[r], rhs[r]);
        if (!sys.consistent()) return std::nullopt;
    }
    Solution s = sys.solve(false);
    if (!s.feasible) return std::nullopt;
    return s.particular;
}

bool in_P_tensor_span(const Tensor& target, const std::vector<Vec>& span_vectors) {
    std::size_t k = target.arity();
    if (k < 1) return true;
    // spanning tensors for legs 1..k-1
    std::vector<Tensor> gens{Tensor::pure("", {})};
    for (std::size_t leg = 1; leg < k; ++leg) {
        std::vector<Tensor> next;
        for (auto& t : gens)
            for (auto& m : span_vectors) next.push_back(tensor(t, from_vec(m, 'P')));
        gens = std::move(next);
    }
    std::map<Key, Tensor> groups;
    for (auto& [idx, c] : target.terms()) {
        auto it = groups.find(idx[0]);
        if (it == groups.end()) it = groups.emplace(idx[0], Tensor(std::string(k - 1, 'P'))).first;
        it->second.add(Tensor::Index(idx.begin() + 1, idx.end()), c);
    }
    for (auto& [key, rest] : groups)
        if (!span_coords(gens, rest)) return false;
    return true;
}

bool in_two_sided_horizontal(const Tensor& target, const Algebra& P, const std::vector<Vec>& m_span,
                             const std::vector<Key>& left, const std::vector<Key>& right) {
    std::vector<Tensor> gens;
    for (auto& m : m_span) {
        Tensor dm = d(m, P);
        for (auto& l : left) {
            Tensor ldm = left_mul(Vec{{l, Scalar(1)}}, dm, P);
            for (auto& r : right) gens.push_back(right_mul(ldm, Vec{{r, Scalar(1)}}, P, 1));
        }
    }
    return span_coords(gens, target).has_value();
}

}  // namespace qb
