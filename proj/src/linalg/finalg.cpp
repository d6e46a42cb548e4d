// Structure-constant algebras and coalgebras.
#include "qbundle/linalg.hpp"

#include <stdexcept>

namespace qb {

FinAlgebra::FinAlgebra(FinSpace space, std::vector<Vec> table, Vec unit)
    : space_(std::move(space)), table_(std::move(table)), unit_(std::move(unit)) {
    if (table_.size() != dim() * dim()) throw std::invalid_argument("multiplication table has wrong size");
    for (auto& v : table_)
        for (auto& [k, c] : v) space_.index(k);
    for (auto& [k, c] : unit_) space_.index(k);
}

FinAlgebra FinAlgebra::from_function(FinSpace space, const std::function<Vec(std::size_t, std::size_t)>& m, Vec unit) {
    std::size_t n = space.dim();
    std::vector<Vec> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i * n + j] = m(i, j);
    return FinAlgebra(std::move(space), std::move(t), std::move(unit));
}

Vec FinAlgebra::mul(const Key& a, const Key& b) const { return table_[space_.index(a) * dim() + space_.index(b)]; }

FinAlgebra FinAlgebra::opposite() const {
    return from_function(space_, [&](std::size_t i, std::size_t j) { return product(j, i); }, unit_);
}

FinAlgebra tensor_algebra(const FinAlgebra& a, const FinAlgebra& b) {
    FinSpace s = tensor_space(a.space(), b.space());
    std::size_t nb = b.dim();
    auto m = [&](std::size_t i, std::size_t j) {
        const Vec& x = a.product(i / nb, j / nb);
        const Vec& y = b.product(i % nb, j % nb);
        Vec out;
        for (auto& [k1, c1] : x)
            for (auto& [k2, c2] : y) out[pair_label(k1, k2)] += c1 * c2;
        return out;
    };
    Vec unit;
    for (auto& [k1, c1] : a.one())
        for (auto& [k2, c2] : b.one()) unit[pair_label(k1, k2)] += c1 * c2;
    return FinAlgebra::from_function(std::move(s), m, std::move(unit));
}

FinCoalgebra::FinCoalgebra(FinSpace space, std::vector<Tensor> comult, std::vector<Scalar> counit)
    : space_(std::move(space)), comult_(std::move(comult)), counit_(std::move(counit)) {
    if (comult_.size() != dim() || counit_.size() != dim()) throw std::invalid_argument("coalgebra data has wrong size");
    for (auto& t : comult_) {
        if (t.profile() != "CC") throw std::invalid_argument("coproduct must have profile CC");
        for (auto& [k, c] : t.terms()) {
            space_.index(k[0]);
            space_.index(k[1]);
        }
    }
}

Tensor FinCoalgebra::comult(const Key& c) const { return comult_[space_.index(c)]; }
Scalar FinCoalgebra::counit(const Key& c) const { return counit_[space_.index(c)]; }

Report check_algebra(const FinAlgebra& a) {
    Report r;
    std::string bad;
    const auto& L = a.space().labels();
    for (auto& x : L)
        for (auto& y : L)
            for (auto& z : L) {
                if (!bad.empty()) break;
                Vec l = a.mul(a.mul(Vec{{x, Scalar(1)}}, Vec{{y, Scalar(1)}}), Vec{{z, Scalar(1)}});
                Vec rr = a.mul(Vec{{x, Scalar(1)}}, a.mul(Vec{{y, Scalar(1)}}, Vec{{z, Scalar(1)}}));
                if (l != rr) bad = "(" + x + "," + y + "," + z + ")";
            }
    r.add("associativity", bad.empty(), bad);
    bad.clear();
    for (auto& x : L) {
        Vec e{{x, Scalar(1)}};
        if (a.mul(a.one(), e) != e || a.mul(e, a.one()) != e) {
            bad = x;
            break;
        }
    }
    r.add("unit", bad.empty(), bad);
    return r;
}

Report check_coalgebra(const FinCoalgebra& c) {
    Report r;
    std::string bad;
    auto delta = [&](const Key& k) { return c.comult(k); };
    for (auto& x : c.basis()) {
        Tensor d = c.comult(x);
        if (apply_leg(d, 0, delta, "CC") != apply_leg(d, 1, delta, "CC")) {
            bad = x;
            break;
        }
    }
    r.add("coassociativity", bad.empty(), bad);
    bad.clear();
    auto eps = [&](const Key& k) { return c.counit(k); };
    for (auto& x : c.basis()) {
        Tensor d = c.comult(x);
        Vec e{{x, Scalar(1)}};
        if (as_vec(eval_leg(d, 0, eps)) != e || as_vec(eval_leg(d, 1, eps)) != e) {
            bad = x;
            break;
        }
    }
    r.add("counit", bad.empty(), bad);
    return r;
}

// (f^i f^j)(c_k) = f^i(c_k(2)) f^j(c_k(1))
FinAlgebra dualize(const FinCoalgebra& c, std::vector<std::string> labels) {
    std::size_t n = c.dim();
    if (labels.empty())
        for (auto& l : c.space().labels()) labels.push_back("f(" + l + ")");
    FinSpace s(labels);
    std::vector<Vec> t(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        Tensor d = c.comult(c.space().label(k));
        for (auto& [idx, coef] : d.terms()) {
            std::size_t j = c.space().index(idx[0]), i = c.space().index(idx[1]);
            t[i * n + j][labels[k]] += coef;
        }
    }
    for (auto& v : t)
        for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
    Vec unit;
    for (std::size_t k = 0; k < n; ++k) {
        Scalar e = c.counit(c.space().label(k));
        if (!e.is_zero()) unit[labels[k]] = e;
    }
    return FinAlgebra(std::move(s), std::move(t), std::move(unit));
}

FinCoalgebra codualize(const FinAlgebra& a, std::vector<std::string> labels) {
    std::size_t n = a.dim();
    if (labels.empty())
        for (auto& l : a.space().labels()) labels.push_back("c(" + l + ")");
    FinSpace s(labels);
    std::vector<Tensor> d(n, Tensor("CC"));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (auto& [k, coef] : a.product(i, j)) d[a.space().index(k)].add({labels[j], labels[i]}, coef);
    std::vector<Scalar> eps(n);
    for (auto& [k, coef] : a.one()) eps[a.space().index(k)] = coef;
    return FinCoalgebra(std::move(s), std::move(d), std::move(eps));
}

FinAlgebra group_algebra_cyclic(int n, const std::string& gen) {
    std::vector<std::string> l;
    for (int k = 0; k < n; ++k) l.push_back(k == 0 ? "1" : k == 1 ? gen : gen + "^" + std::to_string(k));
    FinSpace s(l);
    return FinAlgebra::from_function(
        s, [&](std::size_t i, std::size_t j) { return Vec{{l[(i + j) % n], Scalar(1)}}; }, Vec{{"1", Scalar(1)}});
}

FinAlgebra matrix_algebra(int n) {
    std::vector<std::string> l;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) l.push_back("e" + std::to_string(i) + std::to_string(j));
    FinSpace s(l);
    auto N = static_cast<std::size_t>(n);
    Vec unit;
    for (std::size_t i = 0; i < N; ++i) unit[l[i * N + i]] = Scalar(1);
    return FinAlgebra::from_function(
        s,
        [&](std::size_t x, std::size_t y) {
            if (x % N != y / N) return Vec{};
            return Vec{{l[(x / N) * N + y % N], Scalar(1)}};
        },
        unit);
}

FinCoalgebra grouplike_coalgebra(std::vector<std::string> labels) {
    std::vector<Tensor> d;
    for (auto& l : labels) d.push_back(Tensor::pure("CC", {l, l}));
    std::vector<Scalar> e(labels.size(), Scalar(1));
    return FinCoalgebra(FinSpace(std::move(labels)), std::move(d), std::move(e));
}

}  // namespace qb
