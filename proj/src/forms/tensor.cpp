// sparse mixed tensors

#include "qbundle/tensor.hpp"

#include <stdexcept>

namespace qb {

void axpy(Vec& y, const Scalar& a, const Vec& x) {
    if (a.is_zero()) return;
    for (auto& [k, c] : x) {
        auto it = y.find(k);
        Scalar v = a.is_one() ? c : a * c;
        if (it == y.end()) {
            y.emplace(k, std::move(v));
        } else {
            it->second += v;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

Vec scaled(const Vec& x, const Scalar& a) {
    if (a.is_zero()) return {};
    Vec r = x;
    if (!a.is_one())
        for (auto& [k, c] : r) c *= a;
    return r;
}

bool is_zero(const Vec& v) { return v.empty(); }

Vec Algebra::mul(const Vec& a, const Vec& b) const {
    Vec r;
    for (auto& [x, cx] : a)
        for (auto& [y, cy] : b) axpy(r, cx * cy, mul(x, y));
    return r;
}

Tensor Tensor::pure(std::string profile, Index k, const Scalar& c) {
    Tensor t(std::move(profile));
    t.add(k, c);
    return t;
}

void Tensor::add(const Index& k, const Scalar& c) {
    if (c.is_zero()) return;
    if (k.size() != profile_.size()) throw std::logic_error("tensor arity mismatch");
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Tensor& Tensor::operator+=(const Tensor& b) {
    if (b.t_.empty()) return *this;
    if (profile_.empty() && t_.empty()) profile_ = b.profile_;
    if (b.profile_ != profile_) throw std::logic_error("tensor profile mismatch: " + profile_ + " vs " + b.profile_);
    for (auto& [k, c] : b.t_) add(k, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& b) {
    if (b.t_.empty()) return *this;
    if (profile_.empty() && t_.empty()) profile_ = b.profile_;
    if (b.profile_ != profile_) throw std::logic_error("tensor profile mismatch: " + profile_ + " vs " + b.profile_);
    for (auto& [k, c] : b.t_) add(k, -c);
    return *this;
}

Tensor Tensor::operator-() const { return scaled(Scalar(-1)); }

Tensor Tensor::scaled(const Scalar& c) const {
    Tensor r(profile_);
    if (c.is_zero()) return r;
    r.t_ = t_;
    if (!c.is_one())
        for (auto& [k, v] : r.t_) v *= c;
    return r;
}

std::string Tensor::str(const std::vector<const Algebra*>& legs) const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto& [k, c] : t_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        for (std::size_t i = 0; i < k.size(); ++i) {
            out += i ? " # " : " ";
            out += i < legs.size() && legs[i] ? legs[i]->render(k[i]) : k[i];
        }
    }
    return out;
}

Tensor tensor(const Vec& a, const Vec& b, std::string profile) {
    Tensor r(std::move(profile));
    for (auto& [x, cx] : a)
        for (auto& [y, cy] : b) r.add({x, y}, cx * cy);
    return r;
}

Tensor tensor(const Tensor& a, const Tensor& b) {
    Tensor r(a.profile() + b.profile());
    for (auto& [x, cx] : a.terms())
        for (auto& [y, cy] : b.terms()) {
            Tensor::Index k = x;
            k.insert(k.end(), y.begin(), y.end());
            r.add(k, cx * cy);
        }
    return r;
}

Tensor mul_legwise(const Tensor& a, const Tensor& b, const std::vector<const Algebra*>& alg) {
    if (a.profile() != b.profile()) throw std::logic_error("legwise product of different profiles");
    std::size_t n = a.arity();
    Tensor r(a.profile());
    for (auto& [x, cx] : a.terms())
        for (auto& [y, cy] : b.terms()) {
            // expand the product of each leg and take the tensor product
            std::vector<std::pair<Tensor::Index, Scalar>> acc{{{}, cx * cy}};
            for (std::size_t i = 0; i < n; ++i) {
                Vec p = alg[i]->mul(x[i], y[i]);
                std::vector<std::pair<Tensor::Index, Scalar>> next;
                for (auto& [k, c] : acc)
                    for (auto& [w, cw] : p) {
                        Tensor::Index kk = k;
                        kk.push_back(w);
                        next.emplace_back(std::move(kk), c * cw);
                    }
                acc = std::move(next);
            }
            for (auto& [k, c] : acc) r.add(k, c);
        }
    return r;
}

Tensor contract_adjacent(const Tensor& t, std::size_t i, const Algebra& alg) {
    std::string prof = t.profile();
    prof.erase(i + 1, 1);
    Tensor r(prof);
    for (auto& [k, c] : t.terms()) {
        Vec p = alg.mul(k[i], k[i + 1]);
        for (auto& [w, cw] : p) {
            Tensor::Index kk;
            kk.reserve(k.size() - 1);
            for (std::size_t j = 0; j < k.size(); ++j) {
                if (j == i) kk.push_back(w);
                else if (j != i + 1) kk.push_back(k[j]);
            }
            r.add(kk, c * cw);
        }
    }
    return r;
}

Tensor mul_leg_left(const Vec& x, const Tensor& t, std::size_t i, const Algebra& alg) {
    Tensor r(t.profile());
    for (auto& [k, c] : t.terms())
        for (auto& [a, ca] : x) {
            Vec p = alg.mul(a, k[i]);
            for (auto& [w, cw] : p) {
                Tensor::Index kk = k;
                kk[i] = w;
                r.add(kk, c * ca * cw);
            }
        }
    return r;
}

Tensor mul_leg_right(const Tensor& t, std::size_t i, const Vec& x, const Algebra& alg) {
    Tensor r(t.profile());
    for (auto& [k, c] : t.terms())
        for (auto& [a, ca] : x) {
            Vec p = alg.mul(k[i], a);
            for (auto& [w, cw] : p) {
                Tensor::Index kk = k;
                kk[i] = w;
                r.add(kk, c * ca * cw);
            }
        }
    return r;
}

Tensor apply_leg(const Tensor& t, std::size_t i, const std::function<Tensor(const Key&)>& f,
                 const std::string& out) {
    std::string prof = t.profile().substr(0, i) + out + t.profile().substr(i + 1);
    Tensor r(prof);
    std::map<Key, Tensor> memo;
    for (auto& [k, c] : t.terms()) {
        auto it = memo.find(k[i]);
        if (it == memo.end()) it = memo.emplace(k[i], f(k[i])).first;
        for (auto& [img, ci] : it->second.terms()) {
            Tensor::Index kk(k.begin(), k.begin() + i);
            kk.insert(kk.end(), img.begin(), img.end());
            kk.insert(kk.end(), k.begin() + i + 1, k.end());
            r.add(kk, c * ci);
        }
    }
    return r;
}

Tensor apply_pair(const Tensor& t, std::size_t i, const std::function<Tensor(const Key&, const Key&)>& f,
                  const std::string& out) {
    std::string prof = t.profile().substr(0, i) + out + t.profile().substr(i + 2);
    Tensor r(prof);
    std::map<std::pair<Key, Key>, Tensor> memo;
    for (auto& [k, c] : t.terms()) {
        auto key = std::make_pair(k[i], k[i + 1]);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, f(k[i], k[i + 1])).first;
        for (auto& [img, ci] : it->second.terms()) {
            Tensor::Index kk(k.begin(), k.begin() + i);
            kk.insert(kk.end(), img.begin(), img.end());
            kk.insert(kk.end(), k.begin() + i + 2, k.end());
            r.add(kk, c * ci);
        }
    }
    return r;
}

Tensor eval_leg(const Tensor& t, std::size_t i, const std::function<Scalar(const Key&)>& f) {
    std::string prof = t.profile();
    prof.erase(i, 1);
    Tensor r(prof);
    for (auto& [k, c] : t.terms()) {
        Scalar v = f(k[i]);
        if (v.is_zero()) continue;
        Tensor::Index kk = k;
        kk.erase(kk.begin() + i);
        r.add(kk, c * v);
    }
    return r;
}

Tensor insert_leg(const Tensor& t, std::size_t i, const Key& key, char kind) {
    std::string prof = t.profile();
    prof.insert(prof.begin() + i, kind);
    Tensor r(prof);
    for (auto& [k, c] : t.terms()) {
        Tensor::Index kk = k;
        kk.insert(kk.begin() + i, key);
        r.add(kk, c);
    }
    return r;
}

Vec as_vec(const Tensor& t) {
    if (t.arity() != 1) throw std::logic_error("as_vec on tensor of arity " + std::to_string(t.arity()));
    Vec v;
    for (auto& [k, c] : t.terms()) v.emplace(k[0], c);
    return v;
}

Tensor from_vec(const Vec& v, char kind) {
    Tensor t(std::string(1, kind));
    for (auto& [k, c] : v) t.add({k}, c);
    return t;
}

}  // namespace qb
