/* tensor.hpp
 * ----------
 * Sparse vectors and mixed tensors keyed by basis labels, plus the
 * abstract algebra / coalgebra interfaces every carrier implements.
 * Keys are opaque strings: normal-form words for presented algebras,
 * labels for structure-constant ones.
 */
#pragma once

#include "qbundle/scalar.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qb {

using Key = std::string;
using Vec = std::map<Key, Scalar>;

void axpy(Vec& y, const Scalar& a, const Vec& x);   // y += a x
Vec scaled(const Vec& x, const Scalar& a);
bool is_zero(const Vec& v);

class Algebra {
public:
    virtual ~Algebra() = default;
    virtual Vec mul(const Key& a, const Key& b) const = 0;
    virtual Vec one() const = 0;
    virtual std::string render(const Key& k) const { return k; }

    Vec mul(const Vec& a, const Vec& b) const;
};

// Elements of V1 (x) ... (x) Vk.  profile names each factor, e.g. "PPC".
class Tensor {
public:
    using Index = std::vector<Key>;

    Tensor() = default;
    explicit Tensor(std::string profile) : profile_(std::move(profile)) {}
    static Tensor pure(std::string profile, Index k, const Scalar& c = Scalar(1));

    const std::string& profile() const { return profile_; }
    std::size_t arity() const { return profile_.size(); }
    const std::map<Index, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    void add(const Index& k, const Scalar& c);
    Tensor& operator+=(const Tensor& b);
    Tensor& operator-=(const Tensor& b);
    Tensor operator-() const;
    Tensor scaled(const Scalar& c) const;
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.profile_ == b.profile_ && a.t_ == b.t_; }

    std::string str(const std::vector<const Algebra*>& legs = {}) const;

private:
    std::string profile_;
    std::map<Index, Scalar> t_;
};

class Coalgebra {
public:
    virtual ~Coalgebra() = default;
    virtual Tensor comult(const Key& c) const = 0;   // profile "CC"
    virtual Scalar counit(const Key& c) const = 0;
    virtual std::vector<Key> basis() const = 0;
    virtual std::string render(const Key& k) const { return k; }
};

// ---- generic tensor plumbing -----------------------------------------

Tensor tensor(const Vec& a, const Vec& b, std::string profile);
Tensor tensor(const Tensor& a, const Tensor& b);   // concatenated profiles

// legwise product (a1 (x) .. )(b1 (x) ..) with one algebra per leg
Tensor mul_legwise(const Tensor& a, const Tensor& b, const std::vector<const Algebra*>& alg);

// multiply leg i with leg i+1 using alg; resulting leg labelled by the left one
Tensor contract_adjacent(const Tensor& t, std::size_t i, const Algebra& alg);

// left-multiply leg i by x, or right-multiply
Tensor mul_leg_left(const Vec& x, const Tensor& t, std::size_t i, const Algebra& alg);
Tensor mul_leg_right(const Tensor& t, std::size_t i, const Vec& x, const Algebra& alg);

// replace leg i by the image of a linear map on basis keys; the image is a
// tensor with profile `out` spliced into position i
Tensor apply_leg(const Tensor& t, std::size_t i, const std::function<Tensor(const Key&)>& f,
                 const std::string& out);

// replace legs i, i+1 by the image of a bilinear map on key pairs
Tensor apply_pair(const Tensor& t, std::size_t i, const std::function<Tensor(const Key&, const Key&)>& f,
                  const std::string& out);

// linear functional on leg i
Tensor eval_leg(const Tensor& t, std::size_t i, const std::function<Scalar(const Key&)>& f);

// insert a fixed key at position i
Tensor insert_leg(const Tensor& t, std::size_t i, const Key& k, char kind);

// view a one-leg tensor as a vector and back
Vec as_vec(const Tensor& t);
Tensor from_vec(const Vec& v, char kind);

}  // namespace qb
