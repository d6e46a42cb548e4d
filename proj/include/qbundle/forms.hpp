/* forms.hpp
 * ---------
 * Universal differential forms Omega^n P inside P^(n+1), the exterior
 * derivative, juxtaposition product, iterated entwinings and span tests.
 *
 * A form of degree n is a Tensor whose first n+1 legs are 'P'.  Trailing
 * legs of other kinds (a C or A leg) are carried along untouched.
 */
#pragma once

#include "qbundle/linalg.hpp"

namespace qb {

// d on the leading n+1 P-legs: sum_k (-1)^k (insert 1 at position k)
Tensor d(const Tensor& w, const Algebra& P, std::size_t form_legs);
inline Tensor d(const Tensor& w, const Algebra& P) { return d(w, P, w.arity()); }
Tensor d(const Vec& u, const Algebra& P);   // 1 (x) u - u (x) 1

// adjacent products among the first form_legs legs vanish
bool is_form(const Tensor& w, const Algebra& P, std::size_t form_legs);
inline bool is_form(const Tensor& w, const Algebra& P) { return is_form(w, P, w.arity()); }

// (a_0 .. a_m)(b_0 .. b_n) = a_0 .. a_m b_0 .. b_n  (last leg of a times first of b)
Tensor wedge(const Tensor& a, const Tensor& b, const Algebra& P);
Tensor left_mul(const Vec& u, const Tensor& w, const Algebra& P);
Tensor right_mul(const Tensor& w, const Vec& u, const Algebra& P, std::size_t leg);

// x (x) u_1 (x) .. (x) u_n  ->  u'_1 .. u'_n (x) x'  by twisting x through
// the legs one at a time; f(x, u) has profile "P" + kind.  The input has x
// at leg `at`, followed by n legs to pass.
using Twist = std::function<Tensor(const Key&, const Key&)>;
Tensor twist_through(const Tensor& t, std::size_t at, std::size_t n, const Twist& f, char kind);

// coordinates of target in span(gens); nullopt if not in the span
std::optional<Column> span_coords(const std::vector<Tensor>& gens, const Tensor& target);

// target in span{ u (x) m_1 (x) .. } with u any key and m_i from the
// supplied spanning vectors of a subspace (legs 1..k); grouped by leg 0
bool in_P_tensor_span(const Tensor& target, const std::vector<Vec>& span_vectors);

// target in span{ l (dm) r } over the supplied words and m vectors
bool in_two_sided_horizontal(const Tensor& target, const Algebra& P, const std::vector<Vec>& m_span,
                             const std::vector<Key>& left, const std::vector<Key>& right);

}  // namespace qb
