/* linalg.hpp
 * ----------
 * Exact linear algebra over Scalar and structure-constant (co)algebras.
 */
#pragma once

#include "qbundle/report.hpp"
#include "qbundle/tensor.hpp"

#include <cstdint>
#include <unordered_map>

namespace qb {

using Column = std::vector<Scalar>;

class FinSpace {
public:
    FinSpace() = default;
    explicit FinSpace(std::vector<std::string> labels);
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    std::size_t index(const std::string& label) const;
    bool contains(const std::string& label) const { return idx_.count(label) != 0; }

    Column coords(const Vec& v) const;
    Vec vec(const Column& c) const;
    friend bool operator==(const FinSpace& a, const FinSpace& b) { return a.labels_ == b.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> idx_;
};

FinSpace tensor_space(const FinSpace& a, const FinSpace& b);   // labels "x|y"
std::string pair_label(const std::string& a, const std::string& b);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Column>& cols, std::size_t rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    Column column(std::size_t j) const;
    Column apply(const Column& x) const;
    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
    bool is_zero() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

struct Echelon {
    Matrix m;                          // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
std::vector<Column> kernel(const Matrix& m);
std::vector<Column> image_basis(const std::vector<Column>& vectors);   // independent subset, in order
Scalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

struct Solution {
    bool feasible = false;
    Column particular;
    std::vector<Column> kernel;
};
Solution solve(const Matrix& a, const Column& b);

// rank after substituting rationals for q, s and reducing mod a 61-bit prime;
// a lower bound for the rank over Q(q,s).  nullopt if some entry is undefined.
std::optional<std::size_t> specialized_rank_modp(const std::vector<std::vector<std::pair<std::size_t, Scalar>>>& rows,
                                                 std::size_t cols, const mpq_class& q0, const mpq_class& s0);
// pivot columns of the echelon form at that point, columns taken in order
std::optional<std::vector<std::size_t>> specialized_pivots_modp(
    const std::vector<std::vector<std::pair<std::size_t, Scalar>>>& rows, std::size_t cols, const mpq_class& q0,
    const mpq_class& s0);

// Sparse system A x = b built row by row; echelon form is kept incrementally
// with each row's pivot at its smallest column.
class SparseSystem {
public:
    using Row = std::vector<std::pair<std::size_t, Scalar>>;   // sorted by column

    explicit SparseSystem(std::size_t unknowns) : n_(unknowns) {}
    std::size_t unknowns() const { return n_; }
    void add(const std::map<std::size_t, Scalar>& row, const Scalar& rhs = Scalar(0));
    bool consistent() const { return consistent_; }
    std::size_t rank() const { return rows_.size(); }
    std::vector<std::size_t> pivots() const;
    Solution solve(bool with_kernel = true) const;

private:
    std::size_t n_;
    bool consistent_ = true;
    std::map<std::size_t, std::pair<Row, Scalar>> rows_;   // pivot column -> (row, rhs)
};

class LinearMap {
public:
    LinearMap() = default;
    LinearMap(FinSpace dom, FinSpace cod) : dom_(std::move(dom)), cod_(std::move(cod)), m_(cod_.dim(), dom_.dim()) {}
    LinearMap(FinSpace dom, FinSpace cod, Matrix m);
    static LinearMap identity(const FinSpace& s) { return LinearMap(s, s, Matrix::identity(s.dim())); }

    const FinSpace& domain() const { return dom_; }
    const FinSpace& codomain() const { return cod_; }
    const Matrix& matrix() const { return m_; }
    Matrix& matrix() { return m_; }

    Vec operator()(const Vec& v) const;
    Vec operator()(const std::string& label) const;
    void set(const std::string& from, const Vec& image);
    LinearMap after(const LinearMap& first) const;   // this o first
    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.m_ == b.m_;
    }

private:
    FinSpace dom_, cod_;
    Matrix m_;
};

struct Quotient {
    FinSpace space;
    LinearMap projection;   // ambient -> quotient
    LinearMap section;      // quotient -> ambient (representatives)
};
Quotient quotient(const FinSpace& ambient, const std::vector<Column>& subspace, const std::string& label_prefix = "");

// ---- structure-constant algebras ------------------------------------------

class FinAlgebra : public Algebra {
public:
    FinAlgebra() = default;
    FinAlgebra(FinSpace space, std::vector<Vec> table, Vec unit);
    static FinAlgebra from_function(FinSpace space, const std::function<Vec(std::size_t, std::size_t)>& m, Vec unit);

    const FinSpace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    Vec mul(const Key& a, const Key& b) const override;
    using Algebra::mul;
    Vec one() const override { return unit_; }
    const Vec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    FinAlgebra opposite() const;

private:
    FinSpace space_;
    std::vector<Vec> table_;
    Vec unit_;
};

FinAlgebra tensor_algebra(const FinAlgebra& a, const FinAlgebra& b);

class FinCoalgebra : public Coalgebra {
public:
    FinCoalgebra() = default;
    FinCoalgebra(FinSpace space, std::vector<Tensor> comult, std::vector<Scalar> counit);
    const FinSpace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    Tensor comult(const Key& c) const override;
    Scalar counit(const Key& c) const override;
    std::vector<Key> basis() const override { return space_.labels(); }

private:
    FinSpace space_;
    std::vector<Tensor> comult_;
    std::vector<Scalar> counit_;
};

Report check_algebra(const FinAlgebra& a);
Report check_coalgebra(const FinCoalgebra& c);

// dual algebra with the opposite convolution product, and back
FinAlgebra dualize(const FinCoalgebra& c, std::vector<std::string> labels = {});
FinCoalgebra codualize(const FinAlgebra& a, std::vector<std::string> labels = {});

// common presets
FinAlgebra group_algebra_cyclic(int n, const std::string& gen);   // labels 1, g, g^2, ...
FinAlgebra matrix_algebra(int n);
FinCoalgebra grouplike_coalgebra(std::vector<std::string> labels);

}  // namespace qb
