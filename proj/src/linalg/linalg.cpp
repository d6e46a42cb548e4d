// Dense exact elimination over Scalar.
#include "qbundle/linalg.hpp"

#include <stdexcept>

namespace qb {

FinSpace::FinSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (!idx_.emplace(labels_[i], i).second) throw std::invalid_argument("duplicate basis label '" + labels_[i] + "'");
}

std::size_t FinSpace::index(const std::string& label) const {
    auto it = idx_.find(label);
    if (it == idx_.end()) throw std::out_of_range("label '" + label + "' not in basis");
    return it->second;
}

Column FinSpace::coords(const Vec& v) const {
    Column c(dim());
    for (auto& [k, x] : v) c[index(k)] += x;
    return c;
}

Vec FinSpace::vec(const Column& c) const {
    Vec v;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) v[labels_[i]] = c[i];
    return v;
}

std::string pair_label(const std::string& a, const std::string& b) { return a + "|" + b; }

FinSpace tensor_space(const FinSpace& a, const FinSpace& b) {
    std::vector<std::string> l;
    l.reserve(a.dim() * b.dim());
    for (auto& x : a.labels())
        for (auto& y : b.labels()) l.push_back(pair_label(x, y));
    return FinSpace(std::move(l));
}

// ---- Matrix -------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Column>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Column Matrix::column(std::size_t j) const {
    Column c(r_);
    for (std::size_t i = 0; i < r_; ++i) c[i] = at(i, j);
    return c;
}

Column Matrix::apply(const Column& x) const {
    if (x.size() != c_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    Column y(r_);
    for (std::size_t j = 0; j < c_; ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < r_; ++i)
            if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
    }
    return y;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("dimension mismatch in matrix product");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const Scalar& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_; ++j)
                if (!b.at(k, j).is_zero()) m.at(i, j) += x * b.at(k, j);
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("dimension mismatch in matrix sum");
    Matrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += b.a_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("dimension mismatch in matrix difference");
    Matrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] -= b.a_[k];
    return m;
}

bool Matrix::is_zero() const {
    for (auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

// ---- elimination --------------------------------------------------------

Echelon row_reduce(Matrix m) {
    Echelon e;
    std::size_t R = m.rows(), C = m.cols(), row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        // first nonzero, preferring a constant pivot
        std::size_t piv = R;
        for (std::size_t i = row; i < R; ++i) {
            if (m.at(i, col).is_zero()) continue;
            if (piv == R) piv = i;
            if (m.at(i, col).is_constant()) { piv = i; break; }
        }
        if (piv == R) continue;
        if (piv != row)
            for (std::size_t j = 0; j < C; ++j) std::swap(m.at(piv, j), m.at(row, j));
        Scalar inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < C; ++j)
            if (!m.at(row, j).is_zero()) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (std::size_t j = col; j < C; ++j)
                if (!m.at(row, j).is_zero()) m.at(i, j) -= f * m.at(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.m = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Column> kernel(const Matrix& m) {
    Echelon e = row_reduce(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : e.pivots) is_piv[p] = true;
    std::vector<Column> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        Column v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.m.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Column> image_basis(const std::vector<Column>& vectors) {
    if (vectors.empty()) return {};
    Echelon e = row_reduce(Matrix::from_columns(vectors, vectors[0].size()));
    std::vector<Column> out;
    for (auto p : e.pivots) out.push_back(vectors[p]);
    return out;
}

Scalar determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv == n) return Scalar(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        Scalar inv = m.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                if (!m.at(col, j).is_zero()) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    Echelon e = row_reduce(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.m.at(i, n + j);
    return inv;
}

Solution solve(const Matrix& a, const Column& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Echelon e = row_reduce(std::move(aug));
    Solution s;
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return s;
    s.feasible = true;
    s.particular.assign(a.cols(), Scalar(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.particular[e.pivots[r]] = e.m.at(r, a.cols());
    s.kernel = kernel(a);
    return s;
}

// ---- modular rank -------------------------------------------------------

namespace {

constexpr std::uint64_t P61 = (std::uint64_t(1) << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    return static_cast<std::uint64_t>(r % P61);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::optional<std::uint64_t> to_modp(const mpq_class& x) {
    mpz_class p(std::to_string(P61));
    mpz_class n = x.get_num() % p, d = x.get_den() % p;
    if (n < 0) n += p;
    if (d == 0) return std::nullopt;
    std::uint64_t nn = std::stoull(n.get_str()), dd = std::stoull(d.get_str());
    return mulmod(nn, powmod(dd, P61 - 2));
}

}  // namespace

std::optional<std::vector<std::size_t>> specialized_pivots_modp(
    const std::vector<std::vector<std::pair<std::size_t, Scalar>>>& rows, std::size_t cols, const mpq_class& q0,
    const mpq_class& s0) {
    std::vector<std::vector<std::uint64_t>> m;
    m.reserve(rows.size());
    for (auto& r : rows) {
        std::vector<std::uint64_t> row(cols, 0);
        for (auto& [j, x] : r) {
            Cyclo v;
            try {
                v = x.specialize(Cyclo(q0), Cyclo(s0));
            } catch (const DivisionByZero&) {
                return std::nullopt;
            }
            if (!v.is_rational()) return std::nullopt;
            auto e = to_modp(v.rational());
            if (!e) return std::nullopt;
            row[j] = (row[j] + *e) % P61;
        }
        m.push_back(std::move(row));
    }
    std::vector<std::size_t> pivots;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols && rk < m.size(); ++col) {
        std::size_t piv = m.size();
        for (std::size_t i = rk; i < m.size(); ++i)
            if (m[i][col]) { piv = i; break; }
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rk]);
        std::uint64_t inv = powmod(m[rk][col], P61 - 2);
        for (std::size_t i = rk + 1; i < m.size(); ++i) {
            if (!m[i][col]) continue;
            std::uint64_t f = mulmod(m[i][col], inv);
            for (std::size_t j = col; j < cols; ++j)
                if (m[rk][j]) m[i][j] = (m[i][j] + P61 - mulmod(f, m[rk][j])) % P61;
        }
        pivots.push_back(col);
        ++rk;
    }
    return pivots;
}

std::optional<std::size_t> specialized_rank_modp(const std::vector<std::vector<std::pair<std::size_t, Scalar>>>& rows,
                                                 std::size_t cols, const mpq_class& q0, const mpq_class& s0) {
    auto p = specialized_pivots_modp(rows, cols, q0, s0);
    if (!p) return std::nullopt;
    return p->size();
}

// ---- LinearMap ----------------------------------------------------------

LinearMap::LinearMap(FinSpace dom, FinSpace cod, Matrix m) : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(m)) {
    if (m_.rows() != cod_.dim() || m_.cols() != dom_.dim()) throw std::invalid_argument("matrix shape does not match spaces");
}

Vec LinearMap::operator()(const Vec& v) const { return cod_.vec(m_.apply(dom_.coords(v))); }

Vec LinearMap::operator()(const std::string& label) const { return cod_.vec(m_.column(dom_.index(label))); }

void LinearMap::set(const std::string& from, const Vec& image) {
    std::size_t j = dom_.index(from);
    Column c = cod_.coords(image);
    for (std::size_t i = 0; i < c.size(); ++i) m_.at(i, j) = c[i];
}

LinearMap LinearMap::after(const LinearMap& first) const {
    if (!(first.cod_ == dom_)) throw std::invalid_argument("composition of incompatible maps");
    return LinearMap(first.dom_, cod_, m_ * first.m_);
}

Quotient quotient(const FinSpace& ambient, const std::vector<Column>& subspace, const std::string& label_prefix) {
    std::size_t n = ambient.dim();
    // reduce the subspace; pivot coordinates are eliminated, the rest survive
    std::vector<Column> rows;
    for (auto& v : subspace) rows.push_back(v);
    Matrix s(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) s.at(i, j) = rows[i][j];
    Echelon e = row_reduce(std::move(s));
    std::vector<bool> is_piv(n, false);
    for (auto p : e.pivots) is_piv[p] = true;
    std::vector<std::size_t> keep;
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_piv[j]) {
            keep.push_back(j);
            labels.push_back(label_prefix + ambient.label(j));
        }
    FinSpace qs(labels);
    // x = sum_r x_{p_r} row_r + remainder, remainder supported off pivots
    Matrix proj(keep.size(), n);
    for (std::size_t k = 0; k < keep.size(); ++k) proj.at(k, keep[k]) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t k = 0; k < keep.size(); ++k)
            if (!e.m.at(r, keep[k]).is_zero()) proj.at(k, e.pivots[r]) = -e.m.at(r, keep[k]);
    Matrix sec(n, keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) sec.at(keep[k], k) = Scalar(1);
    return {qs, LinearMap(ambient, qs, std::move(proj)), LinearMap(qs, ambient, std::move(sec))};
}

}  // namespace qb

namespace qb {

namespace {

using SRow = SparseSystem::Row;

// a - f b on sorted sparse rows
SRow sub_scaled(const SRow& a, const Scalar& f, const SRow& b) {
    SRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(f * b[j].second));
            ++j;
        } else {
            Scalar v = a[i].second - f * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return out;
}

}  // namespace

void SparseSystem::add(const std::map<std::size_t, Scalar>& row, const Scalar& rhs) {
    SRow r;
    for (auto& [j, x] : row) {
        if (j >= n_) throw std::out_of_range("sparse row column out of range");
        if (!x.is_zero()) r.emplace_back(j, x);
    }
    Scalar b = rhs;
    while (!r.empty()) {
        auto it = rows_.find(r.front().first);
        if (it == rows_.end()) break;
        Scalar f = r.front().second;
        r = sub_scaled(r, f, it->second.first);
        b -= f * it->second.second;
    }
    if (r.empty()) {
        if (!b.is_zero()) consistent_ = false;
        return;
    }
    Scalar inv = r.front().second.inverse();
    for (auto& [j, x] : r) x *= inv;
    b *= inv;
    std::size_t piv = r.front().first;
    rows_.emplace(piv, std::make_pair(std::move(r), std::move(b)));
}

std::vector<std::size_t> SparseSystem::pivots() const {
    std::vector<std::size_t> out;
    for (auto& [p, r] : rows_) out.push_back(p);
    return out;
}

Solution SparseSystem::solve(bool with_kernel) const {
    Solution s;
    if (!consistent_) return s;
    s.feasible = true;
    auto back = [&](Column x) {
        // free variables are already set in x; fill pivots from the bottom up
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            const auto& [row, rhs] = it->second;
            Scalar v = rhs;
            for (std::size_t k = 1; k < row.size(); ++k)
                if (!x[row[k].first].is_zero()) v -= row[k].second * x[row[k].first];
            x[it->first] = v;
        }
        return x;
    };
    s.particular = back(Column(n_));
    if (with_kernel) {
        for (std::size_t f = 0; f < n_; ++f) {
            if (rows_.count(f)) continue;
            Column x(n_);
            x[f] = Scalar(1);
            // homogeneous: rhs must be ignored
            for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
                const auto& row = it->second.first;
                Scalar v(0);
                for (std::size_t k = 1; k < row.size(); ++k)
                    if (!x[row[k].first].is_zero()) v -= row[k].second * x[row[k].first];
                x[it->first] = v;
            }
            s.kernel.push_back(std::move(x));
        }
    }
    return s;
}

}  // namespace qb
