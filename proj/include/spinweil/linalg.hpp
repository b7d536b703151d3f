#ifndef SPINWEIL_LINALG_HPP
#define SPINWEIL_LINALG_HPP

#include <spinweil/fieldtower.hpp>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spinweil {

/*
 * Dense matrices over Q or the tower field, with fraction-free (Bareiss)
 * forward elimination followed by a back substitution into reduced echelon
 * form.  Rows are scaled to primitive integral form before elimination so
 * the Bareiss divisions stay exact over Z.
 *
 * Tall inputs are folded in blocks: the current row-space basis is stacked
 * with the next block of rows and re-eliminated, which keeps every
 * elimination at most twice as tall as it is wide.
 */

template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, S(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<S>>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    S& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    std::vector<S> row(std::size_t i) const { return {a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_)}; }
    std::vector<S> col(std::size_t j) const
    {
        std::vector<S> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void swap_rows(std::size_t i, std::size_t k)
    {
        if (i == k) return;
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

    Matrix transpose() const
    {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix p(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const S& x = a(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < b.c_; ++j)
                    if (!is_zero(b(k, j))) p(i, j) += x * b(k, j);
            }
        return p;
    }
    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    Matrix scaled(const S& s) const
    {
        Matrix m = *this;
        for (auto& x : m.a_) x *= s;
        return m;
    }
    std::vector<S> apply(const std::vector<S>& v) const
    {
        if (v.size() != c_) throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<S> out(r_, S(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                if (!is_zero(v[j]) && !is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
        return out;
    }
    bool is_zero_matrix() const
    {
        for (const auto& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<S> a_;
};

using RMat = Matrix<Rational>;
using KMat = Matrix<FieldElem>;

// Scale to a primitive integral row (rationals) or clear denominators (tower field).
void make_primitive(std::vector<Rational>& row);
void make_primitive(std::vector<FieldElem>& row);

template <class S>
struct Echelon {
    Matrix<S> rref;                  // only the first rank() rows are meaningful
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

namespace detail {

template <class S>
Echelon<S> bareiss_rref(Matrix<S> m)
{
    const std::size_t R = m.rows(), C = m.cols();
    for (std::size_t i = 0; i < R; ++i) {
        auto row = m.row(i);
        make_primitive(row);
        for (std::size_t j = 0; j < C; ++j) m(i, j) = row[j];
    }
    Echelon<S> out;
    S prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = R;
        for (std::size_t i = r; i < R; ++i)
            if (!is_zero(m(i, c))) {
                piv = i;
                break;
            }
        if (piv == R) continue;
        m.swap_rows(r, piv);
        const S p = m(r, c);
        for (std::size_t i = r + 1; i < R; ++i) {
            const S f = m(i, c);
            for (std::size_t j = c + 1; j < C; ++j) {
                S v = p * m(i, j);
                if (!is_zero(f) && !is_zero(m(r, j))) v -= f * m(r, j);
                if (!is_zero(v)) v /= prev;
                m(i, j) = v;
            }
            m(i, c) = S(0);
        }
        prev = p;
        out.pivots.push_back(c);
        ++r;
    }
    // back substitution to reduced form
    for (std::size_t k = r; k-- > 0;) {
        const std::size_t c = out.pivots[k];
        const S inv = S(1) / m(k, c);
        for (std::size_t j = c; j < C; ++j)
            if (!is_zero(m(k, j))) m(k, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            const S f = m(i, c);
            if (is_zero(f)) continue;
            for (std::size_t j = c; j < C; ++j)
                if (!is_zero(m(k, j))) m(i, j) -= f * m(k, j);
        }
    }
    for (std::size_t i = r; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) m(i, j) = S(0);
    out.rref = std::move(m);
    return out;
}

}  // namespace detail

template <class S>
Echelon<S> rref(const Matrix<S>& m)
{
    const std::size_t C = m.cols();
    if (m.rows() <= 2 * C + 8) return detail::bareiss_rref(m);
    // fold tall matrices block by block
    std::vector<std::vector<S>> basis;
    std::size_t next = 0;
    Echelon<S> e;
    while (next < m.rows()) {
        std::vector<std::vector<S>> stack = basis;
        for (; next < m.rows() && stack.size() < basis.size() + C + 8; ++next) {
            auto row = m.row(next);
            bool nz = false;
            for (const auto& x : row)
                if (!is_zero(x)) {
                    nz = true;
                    break;
                }
            if (nz) stack.push_back(std::move(row));
        }
        if (stack.empty()) continue;
        e = detail::bareiss_rref(Matrix<S>::from_rows(stack, C));
        basis.clear();
        for (std::size_t i = 0; i < e.rank(); ++i) basis.push_back(e.rref.row(i));
    }
    if (basis.empty()) return detail::bareiss_rref(Matrix<S>(0, C));
    Echelon<S> out = detail::bareiss_rref(Matrix<S>::from_rows(basis, C));
    Matrix<S> full(m.rows(), C);
    for (std::size_t i = 0; i < out.rank(); ++i)
        for (std::size_t j = 0; j < C; ++j) full(i, j) = out.rref(i, j);
    out.rref = std::move(full);
    return out;
}

template <class S>
std::size_t rank(const Matrix<S>& m)
{
    return rref(m).rank();
}

// Basis of {v : M v = 0}, one vector per free column with a 1 there.
template <class S>
std::vector<std::vector<S>> nullspace(const Matrix<S>& m)
{
    const Echelon<S> e = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<S>> out;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> v(C, S(0));
        v[f] = S(1);
        for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.rref(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

template <class S>
std::optional<std::vector<S>> solve(const Matrix<S>& a, const std::vector<S>& b)
{
    Matrix<S> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const Echelon<S> e = rref(aug);
    std::vector<S> x(a.cols(), S(0));
    for (std::size_t i = 0; i < e.rank(); ++i) {
        if (e.pivots[i] == a.cols()) return std::nullopt;
        x[e.pivots[i]] = e.rref(i, a.cols());
    }
    return x;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    Matrix<S> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = S(1);
    }
    const Echelon<S> e = detail::bareiss_rref(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<S> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
    return inv;
}

// A subspace of S^ambient kept as reduced echelon rows.
template <class S>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : n_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<std::vector<S>>& vectors)
    {
        Subspace s(ambient);
        if (vectors.empty()) return s;
        const Echelon<S> e = rref(Matrix<S>::from_rows(vectors, ambient));
        for (std::size_t i = 0; i < e.rank(); ++i) s.rows_.push_back(e.rref.row(i));
        s.pivots_ = e.pivots;
        return s;
    }

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<S>>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Coordinates in the echelon basis, or nullopt when v is outside.
    std::optional<std::vector<S>> coordinates(const std::vector<S>& v) const
    {
        std::vector<S> r = v;
        std::vector<S> c(rows_.size(), S(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const S f = r[pivots_[i]];
            if (is_zero(f)) continue;
            c[i] = f;
            for (std::size_t j = 0; j < n_; ++j)
                if (!is_zero(rows_[i][j])) r[j] -= f * rows_[i][j];
        }
        for (const auto& x : r)
            if (!is_zero(x)) return std::nullopt;
        return c;
    }
    bool contains(const std::vector<S>& v) const { return coordinates(v).has_value(); }
    bool contains(const Subspace& o) const
    {
        for (const auto& r : o.rows_)
            if (!contains(r)) return false;
        return true;
    }

    Subspace sum(const Subspace& o) const
    {
        check(o);
        auto all = rows_;
        all.insert(all.end(), o.rows_.begin(), o.rows_.end());
        return span(n_, all);
    }

    Subspace intersect(const Subspace& o) const
    {
        check(o);
        if (dim() == 0 || o.dim() == 0) return Subspace(n_);
        const std::size_t a = dim(), b = o.dim();
        Matrix<S> m(n_, a + b);
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t i = 0; i < a; ++i) m(j, i) = rows_[i][j];
            for (std::size_t i = 0; i < b; ++i) m(j, a + i) = -o.rows_[i][j];
        }
        std::vector<std::vector<S>> vecs;
        for (const auto& k : nullspace(m)) {
            std::vector<S> v(n_, S(0));
            for (std::size_t i = 0; i < a; ++i)
                if (!is_zero(k[i]))
                    for (std::size_t j = 0; j < n_; ++j) v[j] += k[i] * rows_[i][j];
            vecs.push_back(std::move(v));
        }
        return span(n_, vecs);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    void check(const Subspace& o) const
    {
        if (o.n_ != n_) throw std::invalid_argument("subspaces live in different ambients");
    }

    std::size_t n_ = 0;
    std::vector<std::vector<S>> rows_;
    std::vector<std::size_t> pivots_;
};

using RSub = Subspace<Rational>;
using KSub = Subspace<FieldElem>;

struct RationalForm {
    RSub space;
    bool certified = false;  // dim_Q equals the dimension over the tower field
};

// Q-span of the four coordinate components of each spanning vector.
RationalForm rational_form(const std::vector<std::vector<FieldElem>>& vectors, std::size_t ambient);

std::vector<FieldElem> to_field(const std::vector<Rational>& v);

}  // namespace spinweil

#endif
