#pragma once

// Dense exact linear algebra.  Matrices act on coordinate columns: y = M*x
// with M of shape (rows x cols), x in F^cols.  Row spaces are kept in reduced
// row echelon form, which is unique per subspace, so subspace equality is
// plain row-by-row comparison and all downstream bases are canonical.

#include "ppw/scalars.hpp"
#include <cassert>
#include <optional>
#include <vector>

namespace ppw {

template <class F> using Vec = std::vector<F>;

template <class F>
struct Mat {
    int r = 0, c = 0;
    std::vector<F> a;

    Mat() = default;
    Mat(int rows, int cols) : r(rows), c(cols), a((size_t)rows * cols, fof<F>(0)) {}
    F& at(int i, int j) { return a[(size_t)i * c + j]; }
    const F& at(int i, int j) const { return a[(size_t)i * c + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = fof<F>(1);
        return m;
    }
    bool is_zero() const {
        for (auto& x : a) if (!fis_zero(x)) return false;
        return true;
    }
    Vec<F> apply(const Vec<F>& x) const {
        assert((int)x.size() == c);
        Vec<F> y(r, fof<F>(0));
        for (int i = 0; i < r; ++i) {
            F s = fof<F>(0);
            for (int j = 0; j < c; ++j)
                if (!fis_zero(at(i, j)) && !fis_zero(x[j])) s += at(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }
    Mat operator*(const Mat& o) const {
        assert(c == o.r);
        Mat m(r, o.c);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < c; ++k) {
                const F& v = at(i, k);
                if (fis_zero(v)) continue;
                for (int j = 0; j < o.c; ++j)
                    if (!fis_zero(o.at(k, j))) m.at(i, j) += v * o.at(k, j);
            }
        return m;
    }
    Mat operator+(const Mat& o) const {
        assert(r == o.r && c == o.c);
        Mat m(r, c);
        for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] + o.a[i];
        return m;
    }
    Mat operator-(const Mat& o) const {
        assert(r == o.r && c == o.c);
        Mat m(r, c);
        for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] - o.a[i];
        return m;
    }
    Mat scaled(const F& s) const {
        Mat m(r, c);
        for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] * s;
        return m;
    }
    Mat transposed() const {
        Mat m(c, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(j, i) = at(i, j);
        return m;
    }
    void set_col(int j, const Vec<F>& v) {
        assert((int)v.size() == r);
        for (int i = 0; i < r; ++i) at(i, j) = v[i];
    }
    Vec<F> col(int j) const {
        Vec<F> v(r, fof<F>(0));
        for (int i = 0; i < r; ++i) v[i] = at(i, j);
        return v;
    }
};

// In-place reduced row echelon form; returns rank, records pivot columns.
template <class F>
int rref(Mat<F>& m, std::vector<int>* pivots = nullptr) {
    int rank = 0;
    if (pivots) pivots->clear();
    for (int col = 0; col < m.c && rank < m.r; ++col) {
        int sel = -1;
        for (int i = rank; i < m.r; ++i)
            if (!fis_zero(m.at(i, col))) {
                sel = i;
                if (fis_one(m.at(i, col))) break; // prefer unit pivots
            }
        if (sel < 0) continue;
        if (sel != rank)
            for (int j = col; j < m.c; ++j) std::swap(m.at(sel, j), m.at(rank, j));
        F inv = fof<F>(1) / m.at(rank, col);
        if (!fis_one(m.at(rank, col)))
            for (int j = col; j < m.c; ++j)
                if (!fis_zero(m.at(rank, j))) m.at(rank, j) = m.at(rank, j) * inv;
        for (int i = 0; i < m.r; ++i) {
            if (i == rank) continue;
            const F f = m.at(i, col);
            if (fis_zero(f)) continue;
            for (int j = col; j < m.c; ++j)
                if (!fis_zero(m.at(rank, j))) m.at(i, j) -= f * m.at(rank, j);
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

template <class F>
int rank_of(Mat<F> m) { return rref(m); }

// Basis of { x : A x = 0 }, canonical (from RREF free columns).
template <class F>
std::vector<Vec<F>> right_kernel(Mat<F> m) {
    std::vector<int> piv;
    int rank = rref(m, &piv);
    std::vector<char> is_piv(m.c, 0);
    for (int p : piv) is_piv[p] = 1;
    std::vector<Vec<F>> out;
    for (int j = 0; j < m.c; ++j) {
        if (is_piv[j]) continue;
        Vec<F> x(m.c, fof<F>(0));
        x[j] = fof<F>(1);
        for (int i = 0; i < rank; ++i)
            x[piv[i]] = -m.at(i, j);
        out.push_back(std::move(x));
    }
    return out;
}

// Solve A x = b; nullopt if inconsistent (one solution, not the affine set).
template <class F>
std::optional<Vec<F>> solve(const Mat<F>& A, const Vec<F>& b) {
    Mat<F> m(A.r, A.c + 1);
    for (int i = 0; i < A.r; ++i) {
        for (int j = 0; j < A.c; ++j) m.at(i, j) = A.at(i, j);
        m.at(i, A.c) = b[i];
    }
    std::vector<int> piv;
    int rank = rref(m, &piv);
    for (int i = 0; i < rank; ++i)
        if (piv[i] == A.c) return std::nullopt;
    Vec<F> x(A.c, fof<F>(0));
    for (int i = 0; i < rank; ++i) x[piv[i]] = m.at(i, A.c);
    return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& A) {
    if (A.r != A.c) return std::nullopt;
    Mat<F> m(A.r, 2 * A.c);
    for (int i = 0; i < A.r; ++i) {
        for (int j = 0; j < A.c; ++j) m.at(i, j) = A.at(i, j);
        m.at(i, A.c + i) = fof<F>(1);
    }
    std::vector<int> piv;
    int rank = rref(m, &piv);
    if (rank != A.r) return std::nullopt;
    for (int i = 0; i < rank; ++i)
        if (piv[i] != i) return std::nullopt;
    Mat<F> inv(A.r, A.c);
    for (int i = 0; i < A.r; ++i)
        for (int j = 0; j < A.c; ++j) inv.at(i, j) = m.at(i, A.c + j);
    return inv;
}

// A subspace of F^n held in reduced row echelon form.
template <class F>
struct RowSpace {
    int n = 0;
    std::vector<Vec<F>> rows; // sorted by pivot column, fully reduced
    std::vector<int> piv;

    RowSpace() = default;
    explicit RowSpace(int ambient) : n(ambient) {}

    int dim() const { return (int)rows.size(); }

    // Reduce v against the rows; the residual has zeros at all pivot columns.
    Vec<F> reduce(Vec<F> v) const {
        for (size_t k = 0; k < rows.size(); ++k) {
            const F& coef = v[piv[k]];
            if (fis_zero(coef)) continue;
            const F f = coef;
            const Vec<F>& rw = rows[k];
            for (int j = piv[k]; j < n; ++j)
                if (!fis_zero(rw[j])) v[j] -= f * rw[j];
        }
        return v;
    }

    bool contains(const Vec<F>& v) const {
        Vec<F> r = reduce(v);
        for (auto& x : r) if (!fis_zero(x)) return false;
        return true;
    }

    // Insert a vector, keeping RREF; returns true if the dimension grew.
    bool add(Vec<F> v) {
        assert((int)v.size() == n);
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < n; ++j)
            if (!fis_zero(v[j])) { p = j; break; }
        if (p < 0) return false;
        if (!fis_one(v[p])) {
            F inv = fof<F>(1) / v[p];
            for (int j = p; j < n; ++j)
                if (!fis_zero(v[j])) v[j] = v[j] * inv;
        }
        // back-substitute into existing rows
        for (size_t k = 0; k < rows.size(); ++k) {
            const F f = rows[k][p];
            if (fis_zero(f)) continue;
            for (int j = p; j < n; ++j)
                if (!fis_zero(v[j])) rows[k][j] -= f * v[j];
        }
        size_t pos = 0;
        while (pos < piv.size() && piv[pos] < p) ++pos;
        rows.insert(rows.begin() + pos, std::move(v));
        piv.insert(piv.begin() + pos, p);
        return true;
    }

    void add_all(const std::vector<Vec<F>>& vs) { for (auto& v : vs) add(v); }

    bool equals(const RowSpace& o) const {
        if (n != o.n || piv != o.piv) return false;
        for (size_t k = 0; k < rows.size(); ++k)
            if (rows[k] != o.rows[k]) return false;
        return true;
    }

    bool contains_space(const RowSpace& o) const {
        for (auto& rw : o.rows) if (!contains(rw)) return false;
        return true;
    }

    static RowSpace full(int ambient) {
        RowSpace s(ambient);
        for (int i = 0; i < ambient; ++i) {
            Vec<F> e(ambient, fof<F>(0));
            e[i] = fof<F>(1);
            s.rows.push_back(std::move(e));
            s.piv.push_back(i);
        }
        return s;
    }
};

// Coordinates of v in the span of given (independent) columns; nullopt if
// v is outside the span.
template <class F>
std::optional<Vec<F>> coords_in(const std::vector<Vec<F>>& basis, const Vec<F>& v) {
    if (basis.empty()) {
        for (auto& x : v) if (!fis_zero(x)) return std::nullopt;
        return Vec<F>{};
    }
    Mat<F> A((int)basis[0].size(), (int)basis.size());
    for (int j = 0; j < (int)basis.size(); ++j) A.set_col(j, basis[j]);
    return solve(A, v);
}

template <class F>
bool vec_is_zero(const Vec<F>& v) {
    for (auto& x : v) if (!fis_zero(x)) return false;
    return true;
}

} // namespace ppw
