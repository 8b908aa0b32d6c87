#include "cslie/linalg.hpp"

#include <stdexcept>

namespace cslie {

Vec vec_zero(int n) { return Vec(n); }

Vec vec_basis(int n, int i) {
    Vec v(n);
    v[i - 1] = GaussRat(1);
    return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const GaussRat& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

GaussRat dot(const Vec& a, const Vec& b) {
    GaussRat s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec vec_conj(const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].conj();
    return r;
}

std::string vec_str(const Vec& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += a[i].str();
    }
    return s + ")";
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussRat(1);
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m((int)rows.size(), (int)rows[0].size());
    for (int r = 0; r < m.rows; ++r) {
        if ((int)rows[r].size() != m.cols) throw std::invalid_argument("Mat: ragged rows");
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols) {
    if (cols.empty()) return Mat();
    Mat m((int)cols[0].size(), (int)cols.size());
    for (int c = 0; c < m.cols; ++c) {
        if ((int)cols[c].size() != m.rows) throw std::invalid_argument("Mat: ragged cols");
        for (int r = 0; r < m.rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Vec Mat::row(int r) const {
    Vec v(cols);
    for (int c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
}

Vec Mat::col(int c) const {
    Vec v(rows);
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

Mat Mat::transpose() const {
    Mat t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const GaussRat& aik = A.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < B.cols; ++j) {
                const GaussRat& bkj = B.at(k, j);
                if (!bkj.is_zero()) C.at(i, j) += aik * bkj;
            }
        }
    return C;
}

Vec mat_apply(const Mat& A, const Vec& x) {
    if ((int)x.size() != A.cols) throw std::invalid_argument("mat_apply: shape mismatch");
    Vec y(A.rows);
    for (int j = 0; j < A.cols; ++j) {
        if (x[j].is_zero()) continue;
        for (int i = 0; i < A.rows; ++i) {
            const GaussRat& aij = A.at(i, j);
            if (!aij.is_zero()) y[i] += aij * x[j];
        }
    }
    return y;
}

Mat mat_add(const Mat& A, const Mat& B) {
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] + B.a[i];
    return C;
}

Mat mat_sub(const Mat& A, const Mat& B) {
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] - B.a[i];
    return C;
}

Mat mat_scale(const GaussRat& c, const Mat& A) {
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = c * A.a[i];
    return C;
}

bool mat_is_zero(const Mat& A) {
    for (const auto& x : A.a)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        GaussRat inv = m.at(r, c).inv();
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            GaussRat f = m.at(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(Mat m) { return (int)rref(m).size(); }

GaussRat det(Mat m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    GaussRat d(1);
    int n = m.rows;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return GaussRat(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        GaussRat inv = m.at(c, c).inv();
        for (int i = c + 1; i < n; ++i) {
            GaussRat f = m.at(i, c) * inv;
            if (f.is_zero()) continue;
            for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

std::vector<Vec> kernel_basis(const Mat& A) {
    Mat m = A;
    std::vector<int> piv = rref(m);
    std::vector<bool> is_pivot(A.cols, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<Vec> out;
    for (int c = 0; c < A.cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(A.cols);
        v[c] = GaussRat(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m.at((int)r, c);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
    if ((int)b.size() != A.rows) throw std::invalid_argument("solve: shape mismatch");
    Mat aug(A.rows, A.cols + 1);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols) = b[r];
    }
    std::vector<int> piv = rref(aug);
    if (!piv.empty() && piv.back() == A.cols) return std::nullopt; // inconsistent
    Vec x(A.cols);
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at((int)r, A.cols);
    return x;
}

std::optional<Mat> inverse(const Mat& A) {
    if (A.rows != A.cols) throw std::invalid_argument("inverse: not square");
    int n = A.rows;
    if (n == 0) return Mat(0, 0);
    Mat aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, n + r) = GaussRat(1);
    }
    std::vector<int> piv = rref(aug);
    if ((int)piv.size() != n || piv[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient = ambient;
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s;
    s.ambient = ambient;
    for (int i = 1; i <= ambient; ++i) {
        s.basis.push_back(vec_basis(ambient, i));
        s.pivots.push_back(i - 1);
    }
    return s;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& gens) {
    Subspace s;
    s.ambient = ambient;
    if (gens.empty()) return s;
    Mat m = Mat::from_rows(gens);
    if (m.cols != ambient) throw std::invalid_argument("Subspace: ambient mismatch");
    std::vector<int> piv = rref(m);
    for (size_t r = 0; r < piv.size(); ++r) s.basis.push_back(m.row((int)r));
    s.pivots = piv;
    return s;
}

Vec Subspace::reduce(Vec v) const {
    for (size_t r = 0; r < basis.size(); ++r) {
        const GaussRat& c = v[pivots[r]];
        if (c.is_zero()) continue;
        GaussRat f = c; // pivot entries are 1
        for (int j = 0; j < ambient; ++j) v[j] -= f * basis[r][j];
    }
    return v;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (const Vec& v : other.basis)
        if (!contains(v)) return false;
    return true;
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
    Vec rem = v;
    Vec c(basis.size());
    for (size_t r = 0; r < basis.size(); ++r) {
        c[r] = rem[pivots[r]];
        if (!c[r].is_zero())
            for (int j = 0; j < ambient; ++j) rem[j] -= c[r] * basis[r][j];
    }
    if (!vec_is_zero(rem)) return std::nullopt;
    return c;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    std::vector<Vec> gens = a.basis;
    gens.insert(gens.end(), b.basis.begin(), b.basis.end());
    if (gens.empty()) return Subspace::zero(a.ambient);
    return Subspace::span(a.ambient, gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient);
    // x in both spans: x = sum s_i a_i = sum t_j b_j. Solve [A^T | -B^T] (s,t)=0.
    Mat m(a.ambient, a.dim() + b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int r = 0; r < a.ambient; ++r) m.at(r, i) = a.basis[i][r];
    for (int j = 0; j < b.dim(); ++j)
        for (int r = 0; r < a.ambient; ++r) m.at(r, a.dim() + j) = -b.basis[j][r];
    std::vector<Vec> ker = kernel_basis(m);
    std::vector<Vec> gens;
    for (const Vec& k : ker) {
        Vec x(a.ambient);
        for (int i = 0; i < a.dim(); ++i)
            if (!k[i].is_zero()) x = vec_add(x, vec_scale(k[i], a.basis[i]));
        gens.push_back(std::move(x));
    }
    return Subspace::span(a.ambient, gens);
}

Subspace image(const Mat& A, const Subspace& s) {
    std::vector<Vec> gens;
    for (const Vec& v : s.basis) gens.push_back(mat_apply(A, v));
    return Subspace::span(s.ambient, gens);
}

bool invariant_under(const Mat& A, const Subspace& s) {
    for (const Vec& v : s.basis)
        if (!s.contains(mat_apply(A, v))) return false;
    return true;
}

} // namespace cslie
