#ifndef CSLIE_LINALG_HPP
#define CSLIE_LINALG_HPP

#include <optional>
#include <vector>

#include "cslie/gaussian.hpp"

namespace cslie {

using Vec = std::vector<GaussRat>;

Vec vec_zero(int n);
Vec vec_basis(int n, int i); // 1-based index
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const GaussRat& c, const Vec& a);
Vec vec_neg(const Vec& a);
bool vec_is_zero(const Vec& a);
GaussRat dot(const Vec& a, const Vec& b);
Vec vec_conj(const Vec& a);
std::string vec_str(const Vec& a);

// Dense matrix over Q(i), row-major.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<GaussRat> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

    GaussRat& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const GaussRat& at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static Mat identity(int n);
    static Mat from_rows(const std::vector<Vec>& rows);
    static Mat from_cols(const std::vector<Vec>& cols);

    Vec row(int r) const;
    Vec col(int c) const;
    Mat transpose() const;

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_mul(const Mat& A, const Mat& B);
Vec mat_apply(const Mat& A, const Vec& x); // A * x (column action)
Mat mat_add(const Mat& A, const Mat& B);
Mat mat_sub(const Mat& A, const Mat& B);
Mat mat_scale(const GaussRat& c, const Mat& A);
bool mat_is_zero(const Mat& A);

// In-place reduced row echelon form. Returns pivot column indices.
std::vector<int> rref(Mat& m);
int rank(Mat m);
GaussRat det(Mat m);

// Basis of { x : A x = 0 }, rows RREF-canonical.
std::vector<Vec> kernel_basis(const Mat& A);
// One solution of A x = b, if any.
std::optional<Vec> solve(const Mat& A, const Vec& b);
std::optional<Mat> inverse(const Mat& A);

// Subspace of Q(i)^n, stored as an RREF basis so equal subspaces have equal
// representations.
struct Subspace {
    int ambient = 0;
    std::vector<Vec> basis; // RREF rows, no zero rows
    std::vector<int> pivots;

    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    static Subspace span(int ambient, const std::vector<Vec>& gens);

    int dim() const { return (int)basis.size(); }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    Vec reduce(Vec v) const;            // v minus its projection onto the pivots
    std::optional<Vec> coords(const Vec& v) const; // coefficients in `basis`

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.basis == b.basis;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace image(const Mat& A, const Subspace& s); // span of A*basis
bool invariant_under(const Mat& A, const Subspace& s);

} // namespace cslie

#endif
