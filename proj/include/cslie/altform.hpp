#ifndef CSLIE_ALTFORM_HPP
#define CSLIE_ALTFORM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cslie/linalg.hpp"
#include "cslie/poly.hpp"

namespace cslie {

// Alternating k-form. Each term is keyed by a bitmask whose set bits are the
// strictly increasing index tuple (bit i <-> basis index i+1). Degree <= 64.
struct AltForm {
    int dim = 0;
    int degree = 0;
    std::map<uint64_t, GaussRat> c;

    AltForm() = default;
    AltForm(int d, int k) : dim(d), degree(k) {}

    static AltForm basis(int dim, const std::vector<int>& indices); // 1-based, increasing
    static uint64_t mask_of(const std::vector<int>& indices);
    static std::vector<int> indices_of(uint64_t mask);

    bool is_zero() const { return c.empty(); }
    GaussRat coeff(uint64_t mask) const;
    GaussRat coeff(const std::vector<int>& indices) const { return coeff(mask_of(indices)); }
    void add_term(uint64_t mask, const GaussRat& v);

    AltForm re() const;
    AltForm im() const;
    AltForm conj() const;

    friend bool operator==(const AltForm& a, const AltForm& b) {
        return a.dim == b.dim && a.degree == b.degree && a.c == b.c;
    }
    friend bool operator!=(const AltForm& a, const AltForm& b) { return !(a == b); }

    // Canonical text: "e14+e23", "1/2·e18+e27", "e{1,10}" past index 9.
    std::string str() const;
    static AltForm parse(const std::string& text, int dim, int degree = -1);
};

AltForm form_add(const AltForm& a, const AltForm& b);
AltForm form_sub(const AltForm& a, const AltForm& b);
AltForm form_scale(const GaussRat& s, const AltForm& a);
AltForm form_neg(const AltForm& a);

AltForm wedge(const AltForm& a, const AltForm& b);
AltForm wedge_power(const AltForm& a, int n);
AltForm contract(const Vec& x, const AltForm& a);
GaussRat form_eval(const AltForm& a, const std::vector<Vec>& args);
// Pullback along P (column action): (P*a)(X1..Xk) = a(P X1, .., P Xk).
AltForm pullback(const Mat& P, const AltForm& a);

// Skew matrix of a 2-form: M[i][j] = a(e_{i+1}, e_{j+1}).
Mat gram_of_2form(const AltForm& a);
AltForm two_form_of_gram(const Mat& m);

// Pfaffian with the normalization  a^n = n! * Pf(a) * e^{1..2n}.
GaussRat pfaffian(const AltForm& a);
// Same value computed by recursive expansion of the skew matrix.
GaussRat pfaffian_matrix(const Mat& skew);
// Unique X with a(X, .) = alpha. Requires Pf(a) != 0.
Vec sharp(const AltForm& a, const Vec& alpha);

// Pf(sum_i x_i basis[i]) expanded exactly in variables `vars`.
MultiPoly pfaffian_poly(const std::vector<AltForm>& basis,
                        const std::vector<std::string>& vars);

// Endomorphism of Q(i)^dim; column j = image of basis vector e_{j+1}.
struct Endo {
    int dim = 0;
    Mat m;

    Endo() = default;
    explicit Endo(Mat mat);
    static Endo zero(int dim);
    static Endo identity(int dim);

    Vec apply(const Vec& x) const { return mat_apply(m, x); }
    Vec apply_basis(int i) const { return m.col(i - 1); } // 1-based

    friend bool operator==(const Endo& a, const Endo& b) { return a.m == b.m; }
};

// (D.rho)(X,Y) = rho(DX, Y) + rho(X, DY) for a 2-form rho.
AltForm endo_dot_form(const Endo& d, const AltForm& rho);
// {xi,eta}(v1,v2) = xi1 o eta2 - xi2 o eta1.
Endo endo_bracket_map(const Endo& xi1, const Endo& xi2, const Endo& eta1, const Endo& eta2);
// alpha o D as a covector.
Vec covector_compose(const Vec& alpha, const Endo& d);

} // namespace cslie

#endif
