#include "cslie/cs.hpp"

#include <stdexcept>

namespace cslie {

static bool is_minus_identity(const Mat& m) {
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            GaussRat want = (i == j) ? GaussRat(-1) : GaussRat(0);
            if (m.at(i, j) != want) return false;
        }
    return true;
}

static void require_acs(const Mat& J) {
    if (J.rows != J.cols) throw std::invalid_argument("J must be square");
    if (!is_minus_identity(mat_mul(J, J)))
        throw std::invalid_argument("J^2 != -id");
}

ComplexStructure::ComplexStructure(Mat j) : J(std::move(j)) { require_acs(J); }

std::vector<Vec> coframe10(const Mat& J) {
    require_acs(J);
    // rows phi with phi o J = i phi  <=>  (J^T - i) phi^T = 0
    Mat m = J.transpose();
    GaussRat I = GaussRat::unit_i();
    for (int d = 0; d < m.rows; ++d) m.at(d, d) -= I;
    return kernel_basis(m);
}

static std::vector<Vec> vectors01(const Mat& J) {
    // vectors z with J z = -i z
    Mat m = J;
    GaussRat I = GaussRat::unit_i();
    for (int d = 0; d < m.rows; ++d) m.at(d, d) += I;
    return kernel_basis(m);
}

NijenhuisReport nijenhuis_check(const LieAlgebra& g, const Mat& J) {
    if (J.rows != g.dim) throw std::invalid_argument("nijenhuis_check: dim mismatch");
    require_acs(J);
    NijenhuisReport rep;
    std::vector<Vec> table = g.bracket_table();
    // [x, e_k] for a general x against the table
    auto mul_basis = [&](const Vec& x, int k) {
        Vec r(g.dim);
        for (int m = 0; m < g.dim; ++m) {
            if (x[m].is_zero()) continue;
            const Vec& t = table[(size_t)m * g.dim + (k - 1)];
            for (int q = 0; q < g.dim; ++q)
                if (!t[q].is_zero()) r[q] += x[m] * t[q];
        }
        return r;
    };
    std::vector<Vec> jcols;
    for (int i = 0; i < g.dim; ++i) jcols.push_back(J.col(i));
    for (int i = 1; i <= g.dim; ++i) {
        const Vec& ji = jcols[i - 1];
        for (int j = i + 1; j <= g.dim; ++j) {
            const Vec& jj = jcols[j - 1];
            Vec inner = vec_add(mul_basis(ji, j), vec_neg(mul_basis(jj, i)));
            Vec n = vec_add(table[(size_t)(i - 1) * g.dim + (j - 1)], mat_apply(J, inner));
            // [J e_i, J e_j] = sum_m (j_i)_m [e_m, J e_j]
            Vec cross(g.dim);
            for (int m = 0; m < g.dim; ++m) {
                if (ji[m].is_zero()) continue;
                Vec part = mul_basis(jj, m + 1); // [J e_j, e_{m+1}]
                for (int q = 0; q < g.dim; ++q)
                    if (!part[q].is_zero()) cross[q] -= ji[m] * part[q];
            }
            n = vec_sub(n, cross);
            if (!vec_is_zero(n)) rep.failures.emplace_back(i, j, n);
        }
    }
    // Equivalent criterion: d of every (1,0)-coframe covector has no (0,2)
    // component, i.e. vanishes on pairs of (0,1) vectors.
    bool no02 = true;
    std::vector<Vec> zbars = vectors01(J);
    for (const Vec& phi : coframe10(J)) {
        AltForm f(g.dim, 1);
        for (int i = 0; i < g.dim; ++i)
            if (!phi[i].is_zero()) f.add_term(1ULL << i, phi[i]);
        Mat gram = gram_of_2form(ce_diff(g, f));
        for (size_t a = 0; a < zbars.size() && no02; ++a) {
            Vec gz = mat_apply(gram, zbars[a]);
            for (size_t b = a + 1; b < zbars.size(); ++b)
                if (!dot(zbars[b], gz).is_zero()) {
                    no02 = false;
                    break;
                }
        }
        if (!no02) break;
    }
    if (no02 != rep.integrable())
        throw std::logic_error("nijenhuis_check: criteria disagree");
    return rep;
}

AltForm j_twist(const Mat& J, const AltForm& omega) {
    if (omega.degree != 2) throw std::invalid_argument("j_twist: need a 2-form");
    // omega(J e_i, e_j) = (J^T G)_{ij} with G the gram matrix
    Mat jg = mat_mul(J.transpose(), gram_of_2form(omega));
    AltForm r(omega.dim, 2);
    for (int i = 0; i < omega.dim; ++i)
        for (int j = i + 1; j < omega.dim; ++j)
            r.add_term((1ULL << i) | (1ULL << j), jg.at(i, j));
    return r;
}

static bool j_symmetric(const Mat& J, const AltForm& omega) {
    // omega(J e_i, e_j) = omega(e_i, J e_j) for all pairs, diagonal included:
    // J^T G = G J as matrices
    Mat g = gram_of_2form(omega);
    return mat_mul(J.transpose(), g) == mat_mul(g, J);
}

CSPair validate_complex_symplectic(const LieAlgebra& g, const Mat& J, const AltForm& omega) {
    if (J.rows != g.dim || omega.dim != g.dim)
        throw std::invalid_argument("validate_complex_symplectic: dim mismatch");
    if (omega.degree != 2) throw std::invalid_argument("omega must be a 2-form");
    CSPair pair{g, J, omega, {}};
    CSReport& rep = pair.report;
    if (!is_minus_identity(mat_mul(J, J))) {
        rep.detail = "J^2 != -id";
        return pair;
    }
    NijenhuisReport nj = nijenhuis_check(g, J);
    rep.integrable = nj.integrable();
    if (!rep.integrable && rep.detail.empty()) {
        auto& [i, j, v] = nj.failures.front();
        rep.detail = "N_J(e" + std::to_string(i) + ",e" + std::to_string(j) + ") = " + vec_str(v);
    }
    AltForm dw = ce_diff(g, omega);
    rep.closed = dw.is_zero();
    if (!rep.closed && rep.detail.empty()) rep.detail = "d omega = " + dw.str();
    rep.nondegenerate = (g.dim % 2 == 0) && !pfaffian_matrix(gram_of_2form(omega)).is_zero();
    if (!rep.nondegenerate && rep.detail.empty()) rep.detail = "Pf(omega) = 0";
    rep.j_symmetric = j_symmetric(J, omega);
    if (!rep.j_symmetric && rep.detail.empty()) rep.detail = "omega(J.,.) != omega(.,J.)";
    return pair;
}

AltForm form_bijection(const Mat& J, const AltForm& omega) {
    if (!j_symmetric(J, omega))
        throw std::invalid_argument("form_bijection: omega is not J-symmetric");
    AltForm wc = form_sub(omega, form_scale(GaussRat::unit_i(), j_twist(J, omega)));
    // (2,0) type: omega_C(J e_i, e_j) = i omega_C(e_i, e_j), as matrices
    Mat w = gram_of_2form(wc);
    if (!(mat_mul(J.transpose(), w) == mat_scale(GaussRat::unit_i(), w)))
        throw std::logic_error("form_bijection: output is not of type (2,0)");
    return wc;
}

static void require_real_entries(const Mat& J, const AltForm& omega) {
    for (const auto& x : J.a)
        if (!x.is_real()) throw std::invalid_argument("adapted_basis: J must have real entries");
    for (const auto& [m, v] : omega.c)
        if (!v.is_real())
            throw std::invalid_argument("adapted_basis: omega must have real coefficients");
}

Mat adapted_basis(const LieAlgebra& g, const Mat& J, const AltForm& omega,
                  const std::optional<Subspace>& through) {
    int dim = g.dim;
    if (dim % 4 != 0) throw std::invalid_argument("adapted_basis: dimension must be 4n");
    require_acs(J);
    require_real_entries(J, omega);
    if (pfaffian(omega).is_zero()) throw std::invalid_argument("adapted_basis: omega degenerate");
    if (!j_symmetric(J, omega))
        throw std::invalid_argument("adapted_basis: omega is not J-symmetric");

    std::vector<Vec> cols;
    auto pairing = [&](const Vec& x, const Vec& y) { return form_eval(omega, {x, y}); };

    if (through) {
        if (dim != 4) throw std::invalid_argument("adapted_basis: `through` only in dim 4");
        if (through->dim() != 2 || !invariant_under(J, *through))
            throw std::invalid_argument("adapted_basis: `through` must be J-invariant of dim 2");
        Vec x4 = through->basis[0];
        Vec x3 = mat_apply(J, x4);
        // omega(x1, x4) = 1, omega(x1, x3) = 0
        Mat cond(2, dim);
        for (int c = 0; c < dim; ++c) {
            cond.at(0, c) = pairing(vec_basis(dim, c + 1), x4);
            cond.at(1, c) = pairing(vec_basis(dim, c + 1), x3);
        }
        auto x1 = solve(cond, Vec{GaussRat(1), GaussRat(0)});
        if (!x1) throw std::logic_error("adapted_basis: no completion found");
        Vec x2 = vec_neg(mat_apply(J, *x1));
        cols = {*x1, x2, x3, x4};
    } else {
        // Work down J-invariant omega-orthogonal complements, one quadruple at
        // a time.
        std::vector<Vec> remaining = Subspace::full(dim).basis;
        while (!remaining.empty()) {
            Vec x1 = remaining.front();
            Vec x2 = vec_neg(mat_apply(J, x1));
            Vec x4, x3;
            bool found = false;
            for (const Vec& y : remaining) {
                GaussRat p = pairing(x1, y);
                GaussRat q = pairing(x2, y);
                if (p.is_zero() && q.is_zero()) continue;
                GaussRat denom = p * p + q * q;
                if (denom.is_zero()) continue; // impossible for real entries
                Vec jy = mat_apply(J, y);
                x4 = vec_add(vec_scale(p / denom, y), vec_scale(-(q / denom), jy));
                x3 = mat_apply(J, x4);
                found = true;
                break;
            }
            if (!found) throw std::logic_error("adapted_basis: degenerate block");
            cols.push_back(x1);
            cols.push_back(x2);
            cols.push_back(x3);
            cols.push_back(x4);
            // omega-orthogonal complement of the quadruple inside `remaining`
            std::vector<Vec> quad = {x1, x2, x3, x4};
            std::vector<Vec> next;
            Mat sys(4, (int)remaining.size());
            for (size_t r = 0; r < remaining.size(); ++r)
                for (int k = 0; k < 4; ++k) sys.at(k, (int)r) = pairing(quad[k], remaining[r]);
            for (const Vec& coeffs : kernel_basis(sys)) {
                Vec v(dim);
                for (size_t r = 0; r < remaining.size(); ++r)
                    if (!coeffs[r].is_zero()) v = vec_add(v, vec_scale(coeffs[r], remaining[r]));
                next.push_back(std::move(v));
            }
            remaining = Subspace::span(dim, next).basis;
        }
    }

    Mat P = Mat::from_cols(cols);
    auto pinv = inverse(P);
    if (!pinv) throw std::logic_error("adapted_basis: produced a singular basis");
    // verify the normal form exactly
    Mat jn = mat_mul(*pinv, mat_mul(J, P));
    AltForm wn = pullback(P, omega);
    Mat jwant(dim, dim);
    AltForm wwant(dim, 2);
    for (int k = 1; k <= dim / 2; ++k) {
        jwant.at(2 * k - 1, 2 * k - 2) = GaussRat(-1);
        jwant.at(2 * k - 2, 2 * k - 1) = GaussRat(1);
    }
    for (int j = 1; j <= dim / 4; ++j) {
        wwant.add_term(AltForm::mask_of({4 * j - 3, 4 * j}), GaussRat(1));
        wwant.add_term(AltForm::mask_of({4 * j - 2, 4 * j - 1}), GaussRat(1));
    }
    if (!(jn == jwant) || !(wn == wwant))
        throw std::logic_error("adapted_basis: normal form verification failed");
    return P;
}

JSeriesReport ascending_J_series(const LieAlgebra& g, const Mat& J) {
    require_acs(J);
    JSeriesReport out;
    out.series = ascending_series(g, &J);
    Subspace a1 =
        out.series.terms.empty() ? Subspace::zero(g.dim) : out.series.terms.front();
    Subspace z = center(g);
    if (a1 != intersect(z, image(J, z)))
        throw std::logic_error("ascending_J_series: a_1(J) != z(g) cap J z(g)");
    out.quasi_nilpotent = a1.dim() > 0;
    if (!central_series(g).nilpotent()) {
        out.type = JType::NotApplicable;
        return out;
    }
    if (a1.dim() == 0)
        out.type = JType::SnN;
    else if (out.series.nilpotent())
        out.type = JType::Nilpotent;
    else
        out.type = JType::WeaklyNonNilpotent;
    return out;
}

HypercomplexReport check_hypercomplex(const LieAlgebra& g, const Mat& I, const Mat& J,
                                      const Mat& K) {
    HypercomplexReport rep;
    auto minus_id = [&](const Mat& m) { return is_minus_identity(m); };
    rep.i_square = minus_id(mat_mul(I, I));
    rep.j_square = minus_id(mat_mul(J, J));
    rep.k_square = minus_id(mat_mul(K, K));
    auto integrable = [&](const Mat& m) {
        if (!is_minus_identity(mat_mul(m, m))) return false;
        return nijenhuis_check(g, m).integrable();
    };
    rep.i_integrable = integrable(I);
    rep.j_integrable = integrable(J);
    rep.k_integrable = integrable(K);
    rep.ij_is_k = (mat_mul(I, J) == K);
    rep.anticommute = mat_is_zero(mat_add(mat_mul(I, J), mat_mul(J, I))) &&
                      mat_is_zero(mat_add(mat_mul(I, K), mat_mul(K, I))) &&
                      mat_is_zero(mat_add(mat_mul(J, K), mat_mul(K, J)));
    return rep;
}

std::optional<std::vector<GaussRat>> find_nonvanishing_point(const MultiPoly& p, int bound) {
    if (p.is_zero()) return std::nullopt;
    size_t m = p.vars.size();
    std::vector<GaussRat> point(m, GaussRat(0));
    MultiPoly cur = p;
    // One variable at a time: a nonzero polynomial of degree < bound in x_k
    // keeps a nonzero specialization for some value in {0..bound-1}.
    for (size_t k = 0; k < m; ++k) {
        bool ok = false;
        for (int v = 0; v < bound; ++v) {
            MultiPoly sub = poly_substitute(cur, k, GaussRat(v));
            if (!sub.is_zero()) {
                point[k] = GaussRat(v);
                cur = std::move(sub);
                ok = true;
                break;
            }
        }
        if (!ok) return std::nullopt; // degree exceeded the bound
    }
    return point;
}

static std::vector<std::string> poly_vars(size_t m) {
    std::vector<std::string> v;
    for (size_t i = 0; i < m; ++i) v.push_back("x" + std::to_string(i + 1));
    return v;
}

Certificate symplectic_existence(const LieAlgebra& g) {
    if (g.dim % 2 != 0) throw std::invalid_argument("symplectic_existence: odd dimension");
    if (!validate_jacobi(g).ok())
        throw std::invalid_argument("symplectic_existence: Jacobi identity fails");
    Certificate cert;
    cert.question = "symplectic";
    auto masks = lambda_masks(g.dim, 2);
    Mat d2 = ce_diff_matrix(g, 2);
    std::vector<Vec> ker = kernel_basis(d2);
    std::vector<AltForm> basis;
    for (const Vec& k : ker) {
        AltForm f(g.dim, 2);
        for (size_t t = 0; t < masks.size(); ++t)
            if (!k[t].is_zero()) f.add_term(masks[t], k[t]);
        basis.push_back(std::move(f));
    }
    cert.space_basis = basis;
    if (basis.empty()) {
        cert.kind = Certificate::Kind::Impossible;
        cert.poly = MultiPoly(poly_vars(0));
        return cert;
    }
    auto vars = poly_vars(basis.size());
    cert.poly = pfaffian_poly(basis, vars);
    if (cert.poly.is_zero()) {
        cert.kind = Certificate::Kind::Impossible;
        return cert;
    }
    auto point = find_nonvanishing_point(cert.poly, g.dim / 2 + 1);
    if (!point) throw std::logic_error("symplectic_existence: witness search failed");
    AltForm w(g.dim, 2);
    for (size_t t = 0; t < basis.size(); ++t)
        if (!(*point)[t].is_zero()) w = form_add(w, form_scale((*point)[t], basis[t]));
    if (pfaffian(w).is_zero() || !ce_diff(g, w).is_zero())
        throw std::logic_error("symplectic_existence: witness does not re-validate");
    cert.kind = Certificate::Kind::Witness;
    cert.witness = std::move(w);
    return cert;
}

Certificate complex_symplectic_existence(const LieAlgebra& g, const Mat& J) {
    if (g.dim % 4 != 0)
        throw std::invalid_argument("complex_symplectic_existence: dim not divisible by 4");
    for (const auto& x : J.a)
        if (!x.is_real())
            throw std::invalid_argument("complex_symplectic_existence: J must be real");
    for (const auto& [ij, v] : g.br)
        for (const auto& x : v)
            if (!x.is_real())
                throw std::invalid_argument(
                    "complex_symplectic_existence: structure constants must be real");
    NijenhuisReport nj = nijenhuis_check(g, J);
    if (!nj.integrable())
        throw std::invalid_argument("complex_symplectic_existence: J not integrable");
    Certificate cert;
    cert.question = "complex-symplectic";
    int n2 = g.dim / 2; // complex dimension, = 2n
    std::vector<Vec> frame = coframe10(J);
    if ((int)frame.size() != n2)
        throw std::logic_error("complex_symplectic_existence: bad (1,0)-coframe");
    // (2,0)-forms phi^a ^ phi^b as complex AltForms on the real algebra
    std::vector<AltForm> phi;
    for (const Vec& f : frame) {
        AltForm a(g.dim, 1);
        for (int i = 0; i < g.dim; ++i)
            if (!f[i].is_zero()) a.add_term(1ULL << i, f[i]);
        phi.push_back(std::move(a));
    }
    std::vector<std::pair<int, int>> pairs;
    std::vector<AltForm> twoforms;
    for (int a = 0; a < n2; ++a)
        for (int b = a + 1; b < n2; ++b) {
            pairs.emplace_back(a, b);
            twoforms.push_back(wedge(phi[a], phi[b]));
        }
    // closed combinations
    auto masks3 = lambda_masks(g.dim, 3);
    std::map<uint64_t, int> index3;
    for (size_t i = 0; i < masks3.size(); ++i) index3[masks3[i]] = (int)i;
    Mat dmat((int)masks3.size(), (int)twoforms.size());
    for (size_t c = 0; c < twoforms.size(); ++c) {
        AltForm df = ce_diff(g, twoforms[c]);
        for (const auto& [mask, v] : df.c) dmat.at(index3[mask], (int)c) = v;
    }
    std::vector<Vec> ker = kernel_basis(dmat);
    // Pfaffian in the phi-frame: matrix entries are the coefficients on phi^ab
    std::vector<AltForm> gram_forms; // 2-forms on a formal 2n-dim space
    for (const Vec& k : ker) {
        AltForm f(n2, 2);
        for (size_t t = 0; t < pairs.size(); ++t)
            if (!k[t].is_zero())
                f.add_term((1ULL << pairs[t].first) | (1ULL << pairs[t].second), k[t]);
        gram_forms.push_back(std::move(f));
    }
    for (const Vec& k : ker) {
        AltForm f(g.dim, 2);
        for (size_t t = 0; t < pairs.size(); ++t)
            if (!k[t].is_zero()) f = form_add(f, form_scale(k[t], twoforms[t]));
        cert.space_basis.push_back(std::move(f));
    }
    if (ker.empty()) {
        cert.kind = Certificate::Kind::Impossible;
        cert.poly = MultiPoly(poly_vars(0));
        return cert;
    }
    auto vars = poly_vars(ker.size());
    cert.poly = pfaffian_poly(gram_forms, vars);
    if (cert.poly.is_zero()) {
        cert.kind = Certificate::Kind::Impossible;
        return cert;
    }
    auto point = find_nonvanishing_point(cert.poly, g.dim / 4 + 1);
    if (!point) throw std::logic_error("complex_symplectic_existence: witness search failed");
    AltForm wc(g.dim, 2);
    for (size_t t = 0; t < cert.space_basis.size(); ++t)
        if (!(*point)[t].is_zero())
            wc = form_add(wc, form_scale((*point)[t], cert.space_basis[t]));
    AltForm wreal = form_scale(GaussRat(Rational(1, 2)), form_add(wc, wc.conj()));
    CSPair check = validate_complex_symplectic(g, J, wreal);
    if (!check.report.ok())
        throw std::logic_error("complex_symplectic_existence: witness does not re-validate (" +
                               check.report.detail + ")");
    cert.kind = Certificate::Kind::Witness;
    cert.witness = std::move(wreal);
    cert.witness_complex = std::move(wc);
    return cert;
}

} // namespace cslie
