#include "cslie/lie.hpp"

#include <bit>
#include <stdexcept>

namespace cslie {

LieAlgebra LieAlgebra::abelian(int d, std::string name) { return LieAlgebra(d, std::move(name)); }

void LieAlgebra::set_bracket(int i, int j, Vec v) {
    if (i < 1 || j < 1 || i > dim || j > dim) throw std::out_of_range("set_bracket: index");
    if (i >= j) throw std::invalid_argument("set_bracket: need i < j");
    if ((int)v.size() != dim) throw std::invalid_argument("set_bracket: vector size");
    if (vec_is_zero(v))
        br.erase({i, j});
    else
        br[{i, j}] = std::move(v);
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
    if (i == j) return vec_zero(dim);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = br.find({i, j});
    if (it == br.end()) return vec_zero(dim);
    return flip ? vec_neg(it->second) : it->second;
}

std::vector<Vec> LieAlgebra::bracket_table() const {
    std::vector<Vec> table((size_t)dim * dim, vec_zero(dim));
    for (const auto& [ij, v] : br) {
        table[(size_t)(ij.first - 1) * dim + (ij.second - 1)] = v;
        table[(size_t)(ij.second - 1) * dim + (ij.first - 1)] = vec_neg(v);
    }
    return table;
}

Vec bracket_eval(const LieAlgebra& g, const Vec& x, const Vec& y) {
    if ((int)x.size() != g.dim || (int)y.size() != g.dim)
        throw std::invalid_argument("bracket_eval: dim mismatch");
    Vec r(g.dim);
    for (const auto& [ij, v] : g.br) {
        auto [i, j] = ij;
        GaussRat c = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
        if (c.is_zero()) continue;
        for (int k = 0; k < g.dim; ++k)
            if (!v[k].is_zero()) r[k] += c * v[k];
    }
    return r;
}

JacobiReport validate_jacobi(const LieAlgebra& g) {
    JacobiReport rep;
    // dense bracket table; the exhaustive triple scan is a hot path
    std::vector<Vec> table = g.bracket_table();
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
    for (int i = 1; i <= g.dim; ++i)
        for (int j = i + 1; j <= g.dim; ++j) {
            const Vec& bij = table[(size_t)(i - 1) * g.dim + (j - 1)];
            for (int k = j + 1; k <= g.dim; ++k) {
                Vec s = mul_basis(bij, k);
                s = vec_add(s, mul_basis(table[(size_t)(j - 1) * g.dim + (k - 1)], i));
                s = vec_add(s, mul_basis(table[(size_t)(k - 1) * g.dim + (i - 1)], j));
                if (!vec_is_zero(s)) rep.violations.push_back({i, j, k, s});
            }
        }
    return rep;
}

AltForm ce_diff(const LieAlgebra& g, const AltForm& a) {
    if (a.dim != g.dim) throw std::invalid_argument("ce_diff: dim mismatch");
    AltForm r(g.dim, a.degree + 1);
    if (a.degree >= g.dim || a.is_zero()) return r;
    // Forward accumulation: each stored bracket [e_i, e_j] = sum_s b_s e_s
    // turns the term c * e^S (with s in S, i, j outside S minus s) into a
    // contribution on M = (S minus s) + {i, j}:
    //   (d a)(e_M) = sum_{p<q} (-1)^{p+q} a([.,.], rest), matched by signs
    //   (-1)^{pos(s in S)} and (-1)^{pos(i in M) + pos(j in M)}.
    for (const auto& [ij, b] : g.br) {
        uint64_t bi = 1ULL << (ij.first - 1);
        uint64_t bj = 1ULL << (ij.second - 1);
        for (const auto& [S, c] : a.c) {
            uint64_t rem = S;
            while (rem) {
                uint64_t sb = rem & (~rem + 1);
                rem &= rem - 1;
                int s = std::countr_zero(sb);
                if (b[s].is_zero()) continue;
                uint64_t rest = S & ~sb;
                if (rest & (bi | bj)) continue;
                uint64_t M = rest | bi | bj;
                int sign = std::popcount(S & (sb - 1)) + std::popcount(M & (bi - 1)) +
                           std::popcount(M & (bj - 1));
                GaussRat t = b[s] * c;
                if (sign & 1) t = -t;
                r.add_term(M, t);
            }
        }
    }
    return r;
}

std::vector<uint64_t> lambda_masks(int dim, int k) {
    std::vector<uint64_t> out;
    for (uint64_t m = 0; m < (dim >= 64 ? ~0ULL : (1ULL << dim)); ++m)
        if (std::popcount(m) == k) out.push_back(m);
    return out;
}

Mat ce_diff_matrix(const LieAlgebra& g, int k) {
    auto dom = lambda_masks(g.dim, k);
    auto cod = lambda_masks(g.dim, k + 1);
    std::map<uint64_t, int> cod_index;
    for (size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = (int)i;
    Mat m((int)cod.size(), (int)dom.size());
    for (size_t j = 0; j < dom.size(); ++j) {
        AltForm f(g.dim, k);
        f.c[dom[j]] = GaussRat(1);
        AltForm df = ce_diff(g, f);
        for (const auto& [mask, v] : df.c) m.at(cod_index[mask], (int)j) = v;
    }
    return m;
}

std::vector<int> betti_numbers(const LieAlgebra& g) {
    std::vector<int> b(g.dim + 1);
    std::vector<int> rank_k(g.dim + 2, 0); // rank of d on Lambda^k
    for (int k = 0; k <= g.dim; ++k) rank_k[k] = rank(ce_diff_matrix(g, k));
    for (int k = 0; k <= g.dim; ++k) {
        int dim_k = (int)lambda_masks(g.dim, k).size();
        int ker = dim_k - rank_k[k];
        int im_prev = (k == 0) ? 0 : rank_k[k - 1];
        b[k] = ker - im_prev;
    }
    return b;
}

JCohomology cohomology_dims(const LieAlgebra& g, const Mat& J) {
    JCohomology out;
    out.betti = betti_numbers(g);
    auto masks2 = lambda_masks(g.dim, 2);
    std::map<uint64_t, int> index2;
    for (size_t i = 0; i < masks2.size(); ++i) index2[masks2[i]] = (int)i;
    int n2 = (int)masks2.size();
    // Matrix of the involution a -> a(J., J.) on Lambda^2.
    Mat invol(n2, n2);
    for (int j = 0; j < n2; ++j) {
        AltForm f(g.dim, 2);
        f.c[masks2[j]] = GaussRat(1);
        AltForm pf = pullback(J, f);
        for (const auto& [mask, v] : pf.c) invol.at(index2[mask], j) = v;
    }
    Mat d2 = ce_diff_matrix(g, 2);
    Mat d1 = ce_diff_matrix(g, 1);
    // exact 2-forms
    std::vector<Vec> exact_gens;
    for (int c = 0; c < d1.cols; ++c) exact_gens.push_back(d1.col(c));
    Subspace exact = Subspace::span(n2, exact_gens);
    for (int sgn = 0; sgn < 2; ++sgn) {
        // closed and J*-eigenform: stack [d2; invol -/+ I]
        Mat stack(d2.rows + n2, n2);
        for (int r = 0; r < d2.rows; ++r)
            for (int c = 0; c < n2; ++c) stack.at(r, c) = d2.at(r, c);
        for (int r = 0; r < n2; ++r)
            for (int c = 0; c < n2; ++c) {
                GaussRat v = invol.at(r, c);
                if (r == c) v -= (sgn == 0) ? GaussRat(1) : GaussRat(-1);
                stack.at(d2.rows + r, c) = v;
            }
        std::vector<Vec> z = kernel_basis(stack);
        Subspace zs = Subspace::span(n2, z);
        int zdim = zs.dim();
        int hdim = zdim - intersect(zs, exact).dim();
        if (sgn == 0) {
            out.z_plus = zdim;
            out.h_plus = hdim;
        } else {
            out.z_minus = zdim;
            out.h_minus = hdim;
        }
    }
    return out;
}

// Solves {x : [x, e_j] in prev for all j} (and optionally the same for Jx).
static Subspace series_step(const LieAlgebra& g, const std::vector<Vec>& table,
                            const Subspace& prev, const Mat* J) {
    // columns of B_j are [e_i, e_j]
    std::vector<Vec> rows;
    for (int j = 1; j <= g.dim; ++j) {
        // the map x -> prev.reduce([x, e_j]); build its matrix rows
        std::vector<Vec> cols;
        for (int i = 1; i <= g.dim; ++i)
            cols.push_back(prev.reduce(table[(size_t)(i - 1) * g.dim + (j - 1)]));
        // condition rows: for each ambient coordinate r: sum_i cols[i][r] x_i = 0
        for (int r = 0; r < g.dim; ++r) {
            Vec row(g.dim);
            bool nz = false;
            for (int i = 0; i < g.dim; ++i) {
                row[i] = cols[i][r];
                nz = nz || !row[i].is_zero();
            }
            if (nz) rows.push_back(std::move(row));
        }
        if (J) {
            // same conditions for Jx: sum_i ( sum_s J[s][i] * cols'[s][r] ) x_i, where
            // cols'[s] = prev.reduce([e_s, e_j])
            for (int r = 0; r < g.dim; ++r) {
                Vec row(g.dim);
                bool nz = false;
                for (int i = 0; i < g.dim; ++i) {
                    GaussRat v;
                    for (int s = 0; s < g.dim; ++s) {
                        const GaussRat& jsi = J->at(s, i);
                        if (!jsi.is_zero() && !cols[s][r].is_zero()) v += jsi * cols[s][r];
                    }
                    row[i] = v;
                    nz = nz || !v.is_zero();
                }
                if (nz) rows.push_back(std::move(row));
            }
        }
    }
    if (rows.empty()) return Subspace::full(g.dim);
    return Subspace::span(g.dim, kernel_basis(Mat::from_rows(rows)));
}

SeriesReport ascending_series(const LieAlgebra& g, const Mat* J) {
    SeriesReport rep;
    std::vector<Vec> table = g.bracket_table();
    Subspace prev = Subspace::zero(g.dim);
    while (true) {
        Subspace next = series_step(g, table, prev, J);
        if (next == prev) break; // stabilized strictly below g
        rep.terms.push_back(next);
        rep.ascending_type.push_back(next.dim());
        if (next.dim() == g.dim) {
            rep.step = (int)rep.terms.size();
            break;
        }
        prev = next;
    }
    return rep;
}

SeriesReport central_series(const LieAlgebra& g) { return ascending_series(g, nullptr); }

Subspace center(const LieAlgebra& g) {
    return series_step(g, g.bracket_table(), Subspace::zero(g.dim), nullptr);
}

Subspace commutator_ideal(const LieAlgebra& g) {
    std::vector<Vec> gens;
    for (const auto& [ij, v] : g.br) gens.push_back(v);
    return Subspace::span(g.dim, gens);
}

EndoFlags endo_classify(const LieAlgebra& g, const Endo& d) {
    if (d.dim != g.dim) throw std::invalid_argument("endo_classify: dim mismatch");
    EndoFlags f;
    f.is_derivation = true;
    for (int i = 1; i <= g.dim && f.is_derivation; ++i)
        for (int j = i + 1; j <= g.dim; ++j) {
            Vec lhs = d.apply(g.bracket_basis(i, j));
            Vec rhs = vec_add(bracket_eval(g, d.apply_basis(i), vec_basis(g.dim, j)),
                              bracket_eval(g, vec_basis(g.dim, i), d.apply_basis(j)));
            if (lhs != rhs) {
                f.is_derivation = false;
                break;
            }
        }
    Mat p = d.m;
    for (int k = 1; k < g.dim; k <<= 1) p = mat_mul(p, p); // p = d^(2^ceil(log2 dim)) >= d^dim
    f.is_nilpotent = mat_is_zero(p);
    auto inv = inverse(d.m);
    if (inv) {
        f.is_automorphism = true;
        for (int i = 1; i <= g.dim && f.is_automorphism; ++i)
            for (int j = i + 1; j <= g.dim; ++j) {
                Vec lhs = d.apply(g.bracket_basis(i, j));
                Vec rhs = bracket_eval(g, d.apply_basis(i), d.apply_basis(j));
                if (lhs != rhs) {
                    f.is_automorphism = false;
                    break;
                }
            }
    }
    return f;
}

LieAlgebra change_basis(const LieAlgebra& g, const Mat& P, const std::string& name) {
    auto pinv = inverse(P);
    if (!pinv) throw std::invalid_argument("change_basis: singular matrix");
    LieAlgebra h(g.dim, name.empty() ? g.name : name);
    for (int i = 1; i <= g.dim; ++i)
        for (int j = i + 1; j <= g.dim; ++j) {
            Vec v = bracket_eval(g, P.col(i - 1), P.col(j - 1));
            h.set_bracket(i, j, mat_apply(*pinv, v));
        }
    return h;
}

} // namespace cslie
