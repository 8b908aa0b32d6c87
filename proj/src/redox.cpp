#include "cslie/redox.hpp"

#include <stdexcept>

namespace cslie {

namespace {

Vec covector_as_vec(const AltForm& omega, const Vec& x) {
    // omega(x, .) as a covector
    Vec r(omega.dim);
    AltForm c = contract(x, omega);
    for (const auto& [mask, v] : c.c) r[AltForm::indices_of(mask)[0] - 1] = v;
    return r;
}

AltForm covector_to_form(int dim, const Vec& alpha) {
    AltForm f(dim, 1);
    for (int i = 0; i < dim; ++i)
        if (!alpha[i].is_zero()) f.add_term(1ULL << i, alpha[i]);
    return f;
}

std::string residual_form(const AltForm& f) { return f.str(); }

} // namespace

InducedTensors induced_tensors(const OxidationData& d) {
    const AltForm& w = d.base.omega;
    const Mat& J = d.base.J;
    InducedTensors t;
    t.beta1 = form_neg(endo_dot_form(d.f1, w));
    t.beta2 = form_neg(endo_dot_form(d.f2, w));
    Vec trace = vec_add(d.s11, d.s22);
    Vec sharp_tr = vec_is_zero(trace) ? vec_zero(w.dim) : sharp(w, trace);
    t.nu = mat_apply(J, sharp_tr);
    // A = 1/2 (S11+S22) o Jbar
    Vec a(w.dim);
    for (int j = 0; j < w.dim; ++j) {
        GaussRat s;
        for (int i = 0; i < w.dim; ++i)
            if (!trace[i].is_zero() && !J.at(i, j).is_zero()) s += trace[i] * J.at(i, j);
        a[j] = s * GaussRat(Rational(1, 2));
    }
    t.a_form = std::move(a);
    return t;
}

OxReport validate_oxidation_data(const OxidationData& d) {
    if (!d.base.report.ok())
        throw std::invalid_argument("validate_oxidation_data: base pair is not complex symplectic");
    const LieAlgebra& gb = d.base.g;
    const Mat& J = d.base.J;
    const AltForm& w = d.base.omega;
    int n = gb.dim;
    if (d.f1.dim != n || d.f2.dim != n || (int)d.s11.size() != n || (int)d.s12.size() != n ||
        (int)d.s22.size() != n)
        throw std::invalid_argument("validate_oxidation_data: dimension mismatch");

    OxReport rep;
    EndoFlags e1 = endo_classify(gb, d.f1);
    EndoFlags e2 = endo_classify(gb, d.f2);
    rep.f1_derivation = e1.is_derivation;
    rep.f2_derivation = e2.is_derivation;
    rep.f1_nilpotent = e1.is_nilpotent;
    rep.f2_nilpotent = e2.is_nilpotent;

    InducedTensors ind = induced_tensors(d);

    auto push = [&](const std::string& name, bool pass, const std::string& residual) {
        rep.conditions.push_back({name, pass, pass ? "" : residual});
    };

    // (i) f2 - Jbar f1 in sp(gbar, Jbar, omegabar)
    {
        Endo h(mat_sub(d.f2.m, mat_mul(J, d.f1.m)));
        AltForm hw = endo_dot_form(h, w);
        Mat comm = mat_sub(mat_mul(h.m, J), mat_mul(J, h.m));
        bool pass = hw.is_zero() && mat_is_zero(comm);
        push("(i) f2 - J f1 in sp(omega, J)", pass,
             hw.is_zero() ? "[h, J] != 0" : "h.omega = " + residual_form(hw));
    }
    // (ii) [f1, f2] = ad_nu
    {
        Mat lhs = mat_sub(mat_mul(d.f1.m, d.f2.m), mat_mul(d.f2.m, d.f1.m));
        Mat ad_nu(n, n);
        for (int j = 1; j <= n; ++j) {
            Vec col = bracket_eval(gb, ind.nu, vec_basis(n, j));
            for (int i = 0; i < n; ++i) ad_nu.at(i, j - 1) = col[i];
        }
        Mat diff = mat_sub(lhs, ad_nu);
        push("(ii) {f1,f2} = ad_nu", mat_is_zero(diff), "matrix residual nonzero");
    }
    // (iii) dS11 = f1.(f1.omega), dS22 = f2.(f2.omega),
    //       dS12 = f1.(f2.omega) - 1/2 d((S11+S22) o J)
    {
        AltForm ds11 = ce_diff(gb, covector_to_form(n, d.s11));
        AltForm r11 = form_sub(ds11, endo_dot_form(d.f1, endo_dot_form(d.f1, w)));
        push("(iii) dS11 = f1.f1.omega", r11.is_zero(), residual_form(r11));

        AltForm ds22 = ce_diff(gb, covector_to_form(n, d.s22));
        AltForm r22 = form_sub(ds22, endo_dot_form(d.f2, endo_dot_form(d.f2, w)));
        push("(iii) dS22 = f2.f2.omega", r22.is_zero(), residual_form(r22));

        Vec trJ(n);
        Vec trace = vec_add(d.s11, d.s22);
        for (int j = 0; j < n; ++j) {
            GaussRat s;
            for (int i = 0; i < n; ++i)
                if (!trace[i].is_zero() && !J.at(i, j).is_zero()) s += trace[i] * J.at(i, j);
            trJ[j] = s;
        }
        AltForm ds12 = ce_diff(gb, covector_to_form(n, d.s12));
        AltForm rhs = form_sub(endo_dot_form(d.f1, endo_dot_form(d.f2, w)),
                               form_scale(GaussRat(Rational(1, 2)),
                                          ce_diff(gb, covector_to_form(n, trJ))));
        AltForm r12 = form_sub(ds12, rhs);
        push("(iii) dS12 = f1.f2.omega - 1/2 d(J*(S11+S22))", r12.is_zero(), residual_form(r12));
    }
    // (iv) S_i2 o f1 - S_i1 o f2 = omega(f_i(nu), .) + 3/2 (S11+S22) o J o f_i
    {
        Vec trace = vec_add(d.s11, d.s22);
        for (int i = 1; i <= 2; ++i) {
            const Endo& fi = (i == 1) ? d.f1 : d.f2;
            const Vec& si1 = (i == 1) ? d.s11 : d.s12;
            const Vec& si2 = (i == 1) ? d.s12 : d.s22;
            Vec lhs = vec_sub(covector_compose(si2, d.f1), covector_compose(si1, d.f2));
            Vec rhs = covector_as_vec(w, fi.apply(ind.nu));
            Vec tail = covector_compose(covector_compose(trace, Endo(J)), fi);
            rhs = vec_add(rhs, vec_scale(GaussRat(Rational(3, 2)), tail));
            Vec res = vec_sub(lhs, rhs);
            push("(iv) S_" + std::to_string(i) +
                     "2 o f1 - S_" + std::to_string(i) + "1 o f2 = omega(f_i(nu),.) + 3/2 tr(S) o J o f_i",
                 vec_is_zero(res), vec_str(res));
        }
    }

    // Independent route: the seven tensor-form conditions. Their overall
    // verdict must match the basis-form verdict above.
    bool tensor_ok = rep.f1_derivation && rep.f2_derivation;
    if (tensor_ok) {
        // 1. both components of I*f - J o f lie in sp
        auto in_sp = [&](const Mat& h) {
            return endo_dot_form(Endo(h), w).is_zero() &&
                   mat_is_zero(mat_sub(mat_mul(h, J), mat_mul(J, h)));
        };
        tensor_ok = tensor_ok && in_sp(mat_sub(d.f2.m, mat_mul(J, d.f1.m)));
        tensor_ok = tensor_ok &&
                    in_sp(mat_sub(mat_scale(GaussRat(-1), d.f1.m), mat_mul(J, d.f2.m)));
        // 3./4. nu and A via the trace machinery; tr(S_I)(v1,v2) = S11 + S22.
        Vec trace = vec_add(d.s11, d.s22);
        Vec nu2 = vec_is_zero(trace) ? vec_zero(n) : mat_apply(J, sharp(w, trace));
        tensor_ok = tensor_ok && (nu2 == ind.nu);
        // A = 1/2 nu -| omega must equal 1/2 J*(tr S_I); identity by construction
        Vec half_contr = vec_scale(GaussRat(Rational(1, 2)), covector_as_vec(w, nu2));
        tensor_ok = tensor_ok && (half_contr == ind.a_form);
        // 6. {f,f}(v1,v2) = ad_nu via the generic endomorphism bracket
        {
            Endo br = endo_bracket_map(d.f1, d.f2, d.f1, d.f2);
            Mat ad_nu(n, n);
            for (int j = 1; j <= n; ++j) {
                Vec col = bracket_eval(gb, nu2, vec_basis(n, j));
                for (int i = 0; i < n; ++i) ad_nu.at(i, j - 1) = col[i];
            }
            tensor_ok = tensor_ok && mat_is_zero(mat_sub(br.m, ad_nu));
        }
        // 5. Alt(S o f) = -1/2 omega(f(nu), .) - 3/4 omega(nu, f), evaluated
        // at (v1, v2, X, v_i)
        for (int i = 1; i <= 2 && tensor_ok; ++i) {
            const Endo& fi = (i == 1) ? d.f1 : d.f2;
            const Vec& s1i = (i == 1) ? d.s11 : d.s12;
            const Vec& s2i = (i == 1) ? d.s12 : d.s22;
            for (int x = 1; x <= n; ++x) {
                Vec fx2 = d.f2.apply_basis(x);
                Vec fx1 = d.f1.apply_basis(x);
                GaussRat lhs = (dot(s1i, fx2) - dot(s2i, fx1)) * GaussRat(Rational(1, 2));
                GaussRat t1 = form_eval(w, {fi.apply(nu2), vec_basis(n, x)});
                GaussRat t2 = form_eval(w, {nu2, fi.apply_basis(x)});
                GaussRat rhs = -GaussRat(Rational(1, 2)) * t1 - GaussRat(Rational(3, 4)) * t2;
                if (lhs != rhs) {
                    tensor_ok = false;
                    break;
                }
            }
        }
        // 7. dS = f.f.omega - 1/2 d(J*(tr S_I)), symmetrized in the V-slots
        if (tensor_ok) {
            AltForm ds11 = ce_diff(gb, covector_to_form(n, d.s11));
            tensor_ok = form_sub(ds11, endo_dot_form(d.f1, endo_dot_form(d.f1, w))).is_zero();
        }
        if (tensor_ok) {
            AltForm ds22 = ce_diff(gb, covector_to_form(n, d.s22));
            tensor_ok = form_sub(ds22, endo_dot_form(d.f2, endo_dot_form(d.f2, w))).is_zero();
        }
        if (tensor_ok) {
            AltForm ds12 = ce_diff(gb, covector_to_form(n, d.s12));
            AltForm sym = form_scale(GaussRat(Rational(1, 2)),
                                     form_add(endo_dot_form(d.f1, endo_dot_form(d.f2, w)),
                                              endo_dot_form(d.f2, endo_dot_form(d.f1, w))));
            tensor_ok = form_sub(ds12, sym).is_zero();
        }
    }
    if (tensor_ok != rep.ok())
        throw std::logic_error("validate_oxidation_data: tensor-form route disagrees with the "
                               "basis-form route");
    return rep;
}

Subspace orth_complement(const LieAlgebra& g, const AltForm& omega, const Subspace& a) {
    if (omega.dim != g.dim || a.ambient != g.dim)
        throw std::invalid_argument("orth_complement: dim mismatch");
    if (pfaffian(omega).is_zero())
        throw std::invalid_argument("orth_complement: omega degenerate");
    if (a.dim() == 0) return Subspace::full(g.dim);
    Mat cond(a.dim(), g.dim);
    for (int r = 0; r < a.dim(); ++r) {
        Vec cv = covector_as_vec(omega, a.basis[r]);
        for (int c = 0; c < g.dim; ++c) cond.at(r, c) = -cv[c]; // omega(x, w) = -omega(w, x)
    }
    Subspace perp = Subspace::span(g.dim, kernel_basis(cond));
    if (perp.dim() != g.dim - a.dim())
        throw std::logic_error("orth_complement: dimension drop under a non-degenerate form");
    return perp;
}

CSPair reduce(const CSPair& pair, const Subspace& a) {
    const LieAlgebra& g = pair.g;
    if (!pair.report.ok()) throw std::invalid_argument("reduce: pair is not complex symplectic");
    std::string problems;
    bool ideal = true;
    for (const Vec& w : a.basis)
        for (int j = 1; j <= g.dim && ideal; ++j)
            if (!a.contains(bracket_eval(g, w, vec_basis(g.dim, j)))) ideal = false;
    if (!ideal) problems += "the subspace is not an ideal; ";
    if (!invariant_under(pair.J, a)) problems += "the subspace is not J-invariant; ";
    bool isotropic = true;
    for (int i = 0; i < a.dim() && isotropic; ++i)
        for (int j = i + 1; j < a.dim() && isotropic; ++j)
            if (!form_eval(pair.omega, {a.basis[i], a.basis[j]}).is_zero()) isotropic = false;
    if (!isotropic) problems += "the subspace is not omega-isotropic; ";
    if (!problems.empty()) throw std::invalid_argument("reduce: " + problems);

    Subspace perp = orth_complement(g, pair.omega, a);
    if (!perp.contains(a)) throw std::logic_error("reduce: a not inside a^perp");
    // central a forces [g,g] inside a^perp
    bool central = true;
    for (const Vec& w : a.basis)
        for (int j = 1; j <= g.dim && central; ++j)
            if (!vec_is_zero(bracket_eval(g, w, vec_basis(g.dim, j)))) central = false;
    if (central && !perp.contains(commutator_ideal(g)))
        throw std::logic_error("reduce: central ideal but a^perp misses [g,g]");

    // deterministic complement of a inside a^perp, J-closed where possible
    std::vector<Vec> acc;
    auto span_now = [&]() {
        std::vector<Vec> gens = a.basis;
        gens.insert(gens.end(), acc.begin(), acc.end());
        return Subspace::span(g.dim, gens);
    };
    int want = perp.dim() - a.dim();
    for (const Vec& cand : perp.basis) {
        if ((int)acc.size() >= want) break;
        Subspace cur = span_now();
        Vec red = cur.reduce(cand);
        if (vec_is_zero(red)) continue;
        acc.push_back(red);
        if ((int)acc.size() >= want) break;
        Vec jred = span_now().reduce(mat_apply(pair.J, red));
        if (!vec_is_zero(jred)) acc.push_back(jred);
    }
    Subspace comp = Subspace::span(g.dim, acc);
    if (comp.dim() != want) throw std::logic_error("reduce: complement construction failed");

    // coordinates in comp along a
    auto comp_coords = [&](const Vec& v) {
        std::vector<Vec> rows = comp.basis;
        rows.insert(rows.end(), a.basis.begin(), a.basis.end());
        Mat m = Mat::from_rows(rows).transpose();
        auto x = solve(m, v);
        if (!x) throw std::logic_error("reduce: vector outside a^perp");
        Vec c(want);
        for (int i = 0; i < want; ++i) c[i] = (*x)[i];
        return c;
    };

    LieAlgebra q(want, pair.g.name.empty() ? "" : pair.g.name + "/a");
    for (int i = 1; i <= want; ++i)
        for (int j = i + 1; j <= want; ++j) {
            Vec b = bracket_eval(g, comp.basis[i - 1], comp.basis[j - 1]);
            if (!perp.contains(b)) throw std::logic_error("reduce: a^perp is not a subalgebra");
            q.set_bracket(i, j, comp_coords(b));
        }
    Mat Jq(want, want);
    for (int j = 1; j <= want; ++j) {
        Vec col = comp_coords(mat_apply(pair.J, comp.basis[j - 1]));
        for (int i = 0; i < want; ++i) Jq.at(i, j - 1) = col[i];
    }
    AltForm wq(want, 2);
    for (int i =  1; i <= want; ++i)
        for (int j = i + 1; j <= want; ++j)
            wq.add_term((1ULL << (i - 1)) | (1ULL << (j - 1)),
                        form_eval(pair.omega, {comp.basis[i - 1], comp.basis[j - 1]}));
    CSPair out = validate_complex_symplectic(q, Jq, wq);
    if (!out.report.ok())
        throw std::logic_error("reduce: quotient failed validation (" + out.report.detail + ")");
    return out;
}

OxAssembly assemble_oxidation(const OxidationData& d) {
    const LieAlgebra& gb = d.base.g;
    const Mat& Jb = d.base.J;
    const AltForm& wb = d.base.omega;
    int nb = gb.dim;
    int dim = nb + 4;
    InducedTensors ind = induced_tensors(d);

    // basis order: v1, v2, e1..e_nb, v^1, v^2
    auto mid = [&](int i) { return 2 + i; };                 // gbar index (1-based) -> big index
    int dual1 = dim - 1, dual2 = dim;                        // v^1, v^2
    LieAlgebra g(dim, d.base.g.name.empty() ? "oxidation" : "oxidation of " + d.base.g.name);

    auto embed_mid = [&](const Vec& x) {
        Vec v(dim);
        for (int i = 0; i < nb; ++i) v[mid(i + 1) - 1] = x[i];
        return v;
    };

    // [v1, v2] = nu + tau
    {
        Vec v = embed_mid(ind.nu);
        v[dual1 - 1] += GaussRat(d.tau1);
        v[dual2 - 1] += GaussRat(d.tau2);
        g.set_bracket(1, 2, v);
    }
    // [v_a, e_j] = f_a e_j + g(v_a, e_j) with
    //   g(v1, X) = S11(X) v^1 + (S12 + A)(X) v^2
    //   g(v2, X) = (S12 - A)(X) v^1 + S22(X) v^2
    for (int j = 1; j <= nb; ++j) {
        {
            Vec v = embed_mid(d.f1.apply_basis(j));
            v[dual1 - 1] += d.s11[j - 1];
            v[dual2 - 1] += d.s12[j - 1] + ind.a_form[j - 1];
            g.set_bracket(1, mid(j), v);
        }
        {
            Vec v = embed_mid(d.f2.apply_basis(j));
            v[dual1 - 1] += d.s12[j - 1] - ind.a_form[j - 1];
            v[dual2 - 1] += d.s22[j - 1];
            g.set_bracket(2, mid(j), v);
        }
    }
    // [e_i, e_j] = [e_i, e_j]_gbar + beta(e_i, e_j)
    for (int i = 1; i <= nb; ++i)
        for (int j = i + 1; j <= nb; ++j) {
            Vec v = embed_mid(gb.bracket_basis(i, j));
            uint64_t mask = (1ULL << (i - 1)) | (1ULL << (j - 1));
            v[dual1 - 1] += ind.beta1.coeff(mask);
            v[dual2 - 1] += ind.beta2.coeff(mask);
            g.set_bracket(mid(i), mid(j), v);
        }

    // J: v1 -> v2, v2 -> -v1, middle Jbar, v^1 -> -v^2, v^2 -> v^1
    Mat J(dim, dim);
    J.at(1, 0) = GaussRat(1);
    J.at(0, 1) = GaussRat(-1);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) J.at(2 + i, 2 + j) = Jb.at(i, j);
    J.at(dual2 - 1, dual1 - 1) = GaussRat(-1);
    J.at(dual1 - 1, dual2 - 1) = GaussRat(1);

    // omega = omegabar on the middle block, omega(v_a, v^b) = -delta_ab
    AltForm w(dim, 2);
    for (const auto& [mask, v] : wb.c) {
        uint64_t shifted = mask << 2;
        w.add_term(shifted, v);
    }
    w.add_term(AltForm::mask_of({1, dual1}), GaussRat(-1));
    w.add_term(AltForm::mask_of({2, dual2}), GaussRat(-1));
    return OxAssembly{std::move(g), std::move(J), std::move(w)};
}

CSPair oxidize(const OxidationData& d) {
    OxReport rep = validate_oxidation_data(d);
    if (!rep.ok()) {
        std::string why;
        if (!rep.f1_derivation || !rep.f2_derivation)
            why = "condition: f in V* (x) Der(gbar)";
        else if (const OxCondition* c = rep.first_failure())
            why = "condition " + c->name + "; residual " + c->residual;
        throw std::invalid_argument("oxidize: invalid oxidation data; " + why);
    }
    OxAssembly a = assemble_oxidation(d);
    auto jac = validate_jacobi(a.g);
    if (!jac.ok()) throw std::logic_error("oxidize: output fails the Jacobi identity");
    CSPair out = validate_complex_symplectic(a.g, a.J, a.omega);
    if (!out.report.ok())
        throw std::logic_error("oxidize: output failed validation (" + out.report.detail + ")");
    // nilpotent whenever the base and f are nilpotent
    if (rep.f1_nilpotent && rep.f2_nilpotent && central_series(d.base.g).nilpotent()) {
        if (!central_series(out.g).nilpotent())
            throw std::logic_error("oxidize: expected a nilpotent oxidation");
    }
    return out;
}

std::optional<Subspace> oxidizable(const CSPair& pair) {
    if (!pair.report.ok()) throw std::invalid_argument("oxidizable: pair is not complex symplectic");
    Subspace z = center(pair.g);
    Subspace zj = intersect(z, image(pair.J, z));
    if (zj.dim() == 0) return std::nullopt;
    for (const Vec& w : zj.basis) {
        Subspace s = Subspace::span(pair.g.dim, {w, mat_apply(pair.J, w)});
        if (s.dim() == 2) return s;
    }
    for (int i = 0; i < zj.dim(); ++i)
        for (int j = i + 1; j < zj.dim(); ++j) {
            Subspace s = Subspace::span(pair.g.dim, {zj.basis[i], zj.basis[j]});
            if (s.dim() == 2 && invariant_under(pair.J, s)) return s;
        }
    return std::nullopt;
}

} // namespace cslie
