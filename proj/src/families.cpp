#include "cslie/families.hpp"

#include <stdexcept>

namespace cslie {

Mat standard_J(int dim) {
    Mat j(dim, dim);
    for (int k = 1; k <= dim / 2; ++k) {
        j.at(2 * k - 1, 2 * k - 2) = GaussRat(-1);
        j.at(2 * k - 2, 2 * k - 1) = GaussRat(1);
    }
    return j;
}

AltForm standard_omega4() { return AltForm::parse("e14+e23", 4); }

CSPair normal_form_R4() {
    static const CSPair cached = [] {
        CSPair p = validate_complex_symplectic(LieAlgebra::abelian(4, "R4"), standard_J(4),
                                               standard_omega4());
        if (!p.report.ok()) throw std::logic_error("normal_form_R4: invalid");
        return p;
    }();
    return cached;
}

CSPair normal_form_h3R() {
    static const CSPair cached = [] {
        LieAlgebra g(4, "h3+R");
        g.set_bracket(1, 2, vec_basis(4, 3));
        CSPair p = validate_complex_symplectic(g, standard_J(4), standard_omega4());
        if (!p.report.ok()) throw std::logic_error("normal_form_h3R: invalid");
        return p;
    }();
    return cached;
}

std::vector<CSPair> four_dim_normal_forms() { return {normal_form_h3R(), normal_form_R4()}; }

AltForm omega_z(const GaussRat& z) {
    return form_add(form_scale(GaussRat(z.re), AltForm::parse("e14+e23", 4)),
                    form_scale(GaussRat(z.im), AltForm::parse("e13-e24", 4)));
}

FwReport fw_transform(const GaussRat& w, const GaussRat& z) {
    if (w.is_zero() || z.is_zero()) throw std::invalid_argument("fw_transform: w, z must be nonzero");
    FwReport rep;
    Mat F(4, 4);
    F.at(0, 0) = GaussRat(w.re);
    F.at(0, 1) = GaussRat(-w.im);
    F.at(1, 0) = GaussRat(w.im);
    F.at(1, 1) = GaussRat(w.re);
    GaussRat n = GaussRat(w.norm());
    F.at(2, 2) = n;
    F.at(3, 3) = n;
    rep.F = F;
    Endo f(F);
    rep.automorphism_R4 = endo_classify(LieAlgebra::abelian(4), f).is_automorphism;
    rep.automorphism_h3R = endo_classify(normal_form_h3R().g, f).is_automorphism;
    Mat j0 = standard_J(4);
    rep.preserves_J0 = (mat_mul(F, j0) == mat_mul(j0, F));
    rep.pullback_law = (pullback(F, omega_z(z)) == omega_z(w * z * n));
    return rep;
}

std::optional<GaussRat> fw_normalize(const GaussRat& z) {
    if (z.is_zero()) throw std::invalid_argument("fw_normalize: z must be nonzero");
    // write z = u * q with u a unit power of i and q a positive rational
    GaussRat u;
    Rational q;
    if (z.im.is_zero()) {
        q = z.re.abs();
        u = z.re.is_negative() ? GaussRat(-1) : GaussRat(1);
    } else if (z.re.is_zero()) {
        q = z.im.abs();
        u = z.im.is_negative() ? -GaussRat::unit_i() : GaussRat::unit_i();
    } else {
        return std::nullopt;
    }
    auto cube_root = [](long long v) -> std::optional<long long> {
        if (v < 0) return std::nullopt;
        long long lo = 0, hi = 2097152;
        while (lo < hi) {
            long long mid = (lo + hi) / 2;
            if (mid * mid * mid < v)
                lo = mid + 1;
            else
                hi = mid;
        }
        return (lo * lo * lo == v) ? std::optional<long long>(lo) : std::nullopt;
    };
    if (!q.small()) return std::nullopt;
    auto cn = cube_root(q.num());
    auto cd = cube_root(q.den());
    if (!cn || !cd) return std::nullopt;
    Rational c(*cn, *cd);
    GaussRat w = u.conj() * GaussRat(c.inv());
    if (!(w * z * GaussRat(w.norm())).is_one()) return std::nullopt;
    return w;
}

// ---- families ---------------------------------------------------------------

namespace {

Rational get(const ParamMap& p, const std::string& name) {
    auto it = p.find(name);
    return it == p.end() ? Rational(0) : it->second;
}

Endo lower_block4(const Rational& a11, const Rational& a12, const Rational& a21,
                  const Rational& a22) {
    Mat m(4, 4);
    m.at(2, 0) = GaussRat(a11);
    m.at(3, 0) = GaussRat(a21);
    m.at(2, 1) = GaussRat(a12);
    m.at(3, 1) = GaussRat(a22);
    return Endo(m);
}

void check_known(const ParamMap& params, const std::vector<std::string>& allowed) {
    for (const auto& [k, v] : params) {
        bool ok = false;
        for (const auto& a : allowed)
            if (a == k) {
                ok = true;
                break;
            }
        if (!ok) throw std::invalid_argument("family: unknown parameter '" + k + "'");
    }
}

const std::vector<std::string> kHead = {"alpha1", "alpha2", "beta1",
                                        "beta2",  "gamma1", "gamma2"};
const std::vector<std::string> kTau = {"tau1", "tau2"};

std::vector<std::string> with_common(std::vector<std::string> extra) {
    std::vector<std::string> out = kHead;
    out.insert(out.end(), extra.begin(), extra.end());
    out.insert(out.end(), kTau.begin(), kTau.end());
    return out;
}

} // namespace

std::vector<std::string> h3R_structural_params(int case_no) {
    switch (case_no) {
        case 1: return {"alpha4", "gamma4"};
        case 2: return {"a", "b", "c", "d"};
        case 3: return {"a", "b"};
        case 4: return {"t"};
        case 5: return {"alpha4", "gamma4"};
    }
    throw std::invalid_argument("h3R family: case must be 1..5");
}

std::vector<std::string> h3R_family_params(int case_no) {
    return with_common(h3R_structural_params(case_no));
}

OxidationData h3R_family(int case_no, const ParamMap& params) {
    check_known(params, h3R_family_params(case_no));
    Rational a1 = get(params, "alpha1"), a2 = get(params, "alpha2");
    Rational b1 = get(params, "beta1"), b2 = get(params, "beta2");
    Rational g1 = get(params, "gamma1"), g2 = get(params, "gamma2");
    Rational a4 = get(params, "alpha4"), g4 = get(params, "gamma4");

    OxidationData d;
    d.base = normal_form_h3R();
    d.tau1 = get(params, "tau1");
    d.tau2 = get(params, "tau2");

    switch (case_no) {
        case 1: {
            if (a4.is_zero() && g4.is_zero())
                throw std::invalid_argument("h3R case (i): needs alpha4 != 0 or gamma4 != 0");
            d.f1 = lower_block4(Rational(2), Rational(0), Rational(0), Rational(0));
            d.f2 = lower_block4(Rational(0), Rational(-2), Rational(0), Rational(0));
            break;
        }
        case 2: {
            Rational a = get(params, "a"), b = get(params, "b");
            Rational c = get(params, "c"), dd = get(params, "d");
            a4 = Rational(0);
            g4 = Rational(0);
            d.f1 = lower_block4(a + Rational(1), -b, b, a - Rational(1));
            d.f2 = lower_block4(c, -(dd + Rational(1)), dd - Rational(1), c);
            break;
        }
        case 3: {
            Rational a = get(params, "a"), b = get(params, "b");
            if (b.is_zero()) throw std::invalid_argument("h3R case (iii): needs b != 0");
            a4 = Rational(0);
            g4 = Rational(0);
            d.f1 = lower_block4(Rational(1), Rational(0), Rational(0), Rational(1));
            d.f2 = lower_block4(a, -b, b, a);
            break;
        }
        case 4: {
            // rational point of the circle through the half-angle parameter
            Rational t = get(params, "t");
            Rational den = Rational(1) + t * t;
            Rational cos = (Rational(1) - t * t) / den;
            Rational sin = (t + t) / den;
            a4 = Rational(0);
            g4 = Rational(0);
            d.f1 = lower_block4(cos, -sin, sin, cos);
            d.f2 = Endo::zero(4);
            break;
        }
        case 5: {
            d.f1 = Endo::zero(4);
            d.f2 = Endo::zero(4);
            break;
        }
        default: throw std::invalid_argument("h3R family: case must be 1..5");
    }
    d.s11 = Vec{GaussRat(a1), GaussRat(a2), GaussRat(0), GaussRat(a4)};
    d.s22 = Vec{GaussRat(b1), GaussRat(b2), GaussRat(0), GaussRat(-a4)};
    d.s12 = Vec{GaussRat(g1), GaussRat(g2), GaussRat(0), GaussRat(g4)};
    if (!validate_oxidation_data(d).ok())
        throw std::logic_error("h3R_family: emitted data failed validation");
    return d;
}

Mat R4_caseI_L(const Rational& a, const Rational& b, const Rational& c) {
    auto G = [](const Rational& r) { return GaussRat(r); };
    Rational half(1, 2);
    Mat L(4, 6);
    L.at(0, 0) = G(-b);
    L.at(0, 1) = G((a - c - c + Rational(7)) * half);
    L.at(0, 3) = G((a + Rational(5)) * half);
    L.at(0, 4) = G(a + Rational(1));
    L.at(1, 0) = G((c + c - a + Rational(7)) * half);
    L.at(1, 1) = G(-b);
    L.at(1, 2) = G((Rational(5) - a) * half);
    L.at(1, 5) = G(a - Rational(1));
    L.at(2, 0) = G((Rational(1) - c) * half);
    L.at(2, 1) = G(b * half);
    L.at(2, 2) = G((a + a - c + Rational(3)) * half);
    L.at(2, 3) = G(b * half);
    L.at(2, 4) = G(-b);
    L.at(2, 5) = G(Rational(1) - c);
    L.at(3, 0) = G(-(b * half));
    L.at(3, 1) = G(-((c + Rational(1)) * half));
    L.at(3, 2) = G(-(b * half));
    L.at(3, 3) = G((a + a - c - Rational(3)) * half);
    L.at(3, 4) = G(c + Rational(1));
    L.at(3, 5) = G(-b);
    return L;
}

std::vector<std::string> R4_structural_params(int case_no) {
    switch (case_no) {
        case 1: return {"a", "b", "c"};
        case 2: return {"a", "b", "alpha3", "alpha4"};
        case 3: return {"alpha3", "alpha4", "beta3", "beta4"};
        case 4: return {"alpha3", "alpha4"};
        case 5: return {"alpha3", "alpha4", "beta3", "beta4", "gamma3", "gamma4"};
    }
    throw std::invalid_argument("R4 family: case must be 1..5");
}

std::vector<std::string> R4_family_params(int case_no, const ParamMap& structural) {
    if (case_no != 1) return with_common(R4_structural_params(case_no));
    Mat L = R4_caseI_L(get(structural, "a"), get(structural, "b"), get(structural, "c"));
    size_t kdim = kernel_basis(L).size();
    std::vector<std::string> extra = {"a", "b", "c"};
    for (size_t i = 1; i <= kdim; ++i) extra.push_back("k" + std::to_string(i));
    return with_common(extra);
}

OxidationData R4_family(int case_no, const ParamMap& params) {
    check_known(params, R4_family_params(case_no, params));
    Rational a1 = get(params, "alpha1"), a2 = get(params, "alpha2");
    Rational b1 = get(params, "beta1"), b2 = get(params, "beta2");
    Rational g1 = get(params, "gamma1"), g2 = get(params, "gamma2");
    Rational a3 = get(params, "alpha3"), a4 = get(params, "alpha4");
    Rational b3, b4, g3, g4;
    Rational half(1, 2);

    OxidationData d;
    d.base = normal_form_R4();
    d.tau1 = get(params, "tau1");
    d.tau2 = get(params, "tau2");

    switch (case_no) {
        case 1: {
            Rational a = get(params, "a"), b = get(params, "b"), c = get(params, "c");
            if (a.is_negative()) throw std::invalid_argument("R4 case (i): needs a >= 0");
            d.f1 = lower_block4(a + Rational(1), Rational(0), Rational(0), a - Rational(1));
            d.f2 = lower_block4(b, -(c + Rational(1)), c - Rational(1), b);
            Mat L = R4_caseI_L(a, b, c);
            auto ker = kernel_basis(L);
            Vec tail = vec_zero(6);
            for (size_t i = 0; i < ker.size(); ++i) {
                Rational ki = get(params, "k" + std::to_string(i + 1));
                if (!ki.is_zero()) tail = vec_add(tail, vec_scale(GaussRat(ki), ker[i]));
            }
            if (!vec_is_zero(mat_apply(L, tail)))
                throw std::logic_error("R4 case (i): tail left the kernel of L");
            a3 = tail[0].re;
            a4 = tail[1].re;
            b3 = tail[2].re;
            b4 = tail[3].re;
            g3 = tail[4].re;
            g4 = tail[5].re;
            break;
        }
        case 2: {
            Rational a = get(params, "a"), b = get(params, "b");
            if (b.is_zero()) throw std::invalid_argument("R4 case (ii): needs b != 0");
            if (a.is_zero() && b == Rational(1))
                throw std::invalid_argument("R4 case (ii): needs (a, b) != (0, 1)");
            d.f1 = lower_block4(Rational(1), Rational(0), Rational(0), Rational(1));
            d.f2 = lower_block4(a, -b, b, a);
            b3 = b * a3 - a * a4;
            b4 = a * a3 + b * a4;
            g3 = a * half * a3 + (b - Rational(1)) * half * a4;
            g4 = (Rational(1) - b) * half * a3 + a * half * a4;
            break;
        }
        case 3: {
            d.f1 = lower_block4(Rational(1), Rational(0), Rational(0), Rational(1));
            d.f2 = lower_block4(Rational(0), Rational(-1), Rational(1), Rational(0));
            b3 = get(params, "beta3");
            b4 = get(params, "beta4");
            g3 = (a4 - b4) * half;
            g4 = -((a3 - b3) * half);
            break;
        }
        case 4: {
            d.f1 = lower_block4(Rational(1), Rational(0), Rational(0), Rational(1));
            d.f2 = Endo::zero(4);
            g3 = -(a4 * half);
            g4 = a3 * half;
            break;
        }
        case 5: {
            d.f1 = Endo::zero(4);
            d.f2 = Endo::zero(4);
            b3 = get(params, "beta3");
            b4 = get(params, "beta4");
            g3 = get(params, "gamma3");
            g4 = get(params, "gamma4");
            break;
        }
        default: throw std::invalid_argument("R4 family: case must be 1..5");
    }
    d.s11 = Vec{GaussRat(a1), GaussRat(a2), GaussRat(a3), GaussRat(a4)};
    d.s22 = Vec{GaussRat(b1), GaussRat(b2), GaussRat(b3), GaussRat(b4)};
    d.s12 = Vec{GaussRat(g1), GaussRat(g2), GaussRat(g3), GaussRat(g4)};
    if (!validate_oxidation_data(d).ok())
        throw std::logic_error("R4_family: emitted data failed validation");
    return d;
}

OxidationData step3_data() {
    ParamMap p;
    p["alpha3"] = Rational(1);
    p["gamma1"] = Rational(1);
    return R4_family(5, p);
}

OxidationData step4_data() {
    ParamMap p;
    p["alpha3"] = Rational(1);
    p["gamma1"] = Rational(1);
    return R4_family(4, p);
}

// ---- SnN equation families ---------------------------------------------------

std::vector<std::string> snn_family_params(int variant) {
    switch (variant) {
        case 1: return {"A", "B", "C", "D", "E", "F", "G", "H", "K", "L", "M", "N", "P", "s"};
        case 2: return {"A", "D", "E", "F", "L", "M", "N", "s"};
        case 3: return {"A", "B", "E", "F", "L", "M", "N", "P", "s", "t"};
    }
    throw std::invalid_argument("snn_family: variant must be 1..3");
}

SnnInstance snn_family(int variant, const CParamMap& coeffs) {
    auto allowed = snn_family_params(variant);
    for (const auto& [k, v] : coeffs) {
        bool ok = false;
        for (const auto& a : allowed)
            if (a == k) ok = true;
        if (!ok) throw std::invalid_argument("snn_family: unknown coefficient '" + k + "'");
    }
    auto get = [&](const std::string& n) {
        auto it = coeffs.find(n);
        return it == coeffs.end() ? GaussRat(0) : it->second;
    };
    auto real_only = [&](const std::string& n) {
        GaussRat v = get(n);
        if (!v.is_real())
            throw std::invalid_argument("snn_family: coefficient " + n + " must be real");
        return v;
    };
    GaussRat I = GaussRat::unit_i();
    ComplexEqnSet eqs(4);
    GaussRat A = get("A"), B = get("B"), C = get("C"), D = get("D"), E = get("E");
    GaussRat F = get("F"), G = get("G"), H = get("H"), K = get("K"), L = get("L");
    GaussRat M = get("M"), N = get("N"), P = get("P");
    GaussRat s = real_only("s");
    switch (variant) {
        case 1: {
            eqs.add_mixed(2, A, 1, 1);
            eqs.add_hol(2, -B, 1, 4);
            eqs.add_mixed(2, B, 1, 4);
            eqs.add_hol(3, C, 1, 2);
            eqs.add_hol(3, -E, 1, 4);
            eqs.add_mixed(3, E, 1, 4);
            eqs.add_mixed(3, F, 1, 1);
            eqs.add_mixed(3, D, 1, 2);
            eqs.add_hol(3, -H, 2, 4);
            eqs.add_mixed(3, H, 2, 4);
            eqs.add_mixed(3, G, 2, 1);
            eqs.add_mixed(3, K, 2, 2);
            eqs.add_mixed(4, L, 1, 1);
            eqs.add_mixed(4, M, 1, 2);
            eqs.add_mixed(4, N, 1, 3);
            eqs.add_mixed(4, -M.conj(), 2, 1);
            eqs.add_mixed(4, I * s, 2, 2);
            eqs.add_mixed(4, P, 2, 3);
            eqs.add_mixed(4, -N.conj(), 3, 1);
            eqs.add_mixed(4, -P.conj(), 3, 2);
            break;
        }
        case 2: {
            eqs.add_mixed(2, A, 1, 1);
            eqs.add_hol(3, -D, 1, 2);
            eqs.add_mixed(3, D, 1, 2);
            eqs.add_hol(3, -E, 1, 4);
            eqs.add_mixed(3, E, 1, 4);
            eqs.add_mixed(3, F, 1, 1);
            eqs.add_mixed(4, L, 1, 1);
            eqs.add_mixed(4, M, 1, 2);
            eqs.add_mixed(4, N, 1, 3);
            eqs.add_mixed(4, -M.conj(), 2, 1);
            eqs.add_mixed(4, I * s, 2, 2);
            eqs.add_mixed(4, -N.conj(), 3, 1);
            break;
        }
        case 3: {
            GaussRat t = real_only("t");
            eqs.add_mixed(2, A, 1, 1);
            eqs.add_hol(2, -B, 1, 4);
            eqs.add_mixed(2, B, 1, 4);
            eqs.add_mixed(3, F, 1, 1);
            eqs.add_hol(3, -E, 1, 4);
            eqs.add_mixed(3, E, 1, 4);
            eqs.add_mixed(4, L, 1, 1);
            eqs.add_mixed(4, M, 1, 2);
            eqs.add_mixed(4, N, 1, 3);
            eqs.add_mixed(4, -M.conj(), 2, 1);
            eqs.add_mixed(4, I * s, 2, 2);
            eqs.add_mixed(4, P, 2, 3);
            eqs.add_mixed(4, -N.conj(), 3, 1);
            eqs.add_mixed(4, -P.conj(), 3, 2);
            eqs.add_mixed(4, I * t, 3, 3);
            break;
        }
        default: throw std::invalid_argument("snn_family: variant must be 1..3");
    }
    SnnInstance inst{eqs, realify(eqs), {}};
    inst.central = central_series(inst.real.g);
    return inst;
}

// ---- catalog -----------------------------------------------------------------

namespace {

Mat acs_from_pairs(int dim, const std::vector<std::pair<int, int>>& pairs) {
    // each (a, b) means e_a -> e_b, e_b -> -e_a
    Mat m(dim, dim);
    for (auto [a, b] : pairs) {
        m.at(b - 1, a - 1) = GaussRat(1);
        m.at(a - 1, b - 1) = GaussRat(-1);
    }
    return m;
}

AltForm complex_covector(int dim, int re_idx, int im_idx, bool plus_i) {
    AltForm f(dim, 1);
    f.add_term(1ULL << (re_idx - 1), GaussRat(1));
    f.add_term(1ULL << (im_idx - 1), plus_i ? GaussRat::unit_i() : -GaussRat::unit_i());
    return f;
}

AltForm complex_coframe_form(int dim, const std::vector<AltForm>& phi,
                             const std::vector<std::tuple<int, int, GaussRat>>& terms) {
    AltForm wc(dim, 2);
    for (const auto& [a, b, coef] : terms)
        wc = form_add(wc, form_scale(coef, wedge(phi[a - 1], phi[b - 1])));
    // real part of the (2,0)-form
    return form_scale(GaussRat(Rational(1, 2)), form_add(wc, wc.conj()));
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    {
        CatalogEntry e;
        e.name = "R4";
        e.description = "abelian normal form with the standard pair (J0, omega0)";
        e.g = LieAlgebra::abelian(4, "R4");
        e.complex_structures["J0"] = standard_J(4);
        e.forms["omega0"] = standard_omega4();
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "h3R";
        e.description = "Heisenberg times a line, [e1,e2] = e3, with (J0, omega0)";
        LieAlgebra g(4, "h3R");
        g.set_bracket(1, 2, vec_basis(4, 3));
        e.g = std::move(g);
        e.complex_structures["J0"] = standard_J(4);
        e.forms["omega0"] = standard_omega4();
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "n4";
        e.description = "the filiform [e1,e4]=e2, [e2,e4]=e3; no complex structure";
        LieAlgebra g(4, "n4");
        g.set_bracket(1, 4, vec_basis(4, 2));
        g.set_bracket(2, 4, vec_basis(4, 3));
        e.g = std::move(g);
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "qh7R";
        e.description = "quaternionic Heisenberg algebra plus a line; hypercomplex and "
                        "complex symplectic";
        e.g = parse_salamon("(0,0,0,0,0,12-34,13+24,14-23)");
        e.g.name = "qh7R";
        e.complex_structures["I"] = acs_from_pairs(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
        e.complex_structures["J"] = acs_from_pairs(8, {{1, 3}, {4, 2}, {5, 7}, {8, 6}});
        e.complex_structures["K"] = acs_from_pairs(8, {{1, 4}, {2, 3}, {5, 8}, {6, 7}});
        e.forms["omega"] = AltForm::parse("1/2·e18+1/2·e27+e36+e45", 8);
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "h5R3";
        e.description = "rank-5 Heisenberg plus lines; hypercomplex but not symplectic";
        e.g = parse_salamon("(0,0,0,0,0,0,0,12-34)");
        e.g.name = "h5R3";
        e.complex_structures["I"] = acs_from_pairs(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
        e.complex_structures["J"] = acs_from_pairs(8, {{1, 3}, {4, 2}, {5, 7}, {8, 6}});
        e.complex_structures["K"] = acs_from_pairs(8, {{1, 4}, {2, 3}, {5, 8}, {6, 7}});
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "iwasawaC";
        e.description = "complex Heisenberg times a complex line";
        ComplexEqnSet eqs(4);
        eqs.add_hol(4, GaussRat(-1), 1, 2);
        Realification r = realify(eqs);
        e.g = std::move(r.g);
        e.g.name = "iwasawaC";
        e.complex_structures["J"] = std::move(r.J);
        e.forms["omega"] = iwasawa_form(GaussRat(0), GaussRat(1), GaussRat(0), GaussRat(0),
                                        GaussRat(1));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "nakamura";
        e.description = "Nakamura factor times a torus factor; solvable";
        ComplexEqnSet eqs(4);
        eqs.add_hol(2, GaussRat(-1), 1, 2);
        eqs.add_hol(3, GaussRat(1), 1, 3);
        Realification r = realify(eqs);
        e.g = std::move(r.g);
        e.g.name = "nakamura";
        e.complex_structures["J"] = std::move(r.J);
        e.forms["omega"] = nakamura_form(GaussRat(1), GaussRat(1));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "gABC";
        e.description = "three-step family member at A = C = 1, B = 0";
        e.g = gABC_algebra(GaussRat(1), GaussRat(0), GaussRat(1));
        e.complex_structures["J"] = gABC_J();
        e.forms["omega"] = gABC_form(GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(1));
        out.push_back(std::move(e));
    }
    {
        CSPair p3 = oxidize(step3_data());
        CatalogEntry e;
        e.name = "step3";
        e.description = "oxidation of the abelian normal form with nilpotency step 3";
        e.g = std::move(p3.g);
        e.g.name = "step3";
        e.complex_structures["J"] = std::move(p3.J);
        e.forms["omega"] = std::move(p3.omega);
        out.push_back(std::move(e));
    }
    {
        CSPair p4 = oxidize(step4_data());
        CatalogEntry e;
        e.name = "step4";
        e.description = "oxidation of the abelian normal form with nilpotency step 4";
        e.g = std::move(p4.g);
        e.g.name = "step4";
        e.complex_structures["J"] = std::move(p4.J);
        e.forms["omega"] = std::move(p4.omega);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

const std::vector<CatalogEntry>& worked_examples() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : worked_examples())
        if (e.name == name) return e;
    throw std::invalid_argument("catalog: no entry named '" + name + "'");
}

LieAlgebra gABC_algebra(const GaussRat& A, const GaussRat& B, const GaussRat& C) {
    if (A.is_zero() || C.is_zero()) throw std::invalid_argument("gABC: needs A C != 0");
    auto two = [](const Rational& r) { return GaussRat(r + r); };
    LieAlgebra g(8, "gABC");
    std::map<std::pair<int, int>, Vec> acc;
    auto add = [&](int k, int i, int j, GaussRat coef) {
        if (coef.is_zero()) return;
        auto key = std::make_pair(i, j);
        auto it = acc.find(key);
        if (it == acc.end()) it = acc.emplace(key, vec_zero(8)).first;
        it->second[k - 1] -= coef; // strict convention
    };
    add(5, 1, 2, GaussRat(1));
    add(5, 3, 4, GaussRat(1));
    add(6, 1, 4, GaussRat(1));
    add(6, 2, 3, GaussRat(1));
    add(7, 1, 3, two(B.im));
    add(7, 1, 5, GaussRat(A.re));
    add(7, 1, 6, GaussRat(A.im));
    add(7, 2, 4, two(C.im));
    add(7, 3, 5, -GaussRat(A.im));
    add(7, 3, 6, GaussRat(A.re));
    add(8, 1, 3, -two(B.re));
    add(8, 1, 5, GaussRat(A.im));
    add(8, 1, 6, -GaussRat(A.re));
    add(8, 2, 4, -two(C.re));
    add(8, 3, 5, GaussRat(A.re));
    add(8, 3, 6, GaussRat(A.im));
    for (auto& [ij, v] : acc) g.set_bracket(ij.first, ij.second, std::move(v));
    if (!validate_jacobi(g).ok()) throw std::logic_error("gABC: Jacobi failed");
    return g;
}

Mat gABC_J() {
    // phi^1 = e^1 + i e^3, phi^2 = e^2 + i e^4, phi^3 = e^5 - i e^6,
    // phi^4 = e^7 + i e^8
    return acs_from_pairs(8, {{1, 3}, {2, 4}, {6, 5}, {7, 8}});
}

AltForm gABC_form(const GaussRat& C, const GaussRat& alpha, const GaussRat& beta,
                  const GaussRat& gamma) {
    std::vector<AltForm> phi = {
        complex_covector(8, 1, 3, true),
        complex_covector(8, 2, 4, true),
        complex_covector(8, 5, 6, false),
        complex_covector(8, 7, 8, true),
    };
    return complex_coframe_form(
        8, phi, {{1, 2, alpha}, {1, 3, beta}, {1, 4, gamma}, {2, 3, C * gamma}});
}

AltForm iwasawa_form(const GaussRat& a, const GaussRat& b, const GaussRat& c,
                     const GaussRat& d, const GaussRat& e) {
    std::vector<AltForm> phi = {
        complex_covector(8, 1, 2, false),
        complex_covector(8, 3, 4, false),
        complex_covector(8, 5, 6, false),
        complex_covector(8, 7, 8, false),
    };
    return complex_coframe_form(8, phi,
                                {{1, 2, a}, {1, 3, b}, {1, 4, c}, {2, 3, d}, {2, 4, e}});
}

AltForm nakamura_form(const GaussRat& alpha, const GaussRat& beta) {
    std::vector<AltForm> phi = {
        complex_covector(8, 1, 2, false),
        complex_covector(8, 3, 4, false),
        complex_covector(8, 5, 6, false),
        complex_covector(8, 7, 8, false),
    };
    return complex_coframe_form(8, phi, {{1, 4, alpha}, {2, 3, beta}});
}

} // namespace cslie
