#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cslie/notation.hpp"
#include "cslie/redox.hpp"

using namespace cslie;

namespace {

std::mt19937_64 rng(90210);

Mat J0(int dim = 4) {
    Mat j(dim, dim);
    for (int k = 1; k <= dim / 2; ++k) {
        j.at(2 * k - 1, 2 * k - 2) = GaussRat(-1);
        j.at(2 * k - 2, 2 * k - 1) = GaussRat(1);
    }
    return j;
}

AltForm w0() { return AltForm::parse("e14+e23", 4); }

CSPair base_R4() {
    CSPair p = validate_complex_symplectic(LieAlgebra::abelian(4, "R4"), J0(), w0());
    REQUIRE(p.report.ok());
    return p;
}

CSPair base_h3R() {
    LieAlgebra g(4, "h3+R");
    g.set_bracket(1, 2, vec_basis(4, 3));
    CSPair p = validate_complex_symplectic(g, J0(), w0());
    REQUIRE(p.report.ok());
    return p;
}

CSPair base_trivial() {
    CSPair p = validate_complex_symplectic(LieAlgebra::abelian(0, "0"), Mat(0, 0), AltForm(0, 2));
    REQUIRE(p.report.ok());
    return p;
}

Vec cov(std::initializer_list<long long> xs) {
    Vec v;
    for (long long x : xs) v.push_back(GaussRat(x));
    return v;
}

// f with the lower-left 2x2 block given (columns act on e1, e2; image in e3, e4)
Endo lower_block(const std::vector<std::vector<Rational>>& A) {
    Mat m(4, 4);
    m.at(2, 0) = GaussRat(A[0][0]);
    m.at(3, 0) = GaussRat(A[1][0]);
    m.at(2, 1) = GaussRat(A[0][1]);
    m.at(3, 1) = GaussRat(A[1][1]);
    return Endo(m);
}

GaussRat rr() {
    std::uniform_int_distribution<long long> d(-2, 2);
    return GaussRat(d(rng));
}

} // namespace

TEST_CASE("orthogonal complements") {
    LieAlgebra ab = LieAlgebra::abelian(4);
    Subspace e34 = Subspace::span(4, {vec_basis(4, 3), vec_basis(4, 4)});
    CHECK(orth_complement(ab, w0(), e34) == e34);
    CHECK(orth_complement(ab, w0(), Subspace::full(4)).dim() == 0);
    CHECK(orth_complement(ab, w0(), Subspace::zero(4)) == Subspace::full(4));
    CHECK_THROWS(orth_complement(ab, AltForm::parse("e12", 4), e34));
    // any J0-invariant 2-dimensional subspace is isotropic, i.e. inside its
    // own complement
    for (int t = 0; t < 50; ++t) {
        Vec v = {rr(), rr(), rr(), rr()};
        if (vec_is_zero(v)) continue;
        Subspace s = Subspace::span(4, {v, mat_apply(J0(), v)});
        if (s.dim() != 2) continue;
        CHECK(orth_complement(ab, w0(), s).contains(s));
    }
}

TEST_CASE("induced tensors") {
    OxidationData d;
    d.base = base_R4();
    d.f1 = Endo::zero(4);
    d.f2 = Endo::zero(4);
    d.s11 = vec_zero(4);
    d.s12 = vec_zero(4);
    d.s22 = vec_zero(4);
    InducedTensors t = induced_tensors(d);
    CHECK(t.beta1.is_zero());
    CHECK(t.beta2.is_zero());
    CHECK(vec_is_zero(t.nu));
    CHECK(vec_is_zero(t.a_form));
    // the sharp-convention anchor: S11 = e^3 gives nu = e1
    d.s11 = cov({0, 0, 1, 0});
    t = induced_tensors(d);
    CHECK(t.nu == vec_basis(4, 1));
    // beta = -f.omega on the h3+R case-(i) block
    OxidationData dh;
    dh.base = base_h3R();
    dh.f1 = lower_block({{Rational(2), Rational(0)}, {Rational(0), Rational(0)}});
    dh.f2 = lower_block({{Rational(0), Rational(-2)}, {Rational(0), Rational(0)}});
    dh.s11 = vec_zero(4);
    dh.s12 = vec_zero(4);
    dh.s22 = vec_zero(4);
    InducedTensors th = induced_tensors(dh);
    CHECK(th.beta1 == form_neg(endo_dot_form(dh.f1, w0())));
    CHECK(th.beta1 == form_scale(GaussRat(2), AltForm::basis(4, {1, 2})));
    CHECK(th.beta2.is_zero());
}

TEST_CASE("oxidation data validation") {
    // trivial data is valid for any tau
    OxidationData d;
    d.base = base_R4();
    d.f1 = Endo::zero(4);
    d.f2 = Endo::zero(4);
    d.s11 = vec_zero(4);
    d.s12 = vec_zero(4);
    d.s22 = vec_zero(4);
    d.tau1 = Rational(3);
    d.tau2 = Rational(-1, 2);
    CHECK(validate_oxidation_data(d).ok());

    // R4 case (ii) with a = 1, b = 2, alpha3 = 1, alpha4 = 0:
    // beta3 = b a3 - a a4 = 2, beta4 = a a3 + b a4 = 1,
    // gamma3 = a/2 a3 + (b-1)/2 a4 = 1/2, gamma4 = (1-b)/2 a3 + a/2 a4 = -1/2
    OxidationData c2;
    c2.base = base_R4();
    c2.f1 = lower_block({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    c2.f2 = lower_block({{Rational(1), Rational(-2)}, {Rational(2), Rational(1)}});
    c2.s11 = cov({0, 0, 1, 0});
    c2.s22 = Vec{GaussRat(0), GaussRat(0), GaussRat(2), GaussRat(1)};
    c2.s12 = Vec{GaussRat(0), GaussRat(0), GaussRat(Rational(1, 2)), GaussRat(Rational(-1, 2))};
    auto rep = validate_oxidation_data(c2);
    CHECK(rep.ok());
    // perturbing beta3 by one breaks condition (iv)
    OxidationData bad = c2;
    bad.s22[2] += GaussRat(1);
    auto brep = validate_oxidation_data(bad);
    CHECK_FALSE(brep.ok());
    REQUIRE(brep.first_failure() != nullptr);
    CHECK(brep.first_failure()->name.find("(iv)") != std::string::npos);
}

TEST_CASE("oxidizing the trivial base gives the two 4-dimensional normal forms") {
    OxidationData d;
    d.base = base_trivial();
    d.f1 = Endo::zero(0);
    d.f2 = Endo::zero(0);
    d.s11 = Vec{};
    d.s12 = Vec{};
    d.s22 = Vec{};

    // canonical relabeling (v1, v2, v^1, v^2) -> (e2, e1, -e3, -e4)
    Mat P(4, 4);
    P.at(1, 0) = GaussRat(1);  // new e1 = v2
    P.at(0, 1) = GaussRat(1);  // new e2 = v1
    P.at(2, 2) = GaussRat(-1); // new e3 = -v^1
    P.at(3, 3) = GaussRat(-1); // new e4 = -v^2

    SUBCASE("tau = 0 gives (R4, J0, omega0)") {
        CSPair out = oxidize(d);
        LieAlgebra std_g = change_basis(out.g, P);
        CHECK(std_g == LieAlgebra::abelian(4));
        CHECK(mat_mul(*inverse(P), mat_mul(out.J, P)) == J0());
        CHECK(pullback(P, out.omega) == w0());
    }
    SUBCASE("tau != 0 gives (h3+R, J0, omega0)") {
        d.tau1 = Rational(1);
        CSPair out = oxidize(d);
        LieAlgebra std_g = change_basis(out.g, P);
        LieAlgebra h3(4);
        h3.set_bracket(1, 2, vec_basis(4, 3));
        CHECK(std_g == h3);
        CHECK(mat_mul(*inverse(P), mat_mul(out.J, P)) == J0());
        CHECK(pullback(P, out.omega) == w0());
        auto s = central_series(out.g);
        REQUIRE(s.nilpotent());
        CHECK(*s.step == 2);
    }
    SUBCASE("other tau values stay in the h3+R class") {
        d.tau1 = Rational(2);
        d.tau2 = Rational(-3);
        CSPair out = oxidize(d);
        auto s = central_series(out.g);
        REQUIRE(s.nilpotent());
        CHECK(*s.step == 2);
        CHECK(s.ascending_type == std::vector<int>{2, 4});
    }
}

TEST_CASE("golden bracket table: nilpotency step 3") {
    // base (R4, J0, omega0), case A = B = 0, tau = 0, S11 = e^3, S12 = e^1
    OxidationData d;
    d.base = base_R4();
    d.f1 = Endo::zero(4);
    d.f2 = Endo::zero(4);
    d.s11 = cov({0, 0, 1, 0});
    d.s12 = cov({1, 0, 0, 0});
    d.s22 = vec_zero(4);
    CSPair out = oxidize(d);
    // expected table in the basis (v1, v2, e1..e4, v^1, v^2):
    //   [v1,v2]=e1, [v1,e1]=v^2, [v1,e3]=v^1, [v1,e4]=1/2 v^2,
    //   [v2,e1]=v^1, [v2,e4]=-1/2 v^1
    LieAlgebra want(8);
    want.set_bracket(1, 2, vec_basis(8, 3));
    want.set_bracket(1, 3, vec_basis(8, 8));
    want.set_bracket(1, 5, vec_basis(8, 7));
    want.set_bracket(1, 6, vec_scale(GaussRat(Rational(1, 2)), vec_basis(8, 8)));
    want.set_bracket(2, 3, vec_basis(8, 7));
    want.set_bracket(2, 6, vec_scale(GaussRat(Rational(-1, 2)), vec_basis(8, 7)));
    CHECK(out.g == want);
    auto s = central_series(out.g);
    REQUIRE(s.nilpotent());
    CHECK(*s.step == 3);
    // e2 brackets to zero with everything here, so the center is
    // <e2> + V* and the ascending type is (3,6,8)
    CHECK(s.ascending_type == std::vector<int>{3, 6, 8});
    CHECK(s.terms[0].contains(vec_basis(8, 4)));
    // g_2 = gbar + V*
    Subspace mid_plus_dual = Subspace::span(
        8, {vec_basis(8, 3), vec_basis(8, 4), vec_basis(8, 5), vec_basis(8, 6),
            vec_basis(8, 7), vec_basis(8, 8)});
    CHECK(s.terms[1] == mid_plus_dual);
}

TEST_CASE("golden bracket table: nilpotency step 4") {
    // case A = I, B = 0 with S11 = e^3; the constraints force
    // gamma4 = 1/2 alpha3, beta3 = beta4 = 0, so S12 = e^1 + 1/2 e^4, S22 = 0
    OxidationData d;
    d.base = base_R4();
    d.f1 = lower_block({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    d.f2 = Endo::zero(4);
    d.s11 = cov({0, 0, 1, 0});
    d.s12 = Vec{GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(Rational(1, 2))};
    d.s22 = vec_zero(4);
    CHECK(validate_oxidation_data(d).ok());
    CSPair out = oxidize(d);
    // expected:
    //   [v1,v2]=e1, [v1,e1]=e3+v^2, [v1,e2]=e4, [v1,e3]=v^1, [v1,e4]=v^2,
    //   [v2,e1]=v^1
    LieAlgebra want(8);
    want.set_bracket(1, 2, vec_basis(8, 3));
    want.set_bracket(1, 3, vec_add(vec_basis(8, 5), vec_basis(8, 8)));
    want.set_bracket(1, 4, vec_basis(8, 6));
    want.set_bracket(1, 5, vec_basis(8, 7));
    want.set_bracket(1, 6, vec_basis(8, 8));
    want.set_bracket(2, 3, vec_basis(8, 7));
    CHECK(out.g == want);
    auto s = central_series(out.g);
    REQUIRE(s.nilpotent());
    CHECK(*s.step == 4);
    CHECK(s.ascending_type == std::vector<int>{2, 4, 6, 8});
    // g_2 = <e3, e4> + V*
    Subspace want_g2 = Subspace::span(
        8, {vec_basis(8, 5), vec_basis(8, 6), vec_basis(8, 7), vec_basis(8, 8)});
    CHECK(s.terms[1] == want_g2);
}

TEST_CASE("reduction by V* undoes oxidation bit-exactly") {
    std::vector<OxidationData> ds;
    {
        OxidationData d;
        d.base = base_R4();
        d.f1 = lower_block({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
        d.f2 = Endo::zero(4);
        d.s11 = cov({0, 0, 1, 0});
        d.s12 = Vec{GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(Rational(1, 2))};
        d.s22 = vec_zero(4);
        ds.push_back(d);
    }
    {
        OxidationData d;
        d.base = base_h3R();
        d.f1 = lower_block({{Rational(2), Rational(0)}, {Rational(0), Rational(0)}});
        d.f2 = lower_block({{Rational(0), Rational(-2)}, {Rational(0), Rational(0)}});
        d.s11 = cov({3, -1, 0, 1});
        d.s12 = cov({0, 2, 0, 5});
        d.s22 = Vec{GaussRat(1), GaussRat(1), GaussRat(0), GaussRat(-1)};
        d.tau1 = Rational(1);
        ds.push_back(d);
    }
    for (const auto& d : ds) {
        REQUIRE(validate_oxidation_data(d).ok());
        CSPair big = oxidize(d);
        Subspace vstar = Subspace::span(8, {vec_basis(8, 7), vec_basis(8, 8)});
        CSPair back = reduce(big, vstar);
        CHECK(back.g == d.base.g);
        CHECK(back.J == d.base.J);
        CHECK(back.omega == d.base.omega);
    }
}

TEST_CASE("reduce rejects bad subspaces, one reason each") {
    CSPair pair = base_R4();
    Subspace not_jinv = Subspace::span(4, {vec_basis(4, 1), vec_basis(4, 3)});
    CHECK_THROWS_WITH_AS(reduce(pair, not_jinv), doctest::Contains("J-invariant"),
                         std::invalid_argument);
    // an isotropic J-invariant subspace that is not an ideal (nonabelian case)
    CSPair h3 = base_h3R();
    Subspace not_ideal = Subspace::span(4, {vec_basis(4, 1), vec_basis(4, 2)});
    CHECK_THROWS_WITH_AS(reduce(h3, not_ideal), doctest::Contains("ideal"),
                         std::invalid_argument);
}

TEST_CASE("oxidizable picks a 2-dimensional J-invariant central subspace") {
    auto s = oxidizable(base_R4());
    REQUIRE(s.has_value());
    CHECK(s->dim() == 2);
    CHECK(invariant_under(J0(), *s));
    // a complex symplectic pair with trivial center on a solvable algebra
    ComplexEqnSet eqs(2);
    eqs.add_hol(2, GaussRat(1), 1, 2); // d phi^2 = phi^12
    Realification r = realify(eqs);
    AltForm wc(4, 2);
    // Re(phi^1 ^ phi^2) = e13 - e24
    wc = AltForm::parse("e13-e24", 4);
    CSPair pair = validate_complex_symplectic(r.g, r.J, wc);
    REQUIRE(pair.report.ok());
    CHECK(center(r.g).dim() == 0);
    CHECK_FALSE(oxidizable(pair).has_value());
}

TEST_CASE("mutation of single data entries breaks a matching output law") {
    // start from valid step-4 data
    OxidationData d;
    d.base = base_R4();
    d.f1 = lower_block({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    d.f2 = Endo::zero(4);
    d.s11 = cov({0, 0, 1, 0});
    d.s12 = Vec{GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(Rational(1, 2))};
    d.s22 = vec_zero(4);
    REQUIRE(validate_oxidation_data(d).ok());

    SUBCASE("breaking the sp-condition surfaces as a Nijenhuis failure") {
        // with S = 0 every other condition holds, so only (i) fails
        OxidationData bad = d;
        bad.f1 = lower_block({{Rational(1), Rational(0)}, {Rational(0), Rational(0)}});
        bad.s11 = vec_zero(4);
        bad.s12 = vec_zero(4);
        bad.s22 = vec_zero(4);
        auto rep = validate_oxidation_data(bad);
        CHECK_FALSE(rep.ok());
        REQUIRE(rep.first_failure() != nullptr);
        CHECK(rep.first_failure()->name.find("(i)") != std::string::npos);
        OxAssembly raw = assemble_oxidation(bad);
        CHECK(validate_jacobi(raw.g).ok()); // bracket survives here
        CHECK_FALSE(nijenhuis_check(raw.g, raw.J).integrable());
        CHECK(ce_diff(raw.g, raw.omega).is_zero());
    }
    SUBCASE("breaking condition (iv) surfaces as a Jacobi failure") {
        OxidationData bad = d;
        bad.s12[3] += GaussRat(1);
        auto rep = validate_oxidation_data(bad);
        CHECK_FALSE(rep.ok());
        OxAssembly raw = assemble_oxidation(bad);
        CHECK_FALSE(validate_jacobi(raw.g).ok());
        CHECK(ce_diff(raw.g, raw.omega).is_zero()); // omega closed by construction
    }
    SUBCASE("breaking the ad_nu condition alone surfaces as a Jacobi failure") {
        // f = 0 on the h3R base; beta4 != -alpha4 pushes nu out of the center,
        // and gamma3 = (alpha4+beta4)/2 keeps the dS conditions intact
        OxidationData bad;
        bad.base = base_h3R();
        bad.f1 = Endo::zero(4);
        bad.f2 = Endo::zero(4);
        bad.s11 = cov({0, 0, 0, 1});
        bad.s22 = vec_zero(4);
        bad.s12 = Vec{GaussRat(0), GaussRat(0), GaussRat(Rational(1, 2)), GaussRat(0)};
        auto rep = validate_oxidation_data(bad);
        CHECK_FALSE(rep.ok());
        REQUIRE(rep.first_failure() != nullptr);
        CHECK(rep.first_failure()->name.find("(ii)") != std::string::npos);
        OxAssembly raw = assemble_oxidation(bad);
        CHECK_FALSE(validate_jacobi(raw.g).ok());
        CHECK(ce_diff(raw.g, raw.omega).is_zero());
    }
    SUBCASE("breaking a dS condition alone surfaces as a Jacobi failure") {
        // alpha3 = 1 with beta3 = -1 keeps nu central but dS11 != 0
        OxidationData bad;
        bad.base = base_h3R();
        bad.f1 = Endo::zero(4);
        bad.f2 = Endo::zero(4);
        bad.s11 = cov({0, 0, 1, 0});
        bad.s22 = cov({0, 0, -1, 0});
        bad.s12 = vec_zero(4);
        auto rep = validate_oxidation_data(bad);
        CHECK_FALSE(rep.ok());
        REQUIRE(rep.first_failure() != nullptr);
        CHECK(rep.first_failure()->name.find("(iii)") != std::string::npos);
        OxAssembly raw = assemble_oxidation(bad);
        CHECK_FALSE(validate_jacobi(raw.g).ok());
        CHECK(ce_diff(raw.g, raw.omega).is_zero());
    }
    SUBCASE("a non-derivation f is refused by oxidize with the condition named") {
        OxidationData bad = d;
        bad.base = base_h3R();
        Mat m(4, 4);
        m.at(0, 2) = GaussRat(1); // e3 -> e1 cannot be a derivation of h3+R
        bad.f1 = Endo(m);
        CHECK_THROWS_WITH_AS(oxidize(bad), doctest::Contains("Der"), std::invalid_argument);
    }
}

TEST_CASE("validation reports agree with assembled-output checks on random data") {
    // random S entries over the h3R base with the case-(v) blocks (f = 0):
    // validity must coincide with the assembled output being a complex
    // symplectic Lie algebra
    for (int t = 0; t < 40; ++t) {
        OxidationData d;
        d.base = base_h3R();
        d.f1 = Endo::zero(4);
        d.f2 = Endo::zero(4);
        d.s11 = Vec{rr(), rr(), rr(), rr()};
        d.s12 = Vec{rr(), rr(), rr(), rr()};
        d.s22 = Vec{rr(), rr(), rr(), rr()};
        d.tau1 = Rational(1);
        bool valid = validate_oxidation_data(d).ok();
        OxAssembly raw = assemble_oxidation(d);
        bool output_good = validate_jacobi(raw.g).ok() &&
                           validate_complex_symplectic(raw.g, raw.J, raw.omega).report.ok();
        CHECK(valid == output_good);
    }
}
