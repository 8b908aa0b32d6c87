#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cslie/lie.hpp"
#include "cslie/notation.hpp"

using namespace cslie;

namespace {

std::mt19937_64 rng(5150);

LieAlgebra h3R() {
    LieAlgebra g(4, "h3+R");
    g.set_bracket(1, 2, vec_basis(4, 3));
    return g;
}

LieAlgebra n4() {
    LieAlgebra g(4, "n4");
    g.set_bracket(1, 4, vec_basis(4, 2));
    g.set_bracket(2, 4, vec_basis(4, 3));
    return g;
}

int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return (int)r;
}

} // namespace

TEST_CASE("bracket evaluation on the catalog algebras") {
    CHECK(bracket_eval(h3R(), vec_basis(4, 1), vec_basis(4, 2)) == vec_basis(4, 3));
    CHECK(bracket_eval(LieAlgebra::abelian(4), vec_basis(4, 1), vec_basis(4, 2)) == vec_zero(4));
    CHECK(bracket_eval(n4(), vec_basis(4, 1), vec_basis(4, 4)) == vec_basis(4, 2));
    // bilinearity and antisymmetry on random vectors
    LieAlgebra g = n4();
    for (int t = 0; t < 50; ++t) {
        std::uniform_int_distribution<long long> d(-3, 3);
        Vec x(4), y(4), z(4);
        for (int i = 0; i < 4; ++i) {
            x[i] = GaussRat(d(rng));
            y[i] = GaussRat(d(rng));
            z[i] = GaussRat(d(rng));
        }
        CHECK(bracket_eval(g, x, y) == vec_neg(bracket_eval(g, y, x)));
        CHECK(bracket_eval(g, vec_add(x, z), y) ==
              vec_add(bracket_eval(g, x, y), bracket_eval(g, z, y)));
    }
}

TEST_CASE("jacobi validation, including the known violator") {
    CHECK(validate_jacobi(h3R()).ok());
    LieAlgebra bad(3);
    bad.set_bracket(1, 2, vec_basis(3, 3));
    bad.set_bracket(1, 3, vec_basis(3, 1));
    auto rep = validate_jacobi(bad);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.size() == 1);
    CHECK(rep.violations[0].i == 1);
    CHECK(rep.violations[0].j == 2);
    CHECK(rep.violations[0].k == 3);
    CHECK(rep.violations[0].residual == vec_neg(vec_basis(3, 3)));
    // the quaternionic Heisenberg algebra plus R passes exhaustively
    LieAlgebra qh = parse_salamon("(0,0,0,0,0,12-34,13+24,14-23)");
    CHECK(validate_jacobi(qh).ok());
}

TEST_CASE("Chevalley-Eilenberg differential") {
    LieAlgebra g = h3R();
    CHECK(ce_diff(g, AltForm::basis(4, {3})) == form_neg(AltForm::basis(4, {1, 2})));
    CHECK(ce_diff(g, AltForm::parse("e14+e23", 4)).is_zero());
    // d^2 = 0 on every basis k-form of a few algebras
    for (const LieAlgebra& a : {g, n4(), parse_salamon("(0,0,0,12,13+3·14)")}) {
        for (int k = 1; k < a.dim; ++k)
            for (uint64_t m : lambda_masks(a.dim, k)) {
                AltForm f(a.dim, k);
                f.add_term(m, GaussRat(1));
                CHECK(ce_diff(a, ce_diff(a, f)).is_zero());
            }
    }
}

TEST_CASE("d on degree 1 is minus the transpose of the bracket map") {
    for (const LieAlgebra& g : {h3R(), n4(), parse_salamon("(0,0,0,0,0,12-34,13+24,14-23)")}) {
        Mat d1 = ce_diff_matrix(g, 1);
        auto masks = lambda_masks(g.dim, 2);
        for (size_t r = 0; r < masks.size(); ++r) {
            auto idx = AltForm::indices_of(masks[r]);
            Vec b = g.bracket_basis(idx[0], idx[1]);
            for (int k = 0; k < g.dim; ++k) CHECK(d1.at((int)r, k) == -b[k]);
        }
    }
}

TEST_CASE("d^2 = 0 if and only if Jacobi holds (mutation test)") {
    std::uniform_int_distribution<int> pick(1, 4);
    std::uniform_int_distribution<long long> val(-2, 2);
    for (int t = 0; t < 120; ++t) {
        LieAlgebra g(4);
        for (int trial = 0; trial < 3; ++trial) {
            int i = pick(rng), j = pick(rng);
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            Vec v(4);
            for (int k = 0; k < 4; ++k) v[k] = GaussRat(val(rng));
            g.set_bracket(i, j, v);
        }
        bool jac = validate_jacobi(g).ok();
        bool dsq = true;
        for (int k = 1; k <= 2 && dsq; ++k)
            for (uint64_t m : lambda_masks(4, k)) {
                AltForm f(4, k);
                f.add_term(m, GaussRat(1));
                if (!ce_diff(g, ce_diff(g, f)).is_zero()) {
                    dsq = false;
                    break;
                }
            }
        CHECK(jac == dsq);
    }
}

TEST_CASE("betti numbers") {
    auto b_ab = betti_numbers(LieAlgebra::abelian(4));
    for (int k = 0; k <= 4; ++k) CHECK(b_ab[k] == binom(4, k));
    LieAlgebra qh = parse_salamon("(0,0,0,0,0,12-34,13+24,14-23)");
    CHECK(betti_numbers(qh)[1] == 5);
    auto b = betti_numbers(h3R());
    CHECK(b[1] == 3);
    CHECK(b[2] == 4);
    // first betti number of a nilpotent algebra is dim g - dim [g,g]
    for (const LieAlgebra& g : {h3R(), n4(), qh}) {
        REQUIRE(central_series(g).nilpotent());
        CHECK(betti_numbers(g)[1] == g.dim - commutator_ideal(g).dim());
    }
}

TEST_CASE("ascending central series") {
    auto ab = central_series(LieAlgebra::abelian(5));
    REQUIRE(ab.nilpotent());
    CHECK(*ab.step == 1);
    CHECK(ab.ascending_type == std::vector<int>{5});

    auto h = central_series(h3R());
    REQUIRE(h.nilpotent());
    CHECK(*h.step == 2);
    CHECK(h.ascending_type == std::vector<int>{2, 4});
    CHECK(h.terms[0] == Subspace::span(4, {vec_basis(4, 3), vec_basis(4, 4)}));

    // terms are ideals: [g_k, g] inside g_{k-1}
    for (const LieAlgebra& g : {h3R(), n4(), parse_salamon("(0,0,0,0,0,12-34,13+24,14-23)")}) {
        auto s = central_series(g);
        for (size_t k = 0; k < s.terms.size(); ++k) {
            Subspace prev = (k == 0) ? Subspace::zero(g.dim) : s.terms[k - 1];
            for (const Vec& w : s.terms[k].basis)
                for (int j = 1; j <= g.dim; ++j)
                    CHECK(prev.contains(bracket_eval(g, w, vec_basis(g.dim, j))));
        }
    }

    // a solvable, non-nilpotent example stabilizes strictly below g
    LieAlgebra solv(2);
    solv.set_bracket(1, 2, vec_basis(2, 2)); // [e1,e2] = e2
    auto srep = central_series(solv);
    CHECK_FALSE(srep.nilpotent());
    CHECK(srep.terms.empty());
}

TEST_CASE("endomorphism classification") {
    LieAlgebra g = h3R();
    auto idf = endo_classify(g, Endo::identity(4));
    CHECK_FALSE(idf.is_derivation);
    CHECK(idf.is_automorphism);
    // lower-triangular block with A = diag(2, 0): e1 -> 2 e3
    Mat f1(4, 4);
    f1.at(2, 0) = GaussRat(2);
    auto flags = endo_classify(g, Endo(f1));
    CHECK(flags.is_derivation);
    CHECK(flags.is_nilpotent);
    CHECK_FALSE(flags.is_automorphism);
    // every endomorphism of an abelian algebra is a derivation
    LieAlgebra ab = LieAlgebra::abelian(3);
    for (int t = 0; t < 30; ++t) {
        Mat m(3, 3);
        std::uniform_int_distribution<long long> d(-3, 3);
        for (auto& x : m.a) x = GaussRat(d(rng));
        CHECK(endo_classify(ab, Endo(m)).is_derivation);
    }
}

TEST_CASE("change of basis preserves brackets") {
    LieAlgebra g = n4();
    Mat p(4, 4);
    p.at(0, 0) = GaussRat(1);
    p.at(1, 1) = GaussRat(2);
    p.at(2, 3) = GaussRat(1);
    p.at(3, 2) = GaussRat(-1);
    LieAlgebra h = change_basis(g, p);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            Vec lhs = mat_apply(p, h.bracket_basis(i, j));
            Vec rhs = bracket_eval(g, p.col(i - 1), p.col(j - 1));
            CHECK(lhs == rhs);
        }
}
