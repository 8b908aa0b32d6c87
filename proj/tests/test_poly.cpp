#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cslie/poly.hpp"

using namespace cslie;

namespace {

std::mt19937_64 rng(77);

GaussRat rand_scalar() {
    std::uniform_int_distribution<long long> num(-5, 5);
    std::uniform_int_distribution<long long> den(1, 4);
    return GaussRat(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

MultiPoly rand_poly(const std::vector<std::string>& vars) {
    MultiPoly p(vars);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> nterms(1, 6);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<uint32_t> e(vars.size());
        for (auto& x : e) x = (uint32_t)deg(rng);
        p.add_term(e, rand_scalar());
    }
    return p;
}

} // namespace

TEST_CASE("(x+y)^2 = x^2 + 2xy + y^2") {
    std::vector<std::string> vars = {"x", "y"};
    MultiPoly x = MultiPoly::variable(vars, 0);
    MultiPoly y = MultiPoly::variable(vars, 1);
    MultiPoly s = poly_add(x, y);
    MultiPoly sq = poly_mul(s, s);
    MultiPoly want(vars);
    want.add_term({2, 0}, GaussRat(1));
    want.add_term({1, 1}, GaussRat(2));
    want.add_term({0, 2}, GaussRat(1));
    CHECK(sq.terms == want.terms);
}

TEST_CASE("eval(x^2 - 1, x = 2) = 3") {
    std::vector<std::string> vars = {"x"};
    MultiPoly p(vars);
    p.add_term({2}, GaussRat(1));
    p.add_term({0}, GaussRat(-1));
    CHECK(poly_eval(p, {GaussRat(2)}) == GaussRat(3));
    CHECK_THROWS(poly_eval(p, {}));
}

TEST_CASE("p - p is the zero decision") {
    std::vector<std::string> vars = {"x", "y", "z"};
    for (int t = 0; t < 50; ++t) {
        MultiPoly p = rand_poly(vars);
        CHECK(poly_sub(p, p).is_zero());
    }
}

TEST_CASE("eval is a ring homomorphism") {
    std::vector<std::string> vars = {"x", "y", "z"};
    for (int t = 0; t < 300; ++t) {
        MultiPoly p = rand_poly(vars), q = rand_poly(vars);
        std::vector<GaussRat> a = {rand_scalar(), rand_scalar(), rand_scalar()};
        CHECK(poly_eval(poly_mul(p, q), a) == poly_eval(p, a) * poly_eval(q, a));
        CHECK(poly_eval(poly_add(p, q), a) == poly_eval(p, a) + poly_eval(q, a));
    }
}

TEST_CASE("substitute fixes one variable") {
    std::vector<std::string> vars = {"x", "y"};
    MultiPoly p(vars);
    p.add_term({2, 1}, GaussRat(1)); // x^2 y
    p.add_term({0, 1}, GaussRat(-4));
    CHECK(poly_substitute(p, 0, GaussRat(2)).is_zero());
    for (int t = 0; t < 100; ++t) {
        MultiPoly r = rand_poly(vars);
        GaussRat v = rand_scalar(), wy = rand_scalar();
        CHECK(poly_eval(poly_substitute(r, 0, v), {GaussRat(0), wy}) == poly_eval(r, {v, wy}));
    }
}

TEST_CASE("no zero coefficients are stored") {
    std::vector<std::string> vars = {"x"};
    MultiPoly p(vars);
    p.add_term({1}, GaussRat(3));
    p.add_term({1}, GaussRat(-3));
    CHECK(p.terms.empty());
    CHECK(p.str() == "0");
}
