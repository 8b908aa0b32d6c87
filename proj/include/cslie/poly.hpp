#ifndef CSLIE_POLY_HPP
#define CSLIE_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "cslie/gaussian.hpp"

namespace cslie {

// Sparse multivariate polynomial over Q(i). Exponent vectors are dense over
// the declared variable list; zero coefficients are never stored.
struct MultiPoly {
    std::vector<std::string> vars;
    std::map<std::vector<uint32_t>, GaussRat> terms;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> names) : vars(std::move(names)) {}

    static MultiPoly constant(std::vector<std::string> names, const GaussRat& c);
    static MultiPoly variable(std::vector<std::string> names, size_t index);

    bool is_zero() const { return terms.empty(); }
    int total_degree() const;

    void add_term(const std::vector<uint32_t>& expo, const GaussRat& c);

    // "x0^2*x1" style, canonical monomial order (graded, then map order).
    std::string str() const;
};

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_sub(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_scale(const GaussRat& c, const MultiPoly& p);
// Every variable must receive a value.
GaussRat poly_eval(const MultiPoly& p, const std::vector<GaussRat>& assignment);
// Fixes one variable to a value; the variable list is unchanged.
MultiPoly poly_substitute(const MultiPoly& p, size_t index, const GaussRat& value);

} // namespace cslie

#endif
