#ifndef CSLIE_NOTATION_HPP
#define CSLIE_NOTATION_HPP

#include <string>
#include <vector>

#include "cslie/lie.hpp"

namespace cslie {

// Parses "(0,0,12,13+3·14)" into the listed de^k forms and the Lie algebra
// they determine under d(e^k)(X,Y) = -e^k([X,Y]). A Jacobi failure rejects
// the string. Coefficients accept "3·14", "3*14", "314"-free juxtaposition
// ("3.14" is not accepted), rationals like "1/2·12", and "{10,12}" tuples
// past index 9.
LieAlgebra parse_salamon(const std::string& s);

// Canonical printer: terms in ascending tuple order, unit coefficients
// elided, "·" as separator. Requires real structure constants.
std::string print_salamon(const LieAlgebra& g);

// The same string read with the opposite sign convention, i.e. the slots are
// bracket lists [e_i,e_j] instead of differentials.
LieAlgebra parse_salamon_brackets(const std::string& s);

// Grammar-only layer beneath the two parsers: no Jacobi gate. Callers that
// want a structure-constant table to inspect (rather than a certified Lie
// algebra) validate separately.
LieAlgebra parse_salamon_unchecked(const std::string& s, bool bracket_convention);

// Complex structure equations in a (1,0)-coframe phi^1..phi^n:
//   d phi^k = sum hol[k] c * phi^j ^ phi^l  (j < l)
//           + sum mixed[k] c * phi^j ^ conj(phi^l)   (any j, l)
struct ComplexEqnTerm {
    GaussRat coeff;
    int j = 0, l = 0;
};

struct ComplexEqnSet {
    int n = 0;
    std::vector<std::vector<ComplexEqnTerm>> hol;   // index k-1
    std::vector<std::vector<ComplexEqnTerm>> mixed; // index k-1

    explicit ComplexEqnSet(int n_ = 0)
        : n(n_), hol(n_), mixed(n_) {}

    void add_hol(int k, GaussRat c, int j, int l);
    void add_mixed(int k, GaussRat c, int j, int l);
};

struct Realification {
    LieAlgebra g;  // dim 2n, real structure constants
    Mat J;         // J e_{2k-1} = -e_{2k}, J e_{2k} = e_{2k-1}
};

// Realifies along phi^k = e^{2k-1} - i e^{2k}. Rejects equation sets whose
// d does not square to zero, reporting the violating triple.
Realification realify(const ComplexEqnSet& eqs);

// The (2,0)+(1,1) forms d phi^k as complex 2-forms on the realified algebra.
std::vector<AltForm> realified_dphi(const ComplexEqnSet& eqs);

} // namespace cslie

#endif
