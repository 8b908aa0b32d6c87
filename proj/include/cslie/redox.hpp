#ifndef CSLIE_REDOX_HPP
#define CSLIE_REDOX_HPP

#include <optional>
#include <string>
#include <vector>

#include "cslie/cs.hpp"

namespace cslie {

// Oxidation data (f, S, tau) over a valid base (gbar, Jbar, omegabar) of
// dimension 4n, stored in the fixed basis v1, v2 = I v1 of V:
//   f1 = f(v1), f2 = f(v2);  Sij = S(vi, vj);  tau(v1,v2) = tau1 v^1 + tau2 v^2.
struct OxidationData {
    CSPair base;
    Endo f1, f2;
    Vec s11, s12, s22;
    Rational tau1, tau2;
};

// Tensors determined by the data; never user-supplied.
struct InducedTensors {
    AltForm beta1, beta2; // beta = -f.omegabar, one 2-form per V*-component
    Vec nu;               // nu(v1,v2) = Jbar(S11# + S22#)
    Vec a_form;           // A(v1,v2) = 1/2 (S11+S22) o Jbar
};

InducedTensors induced_tensors(const OxidationData& d);

struct OxCondition {
    std::string name;
    bool pass = true;
    std::string residual;
};

struct OxReport {
    bool f1_derivation = false, f2_derivation = false;
    bool f1_nilpotent = false, f2_nilpotent = false; // informational
    std::vector<OxCondition> conditions;             // basis-form conditions
    bool ok() const {
        if (!f1_derivation || !f2_derivation) return false;
        for (const auto& c : conditions)
            if (!c.pass) return false;
        return true;
    }
    const OxCondition* first_failure() const {
        for (const auto& c : conditions)
            if (!c.pass) return &c;
        return nullptr;
    }
};

// Checks the basis-form conditions (i)-(iv) plus the derivation requirement,
// then recomputes the seven tensor-form conditions through an independent
// code path and insists the verdicts agree.
OxReport validate_oxidation_data(const OxidationData& d);

// { X : omega(X, a) = 0 }. Requires omega non-degenerate.
Subspace orth_complement(const LieAlgebra& g, const AltForm& omega, const Subspace& a);

// Quotient (a^perp / a, Jbar, omegabar) modeled on a deterministic complement
// of a inside a^perp. `a` must be an ideal, J-invariant and omega-isotropic.
CSPair reduce(const CSPair& pair, const Subspace& a);

// Raw assembly of the bracket, J and omega in the basis order
// (v1, v2, e1..e4n, v^1, v^2), with no validity checks. The struct mirrors
// what oxidize() certifies.
struct OxAssembly {
    LieAlgebra g;
    Mat J;
    AltForm omega;
};
OxAssembly assemble_oxidation(const OxidationData& d);

// Assembles the (4n+4)-dimensional complex symplectic Lie algebra. Refuses
// invalid data; the output is revalidated, and nilpotency is asserted when
// base and f are nilpotent.
CSPair oxidize(const OxidationData& d);

// A 2-dimensional J-invariant subspace of z(g) cap J z(g), if one exists.
std::optional<Subspace> oxidizable(const CSPair& pair);

} // namespace cslie

#endif
