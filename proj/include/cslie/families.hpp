#ifndef CSLIE_FAMILIES_HPP
#define CSLIE_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cslie/notation.hpp"
#include "cslie/redox.hpp"

namespace cslie {

Mat standard_J(int dim); // J e_{2k-1} = -e_{2k}, J e_{2k} = e_{2k-1}
AltForm standard_omega4();

// The two 4-dimensional normal-form pairs, both validated.
CSPair normal_form_R4();
CSPair normal_form_h3R();
std::vector<CSPair> four_dim_normal_forms();

// omega(z) = Re(z)(e14+e23) + Im(z)(e13-e24)
AltForm omega_z(const GaussRat& z);

struct FwReport {
    Mat F;
    bool automorphism_R4 = false, automorphism_h3R = false;
    bool preserves_J0 = false;
    bool pullback_law = false; // F(w)* omega(z) = omega(w z |w|^2)
    bool ok() const { return automorphism_R4 && automorphism_h3R && preserves_J0 && pullback_law; }
};
// Builds F(w) and checks the scaling law against omega(z); w, z nonzero.
FwReport fw_transform(const GaussRat& w, const GaussRat& z);
// w with w z |w|^2 = 1 when one exists in Q(i) (z a unit times the cube of a
// positive rational); nullopt otherwise.
std::optional<GaussRat> fw_normalize(const GaussRat& z);

// ---- classification families ------------------------------------------------

using ParamMap = std::map<std::string, Rational>;

// Free parameter names for each case; the R4 case (i) tail coordinates depend
// on the kernel of L(a,b,c), so its list needs the structural values.
std::vector<std::string> h3R_family_params(int case_no);
std::vector<std::string> R4_family_params(int case_no, const ParamMap& structural);
// Names of the structural parameters that determine the case shape.
std::vector<std::string> h3R_structural_params(int case_no);
std::vector<std::string> R4_structural_params(int case_no);

// The 4x6 matrix of the R4 case (i) tail constraints.
Mat R4_caseI_L(const Rational& a, const Rational& b, const Rational& c);

// Emit oxidation data for one case; throws on predicate violations. Every
// emitted datum passes validate_oxidation_data.
OxidationData h3R_family(int case_no, const ParamMap& params);
OxidationData R4_family(int case_no, const ParamMap& params);

// The two worked oxidation data sets with nilpotency steps 3 and 4.
OxidationData step3_data();
OxidationData step4_data();

// ---- strongly non-nilpotent equation families -------------------------------

using CParamMap = std::map<std::string, GaussRat>;

std::vector<std::string> snn_family_params(int variant); // 1..3

struct SnnInstance {
    ComplexEqnSet eqs;
    Realification real;
    SeriesReport central;
};
// Builds the variant's equations, realifies (rejecting d^2 != 0) and reports
// the ascending central series.
SnnInstance snn_family(int variant, const CParamMap& coeffs);

// ---- worked example catalog --------------------------------------------------

struct CatalogEntry {
    std::string name;
    std::string description;
    LieAlgebra g;
    std::map<std::string, Mat> complex_structures;
    std::map<std::string, AltForm> forms;
};

const std::vector<CatalogEntry>& worked_examples();
const CatalogEntry& catalog_entry(const std::string& name);

// g(A,B,C) family helpers: the real structure equations and the real part of
// the (2,0)-form alpha phi^12 + beta phi^13 + gamma phi^14 + C gamma phi^23.
LieAlgebra gABC_algebra(const GaussRat& A, const GaussRat& B, const GaussRat& C);
Mat gABC_J();
AltForm gABC_form(const GaussRat& C, const GaussRat& alpha, const GaussRat& beta,
                  const GaussRat& gamma);

// Iwasawa-times-C closed (2,0)-family (coefficients on phi^12, phi^13, phi^14,
// phi^23, phi^24 in the catalog's coframe), returned as the real part.
AltForm iwasawa_form(const GaussRat& a, const GaussRat& b, const GaussRat& c,
                     const GaussRat& d, const GaussRat& e);
// Nakamura family: real part of alpha phi^14 + beta phi^23.
AltForm nakamura_form(const GaussRat& alpha, const GaussRat& beta);

} // namespace cslie

#endif
