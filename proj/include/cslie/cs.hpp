#ifndef CSLIE_CS_HPP
#define CSLIE_CS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cslie/lie.hpp"
#include "cslie/poly.hpp"

namespace cslie {

// Almost complex structure; construction checks J^2 = -id exactly.
struct ComplexStructure {
    Mat J;
    explicit ComplexStructure(Mat j);
};

struct NijenhuisReport {
    // pairs (i,j) with N_J(e_i, e_j) != 0, with the values
    std::vector<std::tuple<int, int, Vec>> failures;
    bool integrable() const { return failures.empty(); }
};

// Exhaustive Nijenhuis check over basis pairs. Also evaluates the
// no-(0,2)-component criterion on d of the (1,0)-coframe and insists the two
// verdicts agree.
NijenhuisReport nijenhuis_check(const LieAlgebra& g, const Mat& J);

struct CSReport {
    bool integrable = false;
    bool closed = false;
    bool nondegenerate = false;
    bool j_symmetric = false;
    std::string detail;
    bool ok() const { return integrable && closed && nondegenerate && j_symmetric; }
};

struct CSPair {
    LieAlgebra g;
    Mat J;
    AltForm omega;
    CSReport report;
};

CSPair validate_complex_symplectic(const LieAlgebra& g, const Mat& J, const AltForm& omega);

// omega_C = omega - i omega(J., .). Requires omega J-symmetric; the (2,0)
// type identity omega_C(JX, Y) = i omega_C(X, Y) is verified on basis pairs.
AltForm form_bijection(const Mat& J, const AltForm& omega);
// omega(J., .) as a 2-form (alternating because omega is J-symmetric).
AltForm j_twist(const Mat& J, const AltForm& omega);

// Basis change P putting (J, omega) into the normal form
//   J e_{2i-1} = -e_{2i}, J e_{2i} = e_{2i-1},
//   omega = sum e^{4j-3} ^ e^{4j} + e^{4j-2} ^ e^{4j-1}.
// With `through` (dim 4 only): the last two columns span it. Real entries
// only; the postcondition is re-verified exactly.
Mat adapted_basis(const LieAlgebra& g, const Mat& J, const AltForm& omega,
                  const std::optional<Subspace>& through = std::nullopt);

enum class JType { SnN, Nilpotent, WeaklyNonNilpotent, NotApplicable };

struct JSeriesReport {
    SeriesReport series; // terms a_k(J)
    JType type = JType::NotApplicable;
    bool quasi_nilpotent = false; // a_1(J) != 0
};

// Ascending J-compatible series; cross-checks a_1(J) = z(g) cap J z(g).
// Type labels only apply to nilpotent g (NotApplicable otherwise).
JSeriesReport ascending_J_series(const LieAlgebra& g, const Mat& J);

struct HypercomplexReport {
    bool i_square = false, j_square = false, k_square = false;
    bool i_integrable = false, j_integrable = false, k_integrable = false;
    bool ij_is_k = false;
    bool anticommute = false;
    bool ok() const {
        return i_square && j_square && k_square && i_integrable && j_integrable &&
               k_integrable && ij_is_k && anticommute;
    }
};

HypercomplexReport check_hypercomplex(const LieAlgebra& g, const Mat& I, const Mat& J,
                                      const Mat& K);

struct Certificate {
    enum class Kind { Witness, Impossible };
    Kind kind = Kind::Impossible;
    std::string question; // "symplectic" or "complex-symplectic"
    // witness payload
    AltForm witness;         // real symplectic form
    AltForm witness_complex; // closed non-degenerate (2,0)-form, complex case only
    // impossibility payload
    std::vector<AltForm> space_basis; // basis of the constrained form space
    MultiPoly poly;                   // exactly-zero non-degeneracy polynomial
};

// Decides existence of a symplectic form: Pfaffian polynomial on the space of
// closed 2-forms, witness by deterministic grid search when it is nonzero.
Certificate symplectic_existence(const LieAlgebra& g);

// Same for a complex symplectic structure with the given (integrable, real)
// J: closed (2,0)-forms and the coefficient polynomial of omega_C^n.
Certificate complex_symplectic_existence(const LieAlgebra& g, const Mat& J);

// RREF basis of the (1,0)-coframe (row covectors phi with phi o J = i phi).
std::vector<Vec> coframe10(const Mat& J);

// Deterministic nonvanishing point of a nonzero polynomial; one variable at a
// time over {0,...,bound-1} (bound = degree+1 always succeeds).
std::optional<std::vector<GaussRat>> find_nonvanishing_point(const MultiPoly& p, int bound);

} // namespace cslie

#endif
