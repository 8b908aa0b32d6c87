#ifndef CSLIE_LIE_HPP
#define CSLIE_LIE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cslie/altform.hpp"
#include "cslie/linalg.hpp"

namespace cslie {

// Lie algebra given by structure constants. Only pairs i < j are stored;
// antisymmetry is implicit. Indices are 1-based.
struct LieAlgebra {
    int dim = 0;
    std::map<std::pair<int, int>, Vec> br;
    std::string name;

    LieAlgebra() = default;
    explicit LieAlgebra(int d, std::string n = "") : dim(d), name(std::move(n)) {}

    static LieAlgebra abelian(int d, std::string name = "");

    // Sets [e_i, e_j] = v (requires i < j); zero vectors are not stored.
    void set_bracket(int i, int j, Vec v);
    // [e_i, e_j] for any i, j; handles the sign and i == j.
    Vec bracket_basis(int i, int j) const;
    // Dense dim x dim table of basis brackets, entry [i*dim + j] = [e_{i+1}, e_{j+1}].
    std::vector<Vec> bracket_table() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim == b.dim && a.br == b.br;
    }
    friend bool operator!=(const LieAlgebra& a, const LieAlgebra& b) { return !(a == b); }
};

Vec bracket_eval(const LieAlgebra& g, const Vec& x, const Vec& y);

struct JacobiViolation {
    int i, j, k;
    Vec residual;
};

struct JacobiReport {
    std::vector<JacobiViolation> violations;
    bool ok() const { return violations.empty(); }
};

JacobiReport validate_jacobi(const LieAlgebra& g);

// Chevalley-Eilenberg differential with trivial coefficients.
AltForm ce_diff(const LieAlgebra& g, const AltForm& a);

// Basis masks of Lambda^k in canonical (ascending mask) order.
std::vector<uint64_t> lambda_masks(int dim, int k);
// Matrix of d : Lambda^k -> Lambda^{k+1} in those bases.
Mat ce_diff_matrix(const LieAlgebra& g, int k);

std::vector<int> betti_numbers(const LieAlgebra& g);

struct JCohomology {
    std::vector<int> betti;
    int z_plus = 0, z_minus = 0; // closed J-(anti)invariant 2-forms
    int h_plus = 0, h_minus = 0; // their images in H^2
};
JCohomology cohomology_dims(const LieAlgebra& g, const Mat& J);

struct SeriesReport {
    std::vector<Subspace> terms;       // g_1 subset g_2 subset ... until stabilization
    std::vector<int> ascending_type;   // dims of the terms
    std::optional<int> step;           // nullopt when not nilpotent
    bool nilpotent() const { return step.has_value(); }
};

SeriesReport central_series(const LieAlgebra& g);
// Shared engine: with J, each term also requires [JX, g] inside the previous one.
SeriesReport ascending_series(const LieAlgebra& g, const Mat* J);

Subspace center(const LieAlgebra& g);
Subspace commutator_ideal(const LieAlgebra& g);

struct EndoFlags {
    bool is_derivation = false;
    bool is_nilpotent = false;
    bool is_automorphism = false;
};
EndoFlags endo_classify(const LieAlgebra& g, const Endo& d);

// Structure constants in the basis given by the columns of P.
LieAlgebra change_basis(const LieAlgebra& g, const Mat& P, const std::string& name = "");

} // namespace cslie

#endif
