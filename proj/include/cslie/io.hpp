#ifndef CSLIE_IO_HPP
#define CSLIE_IO_HPP

#include <string>

#include <json.hpp>

#include "cslie/notation.hpp"
#include "cslie/redox.hpp"
#include "cslie/sweep.hpp"

namespace cslie {

using Json = nlohmann::ordered_json;

// Lie algebra file: { "dim": n, "scalar": "gaussian_rational",
//   "brackets": [ { "i": 1, "j": 2, "target": { "3": "1" } } ] }
Json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);

// Matrix file (column action): { "dim": n, "matrix": [["0","1"],["-1","0"]] }
Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& j);

Json covector_to_json(const Vec& v);
Vec covector_from_json(const Json& j);

// Pair file: { "algebra": ..., "J": ..., "omega": "e14+e23" }
Json pair_to_json(const CSPair& p);
CSPair pair_from_json(const Json& j);

// Oxidation data file: { "base": <pair>, "f1": ..., "f2": ...,
//   "S11": ..., "S12": ..., "S22": ..., "tau": ["1", "0"] }
Json oxdata_to_json(const OxidationData& d);
OxidationData oxdata_from_json(const Json& j);

// Complex structure equations:
//   { "n": 4, "d": { "3": { "hol": [["-1", 1, 2]], "mixed": [] } } }
Json eqns_to_json(const ComplexEqnSet& eqs);
ComplexEqnSet eqns_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);

Json sweep_report_to_json(const SweepReport& rep, bool include_rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Accepts an inline Salamon string "(...)", a "catalog:NAME" reference, or a
// JSON file path.
LieAlgebra load_algebra(const std::string& spec, bool bracket_convention = false);
// Accepts "catalog:NAME.J", a file path, or "J0:<dim>".
Mat load_complex_structure(const std::string& spec);
// Accepts an inline form string or "catalog:NAME.omega".
AltForm load_form(const std::string& spec, int dim);
// Semicolon-separated vector expressions like "e5;e6" or "e1+2·e3;e4".
Subspace parse_subspace(const std::string& text, int dim);
Vec parse_vector_expr(const std::string& text, int dim);

} // namespace cslie

#endif
