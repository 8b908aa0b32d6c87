#include "cslie/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cslie/families.hpp"

namespace cslie {

Json algebra_to_json(const LieAlgebra& g) {
    Json j;
    j["dim"] = g.dim;
    j["scalar"] = "gaussian_rational";
    if (!g.name.empty()) j["name"] = g.name;
    Json brackets = Json::array();
    for (const auto& [ij, v] : g.br) {
        Json b;
        b["i"] = ij.first;
        b["j"] = ij.second;
        Json target = Json::object();
        for (int k = 0; k < g.dim; ++k)
            if (!v[k].is_zero()) target[std::to_string(k + 1)] = v[k].str();
        b["target"] = target;
        brackets.push_back(b);
    }
    j["brackets"] = brackets;
    return j;
}

LieAlgebra algebra_from_json(const Json& j) {
    if (!j.contains("dim")) throw std::invalid_argument("algebra file: missing \"dim\"");
    int dim = j.at("dim").get<int>();
    if (dim < 0) throw std::invalid_argument("algebra file: negative dimension");
    if (j.contains("scalar") && j.at("scalar") != "gaussian_rational")
        throw std::invalid_argument("algebra file: unsupported scalar field");
    LieAlgebra g(dim, j.value("name", std::string()));
    if (j.contains("brackets")) {
        for (const auto& b : j.at("brackets")) {
            int i = b.at("i").get<int>();
            int jj = b.at("j").get<int>();
            Vec v(dim);
            for (const auto& [key, val] : b.at("target").items()) {
                int k = std::stoi(key);
                if (k < 1 || k > dim) throw std::invalid_argument("algebra file: bad target index");
                v[k - 1] = GaussRat::parse(val.get<std::string>());
            }
            g.set_bracket(i, jj, std::move(v));
        }
    }
    return g;
}

Json matrix_to_json(const Mat& m) {
    Json j;
    j["dim"] = m.rows;
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    j["matrix"] = rows;
    return j;
}

Mat matrix_from_json(const Json& j) {
    const Json& rows = j.contains("matrix") ? j.at("matrix") : j;
    if (!rows.is_array()) throw std::invalid_argument("matrix file: expected an array of rows");
    int n = (int)rows.size();
    Mat m(n, n);
    for (int r = 0; r < n; ++r) {
        if ((int)rows[r].size() != n)
            throw std::invalid_argument("matrix file: matrix must be square");
        for (int c = 0; c < n; ++c)
            m.at(r, c) = GaussRat::parse(rows[r][c].get<std::string>());
    }
    return m;
}

Json covector_to_json(const Vec& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.str());
    return j;
}

Vec covector_from_json(const Json& j) {
    Vec v;
    for (const auto& x : j) v.push_back(GaussRat::parse(x.get<std::string>()));
    return v;
}

Json pair_to_json(const CSPair& p) {
    Json j;
    j["algebra"] = algebra_to_json(p.g);
    j["J"] = matrix_to_json(p.J);
    j["omega"] = p.omega.str();
    return j;
}

CSPair pair_from_json(const Json& j) {
    LieAlgebra g = algebra_from_json(j.at("algebra"));
    Mat J = matrix_from_json(j.at("J"));
    AltForm omega = AltForm::parse(j.at("omega").get<std::string>(), g.dim, 2);
    return validate_complex_symplectic(g, J, omega);
}

Json oxdata_to_json(const OxidationData& d) {
    Json j;
    j["base"] = pair_to_json(d.base);
    j["f1"] = matrix_to_json(d.f1.m)["matrix"];
    j["f2"] = matrix_to_json(d.f2.m)["matrix"];
    j["S11"] = covector_to_json(d.s11);
    j["S12"] = covector_to_json(d.s12);
    j["S22"] = covector_to_json(d.s22);
    j["tau"] = Json::array({d.tau1.str(), d.tau2.str()});
    return j;
}

OxidationData oxdata_from_json(const Json& j) {
    OxidationData d;
    d.base = pair_from_json(j.at("base"));
    if (!d.base.report.ok())
        throw std::invalid_argument("oxidation data: base pair fails validation (" +
                                    d.base.report.detail + ")");
    d.f1 = Endo(matrix_from_json(j.at("f1")));
    d.f2 = Endo(matrix_from_json(j.at("f2")));
    d.s11 = covector_from_json(j.at("S11"));
    d.s12 = covector_from_json(j.at("S12"));
    d.s22 = covector_from_json(j.at("S22"));
    const Json& tau = j.at("tau");
    if (!tau.is_array() || tau.size() != 2)
        throw std::invalid_argument("oxidation data: tau must have two entries");
    GaussRat t1 = GaussRat::parse(tau[0].get<std::string>());
    GaussRat t2 = GaussRat::parse(tau[1].get<std::string>());
    if (!t1.is_real() || !t2.is_real())
        throw std::invalid_argument("oxidation data: tau must be real");
    d.tau1 = t1.re;
    d.tau2 = t2.re;
    return d;
}

Json eqns_to_json(const ComplexEqnSet& eqs) {
    Json j;
    j["n"] = eqs.n;
    Json d = Json::object();
    for (int k = 1; k <= eqs.n; ++k) {
        if (eqs.hol[k - 1].empty() && eqs.mixed[k - 1].empty()) continue;
        Json slot;
        Json hol = Json::array(), mixed = Json::array();
        for (const auto& t : eqs.hol[k - 1])
            hol.push_back(Json::array({t.coeff.str(), t.j, t.l}));
        for (const auto& t : eqs.mixed[k - 1])
            mixed.push_back(Json::array({t.coeff.str(), t.j, t.l}));
        slot["hol"] = hol;
        slot["mixed"] = mixed;
        d[std::to_string(k)] = slot;
    }
    j["d"] = d;
    return j;
}

ComplexEqnSet eqns_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    ComplexEqnSet eqs(n);
    if (j.contains("d")) {
        for (const auto& [key, slot] : j.at("d").items()) {
            int k = std::stoi(key);
            for (const auto& [skey, sval] : slot.items()) {
                bool hol = skey == "hol";
                if (!hol && skey != "mixed")
                    throw std::invalid_argument("equation file: slots accept only \"hol\" and "
                                                "\"mixed\" term lists");
                for (const auto& t : sval) {
                    if (!t.is_array() || t.size() != 3)
                        throw std::invalid_argument("equation file: terms are [coeff, j, l]");
                    GaussRat c = GaussRat::parse(t[0].get<std::string>());
                    int a = t[1].get<int>(), b = t[2].get<int>();
                    if (hol)
                        eqs.add_hol(k, c, a, b);
                    else
                        eqs.add_mixed(k, c, a, b);
                }
            }
        }
    }
    return eqs;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["question"] = c.question;
    j["result"] = c.kind == Certificate::Kind::Witness ? "WITNESS" : "IMPOSSIBLE";
    if (c.kind == Certificate::Kind::Witness) {
        j["witness"] = c.witness.str();
        if (!c.witness_complex.is_zero()) j["witness_complex"] = c.witness_complex.str();
    } else {
        Json basis = Json::array();
        for (const auto& f : c.space_basis) basis.push_back(f.str());
        j["space_basis"] = basis;
        j["variables"] = c.poly.vars;
        j["polynomial"] = c.poly.str();
    }
    return j;
}

Json sweep_report_to_json(const SweepReport& rep, bool include_rows) {
    Json j;
    j["points"] = rep.points;
    j["failures"] = rep.failures;
    Json steps = Json::object();
    for (const auto& [s, c] : rep.step_histogram) steps[std::to_string(s)] = c;
    j["steps"] = steps;
    Json classes = Json::array();
    for (const auto& [key, count] : rep.class_counts) {
        std::istringstream is(key);
        std::string case_id, step, type;
        std::getline(is, case_id, '|');
        std::getline(is, step, '|');
        std::getline(is, type, '|');
        classes.push_back(Json{{"case", case_id},
                               {"step", std::stoi(step)},
                               {"ascending_type", type},
                               {"count", count}});
    }
    j["classes"] = classes;
    auto row_json = [](const SweepRow& r) {
        return Json{{"case", r.case_id},       {"params", r.params},
                    {"valid", r.valid},        {"output_ok", r.output_ok},
                    {"nilpotent", r.nilpotent}, {"step", r.step},
                    {"ascending_type", r.ascending_type}};
    };
    Json fails = Json::array();
    for (const auto& r : rep.failed_rows) fails.push_back(row_json(r));
    j["failed_rows"] = fails;
    if (include_rows) {
        Json rows = Json::array();
        for (const auto& r : rep.rows) rows.push_back(row_json(r));
        j["rows"] = rows;
    }
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file '" + path + "'");
    out << content;
}

LieAlgebra load_algebra(const std::string& spec, bool bracket_convention) {
    if (!spec.empty() && spec[0] == '(')
        return bracket_convention ? parse_salamon_brackets(spec) : parse_salamon(spec);
    if (spec.rfind("catalog:", 0) == 0) return catalog_entry(spec.substr(8)).g;
    Json j = Json::parse(read_file(spec));
    LieAlgebra g = algebra_from_json(j);
    auto rep = validate_jacobi(g);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        throw std::invalid_argument("algebra file: Jacobi identity fails at triple (" +
                                    std::to_string(v.i) + "," + std::to_string(v.j) + "," +
                                    std::to_string(v.k) + ") with residual " +
                                    vec_str(v.residual));
    }
    return g;
}

Mat load_complex_structure(const std::string& spec) {
    if (spec.rfind("catalog:", 0) == 0) {
        std::string rest = spec.substr(8);
        size_t dotpos = rest.rfind('.');
        if (dotpos == std::string::npos)
            throw std::invalid_argument("use catalog:NAME.J to pick a complex structure");
        const CatalogEntry& e = catalog_entry(rest.substr(0, dotpos));
        std::string which = rest.substr(dotpos + 1);
        auto it = e.complex_structures.find(which);
        if (it == e.complex_structures.end())
            throw std::invalid_argument("catalog entry '" + e.name +
                                        "' has no complex structure named '" + which + "'");
        return it->second;
    }
    if (spec.rfind("J0:", 0) == 0) return standard_J(std::stoi(spec.substr(3)));
    return matrix_from_json(Json::parse(read_file(spec)));
}

AltForm load_form(const std::string& spec, int dim) {
    if (spec.rfind("catalog:", 0) == 0) {
        std::string rest = spec.substr(8);
        size_t dotpos = rest.rfind('.');
        if (dotpos == std::string::npos)
            throw std::invalid_argument("use catalog:NAME.omega to pick a form");
        const CatalogEntry& e = catalog_entry(rest.substr(0, dotpos));
        auto it = e.forms.find(rest.substr(dotpos + 1));
        if (it == e.forms.end())
            throw std::invalid_argument("catalog entry '" + e.name + "' has no form named '" +
                                        rest.substr(dotpos + 1) + "'");
        return it->second;
    }
    return AltForm::parse(spec, dim, 2);
}

Vec parse_vector_expr(const std::string& text, int dim) {
    // a 1-form string over e1..en read as a coordinate vector
    AltForm f = AltForm::parse(text, dim, 1);
    Vec v(dim);
    for (const auto& [mask, c] : f.c) v[AltForm::indices_of(mask)[0] - 1] = c;
    return v;
}

Subspace parse_subspace(const std::string& text, int dim) {
    // generators split on ';' or ',' (commas inside '{...}' tuples are kept)
    std::vector<Vec> gens;
    std::string tok;
    int depth = 0;
    auto flush = [&] {
        if (!tok.empty()) gens.push_back(parse_vector_expr(tok, dim));
        tok.clear();
    };
    for (char c : text) {
        if (c == '{') ++depth;
        if (c == '}') --depth;
        if ((c == ';' || c == ',') && depth == 0) {
            flush();
            continue;
        }
        tok.push_back(c);
    }
    flush();
    if (gens.empty()) throw std::invalid_argument("subspace: no generators given");
    return Subspace::span(dim, gens);
}

} // namespace cslie
