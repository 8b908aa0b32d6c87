// Command-line front end: parse / validate / analyze / reduce / oxidize /
// certify / sweep / examples over the library's exact-arithmetic core.
//
// Exit codes: 0 ok, 1 validation failure or negative certificate, 2 usage or
// parse errors.

#include <CLI11.hpp>

#include <iostream>

#include "cslie/io.hpp"

using namespace cslie;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LieAlgebra load_unvalidated(const std::string& spec, bool bracket_convention) {
    if (!spec.empty() && spec[0] == '(') return parse_salamon_unchecked(spec, bracket_convention);
    if (spec.rfind("catalog:", 0) == 0) return catalog_entry(spec.substr(8)).g;
    return algebra_from_json(Json::parse(read_file(spec)));
}

std::string series_text(const SeriesReport& s) {
    std::string out = "type (";
    for (size_t i = 0; i < s.ascending_type.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.ascending_type[i]);
    }
    out += ")";
    if (s.nilpotent())
        out += ", step " + std::to_string(*s.step);
    else
        out += ", not nilpotent";
    return out;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content << "\n";
    else
        write_file(out_path, content + "\n");
}

int cmd_parse(const std::string& spec, bool bracket_convention) {
    LieAlgebra g = load_unvalidated(spec, bracket_convention);
    auto rep = validate_jacobi(g);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        std::cout << "Jacobi: fails at (" << v.i << "," << v.j << "," << v.k << ") with residual "
                  << vec_str(v.residual) << "\n";
        return 1;
    }
    std::cout << "dim " << g.dim << "\n";
    std::cout << "salamon " << print_salamon(g) << "\n";
    for (const auto& [ij, v] : g.br) {
        std::cout << "[e" << ij.first << ",e" << ij.second << "] =";
        for (int k = 0; k < g.dim; ++k)
            if (!v[k].is_zero()) std::cout << " " << v[k].str() << "·e" << (k + 1);
        std::cout << "\n";
    }
    std::cout << "Jacobi: ok\n";
    return 0;
}

int cmd_validate(const std::string& spec, const std::string& jspec, const std::string& wspec,
                 bool bracket_convention) {
    LieAlgebra g = load_unvalidated(spec, bracket_convention);
    auto rep = validate_jacobi(g);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        std::cout << "Jacobi: fails at (" << v.i << "," << v.j << "," << v.k << ") with residual "
                  << vec_str(v.residual) << "\n";
        return 1;
    }
    auto series = central_series(g);
    std::cout << "Jacobi: ok, " << series_text(series) << "\n";
    if (jspec.empty() && wspec.empty()) return 0;
    if (jspec.empty()) throw Usage("--omega needs --J");
    Mat J = load_complex_structure(jspec);
    if (J.rows != g.dim) throw Usage("J has the wrong dimension");
    Mat j2 = mat_mul(J, J);
    if (!(j2 == mat_scale(GaussRat(-1), Mat::identity(g.dim)))) {
        std::cout << "J: J^2 != -id\n";
        return 1;
    }
    auto nj = nijenhuis_check(g, J);
    if (!nj.integrable()) {
        auto& [i, j, v] = nj.failures.front();
        std::cout << "J: not integrable, N_J(e" << i << ",e" << j << ") = " << vec_str(v) << "\n";
        return 1;
    }
    std::cout << "J: integrable\n";
    if (wspec.empty()) return 0;
    AltForm w = load_form(wspec, g.dim);
    CSPair pair = validate_complex_symplectic(g, J, w);
    std::cout << "omega: closed=" << (pair.report.closed ? "yes" : "no")
              << " non-degenerate=" << (pair.report.nondegenerate ? "yes" : "no")
              << " J-symmetric=" << (pair.report.j_symmetric ? "yes" : "no") << "\n";
    if (!pair.report.ok()) {
        std::cout << "omega: " << pair.report.detail << "\n";
        return 1;
    }
    std::cout << "complex symplectic: ok\n";
    return 0;
}

int cmd_analyze(const std::string& spec, const std::string& jspec, const std::string& wspec,
                bool bracket_convention) {
    LieAlgebra g = load_unvalidated(spec, bracket_convention);
    auto rep = validate_jacobi(g);
    if (!rep.ok()) {
        std::cout << "Jacobi: fails\n";
        return 1;
    }
    std::cout << "dim " << g.dim << "\n";
    auto series = central_series(g);
    std::cout << "ascending central series: " << series_text(series) << "\n";
    std::cout << "center dim " << center(g).dim() << ", commutator dim "
              << commutator_ideal(g).dim() << "\n";
    auto betti = betti_numbers(g);
    std::cout << "betti";
    for (int b : betti) std::cout << " " << b;
    std::cout << "\n";
    if (jspec.empty()) return 0;
    Mat J = load_complex_structure(jspec);
    auto nj = nijenhuis_check(g, J);
    std::cout << "J integrable: " << (nj.integrable() ? "yes" : "no") << "\n";
    if (nj.integrable()) {
        auto js = ascending_J_series(g, J);
        std::cout << "J-compatible series: " << series_text(js.series) << "\n";
        const char* label = js.type == JType::SnN                  ? "strongly non-nilpotent"
                            : js.type == JType::Nilpotent          ? "nilpotent"
                            : js.type == JType::WeaklyNonNilpotent ? "weakly non-nilpotent"
                                                                   : "n/a";
        std::cout << "J type: " << label << "\n";
        auto coh = cohomology_dims(g, J);
        std::cout << "Z_J^+ " << coh.z_plus << ", Z_J^- " << coh.z_minus << ", H_J^+ "
                  << coh.h_plus << ", H_J^- " << coh.h_minus << "\n";
    }
    if (!wspec.empty()) {
        AltForm w = load_form(wspec, g.dim);
        CSPair pair = validate_complex_symplectic(g, J, w);
        std::cout << "pair valid: " << (pair.report.ok() ? "yes" : "no") << "\n";
        if (!pair.report.ok()) return 1;
    }
    return 0;
}

int cmd_reduce(const std::string& pair_path, const std::string& ideal_expr,
               const std::string& out_path) {
    CSPair pair = pair_from_json(Json::parse(read_file(pair_path)));
    if (!pair.report.ok()) {
        std::cout << "input pair invalid: " << pair.report.detail << "\n";
        return 1;
    }
    Subspace a = parse_subspace(ideal_expr, pair.g.dim);
    CSPair out;
    try {
        out = reduce(pair, a);
    } catch (const std::invalid_argument& e) {
        std::cout << e.what() << "\n";
        return 1;
    }
    auto series = central_series(out.g);
    std::cout << "reduced to dim " << out.g.dim << ", " << series_text(series) << "\n";
    emit(out_path, pair_to_json(out).dump(2));
    return 0;
}

int cmd_oxidize(const std::string& data_path, const std::string& out_path) {
    OxidationData d = oxdata_from_json(Json::parse(read_file(data_path)));
    OxReport rep = validate_oxidation_data(d);
    if (!rep.ok()) {
        if (!rep.f1_derivation || !rep.f2_derivation)
            std::cout << "condition: f in V* (x) Der(gbar)\n";
        else
            std::cout << "condition " << rep.first_failure()->name << "; residual "
                      << rep.first_failure()->residual << "\n";
        return 1;
    }
    CSPair out = oxidize(d);
    auto series = central_series(out.g);
    std::cout << "oxidized to dim " << out.g.dim << ", " << series_text(series) << "\n";
    for (const auto& [ij, v] : out.g.br) {
        std::cout << "[" << ij.first << "," << ij.second << "] =";
        for (int k = 0; k < out.g.dim; ++k)
            if (!v[k].is_zero()) std::cout << " " << v[k].str() << "·e" << (k + 1);
        std::cout << "\n";
    }
    emit(out_path, pair_to_json(out).dump(2));
    return 0;
}

int cmd_certify(const std::string& spec, const std::string& jspec, const std::string& out_path,
                bool bracket_convention) {
    LieAlgebra g = load_algebra(spec, bracket_convention);
    if (g.dim % 2 != 0) throw Usage("certify needs an even-dimensional algebra");
    Certificate cert;
    if (jspec.empty()) {
        cert = symplectic_existence(g);
    } else {
        if (g.dim % 4 != 0) throw Usage("complex symplectic certification needs dim = 4n");
        Mat J = load_complex_structure(jspec);
        cert = complex_symplectic_existence(g, J);
    }
    bool witness = cert.kind == Certificate::Kind::Witness;
    std::cout << (witness ? "WITNESS" : "IMPOSSIBLE") << "\n";
    if (witness)
        std::cout << "omega = " << cert.witness.str() << "\n";
    else
        std::cout << "non-degeneracy polynomial vanishes on a closed-form space of dimension "
                  << cert.space_basis.size() << "\n";
    emit(out_path, certificate_to_json(cert).dump(2));
    return witness ? 0 : 1;
}

std::vector<Rational> parse_grid(const std::string& text) {
    std::vector<Rational> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(',', start);
        std::string tok =
            end == std::string::npos ? text.substr(start) : text.substr(start, end - start);
        if (!tok.empty()) out.push_back(Rational::parse(tok));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    if (out.empty()) throw Usage("empty grid");
    return out;
}

int cmd_sweep(const std::string& family, const std::string& case_name, const std::string& grid,
              const std::string& head_grid, int jobs, const std::string& format, bool rows,
              const std::string& out_path) {
    SweepOptions opt;
    if (!grid.empty()) opt.structural_grid = parse_grid(grid);
    if (!head_grid.empty()) opt.head_grid = parse_grid(head_grid);
    opt.keep_rows = rows;
    if (!family.empty() || !case_name.empty()) {
        for (const std::string& id : sweep_case_ids()) {
            bool fam_ok = family.empty() || id.rfind(family + "-", 0) == 0;
            bool case_ok = case_name.empty() || id.substr(id.find('-') + 1) == case_name;
            if (fam_ok && case_ok) opt.cases.push_back(id);
        }
        if (opt.cases.empty()) throw Usage("no sweep case matches the filter");
    }
    SweepReport rep = (jobs == 1) ? classify8_sweep_serial(opt)
                                  : classify8_sweep_parallel(opt, jobs);
    if (format == "structured")
        emit(out_path, sweep_report_to_json(rep, rows).dump(2));
    else
        emit(out_path, sweep_report_text(rep));
    return rep.failures == 0 ? 0 : 1;
}

int cmd_examples(const std::string& name, const std::string& dump_dir) {
    if (name.empty()) {
        for (const auto& e : worked_examples()) {
            std::cout << e.name << ": dim " << e.g.dim << ", " << e.description;
            if (!e.complex_structures.empty()) {
                std::cout << " [";
                bool first = true;
                for (const auto& [n, m] : e.complex_structures) {
                    if (!first) std::cout << ",";
                    std::cout << n;
                    first = false;
                }
                std::cout << "]";
            }
            std::cout << "\n";
        }
        return 0;
    }
    const CatalogEntry& e = catalog_entry(name);
    std::cout << e.name << ": " << e.description << "\n";
    std::cout << "salamon " << print_salamon(e.g) << "\n";
    for (const auto& [n, f] : e.forms) std::cout << n << " = " << f.str() << "\n";
    if (!dump_dir.empty()) {
        write_file(dump_dir + "/" + e.name + ".algebra.json", algebra_to_json(e.g).dump(2) + "\n");
        for (const auto& [n, m] : e.complex_structures)
            write_file(dump_dir + "/" + e.name + "." + n + ".json",
                       matrix_to_json(m).dump(2) + "\n");
        for (const auto& [n, f] : e.forms)
            write_file(dump_dir + "/" + e.name + "." + n + ".txt", f.str() + "\n");
        std::cout << "wrote files under " << dump_dir << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact complex symplectic structure toolkit for Lie algebras"};
    app.require_subcommand(1);

    std::string algebra, jspec, wspec, out_path, ideal, data_path, pair_path;
    std::string family, case_name, grid, head_grid, format = "text", dump_dir, name;
    std::string convention = "strict";
    int jobs = 0;
    bool rows = false;

    auto* parse_cmd = app.add_subcommand("parse", "parse an algebra and print it canonically");
    parse_cmd->add_option("algebra", algebra, "Salamon string, file, or catalog:NAME")->required();
    parse_cmd->add_option("--convention", convention, "strict|bracket reading of Salamon slots")
        ->check(CLI::IsMember({"strict", "bracket"}));

    auto* val = app.add_subcommand("validate", "layered validation: Jacobi, then J, then omega");
    val->add_option("algebra", algebra)->required();
    val->add_option("--J", jspec, "matrix file, catalog:NAME.J, or J0:<dim>");
    val->add_option("--omega", wspec, "form text or catalog:NAME.omega");
    val->add_option("--convention", convention)->check(CLI::IsMember({"strict", "bracket"}));

    auto* ana = app.add_subcommand("analyze", "series, cohomology and J-type report");
    ana->add_option("algebra", algebra)->required();
    ana->add_option("--J", jspec);
    ana->add_option("--omega", wspec);
    ana->add_option("--convention", convention)->check(CLI::IsMember({"strict", "bracket"}));

    auto* red = app.add_subcommand("reduce", "complex symplectic reduction by an ideal");
    red->add_option("pair", pair_path, "pair file (algebra + J + omega)")->required();
    red->add_option("--ideal", ideal, "semicolon-separated generators, e.g. \"e5;e6\"")
        ->required();
    red->add_option("--out", out_path);

    auto* oxi = app.add_subcommand("oxidize", "build the 4n+4 algebra from oxidation data");
    oxi->add_option("data", data_path, "oxidation data file")->required();
    oxi->add_option("--out", out_path);

    auto* cert = app.add_subcommand("certify", "exact existence certificate");
    cert->add_option("algebra", algebra)->required();
    cert->add_option("--J", jspec, "decide complex symplectic existence for this J");
    cert->add_option("--out", out_path);
    cert->add_option("--convention", convention)->check(CLI::IsMember({"strict", "bracket"}));

    auto* sw = app.add_subcommand("sweep", "classification sweep over the ten data families");
    sw->add_option("--family", family)->check(CLI::IsMember({"h3R", "R4"}));
    sw->add_option("--case", case_name)->check(CLI::IsMember({"i", "ii", "iii", "iv", "v"}));
    sw->add_option("--grid", grid, "comma-separated rationals for case/tail/tau parameters");
    sw->add_option("--head-grid", head_grid, "grid for the six free S components");
    sw->add_option("--jobs", jobs, "worker threads; 1 runs the serial reference");
    sw->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));
    sw->add_flag("--rows", rows, "keep one row per grid point (structured output)");
    sw->add_option("--out", out_path);

    auto* ex = app.add_subcommand("examples", "list or export the worked example catalog");
    ex->add_option("name", name);
    ex->add_option("--dump", dump_dir, "directory for algebra/J/omega files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        bool bracket = convention == "bracket";
        if (parse_cmd->parsed()) return cmd_parse(algebra, bracket);
        if (val->parsed()) return cmd_validate(algebra, jspec, wspec, bracket);
        if (ana->parsed()) return cmd_analyze(algebra, jspec, wspec, bracket);
        if (red->parsed()) return cmd_reduce(pair_path, ideal, out_path);
        if (oxi->parsed()) return cmd_oxidize(data_path, out_path);
        if (cert->parsed()) return cmd_certify(algebra, jspec, out_path, bracket);
        if (sw->parsed())
            return cmd_sweep(family, case_name, grid, head_grid, jobs, format, rows, out_path);
        if (ex->parsed()) return cmd_examples(name, dump_dir);
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
