#include "cslie/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cslie {

namespace {

struct Axis {
    std::string name;
    std::vector<Rational> values;
};

struct CaseSpec {
    std::string id;
    bool h3r = false;
    int number = 0;
};

const std::vector<CaseSpec>& case_specs() {
    static const std::vector<CaseSpec> specs = {
        {"h3R-i", true, 1},  {"h3R-ii", true, 2},  {"h3R-iii", true, 3},
        {"h3R-iv", true, 4}, {"h3R-v", true, 5},   {"R4-i", false, 1},
        {"R4-ii", false, 2}, {"R4-iii", false, 3}, {"R4-iv", false, 4},
        {"R4-v", false, 5},
    };
    return specs;
}

// Structural (outer) parameter combinations, predicates already applied.
std::vector<ParamMap> outer_combos(const CaseSpec& cs, const SweepOptions& opt) {
    const auto& grid = opt.structural_grid;
    std::vector<std::string> names;
    if (cs.h3r) {
        switch (cs.number) {
            case 1:
            case 5: names = {"alpha4", "gamma4"}; break;
            case 2: names = {"a", "b", "c", "d"}; break;
            case 3: names = {"a", "b"}; break;
            case 4: names = {"t"}; break;
        }
    } else {
        switch (cs.number) {
            case 1: names = {"a", "b", "c"}; break;
            case 2: names = {"a", "b"}; break;
            default: names = {}; break;
        }
    }
    std::vector<ParamMap> out;
    std::vector<size_t> idx(names.size(), 0);
    while (true) {
        ParamMap p;
        for (size_t i = 0; i < names.size(); ++i) p[names[i]] = grid[idx[i]];
        bool keep = true;
        if (cs.h3r && cs.number == 1)
            keep = !(p["alpha4"].is_zero() && p["gamma4"].is_zero());
        else if (cs.h3r && cs.number == 3)
            keep = !p["b"].is_zero();
        else if (!cs.h3r && cs.number == 1)
            keep = !p["a"].is_negative();
        else if (!cs.h3r && cs.number == 2)
            keep = !p["b"].is_zero() && !(p["a"].is_zero() && p["b"] == Rational(1));
        if (keep) out.push_back(std::move(p));
        if (names.empty()) break;
        size_t k = 0;
        while (k < names.size()) {
            if (++idx[k] < grid.size()) break;
            idx[k] = 0;
            ++k;
        }
        if (k == names.size()) break;
    }
    return out;
}

// Inner axes given the structural choice.
std::vector<Axis> inner_axes(const CaseSpec& cs, const ParamMap& outer,
                             const SweepOptions& opt) {
    std::vector<Axis> axes;
    auto push = [&](const std::string& n, const std::vector<Rational>& v) {
        axes.push_back({n, v});
    };
    if (!cs.h3r) {
        if (cs.number == 1) {
            Mat L = R4_caseI_L(outer.at("a"), outer.at("b"), outer.at("c"));
            size_t kdim = kernel_basis(L).size();
            for (size_t i = 1; i <= kdim; ++i)
                push("k" + std::to_string(i), opt.structural_grid);
        } else if (cs.number == 2) {
            push("alpha3", opt.structural_grid);
            push("alpha4", opt.structural_grid);
        } else if (cs.number == 3) {
            for (const char* n : {"alpha3", "alpha4", "beta3", "beta4"})
                push(n, opt.structural_grid);
        } else if (cs.number == 4) {
            push("alpha3", opt.structural_grid);
            push("alpha4", opt.structural_grid);
        } else {
            for (const char* n : {"alpha3", "alpha4", "beta3", "beta4", "gamma3", "gamma4"})
                push(n, opt.structural_grid);
        }
    }
    for (const char* n : {"alpha1", "alpha2", "beta1", "beta2", "gamma1", "gamma2"})
        push(n, opt.head_grid);
    push("tau1", opt.structural_grid);
    push("tau2", opt.structural_grid);
    return axes;
}

std::string params_string(const ParamMap& p) {
    std::string s;
    for (const auto& [k, v] : p) {
        if (v.is_zero()) continue;
        if (!s.empty()) s += " ";
        s += k + "=" + v.str();
    }
    return s.empty() ? "all-zero" : s;
}

SweepRow run_point(const CaseSpec& cs, const ParamMap& params) {
    SweepRow row;
    row.case_id = cs.id;
    row.params = params_string(params);
    OxidationData data;
    try {
        data = cs.h3r ? h3R_family(cs.number, params) : R4_family(cs.number, params);
        row.valid = true;
    } catch (const std::exception&) {
        return row;
    }
    OxAssembly raw = assemble_oxidation(data);
    row.output_ok = validate_jacobi(raw.g).ok() &&
                    validate_complex_symplectic(raw.g, raw.J, raw.omega).report.ok();
    SeriesReport s = central_series(raw.g);
    row.nilpotent = s.nilpotent();
    row.step = s.step.value_or(0);
    std::string type = "(";
    for (size_t i = 0; i < s.ascending_type.size(); ++i) {
        if (i) type += ",";
        type += std::to_string(s.ascending_type[i]);
    }
    row.ascending_type = type + ")";
    return row;
}

void merge_row(SweepReport& rep, const SweepRow& row, bool keep) {
    ++rep.points;
    if (!row.pass()) {
        ++rep.failures;
        rep.failed_rows.push_back(row);
    } else {
        ++rep.step_histogram[row.step];
        ++rep.class_counts[row.case_id + "|" + std::to_string(row.step) + "|" +
                           row.ascending_type];
    }
    if (keep) rep.rows.push_back(row);
}

SweepReport run_sweep(const SweepOptions& opt, bool parallel, int threads) {
    if (opt.structural_grid.empty() || opt.head_grid.empty())
        throw std::invalid_argument("sweep: empty grid");
    SweepReport rep;
    for (const CaseSpec& cs : case_specs()) {
        if (!opt.cases.empty() &&
            std::find(opt.cases.begin(), opt.cases.end(), cs.id) == opt.cases.end())
            continue;
        for (const ParamMap& outer : outer_combos(cs, opt)) {
            std::vector<Axis> axes = inner_axes(cs, outer, opt);
            long long total = 1;
            for (const Axis& a : axes) total *= (long long)a.values.size();
            auto point_params = [&](long long index) {
                ParamMap p = outer;
                long long rest = index;
                for (const Axis& a : axes) {
                    p[a.name] = a.values[rest % a.values.size()];
                    rest /= (long long)a.values.size();
                }
                return p;
            };
            if (!parallel) {
                for (long long i = 0; i < total; ++i)
                    merge_row(rep, run_point(cs, point_params(i)), opt.keep_rows);
            } else {
                std::vector<SweepRow> rows((size_t)total);
                int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads)
                for (long long i = 0; i < total; ++i)
                    rows[(size_t)i] = run_point(cs, point_params(i));
                for (const SweepRow& r : rows) merge_row(rep, r, opt.keep_rows);
            }
        }
    }
    return rep;
}

} // namespace

std::vector<std::string> sweep_case_ids() {
    std::vector<std::string> out;
    for (const auto& cs : case_specs()) out.push_back(cs.id);
    return out;
}

SweepReport classify8_sweep_serial(const SweepOptions& opt) { return run_sweep(opt, false, 1); }

SweepReport classify8_sweep_parallel(const SweepOptions& opt, int threads) {
    return run_sweep(opt, true, threads);
}

std::string sweep_report_text(const SweepReport& rep) {
    std::ostringstream os;
    for (const auto& row : rep.rows)
        os << row.case_id << " [" << row.params << "] step=" << row.step << " type="
           << row.ascending_type << " " << (row.pass() ? "pass" : "FAIL") << "\n";
    os << "points: " << rep.points << "\n";
    os << "failures: " << rep.failures << "\n";
    os << "steps:";
    for (const auto& [step, count] : rep.step_histogram)
        os << " " << step << ":" << count;
    os << "\n";
    os << "classes (case | step | ascending type | count):\n";
    for (const auto& [key, count] : rep.class_counts) {
        std::string line = key;
        for (auto& ch : line)
            if (ch == '|') ch = ' ';
        os << "  " << line << " " << count << "\n";
    }
    for (const auto& row : rep.failed_rows)
        os << "FAIL " << row.case_id << " [" << row.params << "] valid=" << row.valid
           << " output=" << row.output_ok << " nilpotent=" << row.nilpotent
           << " step=" << row.step << "\n";
    return os.str();
}

} // namespace cslie
