#ifndef CSLIE_SWEEP_HPP
#define CSLIE_SWEEP_HPP

#include <map>
#include <string>
#include <vector>

#include "cslie/families.hpp"

namespace cslie {

// Grid sweep over the ten oxidation-data cases. Every grid point must
// validate, oxidize to a complex symplectic Lie algebra, and land on
// nilpotency step 1..4; anything else is counted (and listed) as a failure.
struct SweepOptions {
    // grid for the case parameters, constrained tail components and tau
    std::vector<Rational> structural_grid = {Rational(-1), Rational(0), Rational(1)};
    // grid for the six unconstrained S components alpha1..gamma2; kept
    // smaller by default so the default sweep stays within its time budget
    std::vector<Rational> head_grid = {Rational(0), Rational(1)};
    std::vector<std::string> cases; // subset of h3R-i..v, R4-i..v; empty = all
    bool keep_rows = false;         // retain one row per grid point
};

struct SweepRow {
    std::string case_id;
    std::string params;
    bool valid = false;
    bool output_ok = false;
    bool nilpotent = false;
    int step = 0;
    std::string ascending_type;
    bool pass() const { return valid && output_ok && nilpotent && step >= 1 && step <= 4; }
};

struct SweepReport {
    long long points = 0;
    long long failures = 0;
    std::map<int, long long> step_histogram;
    // "case|step|type" -> count
    std::map<std::string, long long> class_counts;
    std::vector<SweepRow> failed_rows; // always retained
    std::vector<SweepRow> rows;        // only with keep_rows

    bool operator==(const SweepReport& o) const {
        return points == o.points && failures == o.failures &&
               step_histogram == o.step_histogram && class_counts == o.class_counts;
    }
};

std::vector<std::string> sweep_case_ids();

SweepReport classify8_sweep_serial(const SweepOptions& opt);
// Same computation distributed over OpenMP threads; the report is identical
// to the serial one.
SweepReport classify8_sweep_parallel(const SweepOptions& opt, int threads = 0);

std::string sweep_report_text(const SweepReport& rep);

} // namespace cslie

#endif
