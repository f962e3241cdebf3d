#pragma once

#include <string>
#include <vector>

namespace geoberg {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;     // measured numbers against their pinned tolerances
};

/** The thirteen release criteria, each independent and reporting its
    measured values. Numeric tolerances are pinned in the implementation
    and multiply by tol_scale (comparison windows widen by max(1, scale));
    runtime ceilings never scale. A thrown numerical error inside a
    criterion fails that criterion with the message as detail. */
std::vector<CriterionResult> run_acceptance(double tol_scale = 1.0);

/** One stdout line per criterion, [PASS]/[FAIL] first, then the measured
    numbers. Shared by the suite subcommand and the release gate binary. */
void print_criteria(const std::vector<CriterionResult>& results);

} // namespace geoberg
