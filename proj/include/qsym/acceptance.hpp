#pragma once

#include "qsym/verify.hpp"

#include <string>
#include <vector>

namespace qsym {

struct CriterionInfo {
    int id;
    std::string title;
    double time_limit_seconds;
};

/// Criteria 1-11 are algebraic sweeps; criterion 12 (byte-identical CLI
/// output) needs two process runs and is checked outside the library.
const std::vector<CriterionInfo>& acceptance_criteria();

struct CriterionResult {
    int id = 0;
    std::string title;
    bool holds = true;
    std::vector<Report> checks;
};

CriterionResult run_criterion(int id, const VerifyOptions& options = {});
/// Criteria 1-11 in order.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options = {});

std::string render_acceptance_text(const std::vector<CriterionResult>& results);
Json render_acceptance_json(const std::vector<CriterionResult>& results);

}  // namespace qsym
