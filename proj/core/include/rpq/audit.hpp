#pragma once

#include <string>
#include <vector>

#include "rpq/deformation.hpp"

namespace rpq {

enum class AuditStatus { Pass, Fail, Reported };

std::string_view status_name(AuditStatus s);

// One identity checked on one deformation over a set of parameter points.
struct AuditEntry {
    std::string suite;
    std::string identity_id;
    std::string deformation;
    std::string point;  // where the largest residual occurred
    double max_residual = 0.0;
    double tolerance = 0.0;
    AuditStatus status = AuditStatus::Pass;
    int evaluated = 0;  // parameter points that produced a value
    int skipped = 0;    // points rejected by a convergence or singularity guard
};

struct AuditReport {
    std::vector<AuditEntry> entries;

    std::size_t count(AuditStatus s) const;
    bool passed() const { return count(AuditStatus::Fail) == 0; }
};

// ArikCoon q in {0.3, 0.5, 0.9}; JS (0.9, 0.5), (1.0, 0.7); CJ (0.9, 0.5); Quesne q in
// {0.5, 0.8}; GQ (1.2, 0.7), (1.1, 0.8); MultiParameter (1.1, 0.8, mu=1, nu=0, g=1).
std::vector<DeformationSpec> default_audit_grid();

// structural, vandermonde, stirling, exponential, normalization, recursion, moments,
// conversions, quesne, limits, sampling.
const std::vector<std::string>& audit_suite_names();

// Runs the named suites ("all" selects every suite). Suites evaluate concurrently;
// entries come back in suite order, then grid order.
AuditReport run_audit(const std::vector<std::string>& suites,
                      const std::vector<DeformationSpec>& grid = default_audit_grid());

std::string to_json(const AuditReport& report);
std::string to_text(const AuditReport& report);
std::string to_csv(const AuditReport& report);

}  // namespace rpq
