#pragma once

#include <iosfwd>
#include <optional>

#include "modinv/report.hpp"

namespace modinv {

/// group -> fundamental invariants (default bound when unset) -> presentation
/// -> Hilbert certificate. Throws ValidationError when the certificate fails.
Presentation build_presentation(const RunConfig& cfg, const Caps& caps,
                                std::ostream* log = nullptr);

/// grade + height + licensed statements for the configured ideal elements.
GradeOutcome run_grade(const RunConfig& cfg, const Presentation& P, const Caps& caps);

/// Executes one CLI command and renders its deterministic report.
std::string run_command(const RunConfig& cfg, Command cmd, const Caps& caps,
                        std::ostream* log = nullptr);

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    bool skipped;
    std::string detail;
};

struct VerifyOutcome {
    std::vector<CriterionResult> criteria;
    std::string report_json;
    bool all_passed;  // over the non-skipped criteria
};

/// The acceptance suite over the built-in catalog. `only` restricts the
/// computed entries; criteria touching excluded entries are marked skipped.
/// `golden_dir`, when non-empty, enables comparisons against recorded runs.
VerifyOutcome run_verify(const Caps& caps, const std::optional<std::string>& only,
                         const std::string& golden_dir, std::ostream* log = nullptr);

}  // namespace modinv
