#pragma once

#include <string>

#include "modinv/config.hpp"
#include "modinv/diagnosis.hpp"

namespace modinv {

/// Grade-command outcome for one configured ideal.
struct GradeOutcome {
    std::vector<Polynomial> ideal_x;  // parsed input, x-ring
    std::vector<Polynomial> ideal_y;  // rewritten into S'
    int grade;
    int height;
    std::vector<InferenceLine> inferences;
};

/// Deterministic report payloads: fixed key order, integers and booleans
/// only (kDimEmpty = -1 encodes an empty locus), rendered with 2-space
/// indent and a trailing newline.
std::string report_group(const RunConfig& cfg, const MatrixGroup& G);
std::string report_invariants(const RunConfig& cfg, const FundamentalSet& F);
std::string report_present(const RunConfig& cfg, const Presentation& P);
std::string report_diagnose(const RunConfig& cfg, const Presentation& P,
                            const DiagnosisReport& D);
std::string report_grade(const RunConfig& cfg, const Presentation& P, const GradeOutcome& G);
std::string report_transfer(const RunConfig& cfg, const Presentation& P, int bound,
                            const TransferIdealResult& T);

}  // namespace modinv
