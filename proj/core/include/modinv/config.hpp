#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modinv/group.hpp"

namespace modinv {

enum class Command { group, invariants, present, diagnose, grade, transfer, verify };

std::string command_name(Command c);
std::optional<Command> command_from(const std::string& name);

/// One run: the representation, the degree bound, an optional homogeneous
/// invariant ideal (for grade/transfer work), and caps.
struct RunConfig {
    std::uint32_t p = 0;
    int n = 0;
    std::vector<std::vector<std::vector<fp_t>>> generators;  // row-major matrices
    std::optional<int> degree_bound;
    std::vector<std::string> ideal_elements;                  // textual, x-variables
    std::optional<Command> command;
    size_t group_cap = 10000;

    bool operator==(const RunConfig& o) const;
};

/// Line format: `key = value`, one per line, `#` comments. Keys: p, n,
/// degree_bound, generator (repeatable; rows separated by `;`), ideal_element
/// (repeatable), command. Unknown keys are errors.
RunConfig parse_config(const std::string& text);

/// Canonical text that parses back to the same config.
std::string render_config(const RunConfig& c);

struct CatalogEntry {
    std::string name;
    RunConfig config;
};

/// Built-in instances, fixed order: bertin, swap2, cyc3_f3, s3_f2, trivial4,
/// cyc3_f2.
const std::vector<CatalogEntry>& catalog();
/// Throws ValidationError listing the known names.
const CatalogEntry& catalog_lookup(const std::string& name);
/// Name of the catalog entry this config coincides with, if any.
std::optional<std::string> catalog_match(const RunConfig& c);

/// Closure of the configured generators (validates everything).
MatrixGroup build_group(const RunConfig& c);

}  // namespace modinv
