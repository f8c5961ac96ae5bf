#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rcft/blocks.hpp"
#include "rcft/kz.hpp"
#include "rcft/modular_data.hpp"

namespace rcft {

/// JSON object with "labels", "vacuum", "central_charge" ("p/q"), "weights" ("p/q" strings)
/// and "S" (row-major [re, im] pairs). Files failing validation are rejected with Error(Validation).
ModularData parse_modular_data(std::string_view json_text, double tol = kValidationTolerance);
ModularData load_modular_data(const std::string& path, double tol = kValidationTolerance);
/// Structural checks only, for reporting on data that may fail validation.
ModularData parse_modular_data_unvalidated(std::string_view json_text);
std::string modular_data_to_json(const ModularData& md);
void save_modular_data(const ModularData& md, const std::string& path);

/// "ising", "su2:K", or a JSON file path, in that order.
ModularData resolve_modular_data(const std::string& spec, double tol = kValidationTolerance);

/// "re,im" or a bare real number.
Complex parse_complex(std::string_view text);

/// One segment per line: "line re,im" or "arc re,im angle". An optional first
/// "start re,im" line sets the basepoint (default 1/2). '#' starts a comment.
PathSpec parse_path_spec(std::string_view text);
PathSpec load_path_spec(const std::string& path);

/// One configuration per line: n whitespace-separated "re,im" points. The result is a polyline.
ConfigPath parse_config_path(std::string_view text);
ConfigPath load_config_path(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace rcft
