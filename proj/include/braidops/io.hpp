#pragma once

#include <string>
#include <vector>

#include "braidops/braided_space.hpp"
#include "braidops/operad.hpp"

namespace braidops {

/// Operad presentation file: {"name", "generators", "star", "relations",
/// "unit_action"?}; all scalars are rational strings. Throws ParseError.
OperadPresentation parse_operad_text(const std::string& text);
OperadPresentation load_operad_file(const std::string& path);

/// Braiding file: {"dim": d, "sigma": [[rational-string, ...], ...]} with a
/// d^2 x d^2 dense matrix; rows index output pairs, columns input pairs,
/// pairs flattened as (i, j) -> i*d + j.
BraidedSpace parse_braiding_text(const std::string& text);
BraidedSpace load_braiding_file(const std::string& path);

std::vector<std::string> preset_names();
const std::string& preset_text(const std::string& name);
OperadPresentation load_preset(const std::string& name);

std::string read_file(const std::string& path);

} // namespace braidops
