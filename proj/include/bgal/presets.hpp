#pragma once

#include <string_view>
#include <vector>

#include "bgal/problem_file.hpp"

namespace bgal {

/// example1 .. example4. Examples 3 and 4 are sixth-order problems and come
/// back already reduced to the coupled form.
std::vector<std::string_view> preset_names();

/// Throws ArgumentError for an unknown name.
ProblemFile preset(std::string_view name);

/// Problem-file text of a preset (sixth-order text for examples 3 and 4).
std::string_view preset_text(std::string_view name);

}  // namespace bgal
