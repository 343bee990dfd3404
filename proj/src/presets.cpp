#include "bgal/presets.hpp"

#include <array>
#include <string>
#include <utility>

#include "bgal/error.hpp"
#include "preset_texts.hpp"

namespace bgal {

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 4> kPresets{{
    {"example1", preset_texts::kExample1},
    {"example2", preset_texts::kExample2},
    {"example3", preset_texts::kExample3},
    {"example4", preset_texts::kExample4},
}};

}  // namespace

std::vector<std::string_view> preset_names() {
  std::vector<std::string_view> names;
  for (const auto& [name, _] : kPresets) names.push_back(name);
  return names;
}

std::string_view preset_text(std::string_view name) {
  for (const auto& [n, text] : kPresets) {
    if (n == name) return text;
  }
  throw ArgumentError("unknown preset '" + std::string(name) +
                      "' (expected example1, example2, example3 or example4)");
}

ProblemFile preset(std::string_view name) {
  const std::string_view text = preset_text(name);
  if (is_sixth_order_text(text)) return reduce_file(parse_sixth_order(text));
  return parse_problem(text);
}

}  // namespace bgal
