#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "bgal/expr.hpp"
#include "bgal/problem.hpp"
#include "bgal/reduction.hpp"

namespace bgal {

/// Known exact solutions, used only for error reporting.
struct ExactSolutions {
  std::optional<Expr> p;
  std::optional<Expr> q;
};

struct ProblemFile {
  ProblemSpec spec;
  ExactSolutions exact;
};

struct SixthOrderFile {
  SixthOrderSpec spec;
  ExactSolutions exact;
};

/// True when the text holds a sixth-order problem (an `[equation]` section)
/// rather than a coupled system (`[equation.p]` / `[equation.q]`).
bool is_sixth_order_text(std::string_view text);

/// INI-style problem text, `;` starts a comment line:
///
///   [domain]      a, b
///   [equation.p]  a1..a6, f, nonlinear
///   [equation.q]  b1..b6, g, nonlinear
///   [bc.p]        value_a, value_b, and exactly one of deriv_a / deriv_b
///   [bc.q]        likewise
///   [exact]       p, q              (optional)
///
/// Omitted coefficients and forcings are 0; boundary entries are constant
/// expressions. Errors name the offending `[section] key`.
ProblemFile parse_problem(std::string_view text);

/// Sixth-order variant: `[equation]` carries c0..c5, r, nonlinear.
SixthOrderFile parse_sixth_order(std::string_view text);

/// Reads either kind of file; sixth-order problems come back reduced.
ProblemFile load_problem(const std::filesystem::path& path);
SixthOrderFile load_sixth_order(const std::filesystem::path& path);

/// Serializes in the coupled-system format; parse_problem reads it back.
std::string write_problem(const ProblemFile& file);

/// Reduces a sixth-order file; the exact p carries over and q is taken from
/// the sixth-order file's `[exact] q` (the exact p''') when present.
ProblemFile reduce_file(const SixthOrderFile& file);

}  // namespace bgal
