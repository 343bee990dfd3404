#include "bgal/problem_file.hpp"

#include <fmt/format.h>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bgal/error.hpp"

namespace bgal {

namespace pt = boost::property_tree;

namespace {

using Section = std::map<std::string, std::string>;
using Sections = std::map<std::string, Section>;

Sections read_sections(std::string_view text) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ValidationError(fmt::format("problem file line {}: {}", e.line(), e.message()));
  }
  Sections out;
  for (const auto& [name, node] : tree) {
    if (node.empty()) {
      throw ValidationError(fmt::format("key '{}' outside of any section", name));
    }
    auto& section = out[name];
    for (const auto& [key, value] : node) section[key] = value.get_value<std::string>();
  }
  return out;
}

void require_known(const Sections& sections, const std::set<std::string>& known_sections,
                   const std::map<std::string, std::set<std::string>>& known_keys) {
  for (const auto& [name, section] : sections) {
    if (!known_sections.contains(name)) {
      throw ValidationError(fmt::format("unknown section [{}]", name));
    }
    const auto& keys = known_keys.at(name);
    for (const auto& [key, value] : section) {
      if (!keys.contains(key)) throw ValidationError(fmt::format("unknown key [{}] {}", name, key));
    }
  }
}

const Section* find_section(const Sections& sections, const std::string& name) {
  auto it = sections.find(name);
  return it == sections.end() ? nullptr : &it->second;
}

std::optional<std::string> find_key(const Sections& sections, const std::string& section,
                                    const std::string& key) {
  const Section* s = find_section(sections, section);
  if (!s) return std::nullopt;
  auto it = s->find(key);
  if (it == s->end()) return std::nullopt;
  return it->second;
}

Expr parse_field(const std::string& section, const std::string& key, const std::string& text) {
  try {
    return parse_expr(text);
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), fmt::format("[{}] {}: {}", section, key, e.what()), e.offset());
  }
}

std::optional<Expr> optional_expr(const Sections& sections, const std::string& section,
                                  const std::string& key, const VariableSet* allowed) {
  auto text = find_key(sections, section, key);
  if (!text) return std::nullopt;
  Expr e = parse_field(section, key, *text);
  if (allowed && !e.depends_only_on(*allowed)) {
    throw ValidationError(fmt::format("[{}] {} may depend on x only", section, key));
  }
  return e;
}

double constant_value(const Sections& sections, const std::string& section,
                      const std::string& key) {
  auto text = find_key(sections, section, key);
  if (!text) throw ValidationError(fmt::format("missing [{}] {}", section, key));
  const Expr e = parse_field(section, key, *text);
  if (!e.is_constant()) {
    throw ValidationError(fmt::format("[{}] {} must be a constant expression", section, key));
  }
  return e.evaluate_at(0.0);
}

BoundaryData read_bc(const Sections& sections, const std::string& section) {
  if (!find_section(sections, section)) {
    throw ValidationError(fmt::format("missing section [{}]", section));
  }
  BoundaryData bc;
  bc.value_a = constant_value(sections, section, "value_a");
  bc.value_b = constant_value(sections, section, "value_b");
  const bool has_a = find_key(sections, section, "deriv_a").has_value();
  const bool has_b = find_key(sections, section, "deriv_b").has_value();
  if (has_a == has_b) {
    throw ValidationError(
        fmt::format("[{}] needs exactly one of deriv_a / deriv_b", section));
  }
  bc.deriv_end = has_a ? End::A : End::B;
  bc.deriv_value = constant_value(sections, section, has_a ? "deriv_a" : "deriv_b");
  return bc;
}

void read_domain(const Sections& sections, double& a, double& b) {
  if (!find_section(sections, "domain")) throw ValidationError("missing section [domain]");
  a = constant_value(sections, "domain", "a");
  b = constant_value(sections, "domain", "b");
  if (!(b > a)) throw ValidationError("[domain] requires a < b");
}

ExactSolutions read_exact(const Sections& sections) {
  const VariableSet only_x{Variable::X};
  return {optional_expr(sections, "exact", "p", &only_x),
          optional_expr(sections, "exact", "q", &only_x)};
}

EquationSpec read_equation(const Sections& sections, const std::string& section, char prefix,
                           const std::string& forcing_key) {
  const VariableSet only_x{Variable::X};
  EquationSpec eq;
  for (int k = 0; k < 6; ++k) {
    if (auto e = optional_expr(sections, section, fmt::format("{}{}", prefix, k + 1), &only_x)) {
      eq.coeffs[k] = *e;
    }
  }
  if (auto e = optional_expr(sections, section, forcing_key, &only_x)) eq.forcing = *e;
  eq.nonlinear = optional_expr(sections, section, "nonlinear", nullptr);
  return eq;
}

std::string bc_text(const std::string& section, const BoundaryData& bc) {
  return fmt::format("[{}]\nvalue_a = {}\nvalue_b = {}\n{} = {}\n", section, bc.value_a,
                     bc.value_b, bc.deriv_end == End::A ? "deriv_a" : "deriv_b", bc.deriv_value);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(fmt::format("cannot read problem file '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

bool is_sixth_order_text(std::string_view text) {
  const Sections sections = read_sections(text);
  return sections.contains("equation");
}

ProblemFile parse_problem(std::string_view text) {
  const Sections sections = read_sections(text);
  if (sections.contains("equation")) {
    throw ValidationError("sixth-order problem ([equation] section) where a coupled system was expected");
  }
  std::map<std::string, std::set<std::string>> keys{
      {"domain", {"a", "b"}},
      {"equation.p", {"a1", "a2", "a3", "a4", "a5", "a6", "f", "nonlinear"}},
      {"equation.q", {"b1", "b2", "b3", "b4", "b5", "b6", "g", "nonlinear"}},
      {"bc.p", {"value_a", "value_b", "deriv_a", "deriv_b"}},
      {"bc.q", {"value_a", "value_b", "deriv_a", "deriv_b"}},
      {"exact", {"p", "q"}},
  };
  std::set<std::string> names;
  for (const auto& [name, _] : keys) names.insert(name);
  require_known(sections, names, keys);

  ProblemFile file;
  read_domain(sections, file.spec.a, file.spec.b);
  file.spec.eq_p = read_equation(sections, "equation.p", 'a', "f");
  file.spec.eq_q = read_equation(sections, "equation.q", 'b', "g");
  file.spec.bc_p = read_bc(sections, "bc.p");
  file.spec.bc_q = read_bc(sections, "bc.q");
  file.exact = read_exact(sections);
  file.spec.validate();
  return file;
}

SixthOrderFile parse_sixth_order(std::string_view text) {
  const Sections sections = read_sections(text);
  std::map<std::string, std::set<std::string>> keys{
      {"domain", {"a", "b"}},
      {"equation", {"c0", "c1", "c2", "c3", "c4", "c5", "r", "nonlinear"}},
      {"bc.p", {"value_a", "value_b", "deriv_a", "deriv_b"}},
      {"bc.q", {"value_a", "value_b", "deriv_a", "deriv_b"}},
      {"exact", {"p", "q"}},
  };
  std::set<std::string> names;
  for (const auto& [name, _] : keys) names.insert(name);
  require_known(sections, names, keys);
  if (!sections.contains("equation")) throw ValidationError("missing section [equation]");

  SixthOrderFile file;
  read_domain(sections, file.spec.a, file.spec.b);
  const VariableSet only_x{Variable::X};
  for (int k = 0; k < 6; ++k) {
    if (auto e = optional_expr(sections, "equation", fmt::format("c{}", k), &only_x)) {
      file.spec.coeffs[k] = *e;
    }
  }
  if (auto e = optional_expr(sections, "equation", "r", &only_x)) file.spec.forcing = *e;
  file.spec.nonlinear = optional_expr(sections, "equation", "nonlinear", nullptr);
  file.spec.bc_p = read_bc(sections, "bc.p");
  file.spec.bc_q = read_bc(sections, "bc.q");
  file.exact = read_exact(sections);
  file.spec.validate();
  return file;
}

ProblemFile reduce_file(const SixthOrderFile& file) { return {reduce(file.spec), file.exact}; }

ProblemFile load_problem(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (is_sixth_order_text(text)) return reduce_file(parse_sixth_order(text));
  return parse_problem(text);
}

SixthOrderFile load_sixth_order(const std::filesystem::path& path) {
  return parse_sixth_order(read_file(path));
}

std::string write_problem(const ProblemFile& file) {
  const auto& s = file.spec;
  std::string out = fmt::format("[domain]\na = {}\nb = {}\n\n", s.a, s.b);
  auto equation = [&](const std::string& section, char prefix, const char* forcing,
                      const EquationSpec& eq) {
    out += fmt::format("[{}]\n", section);
    for (int k = 0; k < 6; ++k) {
      out += fmt::format("{}{} = {}\n", prefix, k + 1, eq.coeffs[k].to_string());
    }
    out += fmt::format("{} = {}\n", forcing, eq.forcing.to_string());
    if (eq.nonlinear) out += fmt::format("nonlinear = {}\n", eq.nonlinear->to_string());
    out += "\n";
  };
  equation("equation.p", 'a', "f", s.eq_p);
  equation("equation.q", 'b', "g", s.eq_q);
  out += bc_text("bc.p", s.bc_p) + "\n";
  out += bc_text("bc.q", s.bc_q);
  if (file.exact.p || file.exact.q) {
    out += "\n[exact]\n";
    if (file.exact.p) out += fmt::format("p = {}\n", file.exact.p->to_string());
    if (file.exact.q) out += fmt::format("q = {}\n", file.exact.q->to_string());
  }
  return out;
}

}  // namespace bgal
