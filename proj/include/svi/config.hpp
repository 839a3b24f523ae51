#pragma once

#include "svi/solver.hpp"

#include <map>
#include <string>

// Flat key-value config documents with [problem]/[schedule]/[solver]
// sections, and the RunSpec they (or CLI flags) assemble into.

namespace svi {

// Parsed config document: section -> key -> raw value string. Lines are
// `key = value`; `#` and `;` start comments; vectors are bracketed comma
// lists; numbers in decimal or scientific notation.
using ConfigDoc = std::map<std::string, std::map<std::string, std::string>>;

ConfigDoc parse_config_text(const std::string& text);
ConfigDoc parse_config_file(const std::string& path);

Vec parse_vector_literal(const std::string& text);

// Everything needed to execute one solve: problem source, schedule, solver
// configuration, initial point, output destination.
struct RunSpec {
  std::string problem_kind = "example1";  // example1 | example2
  int dim = 200;                          // example1 truncation
  Schedule schedule;
  SolverConfig solver;
  std::string init_name;          // Ia..Id / IIa..IId, empty when explicit
  std::optional<Vec> init_vector; // explicit initial point
  std::string out_path;

  SviProblem build_problem() const;
  Vec build_initial(const SviProblem& p) const;
};

// Defaults for a named problem: its experiment schedule, stopping rule,
// tolerance, and first initial-point preset.
RunSpec default_runspec(const std::string& problem_kind, int dim = 200);

// Assembles a RunSpec from a parsed document. Unknown keys or invalid
// values throw std::invalid_argument with a diagnostic.
RunSpec runspec_from_config(const ConfigDoc& doc);

}  // namespace svi
