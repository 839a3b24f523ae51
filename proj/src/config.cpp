#include "svi/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace svi {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& raw, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(raw, &pos);
    if (pos != raw.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: invalid number for " + what + ": '" + raw + "'");
  }
}

int parse_int(const std::string& raw, const std::string& what) {
  double v = parse_number(raw, what);
  int i = static_cast<int>(v);
  if (static_cast<double>(i) != v)
    throw std::invalid_argument("config: " + what + " must be an integer");
  return i;
}

// Returns the value if present, empty string otherwise.
std::string lookup(const ConfigDoc& doc, const std::string& section,
                   const std::string& key) {
  auto sit = doc.find(section);
  if (sit == doc.end()) return "";
  auto kit = sit->second.find(key);
  return kit == sit->second.end() ? "" : kit->second;
}

}  // namespace

ConfigDoc parse_config_text(const std::string& text) {
  ConfigDoc doc;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("config line " + std::to_string(lineno) +
                                    ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      doc[section];
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
    doc[section][key] = value;
  }
  return doc;
}

ConfigDoc parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

Vec parse_vector_literal(const std::string& text) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("vector literal must be bracketed: '" + text + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<double> vals;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw std::invalid_argument("vector literal has an empty component: '" + text + "'");
    vals.push_back(parse_number(item, "vector component"));
  }
  if (vals.empty()) throw std::invalid_argument("vector literal is empty: '" + text + "'");
  Vec v(static_cast<int>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<int>(i)) = vals[i];
  return v;
}

SviProblem RunSpec::build_problem() const {
  if (problem_kind == "example1") return build_example1(dim);
  if (problem_kind == "example2") return build_example2();
  throw std::invalid_argument("unknown problem '" + problem_kind + "'");
}

Vec RunSpec::build_initial(const SviProblem& p) const {
  if (init_vector) {
    if (static_cast<int>(init_vector->size()) != p.dim1())
      throw std::invalid_argument("initial vector has dimension " +
                                  std::to_string(init_vector->size()) + ", problem needs " +
                                  std::to_string(p.dim1()));
    return *init_vector;
  }
  if (init_name.empty()) throw std::invalid_argument("no initial point specified");
  const bool is_ex1_preset = init_name.size() == 2 && init_name[0] == 'I';  // Ia..Id
  if (is_ex1_preset && problem_kind != "example1")
    throw std::invalid_argument("initial preset '" + init_name +
                                "' is only valid with example1");
  if (!is_ex1_preset && problem_kind != "example2")
    throw std::invalid_argument("initial preset '" + init_name +
                                "' is only valid with example2");
  return case_initial(init_name, p.dim1());
}

RunSpec default_runspec(const std::string& problem_kind, int dim) {
  RunSpec spec;
  spec.problem_kind = problem_kind;
  spec.dim = dim;
  if (problem_kind == "example1") {
    spec.schedule = schedule_ex1();
    spec.solver.tol = 1e-6;
    spec.solver.stop_rule = StopRule::residual;
    spec.solver.moudafi_lambda = 0.1;
    spec.solver.moudafi_gamma = 0.1;
    spec.solver.max_iter = 1000;
    spec.init_name = "Ia";
  } else if (problem_kind == "example2") {
    spec.schedule = schedule_ex2();
    spec.solver.tol = 1e-4;
    spec.solver.stop_rule = StopRule::distance;
    spec.solver.moudafi_lambda = 1.0 / 15.0;
    spec.solver.moudafi_gamma = 1.0 / 15.0;
    spec.solver.max_iter = 2000;
    spec.init_name = "IIa";
  } else {
    throw std::invalid_argument("unknown problem '" + problem_kind + "'");
  }
  return spec;
}

RunSpec runspec_from_config(const ConfigDoc& doc) {
  std::string preset = lookup(doc, "problem", "preset");
  if (preset.empty()) throw std::invalid_argument("config: [problem] preset is required");

  int dim = 200;
  std::string dim_raw = lookup(doc, "problem", "dim");
  if (!dim_raw.empty()) dim = parse_int(dim_raw, "[problem] dim");

  RunSpec spec = default_runspec(preset, dim);

  std::string sched = lookup(doc, "schedule", "preset");
  if (sched == "ex1") {
    spec.schedule = schedule_ex1();
  } else if (sched == "ex2") {
    spec.schedule = schedule_ex2();
  } else if (!sched.empty()) {
    throw std::invalid_argument("config: unknown schedule preset '" + sched + "'");
  }
  std::string acoef = lookup(doc, "schedule", "alpha_coeffs");
  std::string lcoef = lookup(doc, "schedule", "lambda_coeffs");
  if (!acoef.empty() || !lcoef.empty()) {
    if (acoef.empty() || lcoef.empty())
      throw std::invalid_argument(
          "config: alpha_coeffs and lambda_coeffs must be given together");
    Vec a = parse_vector_literal(acoef);
    Vec l = parse_vector_literal(lcoef);
    if (a.size() != 4 || l.size() != 2)
      throw std::invalid_argument(
          "config: alpha_coeffs needs 4 entries [p,q,r,s] and lambda_coeffs 2 [u,v]");
    spec.schedule = schedule_from_coeffs(a(0), a(1), a(2), a(3), l(0), l(1), "config");
  }
  std::string rho = lookup(doc, "schedule", "rho");
  if (!rho.empty()) spec.schedule.rho = parse_number(rho, "[schedule] rho");
  std::string c = lookup(doc, "schedule", "c");
  if (!c.empty()) spec.schedule.c = parse_number(c, "[schedule] c");

  std::string variant = lookup(doc, "solver", "variant");
  if (!variant.empty()) spec.solver.variant = variant_from_name(variant);
  std::string tol = lookup(doc, "solver", "tol");
  if (!tol.empty()) spec.solver.tol = parse_number(tol, "[solver] tol");
  std::string max_iter = lookup(doc, "solver", "max_iter");
  if (!max_iter.empty()) spec.solver.max_iter = parse_int(max_iter, "[solver] max_iter");
  std::string stop = lookup(doc, "solver", "stop_rule");
  if (stop == "residual") {
    spec.solver.stop_rule = StopRule::residual;
  } else if (stop == "distance") {
    spec.solver.stop_rule = StopRule::distance;
  } else if (!stop.empty()) {
    throw std::invalid_argument("config: unknown stop_rule '" + stop + "'");
  }
  std::string mlam = lookup(doc, "solver", "moudafi_lambda");
  if (!mlam.empty()) spec.solver.moudafi_lambda = parse_number(mlam, "moudafi_lambda");
  std::string mgam = lookup(doc, "solver", "moudafi_gamma");
  if (!mgam.empty()) spec.solver.moudafi_gamma = parse_number(mgam, "moudafi_gamma");

  std::string init = lookup(doc, "solver", "init");
  if (!init.empty()) {
    if (init.front() == '[') {
      spec.init_vector = parse_vector_literal(init);
      spec.init_name.clear();
    } else {
      spec.init_name = init;
      spec.init_vector.reset();
    }
  }
  return spec;
}

}  // namespace svi
