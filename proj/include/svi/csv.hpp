#pragma once

#include "svi/solver.hpp"

#include <iosfwd>
#include <string>

// Deterministic CSV emission for iteration traces and regularization-path
// reports. All numbers are printed with round-trip precision, decimal point,
// no thousands separators; missing optional fields are empty.

namespace svi {

// Round-trip decimal rendering of a double ("%.17g"-style, shortest that
// parses back exactly).
std::string format_double(double v);

// Columns, in order: iter,tol,step_norm,alpha_n,lambda_n,dist_to_known,elapsed_ms.
// Header row mandatory.
void write_trace_csv(std::ostream& os, const IterationTrace& trace);
bool write_trace_csv_file(const std::string& path, const IterationTrace& trace);

// Columns: alpha,converged,norm_x,dist_to_known,ratio.
void write_path_csv(std::ostream& os, const PathReport& report);
bool write_path_csv_file(const std::string& path, const PathReport& report);

}  // namespace svi
