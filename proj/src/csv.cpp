#include "svi/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace svi {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trace_csv(std::ostream& os, const IterationTrace& trace) {
  os << "iter,tol,step_norm,alpha_n,lambda_n,dist_to_known,elapsed_ms\n";
  for (const TraceRow& r : trace.rows) {
    os << r.n << ',' << format_double(r.tol_value) << ',' << format_double(r.step_norm)
       << ',' << format_double(r.alpha_n) << ',' << format_double(r.lambda_n) << ',';
    if (r.dist_to_known) os << format_double(*r.dist_to_known);
    os << ',' << format_double(r.elapsed_ms) << '\n';
  }
}

bool write_trace_csv_file(const std::string& path, const IterationTrace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  write_trace_csv(out, trace);
  return static_cast<bool>(out);
}

void write_path_csv(std::ostream& os, const PathReport& report) {
  os << "alpha,converged,norm_x,dist_to_known,ratio\n";
  for (const PathRow& r : report.rows) {
    os << format_double(r.alpha) << ',' << (r.converged ? "true" : "false") << ','
       << format_double(r.norm_x) << ',';
    if (r.dist_to_known) os << format_double(*r.dist_to_known);
    os << ',';
    if (r.ratio) os << format_double(*r.ratio);
    os << '\n';
  }
}

bool write_path_csv_file(const std::string& path, const PathReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  write_path_csv(out, report);
  return static_cast<bool>(out);
}

}  // namespace svi
