// Python bindings for the split-inclusion solver core: problem builders,
// single steps, full runs with traces, and the regularization path.

#include "svi/config.hpp"
#include "svi/oracle.hpp"
#include "svi/problem.hpp"
#include "svi/solver.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

namespace py = pybind11;

namespace {

svi::Schedule schedule_by_name(const std::string& name) {
  if (name == "ex1") return svi::schedule_ex1();
  if (name == "ex2") return svi::schedule_ex2();
  throw std::invalid_argument("unknown schedule preset '" + name + "' (use ex1 or ex2)");
}

svi::StopRule stop_by_name(const std::string& name) {
  if (name == "residual") return svi::StopRule::residual;
  if (name == "distance") return svi::StopRule::distance;
  throw std::invalid_argument("unknown stop rule '" + name + "'");
}

py::dict trace_to_dict(const svi::IterationTrace& trace) {
  const std::size_t n = trace.rows.size();
  Eigen::VectorXi iters(n);
  svi::Vec tol(n), step(n), alpha(n), lambda(n), dist(n), ms(n);
  bool has_dist = true;
  for (std::size_t i = 0; i < n; ++i) {
    const svi::TraceRow& r = trace.rows[i];
    iters(static_cast<int>(i)) = r.n;
    tol(static_cast<int>(i)) = r.tol_value;
    step(static_cast<int>(i)) = r.step_norm;
    alpha(static_cast<int>(i)) = r.alpha_n;
    lambda(static_cast<int>(i)) = r.lambda_n;
    ms(static_cast<int>(i)) = r.elapsed_ms;
    if (r.dist_to_known)
      dist(static_cast<int>(i)) = *r.dist_to_known;
    else
      has_dist = false;
  }
  py::dict d;
  d["iter"] = iters;
  d["tol"] = tol;
  d["step_norm"] = step;
  d["alpha_n"] = alpha;
  d["lambda_n"] = lambda;
  if (has_dist)
    d["dist_to_known"] = dist;
  else
    d["dist_to_known"] = py::none();
  d["elapsed_ms"] = ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(svi, m) {
  m.doc() = "Split variational inclusion solvers: regularized, forward-backward, "
            "and correction-step schemes with benchmark problems";

  py::class_<svi::SviProblem, std::shared_ptr<svi::SviProblem>>(m, "Problem")
      .def_property_readonly("dim1", &svi::SviProblem::dim1)
      .def_property_readonly("dim2", &svi::SviProblem::dim2)
      .def_property_readonly("tau_tilde", &svi::SviProblem::tau_tilde)
      .def_property_readonly("norm_sq_A", &svi::SviProblem::norm_sq_A)
      .def_readonly("label", &svi::SviProblem::label)
      .def_property_readonly("known_solution",
                             [](const svi::SviProblem& p) -> py::object {
                               if (!p.known_solution) return py::none();
                               return py::cast(*p.known_solution);
                             })
      .def("__repr__", [](const svi::SviProblem& p) {
        return "<Problem '" + p.label + "' dim " + std::to_string(p.dim1()) + " -> " +
               std::to_string(p.dim2()) + ">";
      });

  m.def("build_example1", &svi::build_example1, py::arg("dim") = 200,
        "First benchmark problem on R^dim; solution is the origin.");
  m.def("build_example2", &svi::build_example2,
        "Second benchmark problem on R^3; solution is (0, 0, 1).");
  m.def("case_initial", &svi::case_initial, py::arg("name"), py::arg("dim") = 200,
        "Initial point presets Ia..Id (first problem) and IIa..IId (second).");

  m.def("prox_l1", &svi::prox_l1, py::arg("lam"), py::arg("x"),
        "Componentwise soft threshold sign(x)*max(|x|-lam, 0).");

  m.def("step_regularized", &svi::step_regularized, py::arg("problem"), py::arg("z"),
        py::arg("lam"), py::arg("alpha"));
  m.def("step_forward_backward", &svi::step_forward_backward, py::arg("problem"),
        py::arg("z"), py::arg("lam"));
  m.def("step_moudafi", &svi::step_moudafi, py::arg("problem"), py::arg("z"),
        py::arg("lam"), py::arg("gamma"));

  m.def("residual_tol", &svi::residual_tol, py::arg("problem"), py::arg("lam"),
        py::arg("z"),
        "||z - J_lam^B1(z - f1 z)|| + ||Az - J_lam^B2(Az - f2 Az)|| (unscaled form).");
  m.def(
      "distance_tol",
      [](const svi::SviProblem& p, const svi::Vec& z) {
        if (!p.known_solution)
          throw std::invalid_argument("distance_tol: problem has no known solution");
        return svi::distance_tol(z, *p.known_solution, p.A, p.A.apply(*p.known_solution));
      },
      py::arg("problem"), py::arg("z"),
      "||z - x*|| + ||Az - A x*|| against the problem's known solution.");
  m.def("lambda_upper_bound", &svi::lambda_upper_bound, py::arg("problem"), py::arg("rho"));

  m.def(
      "run",
      [](const svi::SviProblem& p, const std::string& variant, const svi::Vec& z1,
         const std::string& schedule, double tol, int max_iter, const std::string& stop,
         double moudafi_lambda, double moudafi_gamma, bool record_timing) {
        svi::SolverConfig cfg;
        cfg.variant = svi::variant_from_name(variant);
        cfg.tol = tol;
        cfg.max_iter = max_iter;
        cfg.stop_rule = stop_by_name(stop);
        cfg.moudafi_lambda = moudafi_lambda;
        cfg.moudafi_gamma = moudafi_gamma;
        cfg.record_timing = record_timing;
        svi::SolveResult r = svi::run(p, schedule_by_name(schedule), cfg, z1);
        py::dict d;
        d["final_iterate"] = r.final_iterate;
        d["iterations"] = r.iterations;
        d["converged"] = r.converged;
        d["final_tol"] = r.final_tol;
        d["gamma_warning"] = r.gamma_warning;
        d["trace"] = trace_to_dict(r.trace);
        return d;
      },
      py::arg("problem"), py::arg("variant"), py::arg("z1"), py::arg("schedule") = "ex1",
      py::arg("tol") = 1e-6, py::arg("max_iter") = 1000, py::arg("stop") = "residual",
      py::arg("moudafi_lambda") = 0.1, py::arg("moudafi_gamma") = 0.1,
      py::arg("record_timing") = true,
      "Iterate the chosen variant from z1; returns a dict with the final iterate, "
      "counts, and per-iteration trace arrays.");

  m.def(
      "solve_rsvi_fixed_alpha",
      [](const svi::SviProblem& p, double alpha, double lam, double tol, int max_iter) {
        svi::FixedAlphaResult r = svi::solve_rsvi_fixed_alpha(p, alpha, lam, tol, max_iter);
        py::dict d;
        d["x"] = r.x;
        d["converged"] = r.converged;
        d["iterations"] = r.iterations;
        return d;
      },
      py::arg("problem"), py::arg("alpha"), py::arg("lam"), py::arg("tol") = 1e-12,
      py::arg("max_iter") = 100000,
      "Solve the regularized inclusion at a fixed regularization weight.");

  m.def(
      "regularization_path",
      [](const svi::SviProblem& p, const std::vector<double>& alphas, double lam) {
        svi::PathReport r = svi::regularization_path(p, alphas, lam);
        py::list rows;
        for (const svi::PathRow& row : r.rows) {
          py::dict d;
          d["alpha"] = row.alpha;
          d["converged"] = row.converged;
          d["norm_x"] = row.norm_x;
          d["dist_to_known"] =
              row.dist_to_known ? py::cast(*row.dist_to_known) : py::none();
          d["ratio"] = row.ratio ? py::cast(*row.ratio) : py::none();
          rows.append(d);
        }
        py::dict d;
        d["rows"] = rows;
        d["empirical_M"] = r.empirical_M;
        d["max_norm"] = r.max_norm;
        d["all_converged"] = r.all_converged;
        return d;
      },
      py::arg("problem"), py::arg("alphas"), py::arg("lam"),
      "Solutions of the regularized inclusion along a decreasing alpha list.");

  m.def(
      "scalar_oracle_step",
      [](double b1, double b2, double fc1, double fc2, double fF, double a,
         const std::string& variant, double lam, double alpha_or_gamma, double z) {
        svi::ScalarSviInstance inst{b1, b2, fc1, fc2, fF, a};
        return svi::scalar_oracle_step(inst, svi::variant_from_name(variant), lam,
                                       alpha_or_gamma, z);
      },
      py::arg("b1"), py::arg("b2"), py::arg("fc1"), py::arg("fc2"), py::arg("fF"),
      py::arg("a"), py::arg("variant"), py::arg("lam"), py::arg("alpha_or_gamma"),
      py::arg("z"),
      "Closed-form scalar evaluation of one step on a dim-1 instance.");
}
