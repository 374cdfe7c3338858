// Python bindings for the core operations: formulas and search states,
// DIMACS io, instance generation, the search heuristics and the oracle.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "docsat/dimacs.hpp"
#include "docsat/engine.hpp"
#include "docsat/experiment.hpp"
#include "docsat/generator.hpp"
#include "docsat/oracle.hpp"
#include "docsat/summary.hpp"

namespace py = pybind11;
using namespace docsat;

namespace {

Formula formula_from_clauses(int n_vars,
                             const std::vector<std::vector<Lit>> &clauses) {
  return Formula::from_lists(n_vars, clauses);
}

std::vector<std::vector<Lit>> formula_clauses(const Formula &f) {
  std::vector<std::vector<Lit>> out;
  out.reserve(f.num_clauses());
  for (const Clause &c : f.clauses())
    out.push_back({c[0], c[1], c[2]});
  return out;
}

Assignment to_assignment(const std::vector<bool> &x) {
  Assignment out(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    out[i] = x[i] ? 1 : 0;
  return out;
}

std::vector<bool> from_assignment(const Assignment &x) {
  std::vector<bool> out(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    out[i] = x[i] != 0;
  return out;
}

} // namespace

PYBIND11_MODULE(_docsat, m) {
  m.doc() = "3-SAT stochastic local search with oversatisfied-constraint "
            "dissipation";

  py::register_exception<Error>(m, "DocsatError", PyExc_ValueError);

  py::class_<Formula>(m, "Formula")
      .def_static("build", &formula_from_clauses, py::arg("n_vars"),
                  py::arg("clauses"))
      .def_property_readonly("num_vars", &Formula::num_vars)
      .def_property_readonly("num_clauses", &Formula::num_clauses)
      .def("clauses", &formula_clauses)
      .def("pos_count", &Formula::pos_count, py::arg("var"))
      .def("neg_count", &Formula::neg_count, py::arg("var"))
      .def("occ_diff", &Formula::occ_diff, py::arg("var"))
      .def("tlc_extremes",
           [](const Formula &f) {
             const TlcExtremes ext = f.tlc_extremes();
             return py::make_tuple(from_assignment(ext.min_assignment),
                                   from_assignment(ext.max_assignment));
           })
      .def("__repr__", [](const Formula &f) {
        return "<Formula vars=" + std::to_string(f.num_vars()) +
               " clauses=" + std::to_string(f.num_clauses()) + ">";
      });

  py::class_<SearchState>(m, "SearchState")
      .def(py::init([](const Formula &f, const std::vector<bool> &x) {
             return SearchState(f, to_assignment(x));
           }),
           py::arg("formula"), py::arg("assignment"), py::keep_alive<1, 2>())
      .def_property_readonly("energy", &SearchState::energy)
      .def_property_readonly("tlc", &SearchState::tlc)
      .def_property_readonly("critical_count", &SearchState::critical_count)
      .def_property_readonly("unsat_clauses",
                             [](const SearchState &s) {
                               auto v = s.unsat_clauses();
                               std::sort(v.begin(), v.end());
                               return v;
                             })
      .def("assignment",
           [](const SearchState &s) { return from_assignment(s.assignment()); })
      .def("clause_true_count", &SearchState::clause_true_count, py::arg("m"))
      .def("flip",
           [](SearchState &s, int var) {
             const FlipTransitions t = s.flip(var);
             py::dict out;
             out["oversat_to_crit"] = t.oversat_to_crit;
             out["unsat_to_crit"] = t.unsat_to_crit;
             out["crit_to_unsat"] = t.crit_to_unsat;
             out["crit_to_oversat"] = t.crit_to_oversat;
             return out;
           },
           py::arg("var"))
      .def("breakcount", &SearchState::breakcount, py::arg("var"))
      .def("makecount", &SearchState::makecount, py::arg("var"))
      .def("tlc_delta", &SearchState::tlc_delta, py::arg("var"));

  m.def("parse_dimacs",
        [](const std::string &text, bool lenient) {
          return parse_dimacs(text, lenient ? ParseMode::lenient
                                            : ParseMode::strict);
        },
        py::arg("text"), py::arg("lenient") = false);
  m.def("read_dimacs_file",
        [](const std::string &path, bool lenient) {
          return read_dimacs_file(path, lenient ? ParseMode::lenient
                                                : ParseMode::strict);
        },
        py::arg("path"), py::arg("lenient") = false);
  m.def("write_dimacs", &write_dimacs, py::arg("formula"));
  m.def("write_dimacs_file", &write_dimacs_file, py::arg("formula"),
        py::arg("path"));

  py::class_<GenConfig>(m, "GenConfig")
      .def(py::init<>())
      .def_readwrite("n_vars", &GenConfig::n_vars)
      .def_readwrite("alpha", &GenConfig::alpha)
      .def_readwrite("seed", &GenConfig::seed)
      .def_readwrite("forbid_duplicate_clauses",
                     &GenConfig::forbid_duplicate_clauses)
      .def_readwrite("planted", &GenConfig::planted)
      .def_readwrite("planted_balanced", &GenConfig::planted_balanced)
      .def_readwrite("filter_satisfiable", &GenConfig::filter_satisfiable);
  m.def("generate", [](const GenConfig &cfg) { return generate(cfg); },
        py::arg("config"));
  m.def("mix_seed", [](uint64_t master, uint64_t index) {
          return mix_seed(master, index);
        },
        py::arg("master"), py::arg("index"));

  py::enum_<HeuristicKind>(m, "HeuristicKind")
      .value("walksat", HeuristicKind::walksat)
      .value("docsat", HeuristicKind::docsat)
      .value("gwsat", HeuristicKind::gwsat)
      .value("tabu", HeuristicKind::tabu)
      .value("novelty", HeuristicKind::novelty);

  py::class_<HeuristicConfig>(m, "HeuristicConfig")
      .def(py::init<>())
      .def_readwrite("kind", &HeuristicConfig::kind)
      .def_readwrite("p_walk", &HeuristicConfig::p_walk)
      .def_readwrite("r_doc", &HeuristicConfig::r_doc)
      .def_readwrite("tabu_len", &HeuristicConfig::tabu_len)
      .def_readwrite("p_novelty", &HeuristicConfig::p_novelty)
      .def_readwrite("negate_doc_term", &HeuristicConfig::negate_doc_term)
      .def_readwrite("name", &HeuristicConfig::name)
      .def("label", &HeuristicConfig::label);

  py::class_<TrialResult>(m, "TrialResult")
      .def_readonly("solved", &TrialResult::solved)
      .def_readonly("flips_used", &TrialResult::flips_used)
      .def_readonly("final_energy", &TrialResult::final_energy)
      .def_readonly("final_tlc", &TrialResult::final_tlc)
      .def_readonly("seed", &TrialResult::seed)
      .def_property_readonly("solution", [](const TrialResult &r) {
        return from_assignment(r.solution);
      });

  py::class_<RestartResult>(m, "RestartResult")
      .def_readonly("trials_executed", &RestartResult::trials_executed)
      .def_readonly("n_solved", &RestartResult::n_solved)
      .def_readonly("p_hat", &RestartResult::p_hat)
      .def_readonly("trials", &RestartResult::trials);

  m.def("run_trial",
        [](const Formula &f, const HeuristicConfig &h, uint64_t max_flips,
           uint64_t seed) {
          Rng rng(seed);
          py::gil_scoped_release release;
          return run_trial(f, h, max_flips, rng);
        },
        py::arg("formula"), py::arg("heuristic"), py::arg("max_flips"),
        py::arg("seed"));
  m.def("run_restarts",
        [](const Formula &f, const HeuristicConfig &h, uint64_t max_flips,
           uint32_t n_trials, bool stop_on_solution, uint64_t master_seed) {
          TrialConfig t;
          t.max_flips = max_flips;
          t.n_trials = n_trials;
          t.stop_on_solution = stop_on_solution;
          py::gil_scoped_release release;
          return run_restarts(f, h, t, master_seed);
        },
        py::arg("formula"), py::arg("heuristic"), py::arg("max_flips"),
        py::arg("n_trials"), py::arg("stop_on_solution") = true,
        py::arg("master_seed") = 1);

  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("satisfiable", &OracleReport::satisfiable)
      .def_readonly("min_energy", &OracleReport::min_energy)
      .def_readonly("tlc_by_energy", &OracleReport::tlc_by_energy)
      .def_property_readonly("solutions",
                             [](const OracleReport &r) {
                               std::vector<std::vector<bool>> out;
                               out.reserve(r.solution_masks.size());
                               for (uint32_t mask : r.solution_masks)
                                 out.push_back(from_assignment(
                                     decode_mask(mask, r.n_vars)));
                               return out;
                             })
      .def("states_at", &OracleReport::states_at, py::arg("energy"))
      .def("mean_tlc_at", &OracleReport::mean_tlc_at, py::arg("energy"));
  m.def("enumerate_assignments", &enumerate_assignments, py::arg("formula"),
        py::arg("n_limit") = 25);

  py::enum_<DpllStatus>(m, "DpllStatus")
      .value("satisfiable", DpllStatus::satisfiable)
      .value("unsatisfiable", DpllStatus::unsatisfiable)
      .value("unknown", DpllStatus::unknown);
  py::class_<DpllResult>(m, "DpllResult")
      .def_readonly("status", &DpllResult::status)
      .def_readonly("decisions", &DpllResult::decisions)
      .def_property_readonly("witness", [](const DpllResult &r) {
        return from_assignment(r.witness);
      });
  m.def("dpll_sat",
        [](const Formula &f, uint64_t budget) {
          py::gil_scoped_release release;
          return dpll_sat(f, budget);
        },
        py::arg("formula"), py::arg("decision_budget") = uint64_t{50'000'000});

  py::class_<FitResult>(m, "FitResult")
      .def_readonly("fit_b", &FitResult::fit_b)
      .def_readonly("prefactor", &FitResult::prefactor)
      .def_readonly("residual", &FitResult::residual)
      .def_readonly("n_points", &FitResult::n_points);
  m.def("fit_scaling", &fit_scaling, py::arg("points"));

  m.def("classify_instances",
        [](const std::vector<double> &p, double hard_below,
           double easy_above) {
          const Classification c =
              classify_instances(p, hard_below, easy_above);
          py::dict out;
          out["hard"] = c.hard;
          out["easy"] = c.easy;
          out["other"] = c.other;
          return out;
        },
        py::arg("p"), py::arg("hard_below") = 0.01,
        py::arg("easy_above") = 0.9);
}
