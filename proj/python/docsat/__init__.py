"""docsat: stochastic local search for 3-SAT with oversatisfied-constraint
dissipation.

The heavy lifting lives in the compiled extension ``docsat._docsat``; this
package re-exports its public names.
"""

from ._docsat import (
    DocsatError,
    DpllResult,
    DpllStatus,
    FitResult,
    Formula,
    GenConfig,
    HeuristicConfig,
    HeuristicKind,
    OracleReport,
    RestartResult,
    SearchState,
    TrialResult,
    classify_instances,
    dpll_sat,
    enumerate_assignments,
    fit_scaling,
    generate,
    mix_seed,
    parse_dimacs,
    read_dimacs_file,
    run_restarts,
    run_trial,
    write_dimacs,
    write_dimacs_file,
)

__all__ = [
    "DocsatError",
    "DpllResult",
    "DpllStatus",
    "FitResult",
    "Formula",
    "GenConfig",
    "HeuristicConfig",
    "HeuristicKind",
    "OracleReport",
    "RestartResult",
    "SearchState",
    "TrialResult",
    "classify_instances",
    "dpll_sat",
    "enumerate_assignments",
    "fit_scaling",
    "generate",
    "mix_seed",
    "parse_dimacs",
    "read_dimacs_file",
    "run_restarts",
    "run_trial",
    "write_dimacs",
    "write_dimacs_file",
]

__version__ = "0.1.0"
