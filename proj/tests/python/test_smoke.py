"""Smoke tests for the python bindings."""

import math

import pytest

import docsat


F1_CLAUSES = [[1, 2, 3], [-1, -2, 3], [1, -2, -3]]


def build_f1():
    return docsat.Formula.build(3, F1_CLAUSES)


def test_formula_and_state():
    f = build_f1()
    assert f.num_vars == 3
    assert f.num_clauses == 3
    assert f.clauses() == F1_CLAUSES
    assert [f.pos_count(v) for v in (1, 2, 3)] == [2, 1, 2]
    assert [f.neg_count(v) for v in (1, 2, 3)] == [1, 2, 1]

    s = docsat.SearchState(f, [True, True, True])
    assert s.energy == 0
    assert s.tlc == 5
    assert s.critical_count == 2

    s = docsat.SearchState(f, [False, False, False])
    assert s.energy == 1
    assert s.unsat_clauses == [0]
    assert s.tlc_delta(1) == 1
    assert s.tlc_delta(2) == -1
    transitions = s.flip(2)
    assert s.energy == 0
    assert transitions["unsat_to_crit"] == 1

    lo, hi = f.tlc_extremes()
    assert hi == [True, False, True]
    assert lo == [False, True, False]


def test_validation_raises():
    with pytest.raises(ValueError):
        docsat.Formula.build(2, [[1, 1, 2]])
    with pytest.raises(ValueError):
        docsat.Formula.build(3, [[1, 2]])
    f = build_f1()
    with pytest.raises(ValueError):
        docsat.SearchState(f, [True])


def test_dimacs_round_trip(tmp_path):
    f = build_f1()
    text = docsat.write_dimacs(f)
    assert text == "p cnf 3 3\n1 2 3 0\n-1 -2 3 0\n1 -2 -3 0\n"
    g = docsat.parse_dimacs(text)
    assert docsat.write_dimacs(g) == text

    path = tmp_path / "f1.cnf"
    docsat.write_dimacs_file(f, str(path))
    h = docsat.read_dimacs_file(str(path))
    assert docsat.write_dimacs(h) == text

    with pytest.raises(ValueError):
        docsat.parse_dimacs("p cnf 2 1\n1 2 3 0\n")


def test_generate_is_deterministic():
    cfg = docsat.GenConfig()
    cfg.n_vars = 50
    cfg.alpha = 4.27
    cfg.seed = 7
    a = docsat.generate(cfg)
    b = docsat.generate(cfg)
    assert a.num_clauses == round(4.27 * 50)  # same double math as the core
    assert docsat.write_dimacs(a) == docsat.write_dimacs(b)


def test_solvers_and_oracle():
    cfg = docsat.GenConfig()
    cfg.n_vars = 30
    cfg.alpha = 4.2
    cfg.seed = 3
    cfg.filter_satisfiable = True
    f = docsat.generate(cfg)

    report = docsat.dpll_sat(f)
    assert report.status == docsat.DpllStatus.satisfiable

    h = docsat.HeuristicConfig()
    h.kind = docsat.HeuristicKind.docsat
    h.p_walk = 0.4
    h.r_doc = 0.15
    assert h.label() == "docsat_p0.4_r0.15"
    result = docsat.run_restarts(f, h, max_flips=3000, n_trials=20,
                                 stop_on_solution=True, master_seed=1)
    assert result.n_solved >= 1
    solved = [t for t in result.trials if t.solved]
    model = solved[0].solution
    assert docsat.SearchState(f, model).energy == 0


def test_enumerate_small():
    f = build_f1()
    report = docsat.enumerate_assignments(f)
    assert report.satisfiable
    assert report.min_energy == 0
    assert len(report.solutions) == 5
    assert [False, True, False] in report.solutions
    assert report.states_at(0) == 5
    # solution TLCs are {5,3,5,6,5}; the three E=1 states all have TLC 4
    assert report.mean_tlc_at(0) == pytest.approx(4.8)
    assert report.mean_tlc_at(1) == pytest.approx(4.0)


def test_fit_and_classify():
    points = [(n, 0.8 * (1.002 ** -n)) for n in range(100, 1100, 100)]
    fit = docsat.fit_scaling(points)
    assert math.isclose(fit.fit_b, 0.002, rel_tol=1e-9)

    groups = docsat.classify_instances([0.005, 0.5, 0.99])
    assert groups["hard"] == [0]
    assert groups["other"] == [1]
    assert groups["easy"] == [2]


def test_seed_mixing():
    assert docsat.mix_seed(1, 2) == docsat.mix_seed(1, 2)
    assert docsat.mix_seed(1, 2) != docsat.mix_seed(1, 3)
