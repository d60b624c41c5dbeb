import math

import numpy as np
import pytest

import ndmap


def test_spectrum_counts():
    assert ndmap.count_d(25, 1) == 4
    assert ndmap.bound_delta(-10, 15, 1) == 3
    assert ndmap.multiplicity(125) == 4
    assert ndmap.construct_even_multiplicity(4) == 125
    assert ndmap.is_resonant(math.pi**2, 1)
    assert ndmap.neumann_eigenvalue((1, 2)) == pytest.approx(5 * math.pi**2)


def test_resonance_raises():
    with pytest.raises(ndmap.ResonanceError):
        ndmap.count_d(0.0, 1.0)
    with pytest.raises(ndmap.PreconditionError):
        ndmap.construct_even_multiplicity(3)


def test_assemble_returns_symmetric_numpy_matrix():
    m = ndmap.assemble(ndmap.ProblemParams(k=1.0, a=-1.0, J=3))
    e = np.asarray(m.entries)
    assert e.shape == (12, 12)
    assert np.array_equal(e, e.T)
    assert e[0, 0] == pytest.approx(1.0 / math.tanh(1.0))
    assert m.method_name == "closed_form"


def test_series_oracle_agrees_with_closed_form():
    p = ndmap.ProblemParams(k=1.0, a=3.0, J=2)
    exact = np.asarray(ndmap.assemble(p).entries)
    series = np.asarray(ndmap.assemble_series_oracle(p, 2000).entries)
    assert np.max(np.abs(exact - series)) <= 1e-3


def test_eigen_and_counts():
    ev = ndmap.sym_eigenvalues(np.diag([3.0, -2.0, 0.5]))
    assert ev == pytest.approx([3.0, 0.5, -2.0])
    assert ndmap.count_negative([1, -1e-3, -1e-6], 1e-5) == 1
    assert ndmap.spectral_norm(np.diag([-4.0, 2.0])) == pytest.approx(4.0)


def test_solution_operator_oracle():
    assert ndmap.s_delta_coeff((0, 0), -10, 5, 1) == pytest.approx(-0.3)
    assert ndmap.exact_negative_count(-10, 15, 1, 10) == 3


def test_sweep_and_crossing():
    points = ndmap.sweep(-10, [5.0, 0.0], J=40)
    assert points[0].report.theoretical_bound == 1
    assert points[0].report.measured_negative <= 1
    assert points[1].skipped and points[1].report is None
    report = ndmap.verify_crossing(5, 0.1, J=100)
    assert report.expected == 2 and report.measured == 2 and report.agrees
    traj = ndmap.trajectories(-10, [-9.0], J=10)
    assert len(traj[0].eigenvalues) == 40
