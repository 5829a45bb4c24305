"""Generalized (p, q)-trigonometric functions and checks of the
geometric-mean inequalities they satisfy.

    >>> import pqtrig
    >>> ev = pqtrig.Evaluator(2, 2)
    >>> round(ev.arcsin(0.5), 12)
    0.523598775598
"""

from ._pqtrig import (
    ComputationError,
    Evaluator,
    arcsin_series,
    check_names,
    counterexample_search,
    holder_mean,
    monotonicity_probe,
    run_sweep,
)

__all__ = [
    "ComputationError",
    "Evaluator",
    "arcsin_series",
    "check_names",
    "constants",
    "counterexample_search",
    "holder_mean",
    "monotonicity_probe",
    "run_sweep",
]


def constants(p, q):
    """half_pi and m_star for (p, q); m_star is float('inf') when p >= q."""
    ev = Evaluator(p, q)
    return {"half_pi": ev.half_pi, "m_star": ev.m_star}
