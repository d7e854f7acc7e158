"""Exact payoffs, equilibrium values and solvers for the asymmetric
(nondecreasing-allocation) Colonel Blotto game ACB(X_A, X_B, n).

Rationals cross the C++ boundary as canonical "p/q" strings; structured
results come back as JSON. The helpers below decode them.
"""

import json as _json
from fractions import Fraction

from ._acb import (  # noqa: F401
    best_response,
    check_w3_family,
    claim_ids,
    critical_levels,
    discrete_value,
    empirical_sup_distance,
    enumerate_grid_strategies,
    exploitability,
    feasible,
    fixed_strategy,
    marginal_cdf,
    payoff_mixed,
    payoff_pure,
    payoff_vs_triangle,
    sample_triangle,
    solve_discrete,
    verify,
    w2_equilibrium,
    w2_value,
    w3_equilibrium,
    w3_value,
)

__all__ = [
    "best_response",
    "best_response_dict",
    "check_w3_family",
    "claim_ids",
    "critical_levels",
    "discrete_value",
    "empirical_sup_distance",
    "enumerate_grid_strategies",
    "exploitability",
    "feasible",
    "fixed_strategy",
    "fraction",
    "marginal_cdf",
    "payoff_mixed",
    "payoff_pure",
    "payoff_vs_triangle",
    "sample_triangle",
    "solve_discrete",
    "solve_discrete_dict",
    "strategy",
    "verify",
    "verify_dict",
    "w2_equilibrium",
    "w2_equilibrium_dict",
    "w2_value",
    "w3_equilibrium",
    "w3_equilibrium_dict",
    "w3_value",
]


def fraction(text):
    """Parse a canonical "p/q" string into a Fraction."""
    return Fraction(text)


def strategy(budget, atoms):
    """Build a strategy JSON string from (levels, prob) pairs.

    Levels and probabilities may be strings, ints, or Fractions.
    """
    def _r(x):
        return str(Fraction(x))

    atoms = [{"alloc": [_r(x) for x in alloc], "prob": _r(prob)}
             for alloc, prob in atoms]
    n = len(atoms[0]["alloc"]) if atoms else 0
    return _json.dumps({"budget": _r(budget), "n": n, "atoms": atoms})


def best_response_dict(q_json, budget):
    return _json.loads(best_response(q_json, budget))


def solve_discrete_dict(ta, tb, n, m, method="simplex"):
    return _json.loads(solve_discrete(ta, tb, n, m, method))


def verify_dict(claim_id, samples=100000, seed=42, grid=60):
    return _json.loads(verify(claim_id, samples, seed, grid))


def w2_equilibrium_dict(t):
    return _json.loads(w2_equilibrium(t))


def w3_equilibrium_dict(t):
    raw = w3_equilibrium(t)
    return None if raw is None else _json.loads(raw)
