"""Exact analysis of capacitated cost-sharing connection games.

Instances, reports and traces are plain dicts in the JSON document format
used by the ``csglab`` command-line tool. Costs come back as Fractions.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    Error,
    InfeasibleGame,
    InfeasibleProfile,
    InternalAssertion,
    ParameterViolation,
    ParseError,
    PathExplosion,
)

__all__ = [
    "Error", "InfeasibleGame", "InfeasibleProfile", "InternalAssertion", "ParameterViolation", "ParseError",
    "PathExplosion", "fig2", "fig3", "two_link", "random_sp", "random_asym", "normalize", "classify",
    "agent_cost", "sum_cost", "max_cost", "potential", "is_nash", "best_response", "analyze", "dynamics",
    "constructive", "feasible_extension", "verify", "rational",
]


def rational(text):
    """Parses "num/den" (or "inf") into a Fraction, or float('inf')."""
    return float("inf") if text == "inf" else Fraction(text)


def _doc(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def fig2(x, y):
    return json.loads(_core.gen_fig2(str(x), str(y)))


def fig3(n, eps):
    return json.loads(_core.gen_fig3(n, str(eps)))


def two_link(n):
    return json.loads(_core.gen_two_link(n))


def random_sp(seed, n, max_edges=8, max_depth=4, family="mixed"):
    return json.loads(_core.gen_random_sp(seed, n, max_edges, max_depth, family))


def random_asym(seed, n, nodes=5, max_edges=10, family="mixed"):
    return json.loads(_core.gen_random_asym(seed, n, nodes, max_edges, family))


def normalize(instance):
    return json.loads(_core.normalize(_doc(instance)))


def classify(instance):
    return _core.classify(_doc(instance))


def agent_cost(instance, profile, agent):
    return rational(_core.agent_cost(_doc(instance), profile, agent))


def sum_cost(instance, profile):
    return rational(_core.sum_cost(_doc(instance), profile))


def max_cost(instance, profile):
    return rational(_core.max_cost(_doc(instance), profile))


def potential(instance, profile):
    return rational(_core.potential(_doc(instance), profile))


def is_nash(instance, profile):
    return _core.is_nash(_doc(instance), profile)


def best_response(instance, profile, agent):
    """Strictly improving best response path, or None."""
    return _core.best_response(_doc(instance), profile, agent)


def analyze(instance, cap=10000):
    return json.loads(_core.analyze(_doc(instance), cap))


def dynamics(instance, start=None, policy="round-robin", rule="best", seed=0, permutation=(), cap=10000):
    return json.loads(_core.dynamics(_doc(instance), start, policy, rule, seed, list(permutation), cap))


def constructive(instance, cap=10000):
    return json.loads(_core.constructive(_doc(instance), cap))


def feasible_extension(instance, larger, smaller):
    return _core.feasible_extension(_doc(instance), larger, smaller)


def verify(suite="paper", seed=20240101):
    return _core.verify(suite, seed)
