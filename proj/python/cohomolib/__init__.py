"""Cohomological pullbacks between flag manifolds, exact arithmetic."""

import json as _json

from . import _cohomolib as _c

BudgetError = _c.BudgetError


def _desc(embedding):
    return embedding if isinstance(embedding, str) else _json.dumps(embedding)


def rootsystem(type):
    return _json.loads(_c.rootsystem(type))


def resolve(type, weight):
    """H^q(G/B, O(lambda)) via Borel-Weil-Bott."""
    return _json.loads(_c.resolve(type, list(weight)))


def kostant(type, mu):
    return _json.loads(_c.kostant(type, list(mu)))


def decide(embedding, weight, max_dim=5000, engine="auto"):
    """Report for the pullback of O(lambda~); embedding is a descriptor dict or JSON text."""
    return _json.loads(_c.decide(_desc(embedding), list(weight), max_dim, engine))


def diagonal_decide(type, l1, l2):
    return _json.loads(_c.diagonal_decide(type, list(l1), list(l2)))


def principal_classify(type, weight):
    return _json.loads(_c.principal_classify(type, list(weight)))


def principal_values(type):
    return list(_c.principal_values(type))


def invariant_degrees(type, kmax):
    return list(_c.invariant_degrees(type, kmax))


def monoid_probe(embedding, w=None, wt=None, height_bound=6, max_dim=5000):
    # words are 1-based; w defaults to w_o, wt to the adjoint element
    return _json.loads(_c.monoid_probe(_desc(embedding), w, wt, height_bound, max_dim))


__all__ = [
    "BudgetError",
    "decide",
    "diagonal_decide",
    "invariant_degrees",
    "kostant",
    "monoid_probe",
    "principal_classify",
    "principal_values",
    "resolve",
    "rootsystem",
]
