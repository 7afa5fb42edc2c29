"""Stationary Gromov-Witten invariants of P^1.

Exact quantities come back as dicts mapping exponents to rational strings
("p/q"); numeric checks carry decimal strings at the requested precision.
"""

import json
from fractions import Fraction

from . import _gwp1
from ._gwp1 import ComputationError, ConsistencyError, TruncationError

__all__ = [
    "ComputationError",
    "ConsistencyError",
    "TruncationError",
    "as_fractions",
    "asymptotics",
    "charlier_orthogonality",
    "charlier_scaling_limit",
    "charpoly_expectation",
    "free_energy",
    "invariant",
    "selftest",
    "stabilization",
    "wave",
    "zmodel_log",
]


def as_fractions(value):
    """{"-2": "1", "0": "-1/24"} -> {-2: Fraction(1), 0: Fraction(-1, 24)}."""
    return {int(k): Fraction(v) for k, v in value.items()}


def invariant(ks, by_genus=False, order=0):
    return json.loads(_gwp1.invariant(list(ks), by_genus, order))


def free_energy(degree):
    return json.loads(_gwp1.free_energy(degree))


def wave(which, order=3):
    return json.loads(_gwp1.wave(which, order))


def zmodel_log(n, degree):
    return json.loads(_gwp1.zmodel_log(n, degree))


def stabilization(degree):
    return _gwp1.stabilization(degree)


def charlier_orthogonality(ell, ell2, a="1", tol="1e-20", prec=128):
    return json.loads(_gwp1.charlier_orthogonality(ell, ell2, str(a), str(tol), prec))


def charlier_scaling_limit(zeta="0", ell=0, eps="1", Ls=(20, 40, 80), prec=128):
    return json.loads(_gwp1.charlier_scaling_limit(str(zeta), ell, str(eps), list(Ls), prec))


def asymptotics(z="20", eps="1", order=3, prec=128):
    return json.loads(_gwp1.asymptotics(str(z), str(eps), order, prec))


def charpoly_expectation(L, a, us, prec=128):
    return _gwp1.charpoly_expectation(L, str(a), [str(u) for u in us], prec)


def selftest(only=(), degree=3):
    return json.loads(_gwp1.selftest(list(only), degree))
