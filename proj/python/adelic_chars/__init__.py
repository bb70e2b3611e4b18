"""Characters of rational Levi systems, exact arithmetic throughout.

Scalars are ``fractions.Fraction``; systems, characters and reports use the
same JSON documents as the ``adelic-chars`` command line tool, as dicts.
"""

import json

from . import _core
from ._core import (
    DimensionError,
    DomainError,
    ParseError,
    System,
    ValidationError,
    catalog_names,
    frac,
    frac_p,
    global_phase_zero,
)

__version__ = _core.__version__


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def load_system(doc):
    return _core.load_system(_text(doc))


def catalog(name):
    """The catalog system and its named characters as dicts."""
    lambdas = {n: json.loads(t) for n, t in _core.catalog_lambdas(name)}
    return _core.catalog_system(name), lambdas


def system_json(system):
    return json.loads(system.to_json())


def eval(system, lam, x):
    """Phase in [0, 1) of lam at x."""
    return _core.eval(system, _text(lam), list(x))


def classify(system, lam):
    return json.loads(_core.classify(system, _text(lam)))


def same_quasi_orbit(system, a, b):
    return _core.same_quasi_orbit(system, _text(a), _text(b))


def verify(system, suite="all", seed=0, lambdas=25, negative_control=False):
    return json.loads(_core.verify(system, suite, seed, lambdas, negative_control))


__all__ = [
    "DimensionError",
    "DomainError",
    "ParseError",
    "System",
    "ValidationError",
    "catalog",
    "catalog_names",
    "classify",
    "eval",
    "frac",
    "frac_p",
    "global_phase_zero",
    "load_system",
    "same_quasi_orbit",
    "system_json",
    "verify",
]
