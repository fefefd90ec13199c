"""Exact cohomology of carried groupoids, bundles and gerbes.

Documents are plain dicts in the CLI's JSON formats; results come back as dicts.
Relative paths inside documents resolve against ``dir``.
"""

import json
from os import fspath

from . import _core
from ._core import InputError, MathError, SizeGuardExceeded

__all__ = [
    "InputError",
    "MathError",
    "SizeGuardExceeded",
    "cohomology",
    "homology",
    "dd_class",
    "chern_class",
    "realize_bundle",
    "enumerate_extension_classes",
    "morita_verify",
    "holonomy",
    "run",
    "commands",
]


def _doc(d):
    return d if isinstance(d, str) else json.dumps(d)


def cohomology(base, max_degree, coeff="Z", dir=""):
    return json.loads(_core.cohomology(_doc(base), max_degree, coeff, fspath(dir)))


def homology(base, max_degree, dir=""):
    return json.loads(_core.homology(_doc(base), max_degree, fspath(dir)))


def dd_class(base, sigma, dir=""):
    return json.loads(_core.dd_class(_doc(base), _doc(sigma), fspath(dir)))


def chern_class(base, datum, dir=""):
    return json.loads(_core.chern_class(_doc(base), _doc(datum), fspath(dir)))


def realize_bundle(base, psi, dir=""):
    return json.loads(_core.realize_bundle(_doc(base), _doc(psi), fspath(dir)))


def enumerate_extension_classes(base, order, dir=""):
    return json.loads(_core.enumerate_extension_classes(_doc(base), order, fspath(dir)))


def morita_verify(morphism, coeff="Z", max_degree=3, dir=""):
    return json.loads(_core.morita_verify(_doc(morphism), coeff, max_degree, fspath(dir)))


def holonomy(complex, cochain, loop, dir=""):
    return _core.holonomy(_doc(complex), _doc(cochain), _doc(loop), fspath(dir))


def run(command, inputs, coeff="Z", max_degree=-1, fiber_order=0):
    """Runs a CLI command in-process; returns (exit_code, report)."""
    code, report = _core.run(command, [fspath(p) for p in inputs], coeff, max_degree, fiber_order)
    return code, json.loads(report)


def commands():
    return list(_core.commands())
