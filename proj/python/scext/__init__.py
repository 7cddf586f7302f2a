"""Simple current extensions: parity classes, lifting and pointed cocycles.

Models are plain dicts in the JSON model schema; build one with ``builtin``.
"""

import json

from . import _core
from ._core import InputError

__version__ = _core.__version__

__all__ = [
    "InputError",
    "builtin",
    "builtin_models",
    "cocycle_count",
    "cocycle_enumerate",
    "cocycle_equivalent",
    "cocycle_monodromy",
    "cocycle_pullback",
    "cocycle_quadratic",
    "cocycle_verify",
    "extend",
    "family",
    "induce",
    "induce_loewy",
    "lift",
    "run_cli",
    "validate",
]


def _model(model):
    if isinstance(model, str):
        model = builtin(model)
    return json.dumps(model)


def builtin_models():
    return json.loads(_core.builtin_models())


def builtin(name, *, p=None, u=None, v=None, k=None, r=None):
    return json.loads(_core.builtin(name, p, u, v, k, r))


def validate(model):
    return json.loads(_core.validate(_model(model)))


def extend(model, current=None, bound=None):
    return json.loads(_core.extend(_model(model), current, bound))


def lift(model, module, current=None):
    return json.loads(_core.lift(_model(model), module, current))


def induce(model, module, current=None, bound=None):
    return json.loads(_core.induce(_model(model), module, current, bound))


def induce_loewy(model, module, current=None):
    return json.loads(_core.induce_loewy(_model(model), module, current))


def family(name, *, p=None, r=None):
    """Derived lifts and parity of a composite family next to the printed data."""
    return json.loads(_core.family(name, p, r))


def cocycle_count(group, m):
    return _core.cocycle_count(group, m)


def cocycle_enumerate(group, m, limit=4096):
    return json.loads(_core.cocycle_enumerate(group, m, limit))


def cocycle_verify(cocycle):
    return json.loads(_core.cocycle_verify(json.dumps(cocycle)))


def cocycle_quadratic(cocycle):
    return json.loads(_core.cocycle_quadratic(json.dumps(cocycle)))


def cocycle_pullback(cocycle):
    return _core.cocycle_pullback(json.dumps(cocycle))


def cocycle_monodromy(cocycle):
    return json.loads(_core.cocycle_monodromy(json.dumps(cocycle)))


def cocycle_equivalent(a, b, m):
    """Witness cochain (row-major exponents mod m) or None."""
    return json.loads(_core.cocycle_equivalent(json.dumps(a), json.dumps(b), m))


def run_cli(*args):
    """(exit_code, stdout, stderr) of one command line."""
    return _core.run_cli([str(a) for a in args])
