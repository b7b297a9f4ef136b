"""Exact constructions of small faithful modules for nilpotent Lie algebras.

Thin convenience layer over the compiled _nilrep module: inputs and
reports travel as plain dicts, numbers stay exact (integers from decimal
strings, rationals as "p/q" strings).
"""

import json as _json

try:
    from ._nilrep import NilrepError
    from . import _nilrep as _core
except ImportError:  # build-tree layout: _nilrep lives next to the package on sys.path
    from _nilrep import NilrepError
    import _nilrep as _core

__all__ = [
    "NilrepError",
    "bounds",
    "build",
    "check",
    "f",
    "filiform10",
    "reduce_module",
    "run",
]


def f(n, beta):
    """f(n, beta), exact."""
    return int(_core.f(n, beta))


def check(algebra):
    """Check report for an algebra dict ({"dim", "basis"?, "brackets"?})."""
    return _json.loads(_core.check(_json.dumps(algebra)))


def build(algebra, inner=(), ideal="auto", truncate=0, filtration=()):
    """Build report. inner and filtration use 1-based indices."""
    return _json.loads(
        _core.build(
            _json.dumps(algebra),
            list(inner),
            ideal,
            truncate,
            [list(t) for t in filtration],
        )
    )


def reduce_module(doc):
    """Reduce report for a module document or prior build report dict."""
    return _json.loads(_core.reduce(_json.dumps(doc)))


def filiform10(params):
    """Filiform10 report for 13 rationals (numbers or "p/q" strings)."""
    return _json.loads(_core.filiform10([str(p) for p in params]))


def bounds(n, beta=None):
    """Bounds report for dimension n."""
    return _json.loads(_core.bounds(n, -1 if beta is None else beta))


def run(args):
    """Drive the CLI in-process; returns (exit_code, stdout, stderr)."""
    return _core.run(list(args))
