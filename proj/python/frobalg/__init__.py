"""Exact decision procedures for Frobenius and separability properties of
rational algebras, algebra extensions and wreath products.

The heavy lifting happens in the C++ core; this package adds a small
dict-friendly wrapper around the JSON spec/report formats.
"""

import json as _json

from ._core import (  # noqa: F401
    SpecParseError,
    SpecValidationError,
    SymbolicCapExceeded,
    builtin_names,
    commands,
    export_builtin as _export_builtin,
    render_text,
    run as _run,
    __version__,
)


def run(command, spec, seed=1, trials=32, symbolic_cap=6):
    """Run one command on a spec (dict or JSON string); returns the report dict."""
    if isinstance(spec, dict):
        spec = _json.dumps(spec)
    return _json.loads(_run(command, spec, seed, trials, symbolic_cap))


def export_builtin(name, params=()):
    """Spec document for a builtin algebra, as a dict."""
    return _json.loads(_export_builtin(name, list(params)))


def classify(algebra_spec, seed=1):
    """(frobenius, separable) verdicts for an algebra spec."""
    frob = run("check-frobenius", algebra_spec, seed=seed)
    sep = run("check-separable", algebra_spec, seed=seed)
    return (
        frob["checks"][0]["verdict"] == "yes",
        sep["checks"][0]["verdict"] == "yes",
    )
