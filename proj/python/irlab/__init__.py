"""Index of reducibility of parameter ideals over polynomial rings mod p.

Every entry point takes a ring specification (a dict in the same shape as
the CLI's JSON input files, or a path to such a file) and returns the report
as a dict.
"""

import json
import os

from . import _irlab
from ._irlab import (
    InputError,
    InternalError,
    IrlabError,
    NotSystemOfParameters,
    ParseError,
    PreconditionError,
    ResourceError,
    SearchExhausted,
    set_spair_budget,
    spair_budget,
)

__version__ = _irlab.__version__

__all__ = [
    "analyze",
    "stable",
    "limit",
    "ir",
    "socle_dimensions",
    "reproduce",
    "ring_spec",
    "set_spair_budget",
    "spair_budget",
    "IrlabError",
    "InputError",
    "ParseError",
    "ResourceError",
    "SearchExhausted",
    "PreconditionError",
    "NotSystemOfParameters",
    "InternalError",
]


def ring_spec(variables, ideal, characteristic=32003, **extra):
    """Builds a specification dict."""
    spec = {"variables": list(variables), "ideal": list(ideal), "characteristic": characteristic}
    spec.update(extra)
    return spec


def _text(spec):
    if isinstance(spec, (str, os.PathLike)):
        with open(spec) as f:
            return f.read()
    return json.dumps(spec)


def analyze(spec, seed=1):
    return json.loads(_irlab.analyze(_text(spec), seed))


def stable(spec, seed=1, trials=5):
    return json.loads(_irlab.stable(_text(spec), seed, trials))


def limit(spec, seed=1, n_max=4, samples=50):
    return json.loads(_irlab.limit(_text(spec), seed, n_max, samples))


def ir(spec, params=(), seed=1):
    """ir of the given parameters, or of a constructed C-system if none."""
    return json.loads(_irlab.ir(_text(spec), seed, list(params)))


def socle_dimensions(spec):
    return _irlab.socle_dimensions(_text(spec))


def reproduce(corpus_dir="", seed=1, filter=""):
    return _irlab.reproduce(str(corpus_dir), seed, filter)
