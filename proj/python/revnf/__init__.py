"""Exact normal forms of reversible-equivariant vector fields.

Thin convenience layer over the C++ core: every function returns the parsed
JSON report of the corresponding CLI subcommand.
"""

import json as _json

from ._core import (  # noqa: F401
    SpecError,
    builtin_spec_text,
    builtin_specs,
    parse_spec_echo,
)
from . import _core


def complement(spec, k_from=2, k_to=-1, jobs=1):
    return _json.loads(_core.complement(spec, k_from, k_to, jobs))


def normal_form(spec):
    return _json.loads(_core.normal_form(spec))


def verify(case, spec, k_from=2, k_to=-1, samples=100, seed=987654321, jobs=1):
    return _json.loads(_core.verify(case, spec, k_from, k_to, samples, seed, jobs))


def golden(family, n1, n2, signs=(1, 1, 1), k_from=2, k_to=-1, jobs=1):
    return _json.loads(_core.golden(family, n1, n2, list(signs), k_from, k_to, jobs))


def hilbert(n1, n2, dmax=-1):
    return _json.loads(_core.hilbert(n1, n2, dmax))
