"""Exact Casimir spectra, critical shifts and equivariant quantization for the
orthogonal and symplectic graded families of polynomial vector fields.

Every value is exact: rationals are returned as "p/q" strings, dimensions as
decimal strings. The payload layout mirrors the ``lieq`` command line tool.
"""

from ._core import (
    CriticalityError,
    InvariantError,
    TruncationError,
    critical_set,
    decompose,
    eigenvalue,
    quantize,
    tilde_tree,
    verify,
)

__all__ = [
    "CriticalityError",
    "InvariantError",
    "TruncationError",
    "critical_set",
    "decompose",
    "eigenvalue",
    "quantize",
    "tilde_tree",
    "verify",
]
