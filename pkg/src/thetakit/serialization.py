"""JSON helpers shared by the command-line front-end and the tests.

Exact scalars travel as canonical strings ("3/2", "1/2+1/3*i") so they
round-trip losslessly; double-precision complex numbers travel as
[re, im] pairs.  `canonical_dumps` pins the byte-level shape of every
report: keys sorted, either compact separators or two-space indent.
"""

import json
import sys

import numpy as np

from .linalg import ExactMatrix
from .monodromy import MonodromyTriple
from .scalars import Q


def canonical_dumps(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2) + "\n"
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def load_input(path: str):
    """Parse JSON from a file path, or from stdin when path is '-'."""
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def scalar_matrix_to_lists(m: ExactMatrix) -> list:
    return [[str(m[i, j]) for j in range(m.ncols)] for i in range(m.nrows)]


def scalar_matrix_from_lists(rows) -> ExactMatrix:
    return ExactMatrix([[Q(x) for x in row] for row in rows])


def complex_matrix_to_lists(m) -> list:
    m = np.asarray(m, dtype=complex)
    return [[[float(v.real), float(v.imag)] for v in row] for row in m]


def complex_matrix_from_lists(rows) -> "np.ndarray":
    return np.array(
        [[complex(v[0], v[1]) for v in row] for row in rows], dtype=complex
    )


def triple_report(t: MonodromyTriple) -> dict:
    """The four-key JSON form of a monodromy triple."""
    return {
        "m0": complex_matrix_to_lists(t.m0),
        "m1": complex_matrix_to_lists(t.m1),
        "minf": complex_matrix_to_lists(t.minf),
        "residual": t.product_residual(),
    }


def triple_from_report(d: dict, tolerance: float = 1e-10) -> MonodromyTriple:
    return MonodromyTriple(
        m0=complex_matrix_from_lists(d["m0"]),
        m1=complex_matrix_from_lists(d["m1"]),
        minf=complex_matrix_from_lists(d["minf"]),
        tolerance=tolerance,
    )
