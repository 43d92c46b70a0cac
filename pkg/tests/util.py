"""Seeded generators shared across the test modules."""

import random

from thetakit.hypergeometric import HGParams
from thetakit.linalg import ExactMatrix
from thetakit.rigidity import MatrixTuple, Spectrum, levelt_tuple
from thetakit.scalars import Q


def rational(rng, lo=-8, hi=8, den=4):
    return Q(rng.randrange(lo, hi + 1)) / Q(rng.randrange(1, den + 1))


def gaussian_rational(rng, complex_chance=0.3):
    x = rational(rng)
    if rng.random() < complex_chance:
        x = x + Q(0, rng.randrange(-4, 5)) / Q(rng.randrange(1, 4))
    return x


def params(rng, n, complex_chance=0.3):
    return HGParams(
        tuple(gaussian_rational(rng, complex_chance) for _ in range(n)),
        tuple(gaussian_rational(rng, complex_chance) for _ in range(n)),
    )


def irreducible_params(rng, n, den=12, span=48):
    """Real-rational parameters with no alpha_i - beta_j an integer."""
    while True:
        al = [Q(rng.randrange(0, span)) / Q(rng.randrange(1, den + 1)) for _ in range(n)]
        be = [Q(rng.randrange(0, span)) / Q(rng.randrange(1, den + 1)) for _ in range(n)]
        if all(not (a - b).is_integer() for a in al for b in be):
            return HGParams(tuple(al), tuple(be))


def invertible_matrix(rng, n, steps=None):
    """Random invertible matrix built from elementary row operations.

    Products of elementary matrices keep entries small and the inverse
    exact, which is all the conjugation tests need.
    """
    m = ExactMatrix.identity(n)
    for _ in range(steps if steps is not None else 3 * n):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        c = Q(rng.randrange(-2, 3))
        if not c:
            continue
        rows = [list(m.row(r)) for r in range(n)]
        for k in range(n):
            rows[i][k] = rows[i][k] + c * rows[j][k]
        m = ExactMatrix(rows)
    return m


def disjoint_spectra(rng, p, n, span=40):
    """p spectra of size n with an empty total intersection."""
    while True:
        spectra = []
        for _ in range(p):
            vals = set()
            while len(vals) < n:
                v = Q(rng.randrange(1, span))
                vals.add(v)
            spectra.append(Spectrum(tuple(vals)))
        common = set(spectra[0].values)
        for s in spectra[1:]:
            common &= set(s.values)
        if not common:
            return spectra


def conjugated_levelt(rng, p, n):
    """(spectra, conjugator, conjugated tuple) for a random instance."""
    spectra = disjoint_spectra(rng, p, n)
    base = levelt_tuple(spectra)
    g = invertible_matrix(rng, n)
    conj = MatrixTuple(tuple(g * m * g.inverse() for m in base))
    return spectra, g, conj
