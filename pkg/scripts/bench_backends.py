#!/usr/bin/env python3
"""Compare the gmpy2 scalar backend against the pure-Python fallback.

Runs the same exact-arithmetic workload once per backend in a child
process (the backend is chosen at import time from
THETAKIT_SCALAR_BACKEND) and prints a timing table.

Usage: python3 scripts/bench_backends.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, random, time
from thetakit.scalars import BACKEND, Q
from thetakit.hypergeometric import HGParams, contiguity_check, CONTIGUITY_KINDS
from thetakit.rigidity import (
    MatrixTuple, Spectrum, common_frame, levelt_normal_form, levelt_tuple,
)
from thetakit.linalg import ExactMatrix

rng = random.Random(7)

def scalar():
    return Q(rng.randrange(-8, 9)) / Q(rng.randrange(1, 5))

timings = {}

t0 = time.perf_counter()
for _ in range(40):
    n = rng.randrange(2, 6)
    p = HGParams(
        tuple(scalar() for _ in range(n)), tuple(scalar() for _ in range(n))
    )
    for kind in CONTIGUITY_KINDS:
        extra = {
            "left_append": scalar(), "right_append": scalar(),
            "alpha_lower": rng.randrange(n), "beta_raise": rng.randrange(n),
            "power_shift": rng.randrange(-3, 4),
        }[kind]
        assert contiguity_check(kind, p, extra)
timings["contiguity"] = time.perf_counter() - t0

t0 = time.perf_counter()
for _ in range(25):
    n = rng.randrange(2, 5)
    spectra = []
    used = set()
    for _ in range(2):
        vals = []
        while len(vals) < n:
            v = Q(rng.randrange(1, 30))
            if v not in used:
                used.add(v)
                vals.append(v)
        spectra.append(Spectrum(tuple(vals)))
    t = levelt_tuple(spectra)
    g = ExactMatrix.identity(n)
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < 0.5:
                g = g + ExactMatrix(
                    [
                        [
                            Q(rng.randrange(-2, 3)) if (r, c) == (i, j) else Q(0)
                            for c in range(n)
                        ]
                        for r in range(n)
                    ]
                )
    if not g.is_invertible():
        continue
    conj = MatrixTuple(tuple(g * m * g.inverse() for m in t))
    frame = common_frame(conj)
    levelt_normal_form(conj, frame)
timings["normal_form"] = time.perf_counter() - t0

print(json.dumps({"backend": BACKEND, "timings": timings}))
"""


def run_backend(name: str) -> dict:
    env = dict(os.environ, THETAKIT_SCALAR_BACKEND=name)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=1)
    args = parser.parse_args()

    results = {}
    for backend in ("gmpy2", "fraction"):
        try:
            best = None
            for _ in range(max(1, args.repeat)):
                r = run_backend(backend)
                if best is None:
                    best = r
                else:
                    for k, v in r["timings"].items():
                        best["timings"][k] = min(best["timings"][k], v)
            results[backend] = best
        except subprocess.CalledProcessError as exc:
            print("backend %s failed:\n%s" % (backend, exc.stderr))
            return 1

    stages = sorted(results["gmpy2"]["timings"])
    print("%-14s %12s %12s %8s" % ("stage", "gmpy2 [s]", "fraction [s]", "ratio"))
    for stage in stages:
        a = results["gmpy2"]["timings"][stage]
        b = results["fraction"]["timings"][stage]
        print("%-14s %12.3f %12.3f %7.2fx" % (stage, a, b, b / a if a else 0.0))
    return 0


if __name__ == "__main__":
    sys.exit(main())
