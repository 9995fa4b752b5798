"""Shared fixtures-of-convenience for the test suite: the printed matrices
from the worked L(7,4) example, random matrix generators, and a naive
cofactor-expansion determinant used as an independent oracle."""

from __future__ import annotations

import random
from pathlib import Path

from contactsurg.diagram import LegendrianComponent, SurgeryDiagram
from contactsurg.exactla import IntMatrix

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

# 5x5 linking matrix of the exceptional L(7,4) diagram (components bottom
# to top: two +1-framed unknots, two tb=-2 rot=1 components, one tb=-1).
FIG2_M = IntMatrix([
    [0, -1, -1, -1, 0],
    [-1, 0, -1, -1, 0],
    [-1, -1, -3, -1, 0],
    [-1, -1, -1, -3, -1],
    [0, 0, 0, -1, -2],
])

# Same diagram extended by the distinguished trefoil L as row/column 0.
FIG2_M0 = IntMatrix([
    [0, -1, -1, -1, -1, 0],
    [-1, 0, -1, -1, -1, 0],
    [-1, -1, 0, -1, -1, 0],
    [-1, -1, -1, -3, -1, 0],
    [-1, -1, -1, -1, -3, -1],
    [0, 0, 0, 0, -1, -2],
])


def cofactor_det(m: IntMatrix) -> int:
    """Naive Laplace expansion along the first row; the det oracle."""
    n = m.rows
    if n == 0:
        return 1
    if n == 1:
        return m[0, 0]
    total = 0
    rest = list(range(1, n))
    for j in range(n):
        if m[0, j]:
            sub = m.submatrix(rest, [c for c in range(n) if c != j])
            total += (-1) ** j * m[0, j] * cofactor_det(sub)
    return total


def random_matrix(rng: random.Random, n: int, lo: int = -3, hi: int = 3) -> IntMatrix:
    return IntMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def random_symmetric(rng: random.Random, n: int, lo: int = -3, hi: int = 3) -> IntMatrix:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = rng.randint(lo, hi)
        for j in range(i + 1, n):
            a[i][j] = a[j][i] = rng.randint(lo, hi)
    return IntMatrix(a)


def random_unimodular(rng: random.Random, n: int) -> IntMatrix:
    """Product of random elementary row operations applied to the identity."""
    a = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n + 2):
        kind = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        elif kind == 1 and i != j:
            a[i], a[j] = a[j], a[i]
        elif kind == 2:
            a[i] = [-x for x in a[i]]
    return IntMatrix(a)


def one_component_diagram(tb: int, rot: int, coeff: int = -1,
                          cid: str = "K") -> SurgeryDiagram:
    return SurgeryDiagram(
        components=(LegendrianComponent(id=cid, tb=tb, rot=rot, coeff=coeff),),
        linking={})


def build_diagram(specs, linking) -> SurgeryDiagram:
    """specs: iterable of (id, tb, rot, coeff); linking: {(a, b): lk}."""
    comps = tuple(LegendrianComponent(id=i, tb=t, rot=r, coeff=c)
                  for (i, t, r, c) in specs)
    return SurgeryDiagram(components=comps, linking=dict(linking))
