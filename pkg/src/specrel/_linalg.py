"""Small exact linear algebra over Scalars (Gauss-Jordan elimination)."""

from __future__ import annotations

from typing import Sequence

from .field import ONE, ZERO, Scalar

Matrix = list[list[Scalar]]


def _rref(rows: Sequence[Sequence[Scalar]]) -> tuple[Matrix, list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    return len(_rref(rows)[1])


def solve(a: Sequence[Sequence[Scalar]], b: Sequence[Scalar]) -> list[Scalar] | None:
    """One solution of a x = b (free variables set to zero), or None."""
    n = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = _rref(aug)
    if n in pivots:
        return None
    x = [ZERO] * n
    for i, c in enumerate(pivots):
        x[c] = m[i][n]
    return x


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int) -> list[list[Scalar]]:
    if not rows:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    m, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        basis.append(v)
    return basis


def inverse(a: Sequence[Sequence[Scalar]]) -> Matrix:
    n = len(a)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(a)]
    m, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in m]


def matvec(a: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> list[Scalar]:
    out = []
    for row in a:
        acc = ZERO
        for x, y in zip(row, v):
            if not x.is_zero():
                acc = acc + x * y
        out.append(acc)
    return out


def matmul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    cols = list(zip(*b))
    return [matvec([list(c) for c in cols], row) for row in a]
