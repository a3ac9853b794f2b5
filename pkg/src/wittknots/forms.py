"""Symmetric bilinear forms over Q.

Matrices are plain nested sequences (lists or tuples of rows) of ``int`` or
:class:`~fractions.Fraction`. Diagonalization runs Gram-Schmidt on integer
coordinate vectors, rescaling every new vector to be primitive; isotropic
pivots are paired with a partner and split off as a hyperbolic plane.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import chain
from typing import List, Sequence, Tuple

from .errors import NotSymmetric

Matrix = Sequence[Sequence]


@dataclass(frozen=True)
class DiagonalForm:
    """Result of :func:`diagonalize`.

    ``transform`` has one column per input dimension, ordered as the
    diagonal vectors, then the ``(isotropic, partner)`` pairs of each split
    plane, then the radical.  With ``T = transform``::

        T^T A T = Diag(entries) + [[0, b_1], [b_1, c_1]] + ... + 0_radical

    where ``planes[i] == (b_i, c_i)``.
    """

    entries: Tuple[int, ...]
    hyperbolic_count: int
    radical_dim: int
    planes: Tuple[Tuple[int, int], ...] = ()
    # integer columns and the common scale D, so transform = D * columns
    columns: Tuple[Tuple[int, ...], ...] = field(default=(), repr=False)
    scale: int = 1

    @property
    def transform(self) -> List[List[Fraction]]:
        n = len(self.columns)
        return [[Fraction(self.columns[c][r] * self.scale) for c in range(n)] for r in range(n)]

    @property
    def size(self) -> int:
        return len(self.entries) + 2 * self.hyperbolic_count + self.radical_dim


def _as_rows(A: Matrix) -> List[List]:
    rows = [list(r) for r in A]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    return rows


def transpose(A: Matrix) -> List[List]:
    return [list(c) for c in zip(*A)]


def matmul(A: Matrix, B: Matrix) -> List[List]:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def is_symmetric(A: Matrix) -> bool:
    n = len(A)
    return all(A[i][j] == A[j][i] for i in range(n) for j in range(i + 1, n))


def symmetrize(V: Matrix) -> List[List]:
    """V + V^T."""
    rows = _as_rows(V)
    n = len(rows)
    return [[rows[i][j] + rows[j][i] for j in range(n)] for i in range(n)]


def _integral(A: List[List]) -> Tuple[List[List[int]], int]:
    """Scale a rational matrix by a common denominator D; returns (D*A, D)."""
    types = set(map(type, chain.from_iterable(A)))
    if types <= {int}:
        return [list(row) for row in A], 1
    D = 1
    for row in A:
        for x in row:
            den = Fraction(x).denominator
            D = D * den // math.gcd(D, den)
    if D == 1:
        return [[int(x) for x in row] for row in A], 1
    return [[int(x * D) for x in row] for row in A], D


def _content(v: Sequence[int]) -> int:
    return reduce(math.gcd, v, 0)


def diagonalize(A: Matrix) -> DiagonalForm:
    """Congruence-diagonalize the symmetric matrix A, up to hyperbolic planes.

    Pivots are taken in basis order.  When the current pivot vector is
    isotropic it is paired with the first remaining vector it pairs with
    nontrivially; the pair spans a hyperbolic (Witt-trivial) plane that is
    split off.  A vector orthogonal to everything that remains is radical.
    """
    rows = _as_rows(A)
    if not is_symmetric(rows):
        raise NotSymmetric("matrix is not symmetric")
    n = len(rows)
    # Scaling by D^2 is a congruence (every vector times D); entries stay integral.
    M, D = _integral(rows)
    if D != 1:
        M = [[x * D for x in row] for row in M]

    # vecs[j]: coordinates of the j-th working vector; G[j][k]: its pairings.
    vecs = [[1 if r == c else 0 for r in range(n)] for c in range(n)]
    G = M
    active = list(range(n))
    entries: List[int] = []
    diag_cols: List[List[int]] = []
    plane_cols: List[List[int]] = []
    planes: List[Tuple[int, int]] = []
    radical_cols: List[List[int]] = []

    while active:
        i = active[0]
        rest = active[1:]
        a = G[i][i]
        if a != 0:
            entries.append(a)
            diag_cols.append(vecs[i])
            _pivot(G, vecs, i, rest, a)
            active = rest
            continue
        partner = next((j for j in rest if G[i][j] != 0), None)
        if partner is None:
            radical_cols.append(vecs[i])
            active = rest
            continue
        j = partner
        planes.append((G[i][j], G[j][j]))
        plane_cols.extend((vecs[i], vecs[j]))
        rest = [k for k in rest if k != j]
        _split_plane(G, vecs, i, j, rest)
        active = rest

    return DiagonalForm(
        entries=tuple(entries),
        hyperbolic_count=len(planes),
        radical_dim=len(radical_cols),
        planes=tuple(planes),
        columns=tuple(map(tuple, diag_cols + plane_cols + radical_cols)),
        scale=D,
    )


def _rescale(G, vecs, changed, rest):
    """Make the changed vectors primitive and divide their pairings to match."""
    g = {}
    for j in changed:
        c = _content(vecs[j])
        if c != 1:
            vecs[j] = [x // c for x in vecs[j]]
        g[j] = c
    for j in changed:
        gj = g[j]
        Gj = G[j]
        for k in rest:
            if k in g:
                if k < j:
                    continue
                val = Gj[k] // (gj * g[k])
            else:
                val = Gj[k] // gj
            Gj[k] = val
            G[k][j] = val


def _pivot(G, vecs, i, rest, a):
    Gi = G[i]
    vi = vecs[i]
    changed = [j for j in rest if Gi[j] != 0]
    if not changed:
        return
    # e_j <- a e_j - <e_j, e_i> e_i, then primitive.
    coef = {j: Gi[j] for j in changed}
    for j in changed:
        c = coef[j]
        vecs[j] = [a * x - c * y for x, y in zip(vecs[j], vi)]
    changed_set = set(changed)
    for j in changed:
        cj = coef[j]
        Gj = G[j]
        for k in rest:
            if k in changed_set:
                if k < j:
                    continue
                val = a * (a * Gj[k] - cj * coef[k])
            else:
                val = a * Gj[k]
            Gj[k] = val
            G[k][j] = val
    _rescale(G, vecs, changed, rest)


def _split_plane(G, vecs, i, j, rest):
    """Project the remaining vectors off the plane spanned by e_i, e_j.

    With <e_i,e_i> = 0, b = <e_i,e_j>, c = <e_j,e_j>:
    e_k <- b^2 e_k - (b <e_k,e_j> - c <e_k,e_i>) e_i - b <e_k,e_i> e_j.
    """
    b = G[i][j]
    c = G[j][j]
    Gi, Gj = G[i], G[j]
    vi, vj = vecs[i], vecs[j]
    changed = [k for k in rest if Gi[k] != 0 or Gj[k] != 0]
    if not changed:
        return
    x = {k: b * Gj[k] - c * Gi[k] for k in changed}
    y = {k: b * Gi[k] for k in changed}
    bb = b * b
    for k in changed:
        xk, yk = x[k], y[k]
        vecs[k] = [bb * s - xk * t - yk * u for s, t, u in zip(vecs[k], vi, vj)]
    changed_set = set(changed)
    for k in changed:
        Gk = G[k]
        for l in rest:
            if l in changed_set:
                if l < k:
                    continue
                # <e_k', e_l'> = b^2 <e_k', e_l>
                inner = bb * Gk[l] - x[k] * Gi[l] - y[k] * Gj[l]
                val = bb * inner
            else:
                val = bb * Gk[l]
            Gk[l] = val
            G[l][k] = val
    _rescale(G, vecs, changed, rest)


def signature_of(A: Matrix) -> int:
    """Positive minus negative count of a diagonalization of A."""
    d = diagonalize(A)
    return sum(1 if e > 0 else -1 for e in d.entries)


def det_of(A: Matrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    rows = _as_rows(A)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    M, D = _integral(rows)
    return Fraction(bareiss_det(M), D**n)


def bareiss_det(M: List[List[int]]) -> int:
    """Bareiss elimination on a square integer matrix (modified in place)."""
    n = len(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pk = M[k][k]
        Mk = M[k]
        for i in range(k + 1, n):
            Mi = M[i]
            mik = Mi[k]
            if mik == 0 and prev == 1:
                for j in range(k + 1, n):
                    Mi[j] = pk * Mi[j]
                continue
            for j in range(k + 1, n):
                Mi[j] = (pk * Mi[j] - mik * Mk[j]) // prev
            Mi[k] = 0
        prev = pk
    return sign * M[n - 1][n - 1]


def standard_matrices(m: int) -> Tuple[List[List[int]], List[List[int]], List[List[int]]]:
    """(X_m, Y_m, P_m): lower-triangular ones, X_m + X_m^T, and the
    upper-triangular matrix with diagonal 1..m and -1 above it."""
    if m < 1:
        raise ValueError("m must be positive")
    X = [[1 if c <= r else 0 for c in range(m)] for r in range(m)]
    Y = [[X[r][c] + X[c][r] for c in range(m)] for r in range(m)]
    P = [[r + 1 if r == c else (-1 if c > r else 0) for c in range(m)] for r in range(m)]
    return X, Y, P
