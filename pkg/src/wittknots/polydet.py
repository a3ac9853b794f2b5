"""Exact determinants of integer matrices, and of the pencil t*V - V^T,
by modular evaluation.

Each determinant is computed modulo several primes just below 2**31 with
vectorized elimination over a whole batch of same-size matrices, then lifted
by the Chinese remainder theorem.  Enough primes are used to exceed twice the
Hadamard bound, so the lifted value is exact.  For the pencil, the
determinant is evaluated at n + 1 points (n/2 + 1 when n is even, using its
palindromic symmetry) and interpolated; every
coefficient of a polynomial is bounded by its maximum on the unit circle,
which Hadamard's inequality bounds in turn.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .arith import is_prime

IntMatrix = Sequence[Sequence[int]]


def _primes_below(top: int, count: int) -> Tuple[int, ...]:
    out = []
    n = top
    while len(out) < count:
        if is_prime(n):
            out.append(n)
        n -= 1
    return tuple(out)


MODULI = _primes_below(1 << 31, 64)
_LOG2_MODULUS = 30.99


def _primes_for_bound(bound_log2: float) -> Tuple[int, ...]:
    k = max(1, math.ceil((bound_log2 + 2) / _LOG2_MODULUS))
    if k > len(MODULI):
        raise OverflowError("determinant bound too large for the modulus table")
    return MODULI[:k]


def _powmod(base: np.ndarray, exp: int, p: int) -> np.ndarray:
    result = np.ones_like(base)
    b = base % p
    while exp:
        if exp & 1:
            result = result * b % p
        b = b * b % p
        exp >>= 1
    return result


def det_mod(mats: np.ndarray, p: int) -> np.ndarray:
    """Determinants modulo p of a (B, n, n) batch with entries in [0, p).

    Division-free elimination: every row below the pivot is multiplied by the
    pivot, and the accumulated factors are divided out once at the end.
    """
    M = mats.copy()
    B, n, _ = M.shape
    if n == 0:
        return np.ones(B, dtype=np.int64)
    idx = np.arange(B)
    sign = np.ones(B, dtype=np.int64)
    alive = np.ones(B, dtype=bool)
    scale = np.ones(B, dtype=np.int64)
    diag = np.ones(B, dtype=np.int64)
    for k in range(n):
        nz = M[:, k:, k] != 0
        alive &= nz.any(axis=1)
        piv = nz.argmax(axis=1) + k
        swap = piv != k
        if swap.any():
            rows = M[idx, piv].copy()
            M[idx, piv] = M[idx, k]
            M[idx, k] = rows
            sign[swap] = -sign[swap]
        pk = M[:, k, k].copy()
        pk[~alive] = 1
        diag = diag * pk % p
        if k + 1 < n:
            below = M[:, k + 1 :, k : k + 1]
            M[:, k + 1 :, k:] = (
                M[:, k + 1 :, k:] * pk[:, None, None] - below * M[:, k : k + 1, k:]
            ) % p
            scale = scale * _powmod(pk, n - k - 1, p) % p
    det = diag * _powmod(scale, p - 2, p) % p
    det = det * sign % p
    det[~alive] = 0
    return det


def hadamard_log2(mat: IntMatrix) -> float:
    """log2 of the Hadamard bound on |det(mat)|."""
    total = 0.0
    for row in mat:
        s = sum(x * x for x in row)
        if s == 0:
            return -math.inf
        total += 0.5 * math.log2(s)
    return total


def _pencil_log2(V: np.ndarray) -> float:
    """Largest log2 Hadamard bound over a (B, n, n) batch for t on the unit
    circle, where each entry of t*V - V^T is at most |V_ij| + |V_ji|."""
    A = np.abs(V)
    S = ((A + A.transpose(0, 2, 1)).astype(np.float64) ** 2).sum(axis=2)
    with np.errstate(divide="ignore"):
        return float((0.5 * np.log2(S)).sum(axis=1).max())


def _crt(residues: Sequence[np.ndarray], primes: Sequence[int]) -> List[List[int]]:
    """Combine per-prime residue arrays into symmetric integer representatives."""
    modulus = 1
    for p in primes:
        modulus *= p
    partial = []
    for p in primes:
        m = modulus // p
        partial.append(m * pow(m, -1, p))
    half = modulus // 2
    flat = [r.reshape(-1).tolist() for r in residues]
    shape = residues[0].shape
    out = []
    for vals in zip(*flat):
        x = sum(v * c for v, c in zip(vals, partial)) % modulus
        out.append(x - modulus if x > half else x)
    if len(shape) == 1:
        return [out]
    width = shape[1]
    return [out[i : i + width] for i in range(0, len(out), width)]


def _group_by_size(mats: Sequence[IntMatrix]) -> Dict[int, List[int]]:
    groups: Dict[int, List[int]] = {}
    for i, m in enumerate(mats):
        groups.setdefault(len(m), []).append(i)
    return groups


def exact_determinants(mats: Sequence[IntMatrix], chunk: int = 512) -> List[int]:
    """Exact determinants of many square integer matrices."""
    out = [0] * len(mats)
    for n, members in _group_by_size(mats).items():
        if n == 0:
            for i in members:
                out[i] = 1
            continue
        for start in range(0, len(members), chunk):
            part = members[start : start + chunk]
            bound = max(hadamard_log2(mats[i]) for i in part)
            if bound == -math.inf:
                bound = 0.0
            primes = _primes_for_bound(bound)
            arr = np.array([mats[i] for i in part], dtype=np.int64)
            residues = [det_mod(arr % p, p) for p in primes]
            for i, v in zip(part, _crt(residues, primes)[0]):
                out[i] = v
    return out


def _solve_mod(A: List[List[int]], p: int) -> List[List[int]]:
    """Inverse of a square matrix mod p by Gauss-Jordan in Python integers."""
    m = len(A)
    W = [list(row) + [int(r == c) for c in range(m)] for r, row in enumerate(A)]
    for c in range(m):
        r = next(r for r in range(c, m) if W[r][c] % p)
        W[c], W[r] = W[r], W[c]
        inv = pow(W[c][c], -1, p)
        W[c] = [v * inv % p for v in W[c]]
        for r in range(m):
            if r != c and W[r][c]:
                f = W[r][c]
                W[r] = [(v - f * w) % p for v, w in zip(W[r], W[c])]
    return [row[m:] for row in W]


@lru_cache(maxsize=None)
def _interpolation_matrix(n: int, p: int) -> Tuple[np.ndarray, np.ndarray]:
    """Evaluation points and the matrix sending values there to c_0..c_n.

    For even n the pencil is palindromic, t^n f(1/t) = (-1)^n f(t) = f(t),
    so n/2 + 1 values at t = 1, ..., n/2 + 1 determine it; the points give
    distinct t + 1/t, hence an invertible system.
    """
    if n % 2:
        pts = list(range(n + 1))
        A = [[pow(x, k, p) for k in range(n + 1)] for x in pts]
        inv = _solve_mod(A, p)
    else:
        m = n // 2
        pts = list(range(1, m + 2))
        A = [[(pow(x, k, p) + pow(x, n - k, p)) % p for k in range(m)] + [pow(x, m, p)] for x in pts]
        half = _solve_mod(A, p)
        # expand c_0..c_m to c_0..c_n
        inv = half + half[:m][::-1]
    return np.array(pts, dtype=np.int64), np.array(inv, dtype=np.int64).T.copy()


def _mulmod(Y: np.ndarray, W: np.ndarray, p: int) -> np.ndarray:
    """(Y @ W) mod p for entries below 2**31, splitting Y into 16-bit halves
    so no partial sum overflows int64."""
    lo = Y & 0xFFFF
    hi = Y >> 16
    return ((hi @ W % p) * 65536 + lo @ W % p) % p


def pencil_coefficients(mats: Sequence[IntMatrix], chunk: int = 64) -> List[List[int]]:
    """Coefficients c_0..c_n of det(t*V - V^T) for each square V."""
    out: List[List[int]] = [[] for _ in mats]
    for n, members in _group_by_size(mats).items():
        if n == 0:
            for i in members:
                out[i] = [1]
            continue
        for start in range(0, len(members), chunk):
            part = members[start : start + chunk]
            V = np.array([mats[i] for i in part], dtype=np.int64)
            primes = _primes_for_bound(max(_pencil_log2(V), 0.0))
            VT = V.transpose(0, 2, 1)
            residues = []
            for p in primes:
                ts, W = _interpolation_matrix(n, p)
                # batch layout: (matrix, point) flattened
                pencil = (ts[None, :, None, None] * V[:, None] - VT[:, None]) % p
                vals = det_mod(pencil.reshape(-1, n, n), p).reshape(len(part), len(ts))
                residues.append(_mulmod(vals, W, p))
            for i, coeffs in zip(part, _crt(residues, primes)):
                out[i] = coeffs
    return out
