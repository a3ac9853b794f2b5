"""Pretzel knots P(p_1, ..., p_n): validation, linking matrices, closed-form
Witt classes and order predictions.

Three parameter families make a knot (rather than a link):

* ``"I"``   n odd, exactly one p_i even (stored last)
* ``"II"``  n even, exactly one p_i even (stored last)
* ``"III"`` n odd, every p_i odd

For the first two families the basis of the Seifert surface's first homology
consists of ``|p_i| - 1`` twist loops per odd strand, one loop ``gamma``
running through all strands and, for family I, one loop ``delta`` around the
even strand.  Family III uses one loop per pair of adjacent strands.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from math import prod
from typing import List, Optional, Sequence, Tuple, Union

from .arith import factor
from .errors import EvenStabilizer, NotAKnot, TooShort, ZeroTwist
from .witt import INFINITE, WittClass, from_diagonal

CATEGORY_I = "I"
CATEGORY_II = "II"
CATEGORY_III = "III"

Order = Union[int, float]


@dataclass(frozen=True)
class PretzelKnot:
    twists: Tuple[int, ...]
    category: str

    @property
    def n(self) -> int:
        return len(self.twists)

    def __str__(self) -> str:
        return "P(" + ",".join(str(p) for p in self.twists) + ")"


def classify(raw: Sequence[int]) -> PretzelKnot:
    """Validate twist parameters and rotate a lone even entry to the end.

    Only cyclic rotations are applied, since those describe the same knot.
    """
    twists = tuple(int(p) for p in raw)
    n = len(twists)
    if n < 3:
        raise TooShort(f"a pretzel knot needs at least 3 strands, got {n}")
    if any(p == 0 for p in twists):
        raise ZeroTwist("twist parameters must be nonzero")
    evens = [i for i, p in enumerate(twists) if p % 2 == 0]
    if len(evens) > 1:
        raise NotAKnot(f"{len(evens)} even twist parameters describe a link")
    if not evens:
        if n % 2 == 0:
            raise NotAKnot("an even number of odd strands describes a link")
        return PretzelKnot(twists, CATEGORY_III)
    k = evens[0]
    twists = twists[k + 1 :] + twists[: k + 1]
    return PretzelKnot(twists, CATEGORY_I if n % 2 else CATEGORY_II)


def pretzel(*twists: int) -> PretzelKnot:
    return classify(twists)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def elementary_symmetric(values: Sequence[int], k: int) -> int:
    """The k-th elementary symmetric polynomial of ``values``."""
    e = [1] + [0] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * v
    return e[k]


def strand_determinant(values: Sequence[int]) -> int:
    """Sum over i of the product of all entries except the i-th."""
    return elementary_symmetric(values, len(values) - 1)


def _twisted_strands(K: PretzelKnot) -> Tuple[int, ...]:
    if K.category == CATEGORY_I:
        return K.twists[:-1]
    return K.twists


def seifert_matrix(K: PretzelKnot) -> List[List[int]]:
    """Linking matrix L with ``L[a][b] = lk(a, b^+)``, unsymmetrized."""
    if K.category == CATEGORY_III:
        return _seifert_all_odd(K.twists)
    strands = _twisted_strands(K)
    size = sum(abs(p) - 1 for p in strands) + (2 if K.category == CATEGORY_I else 1)
    L = [[0] * size for _ in range(size)]
    g = size - 2 if K.category == CATEGORY_I else size - 1
    s = 0
    start = 0
    for idx, p in enumerate(strands, start=1):
        m = abs(p) - 1
        even = idx % 2 == 0
        s -= _sign(p)
        # Twist loops of one strand link like X_m or its transpose, up to sign.
        lower = (p > 0) == even
        val = -1 if p > 0 else 1
        for r in range(m):
            for c in range(m):
                if (c <= r) if lower else (r <= c):
                    L[start + r][start + c] = val
        to_loop = -1 if (p > 0 and even) else (1 if (p < 0 and not even) else 0)
        from_loop = 1 if (p < 0 and even) else (-1 if (p > 0 and not even) else 0)
        for r in range(start, start + m):
            L[g][r] = to_loop
            L[r][g] = from_loop
        start += m
    L[g][g] = s // 2
    if K.category == CATEGORY_I:
        d = g + 1
        L[d][g] = 1
        L[d][d] = K.twists[-1] // 2
    return L


def _seifert_all_odd(p: Sequence[int]) -> List[List[int]]:
    m = len(p) - 1
    L = [[0] * m for _ in range(m)]
    for i in range(m):
        L[i][i] = (p[i] + p[i + 1]) // 2
        if i + 1 < m:
            L[i][i + 1] = -(p[i + 1] + 1) // 2
            L[i + 1][i] = -(p[i + 1] - 1) // 2
    return L


@dataclass(frozen=True)
class PretzelProfile:
    """Quantities feeding the closed-form computations.

    ``signs[i] = -sign(p_i)`` and ``ranks[i] = |p_i| - 1`` run over the
    strands that carry twist loops; ``corner`` is the sum of those signs.
    ``partial_sums`` holds, for the all-odd family, the values
    ``e_i(p_1, ..., p_{i+1})`` for i = 0..n-1.  ``head_det`` and
    ``loop_square``/``band_square`` (squares of the two tail basis vectors) are
    only meaningful for family I.
    """

    signs: Tuple[int, ...]
    ranks: Tuple[int, ...]
    corner: int
    full_det: int
    partial_sums: Tuple[int, ...] = ()
    head_det: Optional[int] = None
    loop_square: Optional[int] = None
    band_square: Optional[int] = None


def profile(K: PretzelKnot) -> PretzelProfile:
    p = K.twists
    strands = _twisted_strands(K) if K.category != CATEGORY_III else p
    signs = tuple(-_sign(x) for x in strands)
    ranks = tuple(abs(x) - 1 for x in strands)
    full = strand_determinant(p)
    if K.category == CATEGORY_III:
        sums = tuple(elementary_symmetric(p[: i + 1], i) for i in range(len(p)))
        return PretzelProfile(signs, ranks, sum(signs), full, partial_sums=sums)
    if K.category == CATEGORY_II:
        return PretzelProfile(signs, ranks, sum(signs), full)
    head = strand_determinant(p[:-1])
    return PretzelProfile(
        signs,
        ranks,
        sum(signs),
        full,
        head_det=head,
        loop_square=-prod(p[:-1]) * head,
        band_square=head * full,
    )


def closed_form_generators(K: PretzelKnot) -> List[int]:
    """Diagonal entries of the closed-form diagonalization (zeros removed)."""
    prof = profile(K)
    p = K.twists
    if K.category == CATEGORY_III:
        s = prof.partial_sums
        out = [s[i - 1] * s[i] for i in range(1, len(p))]
    else:
        out = [
            sign * k * (k + 1)
            for sign, rank in zip(prof.signs, prof.ranks)
            for k in range(1, rank + 1)
        ]
        if K.category == CATEGORY_I:
            out += [prof.loop_square, prof.band_square]
        else:
            out.append(-prod(p) * prof.full_det)
    return [x for x in out if x != 0]


def witt_closed_form(K: PretzelKnot) -> WittClass:
    return from_diagonal(closed_form_generators(K))


def signature_closed_form(K: PretzelKnot) -> int:
    return sum(_sign(x) for x in closed_form_generators(K))


def determinant_closed_form(K: PretzelKnot) -> int:
    return strand_determinant(K.twists)


def stabilize(K: PretzelKnot, p: int, i: int, j: int) -> PretzelKnot:
    """Insert ``p`` before position i and ``-p`` before position j (1-based;
    position n+1 appends)."""
    if p % 2 == 0:
        raise EvenStabilizer(f"stabilizing twist {p} is not odd")
    n = K.n
    if not 1 <= i <= j <= n + 1:
        raise ValueError(f"invalid insertion positions {i}, {j} for {n} strands")
    out = []
    for pos in range(1, n + 2):
        if pos == i:
            out.append(p)
        if pos == j:
            out.append(-p)
        if pos <= n:
            out.append(K.twists[pos - 1])
    return classify(out)


RULE_ODD_TRIPLE = "odd_triple"
RULE_ODD_ODD_EVEN = "odd_odd_even"
RULE_COPRIME_ODD = "coprime_odd"


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def _order_from_det(d: int) -> int:
    """Finite order read off from |det|.

    1 for a square, 4 when some prime congruent to 3 mod 4 divides |det| to
    an odd power (always the case when |det| = 3 mod 4), otherwise 2.  The
    plain mod-4 test is not enough: |det| = 21 is 1 mod 4 but has order 4.
    """
    d = abs(d)
    if _is_square(d):
        return 1
    odd_power_3mod4 = any(
        q % 4 == 3 and e % 2 for q, e in factor(d).primes.items()
    )
    return 4 if odd_power_3mod4 else 2


def predicted_order(K: PretzelKnot) -> Optional[Tuple[Order, str]]:
    """Order of the Witt class predicted from the determinant alone, when one
    of the known criteria applies; else ``None``.

    Returns ``(order, rule)`` with rule one of ``"odd_triple"`` (three odd
    strands), ``"odd_odd_even"`` (two odd strands and an even one) or
    ``"coprime_odd"`` (family I with pairwise coprime odd strands; only the
    zero/nonzero and infinite cases are decided).
    """
    p = K.twists
    det = determinant_closed_form(K)
    if K.n == 3 and K.category == CATEGORY_III:
        if det > 0:
            return INFINITE, RULE_ODD_TRIPLE
        return _order_from_det(det), RULE_ODD_TRIPLE
    if K.n == 3 and K.category == CATEGORY_I:
        a, b = p[0], p[1]
        if a + b == 0:
            return 1, RULE_ODD_ODD_EVEN
        if abs(a + b) == 2 and det > 0:
            return _order_from_det(det), RULE_ODD_ODD_EVEN
        return INFINITE, RULE_ODD_ODD_EVEN
    if K.category == CATEGORY_I and _pairwise_coprime(p[:-1]):
        if signature_closed_form(K) != 0:
            return INFINITE, RULE_COPRIME_ODD
        if _is_square(abs(det)):
            return 1, RULE_COPRIME_ODD
    return None


def _pairwise_coprime(values: Sequence[int]) -> bool:
    return all(
        math.gcd(a, b) == 1 for i, a in enumerate(values) for b in values[i + 1 :]
    )
