"""Parameter grids of pretzel knots and whole-grid consistency checks."""
from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from .forms import det_of, diagonalize, symmetrize
from .knots import antisymmetrize
from .pretzel import (
    CATEGORY_I,
    CATEGORY_II,
    CATEGORY_III,
    PretzelKnot,
    classify,
    determinant_closed_form,
    predicted_order,
    seifert_matrix,
    signature_closed_form,
    stabilize,
    witt_closed_form,
)
from .witt import equals, from_diagonal, order, signature

CHECK_CLOSED_VS_DIRECT = "closed-vs-direct"
CHECK_STABILIZATION = "stabilization"
CHECK_PREDICTED_ORDER = "predicted-order"
CHECKS = (CHECK_CLOSED_VS_DIRECT, CHECK_STABILIZATION, CHECK_PREDICTED_ORDER)


@dataclass(frozen=True)
class Grid:
    category: str
    n: int
    odd_range: Tuple[int, int] = (-9, 9)
    even_range: Tuple[int, int] = (-8, 8)

    def __post_init__(self):
        if self.category not in (CATEGORY_I, CATEGORY_II, CATEGORY_III):
            raise ValueError(f"unknown category {self.category!r}")
        want_odd = self.category in (CATEGORY_I, CATEGORY_III)
        if self.n < 3 or (self.n % 2 == 1) != want_odd:
            raise ValueError(f"category {self.category} has no knots with n = {self.n}")


DEFAULT_GRIDS = (
    Grid(CATEGORY_III, 3),
    Grid(CATEGORY_III, 5),
    Grid(CATEGORY_I, 3),
    Grid(CATEGORY_I, 5),
    Grid(CATEGORY_II, 4),
)


def parse_range(text: str) -> Tuple[int, int]:
    """``"A..B"`` -> (A, B)."""
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise ValueError(f"range must look like A..B, got {text!r}") from None
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _odds(lo: int, hi: int) -> List[int]:
    return [x for x in range(lo, hi + 1) if x % 2]


def _evens(lo: int, hi: int) -> List[int]:
    return [x for x in range(lo, hi + 1) if x % 2 == 0 and x != 0]


def grid_knots(grid: Grid) -> Iterator[PretzelKnot]:
    """Every knot of the grid, twists in lexicographic order, even entry last."""
    odds = _odds(*grid.odd_range)
    if grid.category == CATEGORY_III:
        for t in itertools.product(odds, repeat=grid.n):
            yield PretzelKnot(t, CATEGORY_III)
        return
    evens = _evens(*grid.even_range)
    for head in itertools.product(odds, repeat=grid.n - 1):
        for r in evens:
            yield PretzelKnot(head + (r,), grid.category)


def grid_size(grid: Grid) -> int:
    odds = len(_odds(*grid.odd_range))
    if grid.category == CATEGORY_III:
        return odds**grid.n
    return odds ** (grid.n - 1) * len(_evens(*grid.even_range))


@dataclass(frozen=True)
class Mismatch:
    knot: PretzelKnot
    check: str
    detail: str

    def __str__(self) -> str:
        return f"{self.knot} [{self.check}] {self.detail}"


@dataclass
class SweepResult:
    check: str
    checked: int = 0
    skipped: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_closed_vs_direct(K: PretzelKnot) -> Optional[str]:
    """Compare the closed forms with direct linear algebra on the linking
    matrix; returns a description of the first disagreement, if any."""
    L = seifert_matrix(K)
    A = symmetrize(L)
    direct = from_diagonal(diagonalize(A).entries)
    closed = witt_closed_form(K)
    if not equals(closed, direct):
        return f"Witt class closed {closed} vs direct {direct}"
    sig_closed = signature_closed_form(K)
    if sig_closed != signature(direct):
        return f"signature closed {sig_closed} vs direct {signature(direct)}"
    det_closed = determinant_closed_form(K)
    det_direct = det_of(A)
    if abs(det_closed) != abs(det_direct) or det_closed % 2 == 0:
        return f"determinant closed {det_closed} vs direct {det_direct}"
    skew = det_of(antisymmetrize(L))
    if skew != 1:
        return f"det(L - L^T) = {skew}"
    return None


def _is_square(q) -> bool:
    if q < 0 or q.denominator != 1:
        return False
    n = int(q)
    return math.isqrt(n) ** 2 == n


def random_stabilization(K: PretzelKnot, rng: random.Random, bound: int = 9) -> Tuple[int, int, int]:
    p = rng.choice(_odds(-bound, bound))
    i = rng.randint(1, K.n + 1)
    j = rng.randint(i, K.n + 1)
    return p, i, j


def check_stabilization(K: PretzelKnot, p: int, i: int, j: int) -> Optional[str]:
    """Witt class, signature and determinant square-ratio under stabilization.

    The stabilized knot is evaluated by direct diagonalization of its own
    linking matrix, the original through the closed forms.
    """
    S = stabilize(K, p, i, j)
    A = symmetrize(seifert_matrix(S))
    direct = from_diagonal(diagonalize(A).entries)
    closed = witt_closed_form(K)
    tag = f"stabilized by ({p}, {i}, {j}) to {S}"
    if not equals(direct, closed):
        return f"{tag}: Witt class {direct} vs {closed}"
    if signature(direct) != signature_closed_form(K):
        return f"{tag}: signature {signature(direct)} vs {signature_closed_form(K)}"
    det_s = determinant_closed_form(S)
    if abs(det_of(A)) != abs(det_s):
        return f"{tag}: determinant closed {det_s} vs direct {det_of(A)}"
    # the symmetric-sum determinant picks up the factor -p^2
    ratio = Fraction(det_s, determinant_closed_form(K))
    if not _is_square(abs(ratio)):
        return f"{tag}: determinant ratio {ratio} is not a square"
    return None


def check_predicted_order(K: PretzelKnot) -> Optional[str]:
    """``None`` when the prediction matches or no rule applies."""
    pred = predicted_order(K)
    if pred is None:
        return None
    got = order(witt_closed_form(K))
    if pred[0] != got:
        return f"rule {pred[1]} predicts order {pred[0]}, computed {got}"
    return None


def run_sweep(
    knots: Iterable[PretzelKnot],
    check: str,
    seed: int = 0,
    stop_at_first: bool = False,
    progress: Optional[Callable[[int], None]] = None,
) -> SweepResult:
    if check not in CHECKS:
        raise ValueError(f"unknown check {check!r}")
    rng = random.Random(seed)
    result = SweepResult(check)
    for K in knots:
        if check == CHECK_CLOSED_VS_DIRECT:
            detail = check_closed_vs_direct(K)
        elif check == CHECK_STABILIZATION:
            detail = check_stabilization(K, *random_stabilization(K, rng))
        else:
            if predicted_order(K) is None:
                result.skipped += 1
                continue
            detail = check_predicted_order(K)
        result.checked += 1
        if detail is not None:
            result.mismatches.append(Mismatch(K, check, detail))
            if stop_at_first:
                break
        if progress is not None:
            progress(result.checked)
    return result


def sample_grid(grids: Sequence[Grid], count: int, seed: int = 0) -> List[PretzelKnot]:
    """``count`` knots drawn uniformly (with replacement) from the union of grids."""
    rng = random.Random(seed)
    sizes = [grid_size(g) for g in grids]
    total = sum(sizes)
    out = []
    for _ in range(count):
        k = rng.randrange(total)
        for g, size in zip(grids, sizes):
            if k < size:
                out.append(_nth_knot(g, k))
                break
            k -= size
    return out


def _nth_knot(grid: Grid, k: int) -> PretzelKnot:
    odds = _odds(*grid.odd_range)
    if grid.category == CATEGORY_III:
        digits = []
        for _ in range(grid.n):
            k, d = divmod(k, len(odds))
            digits.append(odds[d])
        return PretzelKnot(tuple(reversed(digits)), CATEGORY_III)
    evens = _evens(*grid.even_range)
    k, e = divmod(k, len(evens))
    digits = []
    for _ in range(grid.n - 1):
        k, d = divmod(k, len(odds))
        digits.append(odds[d])
    return classify(tuple(reversed(digits)) + (evens[e],))
