"""The Witt group W(Q) of rational symmetric bilinear forms.

A class is stored as a multiset of square-free integers ``a`` standing for
rank-one forms <a>.  That representative is canonical only up to the
cancellation <a> + <-a> = 0; two classes are compared through their complete
local invariant (signature together with the residue maps at the primes
dividing the generators), never by comparing generator lists.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple, Union

from .arith import (
    Rational,
    factor,
    is_prime,
    is_quadratic_residue,
    padic_split,
    squarefree_part,
)
from .errors import NotPrime

INFINITE = math.inf

Z2 = "Z2"
Z2xZ2 = "Z2xZ2"
Z4 = "Z4"

ResidueValue = Union[int, Tuple[int, int]]


@dataclass(frozen=True)
class WittClass:
    """Element of W(Q) as canonical generators.

    Generators are sorted by absolute value and then sign; no pair ``a, -a``
    is present.  Use :func:`equals` rather than ``==`` to compare classes.
    """

    generators: Tuple[int, ...] = ()

    def __add__(self, other: "WittClass") -> "WittClass":
        return add(self, other)

    def __neg__(self) -> "WittClass":
        return negate(self)

    def __len__(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        return format_generators(self.generators)


def format_generators(gens: Iterable[int]) -> str:
    parts = [f"⟨{a}⟩" for a in gens]
    return " ⊕ ".join(parts) if parts else "0"


def _canonicalize(gens: Iterable[int]) -> WittClass:
    # net multiplicity of <m> minus <-m>
    net: Counter = Counter()
    for a in gens:
        net[abs(a)] += 1 if a > 0 else -1
    out = []
    for m in sorted(net):
        k = net[m]
        out.extend([m if k > 0 else -m] * abs(k))
    return WittClass(tuple(out))


def from_diagonal(entries: Iterable[Rational]) -> WittClass:
    """Class of Diag(entries); zero entries are dropped."""
    return _canonicalize(squarefree_part(e) for e in entries if e != 0)


def from_generators(gens: Iterable[int]) -> WittClass:
    """Like :func:`from_diagonal` for integer entries."""
    return from_diagonal(gens)


ZERO = WittClass()


def add(w1: WittClass, w2: WittClass) -> WittClass:
    return _canonicalize(w1.generators + w2.generators)


def negate(w: WittClass) -> WittClass:
    return _canonicalize(-a for a in w.generators)


def signature(w: WittClass) -> int:
    return sum(1 if a > 0 else -1 for a in w.generators)


@dataclass(frozen=True)
class ResidueClass:
    """Element of W(F_p).

    The group depends on the prime: ``Z2`` for p = 2 (a bit), ``Z2xZ2`` for
    p = 1 mod 4 (counts of square and non-square generators, each mod 2) and
    ``Z4`` for p = 3 mod 4 (squares count +1 and non-squares -1, mod 4).
    """

    prime: int
    group: str
    value: ResidueValue

    def __add__(self, other: "ResidueClass") -> "ResidueClass":
        if other.prime != self.prime:
            raise ValueError("residues at different primes")
        if self.group == Z2xZ2:
            a, b = self.value
            c, d = other.value
            return ResidueClass(self.prime, Z2xZ2, ((a + c) % 2, (b + d) % 2))
        mod = 2 if self.group == Z2 else 4
        return ResidueClass(self.prime, self.group, (self.value + other.value) % mod)

    def __neg__(self) -> "ResidueClass":
        if self.group == Z4:
            return ResidueClass(self.prime, Z4, -self.value % 4)
        return self

    def is_zero(self) -> bool:
        return self.value in (0, (0, 0))

    def order(self) -> int:
        if self.is_zero():
            return 1
        if self.group == Z4 and self.value % 2:
            return 4
        return 2

    def to_json(self) -> dict:
        value = list(self.value) if self.group == Z2xZ2 else self.value
        return {"p": self.prime, "group": self.group, "value": value}


def residue_group(p: int) -> str:
    if p == 2:
        return Z2
    return Z2xZ2 if p % 4 == 1 else Z4


def zero_residue(p: int) -> ResidueClass:
    group = residue_group(p)
    return ResidueClass(p, group, (0, 0) if group == Z2xZ2 else 0)


def residue_at(w: WittClass, p: int) -> ResidueClass:
    """The residue map at p applied to w."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    group = residue_group(p)
    squares = nonsquares = 0
    for a in w.generators:
        if a % p:
            continue
        v, unit = padic_split(a, p)
        if v % 2 == 0:
            continue
        # a is square-free, so unit is an integer prime to p
        if p == 2 or is_quadratic_residue(unit.numerator, p):
            squares += 1
        else:
            nonsquares += 1
    if group == Z2:
        return ResidueClass(p, Z2, squares % 2)
    if group == Z2xZ2:
        return ResidueClass(p, Z2xZ2, (squares % 2, nonsquares % 2))
    return ResidueClass(p, Z4, (squares - nonsquares) % 4)


def relevant_primes(w: WittClass) -> Tuple[int, ...]:
    """Primes dividing some generator; residues vanish everywhere else."""
    primes = set()
    for a in w.generators:
        primes.update(factor(a).primes)
    return tuple(sorted(primes))


@dataclass(frozen=True)
class LocalProfile:
    signature: int
    residues: Dict[int, ResidueClass]

    def is_zero(self) -> bool:
        return self.signature == 0 and not self.residues


def local_profile(w: WittClass) -> LocalProfile:
    residues = {}
    for p in relevant_primes(w):
        r = residue_at(w, p)
        if not r.is_zero():
            residues[p] = r
    return LocalProfile(signature(w), residues)


def is_zero(w: WittClass) -> bool:
    if signature(w) != 0:
        return False
    return local_profile(w).is_zero()


def equals(w1: WittClass, w2: WittClass) -> bool:
    """Equality in W(Q), decided by signature and residues."""
    return is_zero(add(w1, negate(w2)))


def order(w: WittClass) -> Union[int, float]:
    """Order of w in W(Q): 1, 2, 4 or :data:`INFINITE`."""
    if signature(w) != 0:
        return INFINITE
    return max((r.order() for r in local_profile(w).residues.values()), default=1)
