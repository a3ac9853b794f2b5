"""Knots given by Seifert matrices and their classical invariants."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

from .errors import BadMatrixFile, NearSingular, NotAdmissible, NotOnCircle, OddSize
from .forms import det_of, diagonalize, signature_of, symmetrize
from .polydet import pencil_coefficients
from .pretzel import classify, seifert_matrix
from .witt import WittClass, from_diagonal

IntMatrix = List[List[int]]


def antisymmetrize(V: Sequence[Sequence[int]]) -> IntMatrix:
    n = len(V)
    return [[V[i][j] - V[j][i] for j in range(n)] for i in range(n)]


def _check_square(V) -> IntMatrix:
    rows = [list(r) for r in V]
    if any(len(r) != len(rows) for r in rows):
        raise NotAdmissible("Seifert matrix is not square")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                raise NotAdmissible(f"Seifert matrix entry {x!r} is not an integer")
    return rows


def is_admissible(V: Sequence[Sequence[int]]) -> bool:
    """det(V - V^T) = +-1."""
    return abs(det_of(antisymmetrize(V))) == 1


@dataclass(frozen=True)
class Knot:
    """A knot presented by an admissible Seifert matrix (checked on creation)."""

    name: str
    V: Tuple[Tuple[int, ...], ...]

    def __init__(self, name: str, V: Sequence[Sequence[int]], check: bool = True):
        rows = _check_square(V)
        if check and not is_admissible(rows):
            raise NotAdmissible(f"{name}: det(V - V^T) is not +-1")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "V", tuple(tuple(r) for r in rows))

    @property
    def size(self) -> int:
        return len(self.V)

    def matrix(self) -> IntMatrix:
        return [list(r) for r in self.V]


def witt_class(K: Knot) -> WittClass:
    return from_diagonal(diagonalize(symmetrize(K.V)).entries)


def knot_determinant(K: Knot) -> int:
    """det(V + V^T), sign included."""
    return int(det_of(symmetrize(K.V)))


def knot_signature(K: Knot) -> int:
    return signature_of(symmetrize(K.V))


def connected_sum(K1: Knot, K2: Knot, name: str = "") -> Knot:
    n1, n2 = K1.size, K2.size
    V = [list(r) + [0] * n2 for r in K1.V] + [[0] * n1 + list(r) for r in K2.V]
    return Knot(name or f"{K1.name}#{K2.name}", V, check=False)


def mirror(K: Knot) -> Knot:
    return Knot(f"mirror({K.name})", [[-x for x in r] for r in K.V], check=False)


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial as a map exponent -> nonzero coefficient."""

    coefficients: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(k): int(v) for k, v in self.coefficients.items() if v}
        object.__setattr__(self, "coefficients", dict(sorted(clean.items())))

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], low: int = 0) -> "LaurentPoly":
        return cls({low + i: c for i, c in enumerate(coeffs)})

    def coeff(self, k: int) -> int:
        return self.coefficients.get(k, 0)

    def __call__(self, t: Union[int, Fraction]) -> Union[int, Fraction]:
        t = Fraction(t)
        total = sum(c * t**k for k, c in self.coefficients.items())
        return int(total) if total.denominator == 1 else total

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: Dict[int, int] = {}
        for a, x in self.coefficients.items():
            for b, y in other.coefficients.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self.coefficients.items()})

    def is_symmetric(self) -> bool:
        return all(self.coeff(-k) == c for k, c in self.coefficients.items())

    def normalized(self) -> "LaurentPoly":
        """Sign fixed so the top coefficient is positive."""
        if self.coefficients and self.coefficients[max(self.coefficients)] < 0:
            return -self
        return self

    def to_json(self) -> Dict[str, int]:
        return {str(k): c for k, c in sorted(self.coefficients.items(), reverse=True)}

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in sorted(self.coefficients.items(), reverse=True):
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append(("-" if c < 0 else "+", body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, body in terms[1:]:
            out += f" {s} {body}"
        return out


def _laurent_from_pencil(coeffs: Sequence[int], n: int) -> LaurentPoly:
    return LaurentPoly.from_coefficients(coeffs, -(n // 2)).normalized()


def alexander_of_matrices(mats: Sequence[Sequence[Sequence[int]]]) -> List[LaurentPoly]:
    """Alexander polynomials t^(-n/2) det(t V - V^T) of many even-size matrices."""
    for V in mats:
        if len(V) % 2:
            raise OddSize(f"Seifert matrix of odd size {len(V)}")
    coeffs = pencil_coefficients([[list(r) for r in V] for V in mats])
    return [_laurent_from_pencil(c, len(V)) for c, V in zip(coeffs, mats)]


def alexander(K: Knot) -> LaurentPoly:
    return alexander_of_matrices([K.V])[0]


ZERO_TOLERANCE = 1e-9
CIRCLE_TOLERANCE = 1e-12

Omega = Union[complex, Tuple[float, float]]


def _as_point(omega: Omega) -> Tuple[float, float]:
    if isinstance(omega, complex):
        return omega.real, omega.imag
    re, im = omega
    return float(re), float(im)


def tristram_levine(K: Knot, omega: Omega) -> int:
    """Signature of the Hermitian form (1 - w) V + (1 - conj w) V^T.

    Computed from the real symmetric matrix [[Re A, -Im A], [Im A, Re A]],
    whose spectrum is that of A with every eigenvalue doubled.  Raises
    :class:`NearSingular` when an eigenvalue is within 1e-9 * ||A|| of zero,
    which happens when w is (close to) a root of the Alexander polynomial.
    """
    re, im = _as_point(omega)
    if abs(re * re + im * im - 1.0) > CIRCLE_TOLERANCE:
        raise NotOnCircle(f"({re}, {im}) is not on the unit circle")
    if abs(re - 1.0) <= CIRCLE_TOLERANCE and abs(im) <= CIRCLE_TOLERANCE:
        return 0
    V = np.array(K.V, dtype=np.float64)
    real = (1.0 - re) * (V + V.T)
    imag = im * (V.T - V)
    big = np.block([[real, -imag], [imag, real]])
    eig = np.linalg.eigvalsh(big)
    norm = float(np.max(np.abs(eig))) if eig.size else 0.0
    if norm == 0.0:
        return 0
    if np.any(np.abs(eig) <= ZERO_TOLERANCE * norm):
        raise NearSingular(f"form is numerically singular at omega = ({re}, {im})")
    pos = int(np.sum(eig > 0))
    neg = int(np.sum(eig < 0))
    return (pos - neg) // 2


def circle_samples(count: int) -> List[Tuple[float, float]]:
    """``count`` equally spaced points of the unit circle other than 1."""
    step = 2 * math.pi / (count + 1)
    return [(math.cos(k * step), math.sin(k * step)) for k in range(1, count + 1)]


def tristram_levine_samples(K: Knot, count: int) -> List[Tuple[float, int]]:
    """(angle, signature) pairs at :func:`circle_samples` points."""
    step = 2 * math.pi / (count + 1)
    return [
        (k * step, tristram_levine(K, w))
        for k, w in enumerate(circle_samples(count), start=1)
    ]


def load_knot(path: Union[str, Path]) -> Knot:
    """Read ``{"name": ..., "matrix": [[...], ...]}`` from a JSON file."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise BadMatrixFile(f"cannot read {path}: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("matrix"), list):
        raise BadMatrixFile(f"{path}: expected an object with a 'matrix' list")
    matrix = data["matrix"]
    if not all(isinstance(r, list) for r in matrix):
        raise NotAdmissible(f"{path}: matrix rows must be lists")
    name = data.get("name", path.stem)
    if not isinstance(name, str):
        raise BadMatrixFile(f"{path}: 'name' must be a string")
    return Knot(name, matrix)


def knot_from_pretzel(twists: Iterable[int]) -> Knot:
    P = classify(list(twists))
    return Knot(str(P), seifert_matrix(P))
