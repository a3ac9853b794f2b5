"""Invariant reports for pretzel knots and Seifert-matrix knots, rendered as
text or JSON."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .knots import Knot, LaurentPoly, alexander, knot_determinant, knot_signature, witt_class
from .pretzel import (
    PretzelKnot,
    determinant_closed_form,
    predicted_order,
    seifert_matrix,
    signature_closed_form,
    witt_closed_form,
)
from .witt import INFINITE, ResidueClass, WittClass, format_generators, local_profile, order, relevant_primes


@dataclass
class Report:
    name: str
    matrix_size: int
    witt: WittClass
    signature: int
    determinant: int
    residues: Dict[int, ResidueClass]
    order: Union[int, float]
    category: Optional[str] = None
    alexander: Optional[LaurentPoly] = None
    predicted: Optional[Tuple[Union[int, float], str]] = None
    primes: Tuple[int, ...] = field(default=())

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "category": self.category,
            "matrix_size": self.matrix_size,
            "witt_generators": list(self.witt.generators),
            "signature": self.signature,
            "determinant": self.determinant,
            "relevant_primes": list(self.primes),
            "residues": [self.residues[p].to_json() for p in sorted(self.residues)],
            "order": _order_json(self.order),
        }
        if self.alexander is not None:
            out["alexander"] = self.alexander.to_json()
        if self.predicted is not None:
            out["predicted_order"] = _order_json(self.predicted[0])
            out["rule"] = self.predicted[1]
        return out

    def to_text(self) -> str:
        lines = [f"name: {self.name}"]
        if self.category is not None:
            lines.append(f"category: {self.category}")
        lines += [
            f"matrix size: {self.matrix_size}",
            f"Witt class: {format_generators(self.witt.generators)}",
            f"signature: {self.signature}",
            f"determinant: {self.determinant}",
            "relevant primes: " + (" ".join(map(str, self.primes)) or "none"),
        ]
        if self.residues:
            lines.append("residues:")
            for p in sorted(self.residues):
                lines.append(f"  {p}: {_residue_text(self.residues[p])}")
        else:
            lines.append("residues: none")
        lines.append(f"order: {_order_text(self.order)}")
        if self.predicted is not None:
            lines.append(f"predicted order: {_order_text(self.predicted[0])} ({self.predicted[1]})")
        if self.alexander is not None:
            lines.append(f"Alexander polynomial: {self.alexander}")
        return "\n".join(lines)


def _order_json(o) -> Union[int, str]:
    return "inf" if o == INFINITE else int(o)


def _order_text(o) -> str:
    return "∞" if o == INFINITE else str(int(o))


def _residue_text(r: ResidueClass) -> str:
    if r.group == "Z2xZ2":
        return f"({r.value[0]}, {r.value[1]}) in Z2xZ2"
    return f"{r.value} in {r.group}"


def _assemble(name, size, w, sig, det, **extra) -> Report:
    prof = local_profile(w)
    return Report(
        name=name,
        matrix_size=size,
        witt=w,
        signature=sig,
        determinant=det,
        residues=prof.residues,
        order=order(w),
        primes=relevant_primes(w),
        **extra,
    )


def pretzel_report(K: PretzelKnot, with_alexander: bool = False) -> Report:
    """Report built from the closed forms, plus the order prediction."""
    L = seifert_matrix(K)
    poly = alexander(Knot(str(K), L, check=False)) if with_alexander else None
    return _assemble(
        str(K),
        len(L),
        witt_closed_form(K),
        signature_closed_form(K),
        determinant_closed_form(K),
        category=K.category,
        alexander=poly,
        predicted=predicted_order(K),
    )


def knot_report(K: Knot, with_alexander: bool = False) -> Report:
    """Report built by direct diagonalization of the Seifert form."""
    return _assemble(
        K.name,
        K.size,
        witt_class(K),
        knot_signature(K),
        knot_determinant(K),
        alexander=alexander(K) if with_alexander else None,
    )


def dumps(report: Report) -> str:
    return json.dumps(report.to_json(), ensure_ascii=False)


def witt_from_json(data: dict) -> WittClass:
    return WittClass(tuple(int(a) for a in data["witt_generators"]))


def tlsig_table(samples: List[Tuple[float, Optional[int]]]) -> List[str]:
    """Tab-delimited rows ``k, angle, signature`` (``singular`` where the
    form degenerates)."""
    rows = ["k\tangle\tsignature"]
    for k, (theta, sig) in enumerate(samples, start=1):
        rows.append(f"{k}\t{theta:.6f}\t{'singular' if sig is None else sig}")
    return rows
