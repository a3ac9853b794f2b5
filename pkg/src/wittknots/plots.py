"""Figures for sampled Tristram-Levine signatures."""
from __future__ import annotations

import math
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .knots import LaurentPoly  # noqa: E402


def _abs_on_circle(poly: LaurentPoly, theta: float) -> float:
    z = complex(math.cos(theta), math.sin(theta))
    return abs(sum(c * z**k for k, c in poly.coefficients.items()))


def plot_tristram_levine(
    samples: Sequence[Tuple[float, Optional[int]]],
    poly: LaurentPoly,
    path: Union[str, Path],
    title: str = "",
) -> Path:
    """Write a two-panel figure: sampled signatures against the angle of w,
    and |Alexander(w)| on the unit circle, whose zeros are where the
    signature may jump."""
    path = Path(path)
    fig, (top, bottom) = plt.subplots(2, 1, sharex=True, figsize=(7, 5))
    good = [(t, s) for t, s in samples if s is not None]
    bad = [t for t, s in samples if s is None]
    if good:
        xs, ys = zip(*good)
        top.plot(xs, ys, "o-", drawstyle="steps-mid")
    for t in bad:
        top.axvline(t, color="red", linestyle=":")
    top.yaxis.set_major_locator(MaxNLocator(integer=True))
    top.set_ylabel("signature")
    top.grid(True, alpha=0.3)

    grid: List[float] = [2 * math.pi * k / 720 for k in range(1, 720)]
    bottom.plot(grid, [_abs_on_circle(poly, t) for t in grid])
    bottom.set_xlabel("angle of w (radians)")
    bottom.set_ylabel("|Alexander(w)|")
    bottom.set_xlim(0, 2 * math.pi)
    bottom.grid(True, alpha=0.3)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
