"""Figures written next to the CLI's RESULT lines."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .analysis import CensusReport  # noqa: E402
from .attacks import ControlResult  # noqa: E402


def plot_census(reports: Sequence[CensusReport], path: str | Path) -> Path:
    """Measured failure percentage per (p, k) against the 100/p curve."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6, 4))
    primes = sorted({r.p for r in reports})
    lo, hi = min(primes), max(primes)
    grid = [lo + (hi - lo) * i / 200 for i in range(201)] if hi > lo else [lo]
    ax.plot(grid, [100 / p for p in grid], color="0.6", lw=1.5, label="100/p")
    for k in sorted({r.k for r in reports}):
        sel = sorted((r for r in reports if r.k == k), key=lambda r: r.p)
        ax.plot([r.p for r in sel], [float(r.failure_percent) for r in sel],
                "o", ms=7 - k, label=f"k={k}")
    ax.set_xlabel("prime p")
    ax.set_ylabel("degenerate secret tuples (%)")
    ax.set_title("Points scheme failure rate")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_control(results: dict[str, ControlResult], u: int, path: str | Path) -> Path:
    """Agreement between ``u | q(u)`` and ``u | a_0`` per scheme."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    names = list(results)
    ax.bar(names, [results[n].agreement_rate for n in names], color=["tab:red", "tab:blue"][: len(names)])
    # two independent indicators with rates 1/u agree at this rate
    chance = (1 / u) ** 2 + (1 - 1 / u) ** 2
    ax.axhline(chance, color="0.3", ls="--", lw=1, label="independent")
    ax.set_ylim(0, 1.05)
    ax.set_ylabel(f"P[u | q(u)  iff  u | a_0], u={u}")
    ax.legend(frameon=False, loc="lower right")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
