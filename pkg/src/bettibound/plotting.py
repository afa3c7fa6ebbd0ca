"""Figures for the ``bench`` report."""
from __future__ import annotations

from collections import defaultdict
from pathlib import Path
from typing import Iterable, Mapping

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

MARKERS = {"simplified": "+", "complete": "o"}


def render_timing_figure(rows: Iterable[Mapping], path: str | Path, title: str | None = None) -> Path:
    """Log-scale runtime against the constant Hilbert polynomial, one series per algorithm.

    ``rows`` are bench records with ``polynomial``, ``algorithm`` and ``seconds``.
    """
    series: dict[str, list[tuple[int, float]]] = defaultdict(list)
    for row in rows:
        series[row["algorithm"]].append((int(row["polynomial"]), float(row["seconds"])))

    fig, ax = plt.subplots(figsize=(8, 4))
    for algo, pts in sorted(series.items()):
        pts.sort()
        xs = [p for p, _ in pts]
        ys = [max(s, 1e-6) for _, s in pts]
        ax.plot(xs, ys, marker=MARKERS.get(algo, "."), markersize=3, linewidth=0.8, label=algo)
    ax.set_yscale("log")
    ax.set_xlabel("constant Hilbert polynomial")
    ax.set_ylabel("runtime (seconds)")
    if title:
        ax.set_title(title)
    ax.legend()
    ax.grid(True, which="both", linewidth=0.3, alpha=0.5)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
