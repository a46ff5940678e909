"""Figures written next to the delimited command-line output."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_counts(
    path: str | Path,
    series: Mapping[str, Sequence[int]],
    title: str = "",
    mismatch: int | None = None,
) -> Path:
    """Counts by size, one line per series, on a log scale when everything is positive."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    markers = "os^vD"
    for k, (label, values) in enumerate(series.items()):
        ax.plot(range(len(values)), values, marker=markers[k % len(markers)],
                markersize=3, linewidth=1, label=label)
    if all(v > 0 for values in series.values() for v in values):
        ax.set_yscale("log")
    if mismatch is not None:
        ax.axvline(mismatch, color="red", linestyle="--", linewidth=1, label=f"first mismatch n={mismatch}")
    ax.set_xlabel("n")
    ax.set_ylabel("count")
    if title:
        ax.set_title(title)
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_layers(path: str | Path, layers: Sequence[int], expected: Sequence[int], title: str = "") -> Path:
    """Layer sizes of a crystal graph against an expected count sequence."""
    return plot_counts(path, {"crystal layers": list(layers), "expected": list(expected)}, title)
