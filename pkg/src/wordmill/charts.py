"""Static chart rendering for CLI reports.

Everything goes through the Agg backend straight to a file; nothing here
opens a window.
"""

from __future__ import annotations

from collections.abc import Sequence

from .distributions import LengthDistribution, percentages


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_length_chart(
    series: Sequence[tuple[str, LengthDistribution]],
    path,
    *,
    title: str = "Word length distribution",
    percent: bool = True,
) -> None:
    """Grouped bar chart of one or more length distributions."""
    if not series:
        raise ValueError("need at least one distribution to plot")
    plt = _pyplot()
    lengths = sorted({length for _, dist in series for length in dist.lengths()})
    index = {length: i for i, length in enumerate(lengths)}
    width = 0.8 / len(series)

    fig, ax = plt.subplots(figsize=(8, 4.5))
    for s, (label, dist) in enumerate(series):
        if percent:
            values = dict(percentages(dist))
        else:
            values = dist.counts
        xs = [index[length] + s * width for length in lengths]
        ys = [values.get(length, 0) for length in lengths]
        ax.bar(xs, ys, width=width, label=label, align="edge")
    ax.set_xticks([i + 0.4 for i in range(len(lengths))])
    ax.set_xticklabels([str(length) for length in lengths])
    ax.set_xlabel("word length")
    ax.set_ylabel("% of generated words" if percent else "generated words")
    ax.set_title(title)
    ax.grid(axis="y", alpha=0.3)
    if len(series) > 1:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_degree_chart(histogram: dict[int, int], path, *, title: str = "Degree histogram") -> None:
    """Bar chart of node degree frequencies."""
    plt = _pyplot()
    degrees = sorted(histogram)
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.bar(degrees, [histogram[d] for d in degrees], width=0.8)
    ax.set_xlabel("degree")
    ax.set_ylabel("word types")
    ax.set_title(title)
    ax.grid(axis="y", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
