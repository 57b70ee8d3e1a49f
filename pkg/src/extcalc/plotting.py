"""Figure rendering for the command-line report path.

Everything here draws from exact rationals, converting to float only at the
last moment for the axes.  Figures are written straight to files; no display
backend is assumed.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .dist import Dist


def render_dist(dist: Dist, path, title: str | None = None) -> None:
    """Stem plot of a distribution on the line."""
    fig, ax = plt.subplots(figsize=(6.4, 3.6), layout="constrained")
    if len(dist):
        xs = [float(p) for p, _ in dist.items()]
        ws = [float(w) for _, w in dist.items()]
        ax.stem(xs, ws, basefmt="C7-")
    else:
        ax.annotate("zero distribution", (0.5, 0.5), xycoords="axes fraction",
                    ha="center", color="C7")
    ax.axhline(0.0, color="C7", lw=0.8)
    ax.set_xlabel("point")
    ax.set_ylabel("weight")
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3)
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_conv_powers(powers, summary, path) -> None:
    """Two-panel report for a convolution-power run.

    Left: the distributions themselves, overlaid.  Right: growth of the
    variance next to the decay of the squared-skewness ratio, both against
    the power k.  ``summary`` rows are ``(k, total, mean, variance, skew)``.
    """
    fig, (ax_dists, ax_moments) = plt.subplots(
        1, 2, figsize=(10.0, 4.0), layout="constrained"
    )

    for k, dist in enumerate(powers, start=1):
        xs = [float(p) for p, _ in dist.items()]
        ws = [float(w) for _, w in dist.items()]
        ax_dists.plot(xs, ws, marker="o", ms=3, lw=1, label=f"k={k}")
    ax_dists.set_xlabel("point")
    ax_dists.set_ylabel("weight")
    ax_dists.set_title("convolution powers")
    ax_dists.grid(True, alpha=0.3)
    if len(powers) <= 10:
        ax_dists.legend(fontsize=8)

    ks = [row[0] for row in summary]
    variances = [float(row[3]) for row in summary]
    skews = [float(row[4]) for row in summary]
    ax_moments.plot(ks, variances, marker="o", color="C0", label="variance")
    ax_moments.set_xlabel("power k")
    ax_moments.set_ylabel("variance", color="C0")
    twin = ax_moments.twinx()
    twin.plot(ks, skews, marker="s", color="C3", label="skewness ratio")
    twin.set_ylabel("squared-skewness ratio", color="C3")
    ax_moments.set_title("moment trends")
    ax_moments.grid(True, alpha=0.3)

    fig.savefig(path, dpi=150)
    plt.close(fig)
