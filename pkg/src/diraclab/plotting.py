"""Figure rendering for scenario sweep output.

Every scenario gets a PNG next to its CSV: line plots for the rapidity and
angle sweeps, a two-panel surface for the long-format egg-tray data. The
Agg backend is forced so rendering works headless.
"""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

_LINE_STYLES = ("-", "--", "-.", ":", (0, (3, 1, 1, 1)), (0, (5, 2)), (0, (1, 1)))

_AXIS_LABELS = {
    "theta": r"$\theta$ (rad)",
    "omega": r"boost rapidity $\omega$",
    "alpha": r"$\alpha$ (rad)",
}


def _line_plot(header: list[str], rows: np.ndarray, title: str, path: str) -> None:
    x = rows[:, 0]
    fig, ax = plt.subplots(figsize=(7.2, 4.6))
    for k, name in enumerate(header[1:], start=1):
        ax.plot(x, rows[:, k], linestyle=_LINE_STYLES[(k - 1) % len(_LINE_STYLES)], label=name)
    ax.set_xlabel(_AXIS_LABELS.get(header[0], header[0]))
    ax.set_ylabel("negativity" if not header[1].startswith("dN") else "mean negativity change")
    ax.set_title(title)
    ax.legend(fontsize=8, ncol=2)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _surface_plot(header: list[str], rows: np.ndarray, title: str, path: str) -> None:
    alphas = np.unique(rows[:, 0])
    thetas = np.unique(rows[:, 1])
    panels = header[2:]
    fig, axes = plt.subplots(1, len(panels), figsize=(6.0 * len(panels), 4.8))
    axes = np.atleast_1d(axes)
    for k, (ax, name) in enumerate(zip(axes, panels), start=2):
        grid = rows[:, k].reshape(len(alphas), len(thetas))
        mesh = ax.pcolormesh(thetas, alphas, grid, shading="auto", cmap="viridis")
        ax.set_xlabel(_AXIS_LABELS["theta"])
        ax.set_ylabel(_AXIS_LABELS["alpha"])
        ax.set_title(name)
        fig.colorbar(mesh, ax=ax)
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render(scenario: str, header: list[str], rows, path: str) -> None:
    """Render the sweep table of ``scenario`` to ``path``."""
    arr = np.asarray(rows, dtype=float)
    if scenario == "eggtray":
        _surface_plot(header, arr, scenario, path)
    else:
        _line_plot(header, arr, scenario, path)
