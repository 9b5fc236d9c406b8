"""The five figure renderers: coordinate marginals across settings, C
marginals, fixed-C comparison, station forcing quiver, surface displacement
quiver.  Every figure writes a PNG plus a metadata sidecar JSON describing
the overlays and markers, so tests can verify content without image parsing.
"""
import json
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .schema import read_data, read_marginal

COORD_LABELS = {"a": "a", "b": "b", "d": "d (km)", "log10C": "log10 C"}


def _new_axes(xlabel, ylabel):
    fig, ax = plt.subplots(figsize=(6.0, 4.0), dpi=120)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    return fig, ax


def _save(fig, ax, out_png, meta):
    if meta.get("n_overlays"):
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(out_png, metadata={"Software": "plots"})
    plt.close(fig)
    sidecar = Path(out_png).with_suffix(".json")
    with open(sidecar, "w") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return meta


def render_marginal_overlay(inputs, out_png, coord, true_value=None,
                            figure_kind="marginals"):
    """Overlay marginal densities of one coordinate across settings.

    inputs: [(label, csv_path), ...] ordered coarsest first.
    """
    fig, ax = _new_axes(COORD_LABELS.get(coord, coord), "posterior density")
    labels = []
    for label, path in inputs:
        centers, dens = read_marginal(path)
        ax.plot(centers, dens, label=label, linewidth=1.2)
        labels.append(str(label))
    marker_drawn = False
    if true_value is not None:
        ax.axvline(true_value, color="k", linestyle="--", linewidth=1.0,
                   label="true value")
        marker_drawn = True
    meta = {"figure": figure_kind, "coordinate": coord,
            "inputs": [str(p) for _, p in inputs],
            "overlays": labels, "n_overlays": len(labels),
            "true_marker": true_value, "marker_drawn": marker_drawn,
            "output": str(out_png)}
    return _save(fig, ax, out_png, meta)


def render_c_marginal(inputs, out_png):
    """Marginal of log10 C, overlaid across settings."""
    return render_marginal_overlay(inputs, out_png, "log10C", None,
                                   figure_kind="c_marginals")


def render_fixed_c(inputs, out_png, coord, true_value=None):
    """Fixed-C comparison for one m coordinate: one curve per frozen C."""
    return render_marginal_overlay(inputs, out_png, coord, true_value,
                                   figure_kind="fixed_c")


def _quiver(data_csv, out_png, title, figure_kind):
    pts, u = read_data(data_csv)
    fig, ax = _new_axes("x1 (km)", "x2 (km)")
    ax.set_title(title)
    q = ax.quiver(pts[:, 0], pts[:, 1], u[:, 0], u[:, 1], u[:, 2],
                  cmap="coolwarm", angles="xy")
    fig.colorbar(q, ax=ax, label="u3 (m)")
    ax.plot(pts[:, 0], pts[:, 1], "k.", markersize=3)
    ax.set_aspect("equal")
    meta = {"figure": figure_kind, "inputs": [str(data_csv)],
            "overlays": [], "n_overlays": 0, "true_marker": None,
            "n_arrows": int(len(pts)), "output": str(out_png)}
    return _save(fig, ax, out_png, meta)


def render_forcing(data_csv, out_png):
    """Noisy station displacements as arrows at the station positions."""
    return _quiver(data_csv, out_png, "station data (noisy)", "forcing")


def render_surface_disp(data_csv, out_png):
    """Clean surface displacement field at the stations."""
    return _quiver(data_csv, out_png, "surface displacement (clean)",
                   "surface_disp")
