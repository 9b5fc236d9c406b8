"""Batch figure renderer for inversion CLI output directories.

Usage: plots --in DIR --out DIR

Scans the input directory for known artifacts and renders every figure whose
inputs are present:
  marginal_{a,b,d}.csv in DIR or setting subdirs  -> marginal_<coord>.png
  marginal_log10C.csv likewise                    -> marginal_log10C.png
  fixedC_*_marginal_{a,b,d}.csv                   -> fixedC_<coord>.png
  data_noisy.csv                                  -> forcing.png
  data_clean.csv                                  -> surface_disp.png

True-value markers come from manifest.json when available.  Exit codes:
0 success, 1 bad arguments or no renderable inputs, 2 schema mismatch.
"""
import argparse
import re
import sys
from pathlib import Path

from . import figures
from .schema import SchemaError, read_true_model

M_COORDS = ("a", "b", "d")


def _marginal_inputs(in_dir, coord):
    """(label, path) pairs: setting subdirectories first, then the top level."""
    found = []
    for sub in sorted(p for p in in_dir.iterdir() if p.is_dir()):
        path = sub / f"marginal_{coord}.csv"
        if path.exists():
            found.append((sub.name, path))
    top = in_dir / f"marginal_{coord}.csv"
    if top.exists():
        found.append((in_dir.name, top))
    return found


def _fixed_c_inputs(in_dir, coord):
    pat = re.compile(rf"fixedC_(.+)_marginal_{coord}\.csv$")
    found = []
    for path in sorted(in_dir.glob(f"fixedC_*_marginal_{coord}.csv")):
        m = pat.match(path.name)
        found.append((f"C = {m.group(1)}", path))
    return found


def render_all(in_dir, out_dir):
    """Render every figure with available inputs; returns metadata per file."""
    in_dir, out_dir = Path(in_dir), Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    m_true = read_true_model(in_dir)
    rendered = {}

    for i, coord in enumerate(M_COORDS):
        inputs = _marginal_inputs(in_dir, coord)
        if inputs:
            out = out_dir / f"marginal_{coord}.png"
            tv = m_true[i] if m_true else None
            rendered[out.name] = figures.render_marginal_overlay(
                inputs, out, coord, tv)

    c_inputs = _marginal_inputs(in_dir, "log10C")
    if c_inputs:
        out = out_dir / "marginal_log10C.png"
        rendered[out.name] = figures.render_c_marginal(c_inputs, out)

    for i, coord in enumerate(M_COORDS):
        inputs = _fixed_c_inputs(in_dir, coord)
        if inputs:
            out = out_dir / f"fixedC_{coord}.png"
            tv = m_true[i] if m_true else None
            rendered[out.name] = figures.render_fixed_c(inputs, out, coord, tv)

    noisy = in_dir / "data_noisy.csv"
    if noisy.exists():
        out = out_dir / "forcing.png"
        rendered[out.name] = figures.render_forcing(noisy, out)

    clean = in_dir / "data_clean.csv"
    if clean.exists():
        out = out_dir / "surface_disp.png"
        rendered[out.name] = figures.render_surface_disp(clean, out)

    return rendered


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plots", description="Render figures from inversion CLI outputs")
    parser.add_argument("--in", dest="in_dir", required=True,
                        help="run output directory with CSV artifacts")
    parser.add_argument("--out", dest="out_dir", required=True,
                        help="directory for PNG figures")
    args = parser.parse_args(argv)
    in_dir = Path(args.in_dir)
    if not in_dir.is_dir():
        print(f"error: input directory {in_dir} does not exist",
              file=sys.stderr)
        return 1
    try:
        rendered = render_all(in_dir, args.out_dir)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 2
    if not rendered:
        print(f"error: no renderable inputs found in {in_dir}",
              file=sys.stderr)
        return 1
    for name in sorted(rendered):
        print(f"wrote {name}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
