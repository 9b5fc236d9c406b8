"""Command-line pipeline driver.

Subcommands: synth, invert, sample, grid, experiments, fixed-c, validate.
Every run writes its artifacts plus a manifest.json echoing the resolved
config, the seeds, and content hashes of the outputs, so a rerun from the
manifest reproduces the files byte for byte.

Exit codes: 0 success, 1 configuration error, 2 runtime failure.
"""
import argparse
import csv
import hashlib
import json
import math
import sys
import traceback
from pathlib import Path

import numpy as np

from . import analysis, config as cfgmod, sampler as mp, synth
from .config import ConfigError
from .forward import assemble, scale_data
from .geometry import FaultGeometry
from .quadrature import FaultQuadrature
from .tikhonov import sigma_max2, solve_gmin


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def _write_json(path: Path, obj):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _write_manifest(out: Path, cmd, cfg, extra=None):
    files = sorted(p for p in out.rglob("*")
                   if p.is_file() and p.name != "manifest.json")
    hashes = {str(p.relative_to(out)): _sha256(p) for p in files}
    combined = hashlib.sha256(
        "".join(f"{k}:{v}\n" for k, v in hashes.items()).encode()).hexdigest()
    manifest = {
        "command": cmd,
        "config": cfg,
        "seeds": {"noise_seed": cfg["scenario"]["noise_seed"],
                  "sampler_seed": cfg["sampler"]["rng_seed"]},
        "outputs": hashes,
        "content_hash": combined,
    }
    if extra:
        manifest.update(extra)
    _write_json(out / "manifest.json", manifest)


def _synth_data(cfg, stations):
    scn = cfgmod.build_scenario(cfg, cfgmod.build_admissible(cfg))
    return scn, *synth.generate(scn, stations, cfgmod.build_elastic(cfg),
                                cfgmod.build_admissible(cfg))


def _load_or_make_data(cfg, stations, out: Path):
    """Noisy station data: reuse a synth artifact in out/ if present."""
    path = out / "data_noisy.csv"
    if path.exists():
        pts, u = synth.load_data_csv(path)
        if pts.shape[0] != stations.n_stations or not np.allclose(
                pts, stations.points[:, :2]):
            raise ConfigError(f"{path} does not match the configured stations; "
                              "re-run synth or clear the output directory")
        return u
    _, _, noisy, _ = _synth_data(cfg, stations)
    return noisy


def cmd_validate(cfg, out, threads):
    print(json.dumps(cfg, indent=2, sort_keys=True))
    return {}


def cmd_synth(cfg, out: Path, threads):
    stations = cfgmod.build_stations(cfg)
    scn, clean, noisy, sigma = _synth_data(cfg, stations)
    synth.dump_data_csv(out / "data_clean.csv", stations, clean)
    synth.dump_data_csv(out / "data_noisy.csv", stations, noisy)
    info = {"sigma": sigma,
            "max_abs_clean": float(np.max(np.abs(clean))),
            "relative_noise_norm":
                float(np.linalg.norm(noisy - clean) / np.linalg.norm(clean))
                if np.any(clean) else 0.0}
    _write_json(out / "synth_info.json", info)
    print(f"wrote {stations.n_stations} stations, sigma = {sigma:.6g}")
    return {"sigma": sigma}


def cmd_invert(cfg, out: Path, threads):
    stations = cfgmod.build_stations(cfg)
    basis = cfgmod.build_basis(cfg)
    data = _load_or_make_data(cfg, stations, out)
    m = FaultGeometry(*cfg["invert"]["m"])
    C = float(cfg["invert"]["C"])
    adm = cfgmod.build_admissible(cfg)
    if not adm.contains(m):
        raise ConfigError("bad value for key invert.m: not admissible")
    fwd = assemble(m, basis, stations, FaultQuadrature.for_basis(basis),
                   cfgmod.build_elastic(cfg))
    sol = solve_gmin(fwd, scale_data(data, stations), C)
    summary = {"m": list(m.m), "C": C, "misfit": sol.misfit,
               "reg_norm2": sol.reg_norm2, "objective": sol.objective,
               "sigma_max2": sigma_max2(C, sol, stations.n_stations),
               "gmin_coeffs": [float(v) for v in sol.coeffs]}
    _write_json(out / "summary.json", summary)
    print(f"objective {sol.objective:.6e}, misfit {sol.misfit:.6e}")
    return {}


def _emit_chain_products(cfg, out: Path, posterior, chains, prefix=""):
    ranges = analysis.coordinate_ranges(posterior)
    bins = int(cfg["output"]["bins"])
    for k, chain in enumerate(chains):
        chain.dump_csv(out / f"{prefix}chain_{k}.csv")
    for i, name in enumerate(analysis.COORD_NAMES):
        centers, dens = mp.pooled_histogram(chains, i, bins, ranges[i])
        analysis.dump_marginal_csv(out / f"{prefix}marginal_{name}.csv",
                                   centers, dens)
    return analysis.setting_summary(chains, ranges, bins=bins)


def cmd_sample(cfg, out: Path, threads):
    stations = cfgmod.build_stations(cfg)
    data = _load_or_make_data(cfg, stations, out)
    posterior = cfgmod.build_posterior(cfg, data, stations=stations)
    scfg = cfgmod.build_sampler_config(cfg, threads)
    chains = mp_chains = analysis.sample_posterior(posterior, scfg)
    summary = _emit_chain_products(cfg, out, posterior, chains)
    _write_json(out / "summary.json", summary)
    rates = ", ".join(f"{r:.2f}" for r in summary["acceptance_rates"])
    print(f"{len(mp_chains)} chains done; acceptance rates {rates}")
    return {}


def cmd_grid(cfg, out: Path, threads):
    stations = cfgmod.build_stations(cfg)
    data = _load_or_make_data(cfg, stations, out)
    posterior = cfgmod.build_posterior(cfg, data, stations=stations)
    axes = [np.asarray(cfg["grid"][k], float)
            for k in ("a", "b", "d", "log10C")]
    from .posterior import GRID_MAX_NODES
    n = int(np.prod([len(v) for v in axes]))
    if n > GRID_MAX_NODES:
        raise ConfigError(f"bad value for key grid: lattice of {n} nodes "
                          f"exceeds the {GRID_MAX_NODES}-node guard")
    mass = posterior.grid(*axes)
    with open(out / "grid.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["a", "b", "d", "log10C", "mass"])
        for ia, a in enumerate(axes[0]):
            for ib, b in enumerate(axes[1]):
                for id_, d in enumerate(axes[2]):
                    for ic, lc in enumerate(axes[3]):
                        w.writerow([repr(float(v)) for v in (a, b, d, lc)]
                                   + [repr(float(mass[ia, ib, id_, ic]))])
    print(f"evaluated {n} lattice nodes")
    return {}


def cmd_experiments(cfg, out: Path, threads):
    settings = [tuple(p) for p in cfg["experiments"]["settings"]]
    suite = analysis.ExperimentSuite(tuple(settings),
                                     tuple(cfg["experiments"]["noise_levels"]),
                                     tuple(cfg["scenario"]["m_true"]))
    report_all = {}
    for noise in suite.noise_levels:
        summaries, labels = [], []
        for mn, p in settings:
            n_axis = math.isqrt(mn)
            if n_axis * n_axis != mn:
                raise ConfigError("bad value for key experiments.settings: "
                                  f"station count {mn} is not a square")
            label = f"noise{noise:g}_M{mn}_p{p}"
            sub = out / label
            sub.mkdir(parents=True, exist_ok=True)
            run_cfg = json.loads(json.dumps(cfg))
            run_cfg["stations"]["n_per_axis"] = n_axis
            run_cfg["basis"]["p"] = p
            run_cfg["scenario"]["noise_rel"] = noise
            stations = cfgmod.build_stations(run_cfg)
            _, _, noisy, _ = _synth_data(run_cfg, stations)
            synth.dump_data_csv(sub / "data_noisy.csv", stations, noisy)
            posterior = cfgmod.build_posterior(run_cfg, noisy, stations=stations)
            scfg = cfgmod.build_sampler_config(run_cfg, threads)
            chains = analysis.sample_posterior(posterior, scfg)
            summaries.append(_emit_chain_products(run_cfg, sub, posterior, chains))
            labels.append(label)
            print(f"{label}: stds "
                  + ", ".join(f"{k}={summaries[-1]['std'][k]:.4g}"
                              for k in ("a", "b", "d")))
        report = analysis.tightening_report(summaries, suite.m_true, labels)
        report["per_setting_summaries"] = summaries
        report_all[f"noise_{noise:g}"] = report
    _write_json(out / "summary.json", report_all)
    return {}


def cmd_fixed_c(cfg, out: Path, threads):
    stations = cfgmod.build_stations(cfg)
    data = _load_or_make_data(cfg, stations, out)
    posterior = cfgmod.build_posterior(cfg, data, stations=stations)
    scfg = cfgmod.build_sampler_config(cfg, threads)
    c_values = [float(c) for c in cfg["fixed_c"]["c_values"]]
    try:
        results, spread = analysis.fixed_c_study(posterior, c_values, scfg)
    except ValueError as exc:
        raise ConfigError(f"bad value for key fixed_c.c_values: {exc}") from exc
    summary = {"mode_spread": spread, "per_C": {}}
    for C, res in results.items():
        tag = f"fixedC_{C:g}"
        for name, (centers, dens) in res["marginals"].items():
            analysis.dump_marginal_csv(out / f"{tag}_marginal_{name}.csv",
                                       centers, dens)
        summary["per_C"][f"{C:g}"] = {
            "mode": res["mode"],
            "acceptance_rates": [c.acceptance_rate for c in res["chains"]]}
    _write_json(out / "summary.json", summary)
    print("mode spread: " + ", ".join(f"{k}={v:.4g}" for k, v in spread.items()))
    return {}


_COMMANDS = {
    "validate": cmd_validate,
    "synth": cmd_synth,
    "invert": cmd_invert,
    "sample": cmd_sample,
    "grid": cmd_grid,
    "experiments": cmd_experiments,
    "fixed-c": cmd_fixed_c,
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="faultinv",
        description="Stochastic fault-plane inversion pipeline")
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--config", default=None, help="JSON config file")
    parser.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                        help="dotted-key config override (repeatable)")
    parser.add_argument("--out", default="out", help="output directory")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker threads for proposal evaluation")
    args = parser.parse_args(argv)
    try:
        cfg = cfgmod.load_config(args.config, args.set)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    out = Path(args.out)
    try:
        out.mkdir(parents=True, exist_ok=True)
        extra = _COMMANDS[args.command](cfg, out, args.threads)
        if args.command != "validate":
            _write_manifest(out, args.command, cfg, extra)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except Exception:
        traceback.print_exc()
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
