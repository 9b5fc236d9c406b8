"""Run configuration: JSON file + dotted-key overrides, validated against a
single default tree, and factory helpers building the pipeline objects.
"""
import copy
import json
import math

from .geometry import AdmissibleSet, FaultGeometry, Rect, SlipBasis
from .green import ElasticModel
from .quadrature import FaultQuadrature, StationSet, gauss_stations, load_station_csv
from .sampler import SamplerConfig
from .synth import BumpSpec, SynthScenario


class ConfigError(ValueError):
    """Invalid configuration; the message names the offending key."""


DEFAULT_CONFIG = {
    "geometry": {
        "R": [-20.0, 20.0, -20.0, 20.0],
        "V": [-50.0, 50.0, -50.0, 50.0],
        "depth_margin": 1.0,
        "lambda": 1.0,
        "mu": 1.0,
    },
    "basis": {"p": 15},
    "stations": {"mode": "gauss", "n_per_axis": 3, "csv_path": None},
    "scenario": {
        "m_true": [-0.12, -0.26, -14.0],
        "bump": {"center": [0.0, 0.0], "width": 10.0, "amplitude": 1.0,
                 "taper_fraction": 0.1},
        "fine_order": 120,
        "noise_rel": 0.05,
        "noise_seed": 1,
    },
    "prior": {
        "a": [-1.0, 2.0],
        "b": [-1.0, 2.0],
        "d": [-100.0, -1.0],
        "log10C": [-7.0, -2.0],
        "c_prior": "log10",
        "sigma_formula": "paper",
    },
    "sampler": {
        "n_steps": 20_000,
        "burn_in": 2_000,
        "n_proposals": 4,
        "proposal_scales": [0.05, 0.05, 1.0, 0.15],
        "rng_seed": 0,
        "n_chains": 4,
    },
    "invert": {"m": [-0.12, -0.26, -14.0], "C": 1e-4},
    "grid": {"a": [-0.12], "b": [-0.26], "d": [-20.0, -14.0, -8.0],
             "log10C": [-5.0, -4.0, -3.0]},
    "experiments": {"settings": [[9, 15], [25, 21], [49, 27]],
                    "noise_levels": [0.05, 0.25]},
    "fixed_c": {"c_values": [1e-7, 1e-4]},
    "output": {"bins": 64},
}


def _merge(base, override, path=""):
    for key, val in override.items():
        here = f"{path}.{key}" if path else key
        if key not in base:
            raise ConfigError(f"unknown config key: {here}")
        if isinstance(base[key], dict):
            if not isinstance(val, dict):
                raise ConfigError(f"expected a table for key: {here}")
            _merge(base[key], val, here)
        else:
            base[key] = val


def load_config(path=None, overrides=()):
    """Defaults, optionally updated from a JSON file and KEY=VALUE overrides.

    Override keys are dotted paths; values are parsed as JSON, falling back to
    strings (so --set stations.mode=gauss works without quoting).
    """
    cfg = copy.deepcopy(DEFAULT_CONFIG)
    if path is not None:
        with open(path) as fh:
            try:
                user = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"config file is not valid JSON: {exc}") from exc
        if not isinstance(user, dict):
            raise ConfigError("config root must be a JSON object")
        _merge(cfg, user)
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"override must look like key=value: {item!r}")
        key, _, raw = item.partition("=")
        try:
            val = json.loads(raw)
        except json.JSONDecodeError:
            val = raw
        node = {}
        leaf = node
        parts = key.split(".")
        for part in parts[:-1]:
            leaf[part] = {}
            leaf = leaf[part]
        leaf[parts[-1]] = val
        _merge(cfg, node)
    validate_config(cfg)
    return cfg


def _rect(vals, key):
    try:
        return Rect(*[float(v) for v in vals])
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad rectangle for key {key}: {exc}") from exc


def validate_config(cfg):
    """Build every sub-object once so all invariants are checked up front."""
    build_elastic(cfg)
    adm = build_admissible(cfg)
    build_basis(cfg)
    build_stations(cfg)
    build_scenario(cfg, adm)
    build_sampler_config(cfg)
    lo, hi = cfg["prior"]["log10C"]
    if not lo < hi:
        raise ConfigError("bad range for key prior.log10C")
    if cfg["prior"]["c_prior"] not in ("log10", "linear"):
        raise ConfigError("bad value for key prior.c_prior")
    if cfg["prior"]["sigma_formula"] not in ("paper", "ml"):
        raise ConfigError("bad value for key prior.sigma_formula")
    if not cfg["invert"]["C"] > 0:
        raise ConfigError("bad value for key invert.C")
    for pair in cfg["experiments"]["settings"]:
        if len(pair) != 2 or pair[0] < 1 or pair[1] < 1:
            raise ConfigError("bad value for key experiments.settings")
    if int(cfg["output"]["bins"]) < 2:
        raise ConfigError("bad value for key output.bins")


def build_elastic(cfg) -> ElasticModel:
    g = cfg["geometry"]
    try:
        return ElasticModel(float(g["lambda"]), float(g["mu"]))
    except ValueError as exc:
        raise ConfigError(f"bad value for key geometry.lambda/mu: {exc}") from exc


def build_admissible(cfg) -> AdmissibleSet:
    g, pr = cfg["geometry"], cfg["prior"]
    R = _rect(g["R"], "geometry.R")
    V = _rect(g["V"], "geometry.V")
    for name in ("a", "b", "d"):
        lo, hi = pr[name]
        if not lo < hi:
            raise ConfigError(f"bad range for key prior.{name}")
    return AdmissibleSet(tuple(pr["a"]), tuple(pr["b"]), tuple(pr["d"]),
                         float(g["depth_margin"]), R, V)


def build_basis(cfg) -> SlipBasis:
    try:
        return SlipBasis(int(cfg["basis"]["p"]), _rect(cfg["geometry"]["R"],
                                                       "geometry.R"))
    except ValueError as exc:
        raise ConfigError(f"bad value for key basis.p: {exc}") from exc


def build_stations(cfg) -> StationSet:
    s = cfg["stations"]
    V = _rect(cfg["geometry"]["V"], "geometry.V")
    if s["mode"] == "gauss":
        try:
            return gauss_stations(int(s["n_per_axis"]), V)
        except ValueError as exc:
            raise ConfigError(f"bad value for key stations.n_per_axis: {exc}") from exc
    if s["mode"] == "csv":
        if not s["csv_path"]:
            raise ConfigError("missing value for key stations.csv_path")
        return load_station_csv(s["csv_path"], V)
    raise ConfigError(f"bad value for key stations.mode: {s['mode']!r}")


def build_scenario(cfg, admissible=None) -> SynthScenario:
    sc = cfg["scenario"]
    b = sc["bump"]
    try:
        bump = BumpSpec(tuple(float(v) for v in b["center"]), float(b["width"]),
                        float(b["amplitude"]), float(b["taper_fraction"]))
        scn = SynthScenario(FaultGeometry(*sc["m_true"]), bump,
                            int(sc["fine_order"]), float(sc["noise_rel"]),
                            int(sc["noise_seed"]),
                            _rect(cfg["geometry"]["R"], "geometry.R"))
    except ValueError as exc:
        raise ConfigError(f"bad value under key scenario: {exc}") from exc
    if admissible is not None and not admissible.contains(scn.m_true):
        raise ConfigError("bad value for key scenario.m_true: not admissible")
    return scn


def build_sampler_config(cfg, threads=None) -> SamplerConfig:
    s = cfg["sampler"]
    try:
        return SamplerConfig(int(s["n_steps"]), int(s["burn_in"]),
                             int(s["n_proposals"]),
                             tuple(float(v) for v in s["proposal_scales"]),
                             int(s["rng_seed"]), int(s["n_chains"]),
                             threads)
    except ValueError as exc:
        raise ConfigError(f"bad value under key sampler: {exc}") from exc


def c_bounds(cfg):
    lo, hi = cfg["prior"]["log10C"]
    return 10.0 ** float(lo), 10.0 ** float(hi)


def build_posterior(cfg, data, stations=None, basis=None):
    from .posterior import Posterior
    basis = basis or build_basis(cfg)
    stations = stations if stations is not None else build_stations(cfg)
    return Posterior(data, basis, stations,
                     rule=FaultQuadrature.for_basis(basis),
                     elastic=build_elastic(cfg),
                     admissible=build_admissible(cfg),
                     c_bounds=c_bounds(cfg),
                     prior=cfg["prior"]["c_prior"],
                     sigma_formula=cfg["prior"]["sigma_formula"])
