import json

import numpy as np
import pytest

from faultinv.cli import main

FAST = ["--set", "basis.p=3", "--set", "stations.n_per_axis=2",
        "--set", "scenario.fine_order=20",
        "--set", "sampler.n_steps=300", "--set", "sampler.burn_in=50",
        "--set", "sampler.n_chains=2", "--set", "output.bins=16"]


def run(args, capsys=None):
    code = main(args)
    if capsys is not None:
        return code, capsys.readouterr()
    return code


class TestValidate:
    def test_exit_zero_and_echoes_config(self, capsys, tmp_path):
        code, cap = run(["validate", "--out", str(tmp_path)] + FAST, capsys)
        assert code == 0
        cfg = json.loads(cap.out)
        assert cfg["basis"]["p"] == 3

    def test_unknown_key_exit_one(self, capsys, tmp_path):
        code, cap = run(["validate", "--set", "basis.quality=3",
                         "--out", str(tmp_path)], capsys)
        assert code == 1
        assert "basis.quality" in cap.err

    def test_bad_value_exit_one(self, capsys, tmp_path):
        code, cap = run(["validate", "--set", "basis.p=0",
                         "--out", str(tmp_path)], capsys)
        assert code == 1
        assert "config error" in cap.err


class TestSynth:
    def test_writes_artifacts_and_manifest(self, tmp_path):
        out = tmp_path / "o"
        assert run(["synth", "--out", str(out)] + FAST) == 0
        for name in ("data_clean.csv", "data_noisy.csv", "synth_info.json",
                     "manifest.json"):
            assert (out / name).exists(), name
        man = json.loads((out / "manifest.json").read_text())
        assert man["command"] == "synth"
        assert set(man["outputs"]) == {"data_clean.csv", "data_noisy.csv",
                                       "synth_info.json"}
        assert man["seeds"] == {"noise_seed": 1, "sampler_seed": 0}

    def test_rerun_byte_identical(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        assert run(["synth", "--out", str(a)] + FAST) == 0
        assert run(["synth", "--out", str(b)] + FAST) == 0
        ma = json.loads((a / "manifest.json").read_text())
        mb = json.loads((b / "manifest.json").read_text())
        assert ma["content_hash"] == mb["content_hash"]
        assert (a / "data_noisy.csv").read_bytes() == \
            (b / "data_noisy.csv").read_bytes()


class TestInvert:
    def test_summary_written(self, tmp_path):
        out = tmp_path / "o"
        assert run(["synth", "--out", str(out)] + FAST) == 0
        assert run(["invert", "--out", str(out)] + FAST) == 0
        s = json.loads((out / "summary.json").read_text())
        assert s["objective"] == pytest.approx(
            s["misfit"] + s["C"] * s["reg_norm2"], rel=1e-12)
        assert len(s["gmin_coeffs"]) == 9

    def test_inadmissible_m_exit_one(self, capsys, tmp_path):
        code, cap = run(["invert", "--set", "invert.m=[1.9, 1.9, -2.0]",
                         "--out", str(tmp_path / "o")] + FAST, capsys)
        assert code == 1
        assert "invert.m" in cap.err

    def test_station_mismatch_detected(self, capsys, tmp_path):
        out = tmp_path / "o"
        assert run(["synth", "--out", str(out)] + FAST) == 0
        args = [a if a != "stations.n_per_axis=2" else "stations.n_per_axis=3"
                for a in FAST]
        code, cap = run(["invert", "--out", str(out)] + args, capsys)
        assert code == 1
        assert "does not match" in cap.err


class TestSample:
    def test_products_and_reproducibility(self, tmp_path):
        out = tmp_path / "o"
        assert run(["synth", "--out", str(out)] + FAST) == 0
        assert run(["sample", "--out", str(out), "--threads", "1"] + FAST) == 0
        for k in range(2):
            assert (out / f"chain_{k}.csv").exists()
        for name in ("a", "b", "d", "log10C"):
            assert (out / f"marginal_{name}.csv").exists()
        man1 = json.loads((out / "manifest.json").read_text())

        # rerun with a different thread count: byte-identical products
        out2 = tmp_path / "o2"
        assert run(["synth", "--out", str(out2)] + FAST) == 0
        assert run(["sample", "--out", str(out2), "--threads", "4"] + FAST) == 0
        man2 = json.loads((out2 / "manifest.json").read_text())
        assert man1["content_hash"] == man2["content_hash"]

    def test_summary_contents(self, tmp_path):
        out = tmp_path / "o"
        assert run(["synth", "--out", str(out)] + FAST) == 0
        assert run(["sample", "--out", str(out)] + FAST) == 0
        s = json.loads((out / "summary.json").read_text())
        assert set(s["std"]) == {"a", "b", "d", "log10C"}
        assert len(s["acceptance_rates"]) == 2
        assert s["n_samples"] == 2 * 250


class TestGrid:
    def test_grid_csv(self, tmp_path):
        out = tmp_path / "o"
        assert run(["synth", "--out", str(out)] + FAST) == 0
        assert run(["grid", "--out", str(out)] + FAST) == 0
        lines = (out / "grid.csv").read_text().strip().split("\n")
        assert lines[0] == "a,b,d,log10C,mass"
        mass = np.array([float(ln.split(",")[-1]) for ln in lines[1:]])
        assert len(mass) == 1 * 1 * 3 * 3
        assert mass.sum() == pytest.approx(1.0, abs=1e-12)

    def test_node_guard_exit_one(self, capsys, tmp_path):
        big = json.dumps(list(np.linspace(-0.5, 0.5, 20)))
        code, cap = run(["grid", "--out", str(tmp_path / "o"),
                         "--set", f"grid.a={big}", "--set", f"grid.b={big}",
                         "--set", f"grid.d={json.dumps(list(np.linspace(-30, -10, 25)))}",
                         "--set", f"grid.log10C={json.dumps(list(np.linspace(-6, -3, 11)))}"]
                        + FAST, capsys)
        assert code == 1
        assert "guard" in cap.err


class TestFixedC:
    def test_products(self, tmp_path):
        out = tmp_path / "o"
        assert run(["synth", "--out", str(out)] + FAST) == 0
        assert run(["fixed-c", "--out", str(out),
                    "--set", "fixed_c.c_values=[1e-6, 1e-4]"] + FAST) == 0
        for C in ("1e-06", "0.0001"):
            for name in ("a", "b", "d"):
                assert (out / f"fixedC_{C}_marginal_{name}.csv").exists()
        s = json.loads((out / "summary.json").read_text())
        assert set(s["mode_spread"]) == {"a", "b", "d"}

    def test_out_of_range_C_exit_one(self, capsys, tmp_path):
        code, cap = run(["fixed-c", "--out", str(tmp_path / "o"),
                         "--set", "fixed_c.c_values=[1.0]"] + FAST, capsys)
        assert code == 1
        assert "fixed_c.c_values" in cap.err


class TestExperiments:
    def test_small_suite(self, tmp_path):
        out = tmp_path / "o"
        args = ["experiments", "--out", str(out),
                "--set", "experiments.settings=[[4, 2], [9, 3]]",
                "--set", "experiments.noise_levels=[0.05]",
                "--set", "scenario.fine_order=20",
                "--set", "sampler.n_steps=200", "--set", "sampler.burn_in=50",
                "--set", "sampler.n_chains=1", "--set", "output.bins=16"]
        assert run(args) == 0
        s = json.loads((out / "summary.json").read_text())
        rep = s["noise_0.05"]
        assert [r["label"] for r in rep["settings"]] == \
            ["noise0.05_M4_p2", "noise0.05_M9_p3"]
        assert (out / "noise0.05_M9_p3" / "marginal_d.csv").exists()
        assert (out / "noise0.05_M4_p2" / "data_noisy.csv").exists()

    def test_nonsquare_station_count_exit_one(self, capsys, tmp_path):
        code, cap = run(["experiments", "--out", str(tmp_path / "o"),
                         "--set", "experiments.settings=[[5, 2], [9, 3]]",
                         "--set", "experiments.noise_levels=[0.05]",
                         "--set", "scenario.fine_order=20",
                         "--set", "sampler.n_steps=100",
                         "--set", "sampler.burn_in=10"], capsys)
        assert code == 1
        assert "not a square" in cap.err
