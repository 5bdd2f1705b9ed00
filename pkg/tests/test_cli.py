"""CLI surface tests: config handling, CSV output, figures, verify."""

import json
import math
import os

import numpy as np
import pytest

from diraclab import cli

# checks that fail by design: they assert source claims that the numerics
# disprove (see the acceptance test module for the full story)
KNOWN_DEFECTIVE = {
    "spin-one-vs-rest invariance",
    "spin-momentum non-creation",
    "projection-path recovery",
}


def read_csv(path):
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    header = lines[0].split(",")
    rows = np.array([[float(x) for x in line.split(",")] for line in lines[1:]])
    return header, rows


class TestParsers:
    @pytest.mark.parametrize(
        "text,value",
        [
            ("pi/4", math.pi / 4),
            ("3pi/4", 3 * math.pi / 4),
            ("pi", math.pi),
            ("2*pi", 2 * math.pi),
            ("0.5", 0.5),
            (1.25, 1.25),
        ],
    )
    def test_parse_angle(self, text, value):
        assert abs(cli.parse_angle(text) - value) < 1e-15

    def test_parse_angle_rejects_garbage(self):
        with pytest.raises(cli.ConfigError):
            cli.parse_angle("four")

    def test_parse_grid(self):
        assert cli.parse_grid("0:4:0.5") == (0.0, 4.0, 0.5)
        np.testing.assert_allclose(cli.grid_points((0.0, 1.0, 0.25)), [0, 0.25, 0.5, 0.75, 1.0])

    @pytest.mark.parametrize("bad", ["0:4", "1:0:0.5", "0:1:0", "a:b:c"])
    def test_bad_grids(self, bad):
        with pytest.raises(cli.ConfigError):
            cli.grid_points(cli.parse_grid(bad))


class TestRunScenarios:
    def test_parallel_negativities_matches_closed_form(self, tmp_path):
        out = tmp_path / "par.csv"
        code = cli.main(
            [
                "run",
                "--scenario",
                "parallel_negativities",
                "--theta",
                "pi/4",
                "--xi0",
                "1",
                "--omega",
                "0:4:0.25",
                "--out",
                str(out),
                "--no-plot",
            ]
        )
        assert code == 0
        header, rows = read_csv(out)
        assert header == cli._NEG_HEADER
        omegas = rows[:, 0]
        s1s2 = rows[:, header.index("neg_S1_S2")]
        expected = 1.0 / (np.cosh(omegas) * np.cosh(omegas - 1.0))
        np.testing.assert_allclose(s1s2, expected, atol=1e-9)

    def test_fig1_peaks(self, tmp_path):
        out = tmp_path / "fig1.csv"
        code = cli.main(
            [
                "run",
                "--scenario",
                "fig1_mean_vs_theta",
                "--omega",
                f"0:{math.pi}:{math.pi / 16}",
                "--out",
                str(out),
                "--no-plot",
            ]
        )
        assert code == 0
        header, rows = read_csv(out)
        assert header[0] == "theta"
        for k in range(1, 5):
            col = rows[:, k]
            assert col[4] == pytest.approx(col.max(), abs=1e-10)  # theta = pi/4
            assert col[0] < 1e-10 and col[8] < 1e-10 and col[16] < 1e-10

    def test_deterministic_output(self, tmp_path):
        argv = [
            "run",
            "--scenario",
            "perp_delta_means",
            "--theta",
            "pi/4",
            "--xi0",
            "0.5",
            "--omega",
            "0:2:0.5",
            "--no-plot",
        ]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert cli.main(argv + ["--out", str(a)]) == 0
        assert cli.main(argv + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_spinspin_scenario_columns(self, tmp_path):
        out = tmp_path / "ss.csv"
        code = cli.main(
            [
                "run",
                "--scenario",
                "spinspin_projection_vs_trace",
                "--omega",
                "0:2:0.5",
                "--out",
                str(out),
                "--no-plot",
            ]
        )
        assert code == 0
        header, rows = read_csv(out)
        assert header == ["omega", "neg_S1_S2_projected", "neg_S1_S2_traced"]
        assert np.ptp(rows[:, 1]) < 1e-10  # projected path invariant
        assert rows[-1, 2] < rows[0, 2]  # traced path degrades

    def test_plot_written_next_to_csv(self, tmp_path):
        out = tmp_path / "sweep.csv"
        code = cli.main(
            [
                "run",
                "--scenario",
                "parallel_negativities",
                "--omega",
                "0:1:0.25",
                "--out",
                str(out),
            ]
        )
        assert code == 0
        assert (tmp_path / "sweep.png").exists()

    def test_config_file_with_flag_override(self, tmp_path):
        cfg_path = tmp_path / "cfg.json"
        cfg_path.write_text(
            json.dumps(
                {
                    "scenario": "parallel_negativities",
                    "theta": "pi/4",
                    "xi0": 2.0,
                    "omega_grid": [0.0, 1.0, 0.5],
                    "output_path": str(tmp_path / "from_file.csv"),
                }
            )
        )
        out = tmp_path / "override.csv"
        code = cli.main(["run", "--config", str(cfg_path), "--out", str(out), "--no-plot"])
        assert code == 0
        assert out.exists() and not (tmp_path / "from_file.csv").exists()
        _, rows = read_csv(out)
        assert len(rows) == 3


class TestErrorPaths:
    def test_empty_grid_is_config_error(self, tmp_path):
        code = cli.main(
            [
                "run",
                "--scenario",
                "parallel_negativities",
                "--omega",
                "2:1:0.5",
                "--out",
                str(tmp_path / "x.csv"),
                "--no-plot",
            ]
        )
        assert code == 2

    def test_missing_scenario(self):
        assert cli.main(["run", "--no-plot"]) == 2

    def test_unwritable_path(self, tmp_path):
        target = tmp_path / "no" / "such" / "dir" / "out.csv"
        code = cli.main(
            [
                "run",
                "--scenario",
                "parallel_negativities",
                "--omega",
                "0:1:0.5",
                "--out",
                str(target),
                "--no-plot",
            ]
        )
        assert code == 3

    def test_bad_config_json(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert cli.main(["run", "--config", str(bad), "--no-plot"]) == 2


class TestVerifyCommand:
    def parse_report(self, text):
        status = {}
        for line in text.splitlines():
            if line.startswith(("PASS", "FAIL")):
                name = line.split("  ")[1].strip()
                status[name] = line.startswith("PASS")
        return status

    def test_fast_report_matches_known_state(self, capsys):
        code = cli.main(["verify"])
        out = capsys.readouterr().out
        status = self.parse_report(out)
        assert len(status) == 10
        failed = {name for name, ok in status.items() if not ok}
        assert failed == KNOWN_DEFECTIVE
        assert code == 1  # honest: the defective checks stay red

    def test_corrupted_build_detected(self, capsys, monkeypatch):
        # negative control: perturb a closed form and watch the oracle trip
        import diraclab.scenarios as sc

        original = sc.closed_form_parallel

        def perturbed(theta, xi0, omega):
            res = original(theta, xi0, omega)
            return res._replace(s1s2=res.s1s2 + 1e-6)

        monkeypatch.setattr("diraclab.scenarios.closed_form_parallel", perturbed)
        code = cli.main(["verify"])
        out = capsys.readouterr().out
        status = self.parse_report(out)
        assert code == 1
        assert status["closed-form oracle agreement"] is False
