import json
import math

import pytest

from periodic_ctqw.cli import main

SQRT2 = math.sqrt(2.0)
G0 = 1.0 / (2.0 * SQRT2)
G1 = 1.0 / SQRT2


def run(args):
    return main([str(a) for a in args])


def read_csv(path):
    metadata, header, rows = {}, None, []
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            key, _, value = line[2:].partition("=")
            metadata[key] = value
        elif header is None:
            header = line.split(",")
        else:
            rows.append([float(v) for v in line.split(",")])
    return metadata, header, rows


class TestDistributionCommand:
    def test_point_mass_at_zero_time(self, tmp_path):
        out = tmp_path / "d.csv"
        assert run(["distribution", "--gamma0", G0, "--gamma1", G1,
                    "--time", 0, "--output", out]) == 0
        _, header, rows = read_csv(out)
        assert header == ["x", "prob", "approx"]
        by_x = {int(r[0]): r[1] for r in rows}
        assert by_x[0] == pytest.approx(1.0, abs=1e-12)
        assert all(p < 1e-20 for x, p in by_x.items() if x != 0)

    def test_asymmetric_prob_symmetric_approx(self, tmp_path):
        out = tmp_path / "d.csv"
        assert run(["distribution", "--gamma0", G0, "--gamma1", G1,
                    "--time", 40, "--output", out]) == 0
        _, _, rows = read_csv(out)
        probs = {int(r[0]): r[1] for r in rows}
        approx = {int(r[0]): r[2] for r in rows}
        odd_asym = max(abs(probs[x] - probs[-x]) for x in range(1, 20, 2))
        assert odd_asym > 1e-4
        assert all(approx[x] == approx[-x] for x in range(0, 25))

    def test_equal_couplings_symmetric(self, tmp_path):
        out = tmp_path / "d.csv"
        assert run(["distribution", "--gamma0", G0, "--gamma1", G0,
                    "--time", 40, "--method", "bessel", "--output", out]) == 0
        _, _, rows = read_csv(out)
        probs = {int(r[0]): r[1] for r in rows}
        assert all(probs[x] == pytest.approx(probs[-x], abs=1e-14)
                   for x in range(0, 30))

    def test_deterministic_output(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for out in (a, b):
            assert run(["distribution", "--gamma0", G0, "--gamma1", G1,
                        "--time", 12, "--output", out]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_truncated_metadata_flag(self, tmp_path):
        out = tmp_path / "d.csv"
        assert run(["distribution", "--gamma0", G0, "--gamma1", G1,
                    "--time", 30, "--radius", 10, "--output", out]) == 0
        metadata, _, _ = read_csv(out)
        assert metadata["truncated"] == "true"

    def test_json_format(self, tmp_path):
        out = tmp_path / "d.json"
        assert run(["distribution", "--gamma0", G0, "--gamma1", G1,
                    "--time", 5, "--format", "json", "--output", out]) == 0
        doc = json.loads(out.read_text())
        assert doc["columns"] == ["x", "prob", "approx"]
        assert doc["metadata"]["truncated"] == "false"
        assert len(doc["rows"]) > 0


class TestSpectralCommand:
    def test_h_table_range(self, tmp_path):
        out = tmp_path / "h.csv"
        assert run(["spectral", "--gamma0", G0, "--gamma1", G1,
                    "--grid", 4001, "--output", out]) == 0
        _, header, rows = read_csv(out)
        assert header == ["k", "h"]
        hmax = max(r[1] for r in rows)
        assert hmax == pytest.approx(2 * G0, abs=1e-5)

    def test_h_negative_product_minimum(self, tmp_path):
        out = tmp_path / "h.csv"
        assert run(["spectral", "--gamma0", 1.0, "--gamma1", -0.5,
                    "--grid", 4001, "--output", out]) == 0
        _, _, rows = read_csv(out)
        hmin = min(r[1] for r in rows)
        assert hmin == pytest.approx(-1.0, abs=1e-5)

    def test_branch_table_endpoints(self, tmp_path):
        out = tmp_path / "kb.csv"
        assert run(["spectral", "--gamma0", G0, "--gamma1", G1,
                    "--function", "kbranches", "--grid", 101,
                    "--output", out]) == 0
        _, header, rows = read_csv(out)
        assert header == ["x", "k_plus", "k_minus"]
        x0 = rows[0]
        assert x0[0] == 0.0 and x0[1] == 0.0
        assert x0[2] == pytest.approx(math.pi / 2, abs=1e-15)


class TestOtherCommands:
    def test_evolve_columns(self, tmp_path):
        out = tmp_path / "e.csv"
        assert run(["evolve", "--gamma0", G0, "--gamma1", G1,
                    "--time", 5, "--method", "lattice", "--output", out]) == 0
        _, header, rows = read_csv(out)
        assert header == ["x", "re", "im"]
        total = sum(r[1] ** 2 + r[2] ** 2 for r in rows)
        assert total == pytest.approx(1.0, abs=1e-9)

    def test_limit_table(self, tmp_path):
        out = tmp_path / "l.csv"
        assert run(["limit", "--gamma0", G0, "--gamma1", G1,
                    "--grid", 51, "--output", out]) == 0
        _, header, rows = read_csv(out)
        assert header == ["x", "density", "cdf"]
        assert rows[0][2] == 0.0 and rows[-1][2] == 1.0

    def test_moments_table(self, tmp_path):
        out = tmp_path / "m.csv"
        assert run(["moments", "--gamma0", G0, "--gamma1", G1,
                    "--rmax", 4, "--output", out]) == 0
        _, _, rows = read_csv(out)
        for r, closed, via_h in rows:
            assert via_h == pytest.approx(closed, abs=1e-8)

    def test_compare_metrics(self, tmp_path):
        out = tmp_path / "c.json"
        assert run(["compare", "--gamma0", G0, "--gamma1", G1,
                    "--time", 100, "--format", "json", "--output", out]) == 0
        doc = json.loads(out.read_text())
        metrics = doc["metrics"]
        assert metrics["captured_mass"] == pytest.approx(1.0, abs=1e-8)
        assert metrics["kolmogorov_distance"] < 0.1


class TestValidateAndExitCodes:
    def test_validate_generic_passes(self, tmp_path):
        out = tmp_path / "report.json"
        assert run(["validate", "--gamma0", G0, "--gamma1", G1,
                    "--output", out]) == 0
        report = json.loads(out.read_text())
        assert all(item["status"] == "pass" for item in report)
        assert {"check", "status", "measured", "tolerance"} <= set(report[0])

    def test_validate_equal_magnitude(self, tmp_path):
        out = tmp_path / "report.json"
        assert run(["validate", "--gamma0", 0.5, "--gamma1", 0.5,
                    "--output", out]) == 0
        report = json.loads(out.read_text())
        names = {item["check"] for item in report}
        assert "quadrature_vs_bessel_t10" in names
        assert "bessel_probability_law" in names

    def test_zero_coupling_is_config_error(self):
        assert run(["distribution", "--gamma0", 0, "--gamma1", 1,
                    "--time", 1]) == 2

    def test_bad_flag_is_config_error(self, capsys):
        assert run(["distribution", "--gamma0", 1]) == 2
        capsys.readouterr()

    def test_regime_error_is_computation_error(self, tmp_path):
        # bessel method with generic couplings cannot be computed
        assert run(["distribution", "--gamma0", G0, "--gamma1", G1,
                    "--time", 1, "--method", "bessel",
                    "--output", tmp_path / "x.csv"]) == 3
