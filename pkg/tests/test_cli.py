"""End-to-end CLI behavior: exit codes, report schema, byte stability."""

import json
import math

import pytest

from cdsopt.bench import CSV_COLUMNS
from cdsopt.cli import main

P3_TEXT = "cds 3 2 1\n1 1 1\n0 1\n1 2\n"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def p3_file(tmp_path):
    path = tmp_path / "p3.cds"
    path.write_text(P3_TEXT)
    return str(path)


@pytest.fixture
def fig1_file(tmp_path, capsys):
    path = tmp_path / "fig1_d3.cds"
    code = main(["gen", "fig1", "--d", "3", "--eps", "0.01", "--out", str(path)])
    capsys.readouterr()
    assert code == 0
    return str(path)


class TestGen:
    def test_fig1_file_shape(self, fig1_file):
        text = open(fig1_file).read()
        assert "# designated-ds: 0 8 9 10" in text
        assert "cds 11 13 1" in text

    def test_random_deterministic_bytes(self, tmp_path, capsys):
        a, b = tmp_path / "a.cds", tmp_path / "b.cds"
        args = ["gen", "random", "--n", "12", "--p", "0.3", "--seed", "7"]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        capsys.readouterr()
        assert a.read_bytes() == b.read_bytes()

    def test_udg_has_coords_block(self, tmp_path, capsys):
        out = tmp_path / "u.cds"
        code = main(["gen", "udg", "--n", "30", "--side", "4", "--seed", "1", "--out", str(out)])
        capsys.readouterr()
        assert code == 0
        from cdsopt.graph import parse_instance, validate_instance

        inst = parse_instance(out.read_text())
        assert inst.graph.coords is not None
        validate_instance(inst)

    def test_bad_parameters_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "gen", "random", "--n", "0", "--p", "0.5", "--seed", "1")
        assert code == 2
        assert "error:" in err


class TestSolve:
    def test_p3(self, p3_file, capsys):
        code, out, _ = run_cli(capsys, "solve", p3_file)
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == 1
        assert doc["dg"] == [1]
        assert doc["cost"]["total"] == 1.0
        assert doc["verify"]["is_cds"] is True
        assert "timings" in doc

    def test_fig1_given_ds_star(self, fig1_file, capsys):
        code, out, _ = run_cli(capsys, "solve", fig1_file, "--given-ds")
        assert code == 0
        doc = json.loads(out)
        assert doc["d1"] == [0, 8, 9, 10]
        assert doc["d2"] == [1, 5, 6, 7]
        assert math.isclose(doc["cost"]["d2"], 1.04, rel_tol=0, abs_tol=1e-12)

    def test_fig1_given_ds_pairwise(self, fig1_file, capsys):
        code, out, _ = run_cli(
            capsys, "solve", "--baseline", "pairwise", fig1_file, "--given-ds"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["d2"] == [2, 3, 4, 5, 6, 7]
        assert math.isclose(doc["cost"]["d2"], 3 * 1.01, rel_tol=0, abs_tol=1e-12)

    def test_given_ds_inline_and_file(self, p3_file, tmp_path, capsys):
        code, out, _ = run_cli(capsys, "solve", p3_file, "--given-ds", "1")
        assert code == 0
        assert json.loads(out)["d1"] == [1]
        ds_file = tmp_path / "ds.txt"
        ds_file.write_text("0 1 2\n")
        code, out, _ = run_cli(capsys, "solve", p3_file, "--given-ds", str(ds_file))
        assert code == 0
        assert json.loads(out)["d1"] == [0, 1, 2]

    def test_given_ds_not_dominating_exit_2(self, p3_file, capsys):
        code, _, err = run_cli(capsys, "solve", p3_file, "--given-ds", "0")
        assert code == 2
        assert "not an m-fold dominating set" in err

    def test_given_ds_missing_comment_exit_2(self, p3_file, capsys):
        code, _, err = run_cli(capsys, "solve", p3_file, "--given-ds")
        assert code == 2
        assert "designated-ds" in err

    def test_oracle_section(self, fig1_file, capsys):
        code, out, _ = run_cli(capsys, "solve", fig1_file, "--oracle")
        assert code == 0
        doc = json.loads(out)
        assert doc["oracle"] is not None
        assert math.isclose(doc["oracle"]["opt_cost"], 1.04, rel_tol=0, abs_tol=1e-12)
        assert doc["oracle"]["ratio_total"] >= 1.0
        assert doc["cost"]["total"] <= doc["oracle"]["bound_total"] * doc["oracle"]["opt_cost"]

    def test_no_timing_reports_are_byte_identical(self, fig1_file, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for target in (a, b):
            code = main(["solve", fig1_file, "--no-timing", "--out", str(target)])
            capsys.readouterr()
            assert code == 0
        assert a.read_bytes() == b.read_bytes()
        assert "timings" not in json.loads(a.read_text())

    def test_parse_error_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.cds"
        bad.write_text("cds 3 2 1\n1 0 1\n0 1\n1 2\n")
        code, _, err = run_cli(capsys, "solve", str(bad))
        assert code == 2
        assert "non-positive cost" in err


class TestVerifyCmd:
    def test_valid_solution_exit_0(self, p3_file, tmp_path, capsys):
        sol = tmp_path / "sol.txt"
        sol.write_text("1\n")
        code, out, _ = run_cli(capsys, "verify", p3_file, str(sol))
        assert code == 0
        assert json.loads(out)["is_cds"] is True

    def test_invalid_solution_exit_1_with_reason(self, p3_file, tmp_path, capsys):
        sol = tmp_path / "sol.txt"
        sol.write_text("0\n")
        code, out, _ = run_cli(capsys, "verify", p3_file, str(sol))
        assert code == 1
        doc = json.loads(out)
        assert [2, "node 2 has 0 < 1 dominators"] in doc["violations"]

    def test_whole_set_exit_0(self, p3_file, tmp_path, capsys):
        sol = tmp_path / "sol.txt"
        sol.write_text("0 1 2\n")
        code, _, _ = run_cli(capsys, "verify", p3_file, str(sol))
        assert code == 0

    def test_out_of_range_exit_2(self, p3_file, tmp_path, capsys):
        sol = tmp_path / "sol.txt"
        sol.write_text("5\n")
        code, _, err = run_cli(capsys, "verify", p3_file, str(sol))
        assert code == 2
        assert "out of range" in err


class TestBench:
    def test_small_batch(self, tmp_path, capsys):
        batch = tmp_path / "batch.json"
        batch.write_text(
            json.dumps(
                {
                    "entries": [
                        {
                            "kind": "random",
                            "n": 8,
                            "p": 0.4,
                            "m": [1, 2],
                            "seeds": {"start": 0, "count": 3},
                            "cost_lo": 0.1,
                            "cost_hi": 10.0,
                            "oracle": True,
                        },
                        {
                            "kind": "udg",
                            "n": 9,
                            "side": 2.5,
                            "seeds": {"start": 0, "count": 2},
                            "oracle": True,
                        },
                    ]
                }
            )
        )
        csv_path = tmp_path / "rows.csv"
        json_path = tmp_path / "summary.json"
        code = main(
            ["bench", str(batch), "--out-csv", str(csv_path), "--out-json", str(json_path)]
        )
        capsys.readouterr()
        assert code == 0
        lines = csv_path.read_text().strip().splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 1 + 8
        summary = json.loads(json_path.read_text())
        assert summary["rows"] == 8
        assert summary["violations"] == 0
        assert summary["max_ratio_total"] >= 1.0

    def test_empty_batch(self, tmp_path, capsys):
        batch = tmp_path / "batch.json"
        batch.write_text(json.dumps({"entries": []}))
        csv_path = tmp_path / "rows.csv"
        code = main(["bench", str(batch), "--out-csv", str(csv_path), "--out-json", str(tmp_path / "s.json")])
        capsys.readouterr()
        assert code == 0
        assert csv_path.read_text().strip() == ",".join(CSV_COLUMNS)

    def test_thread_pool_merges_in_order(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("CDS_OPT_THREADS", "2")
        batch = tmp_path / "batch.json"
        batch.write_text(
            json.dumps(
                {
                    "entries": [
                        {
                            "kind": "random",
                            "n": 7,
                            "p": 0.5,
                            "m": 1,
                            "seeds": {"start": 0, "count": 6},
                            "oracle": False,
                        }
                    ]
                }
            )
        )
        serial_csv = tmp_path / "serial.csv"
        pooled_csv = tmp_path / "pooled.csv"
        monkeypatch.delenv("CDS_OPT_THREADS")
        assert main(["bench", str(batch), "--out-csv", str(serial_csv), "--out-json", str(tmp_path / "a.json")]) == 0
        monkeypatch.setenv("CDS_OPT_THREADS", "3")
        assert main(["bench", str(batch), "--out-csv", str(pooled_csv), "--out-json", str(tmp_path / "b.json")]) == 0
        capsys.readouterr()
        assert serial_csv.read_bytes() == pooled_csv.read_bytes()

    def test_malformed_batch_exit_2(self, tmp_path, capsys):
        batch = tmp_path / "batch.json"
        batch.write_text("{\"entries\": [{\"kind\": \"mystery\"}]}")
        code, _, err = run_cli(capsys, "bench", str(batch))
        assert code == 2
        assert "unknown kind" in err
