import json

import numpy as np
import pytest

import effvec as ev
from effvec.cli import main
from conftest import M3_CORNER_CSV, M5_BENCH_CSV, M5_BUILD_CSV


@pytest.fixture
def m3_path(tmp_path):
    p = tmp_path / "m3.csv"
    p.write_text(M3_CORNER_CSV)
    return str(p)


@pytest.fixture
def m5_bench_path(tmp_path):
    p = tmp_path / "m5.csv"
    p.write_text(M5_BENCH_CSV)
    return str(p)


@pytest.fixture
def m5_build_path(tmp_path):
    p = tmp_path / "m5b.csv"
    p.write_text(M5_BUILD_CSV)
    return str(p)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestValidate:
    def test_ok(self, capsys, m3_path):
        code, out, _ = run(capsys, ["validate", "-m", m3_path])
        assert code == 0
        assert json.loads(out) == {"ok": True, "n": 3}

    def test_domain_error_exit_one(self, capsys, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("1,2\n3,1\n")
        code, out, err = run(capsys, ["validate", "-m", str(bad)])
        assert code == 1
        assert out == ""
        payload = json.loads(err)
        assert payload["error"] == "ReciprocityViolation"

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, ["validate", "-m", "/nonexistent.csv"])
        assert code == 1
        assert json.loads(err)["error"] == "FileNotFound"

    def test_usage_error_exit_two(self, capsys):
        code, _, _ = run(capsys, ["validate"])  # missing -m
        assert code == 2

    def test_unknown_command(self, capsys):
        code, _, _ = run(capsys, ["frobnicate"])
        assert code == 2


class TestCheck:
    def test_efficient_vector(self, capsys, m3_path):
        code, out, _ = run(capsys, ["check", "-m", m3_path, "-w", "4/3,7/6,1"])
        assert code == 0
        data = json.loads(out)
        assert data["efficient"] is True
        assert data["witness"] is None
        assert data["eps"] == 1e-9
        assert [1, 2] in data["edges"]

    def test_inefficient_vector_has_witness(self, capsys, m3_path):
        code, out, _ = run(capsys, ["check", "-m", m3_path, "-w", "1,1,2"])
        assert code == 0
        data = json.loads(out)
        assert data["efficient"] is False
        assert data["witness"]

    def test_identity_weights_on_all_ones(self, capsys, tmp_path):
        p = tmp_path / "ones.csv"
        p.write_text("1,1,1\n1,1,1\n1,1,1\n")
        code, out, _ = run(capsys, ["check", "-m", str(p), "-w", "1,1,1"])
        assert code == 0
        assert json.loads(out)["efficient"] is True

    def test_vector_from_file(self, capsys, m3_path, tmp_path):
        vec = tmp_path / "w.txt"
        vec.write_text("4/3, 7/6, 1\n")
        code, out, _ = run(capsys, ["check", "-m", m3_path, "-w", str(vec)])
        assert code == 0
        assert json.loads(out)["efficient"] is True


class TestSweep:
    def test_benchmark_anchor_rows(self, capsys, m5_bench_path):
        code, out, _ = run(capsys, ["sweep", "-m", m5_bench_path])
        assert code == 0
        lines = [ln for ln in out.splitlines() if ln and not ln.startswith("#")]
        header, rows = lines[0], lines[1:]
        assert header.split(",")[:4] == ["index", "bitpattern", "norm1", "norm2"]
        assert len(rows) == 31
        last = rows[-1].split(",")
        assert last[0] == "31" and last[1] == "11111"
        assert float(last[2]) == pytest.approx(111.96, rel=5e-4)
        assert float(last[3]) == pytest.approx(89.539, rel=5e-4)
        row10 = rows[9].split(",")
        assert float(row10[3]) == pytest.approx(51.913, rel=5e-4)

    def test_output_file_and_rerun_identical(self, capsys, m5_bench_path, tmp_path):
        out_path = tmp_path / "sweep.csv"
        for _ in range(2):
            code, _, _ = run(capsys, ["sweep", "-m", m5_bench_path, "-o", str(out_path)])
            assert code == 0
        first = out_path.read_bytes()
        run(capsys, ["sweep", "-m", m5_bench_path, "-o", str(out_path)])
        assert out_path.read_bytes() == first


class TestPerron:
    def test_keys_and_values(self, capsys, m5_bench_path):
        code, out, _ = run(capsys, ["perron", "-m", m5_bench_path])
        assert code == 0
        data = json.loads(out)
        assert set(data) == {"vector", "eigenvalue", "iterations", "residual", "efficient"}
        assert data["efficient"] is True
        assert data["vector"][-1] == 1.0
        assert data["eigenvalue"] == pytest.approx(7.65508, rel=1e-4)


class TestExtend:
    def test_interval_and_samples(self, capsys, m5_build_path):
        code, out, _ = run(
            capsys,
            ["extend", "-m", m5_build_path, "-w", "3,2,1,3/4", "-p", "5", "--rng-seed", "1"],
        )
        assert code == 0
        data = json.loads(out)
        assert data["interval"] == {"lo": 0.375, "hi": 6.0}
        assert all(e["efficient"] for e in data["extensions"])
        xs = [e["x"] for e in data["extensions"]]
        assert 0.375 in xs and 6.0 in xs

    def test_requested_value(self, capsys, m5_build_path):
        code, out, _ = run(
            capsys,
            ["extend", "-m", m5_build_path, "-w", "3,2,1,3/4", "-p", "5", "-x", "6"],
        )
        data = json.loads(out)
        assert code == 0
        assert data["requested"]["efficient"] is True

    def test_out_of_interval_value(self, capsys, m5_build_path):
        code, _, err = run(
            capsys,
            ["extend", "-m", m5_build_path, "-w", "3,2,1,3/4", "-p", "5", "-x", "7"],
        )
        assert code == 1
        assert json.loads(err)["error"] == "OutOfInterval"


class TestEnumerate:
    def test_member_lines(self, capsys, m3_path):
        code, out, _ = run(capsys, ["enumerate", "-m", m3_path, "--start", "1,2", "--rng-seed", "2"])
        assert code == 0
        vectors = [json.loads(line) for line in out.strip().splitlines()]
        assert len(vectors) >= 4
        for vec in vectors:
            assert len(vec) == 3
            assert vec[-1] == 1.0
            w = np.array(vec)
            assert bool(ev.is_efficient(ev.parse_matrix_csv(M3_CORNER_CSV), w))

    def test_truncation_warns(self, capsys, m5_build_path):
        code, out, err = run(
            capsys,
            ["enumerate", "-m", m5_build_path, "--start", "1,2,3", "--max-members", "5"],
        )
        assert code == 0
        assert len(out.strip().splitlines()) <= 5
        assert json.loads(err)["warning"] == "family truncated"


class TestTable:
    def test_json_summary(self, capsys, m5_bench_path):
        code, out, _ = run(capsys, ["table", "-m", m5_bench_path])
        assert code == 0
        data = json.loads(out)
        assert data["norm1"]["min"]["index"] == 13
        assert data["frobenius"]["min"]["value"] == pytest.approx(51.913, rel=5e-4)
        assert data["perron"]["efficient"] is True
        assert data["norm1"]["ratio"] == pytest.approx(3.7048, rel=1e-3)

    def test_csv_summary(self, capsys, m5_bench_path):
        code, out, _ = run(capsys, ["table", "-m", m5_bench_path, "--format", "csv"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "label,index,bitpattern,norm1,norm2"
        labels = [ln.split(",")[0] for ln in lines[1:]]
        assert labels == ["min_norm1", "max_norm1", "min_frobenius", "max_frobenius",
                          "all_columns", "perron", "ratio"]

    def test_full_precision_flag(self, capsys, m5_bench_path):
        _, brief, _ = run(capsys, ["table", "-m", m5_bench_path])
        _, full, _ = run(capsys, ["table", "-m", m5_bench_path, "--full-precision"])
        brief_val = json.loads(brief)["norm1"]["min"]["value"]
        full_val = json.loads(full)["norm1"]["min"]["value"]
        assert brief_val == pytest.approx(full_val, rel=1e-5)
        assert len(repr(full_val)) > len(repr(brief_val))


class TestExperiment:
    def test_writes_three_files(self, capsys, tmp_path):
        out_dir = tmp_path / "exp"
        code, out, _ = run(
            capsys,
            ["experiment", "--n", "4", "--count", "6", "--generator", "hadamard-quotient",
             "--lo", "0", "--hi", "10", "--seed", "5", "--out-dir", str(out_dir)],
        )
        assert code == 0
        assert (out_dir / "summary.json").exists()
        assert (out_dir / "per_matrix.csv").exists()
        assert (out_dir / "subset_stats.csv").exists()
        summary = json.loads((out_dir / "summary.json").read_text())
        assert summary["config"]["seed"] == 5
        assert summary["matrices"] == 6

    def test_rerun_byte_identical(self, capsys, tmp_path):
        args = ["experiment", "--n", "4", "--count", "5", "--seed", "9",
                "--out-dir", str(tmp_path / "a")]
        run(capsys, args)
        first = {p.name: p.read_bytes() for p in (tmp_path / "a").iterdir()}
        run(capsys, args)
        second = {p.name: p.read_bytes() for p in (tmp_path / "a").iterdir()}
        assert first == second

    def test_env_seed_fallback(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("EFFVEC_SEED", "77")
        out_dir = tmp_path / "env"
        code, _, _ = run(capsys, ["experiment", "--n", "4", "--count", "3",
                                  "--out-dir", str(out_dir)])
        assert code == 0
        summary = json.loads((out_dir / "summary.json").read_text())
        assert summary["config"]["seed"] == 77

    def test_threads_flag_identical_output(self, capsys, tmp_path):
        base = ["experiment", "--n", "4", "--count", "8", "--seed", "3"]
        run(capsys, base + ["--out-dir", str(tmp_path / "serial")])
        run(capsys, base + ["--threads", "4", "--out-dir", str(tmp_path / "threaded")])
        for name in ("summary.json", "per_matrix.csv", "subset_stats.csv"):
            assert (tmp_path / "serial" / name).read_bytes() == (
                tmp_path / "threaded" / name
            ).read_bytes()
