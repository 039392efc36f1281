import os

import pytest

from clusterbounds.cli import build_parser, main
from clusterbounds.matio import read_matrix, write_csv


def run(*argv):
    return main(list(argv))


class TestBuild:
    def test_toric_summary(self, capsys):
        assert run("build", "toric", "--L", "3") == 0
        out = capsys.readouterr().out
        assert "n=18 k=2 d=3" in out
        assert "w_X=4 w_Z=4" in out

    def test_hgp_from_dense_file(self, tmp_path, capsys):
        path = tmp_path / "rep3.txt"
        path.write_text("110\n011\n101\n")
        assert run("build", "hgp", "--h1", str(path), "--h2", str(path)) == 0
        assert "n=18 k=2" in capsys.readouterr().out

    def test_stabilizer_from_file(self, tmp_path, capsys):
        path = tmp_path / "g.txt"
        path.write_text("1100\n")  # XX on two qubits
        assert run("build", "stabilizer", "--g", str(path)) == 0
        assert "k=1" in capsys.readouterr().out

    def test_missing_argument(self, capsys):
        assert run("build", "toric") == 2
        assert "needs --L" in capsys.readouterr().err

    def test_malformed_alist(self, tmp_path, capsys):
        path = tmp_path / "bad.alist"
        path.write_text("4 2\n2 2\n1 1 1 1\n2 2\n1\n1\n2\n2 99\n1 2\n3 4\n")
        assert run("build", "css", "--gx", str(path), "--gz", str(path)) == 2
        assert "line" in capsys.readouterr().err

    def test_anticommuting_rows_reported(self, tmp_path, capsys):
        path = tmp_path / "g.txt"
        path.write_text("10\n01\n")  # X and Z on the same qubit
        assert run("build", "stabilizer", "--g", str(path)) == 2
        assert "anticommute" in capsys.readouterr().err


class TestCensus:
    def test_oracle_checked_census(self, tmp_path):
        out = tmp_path / "census.csv"
        rc = run(
            "census", "toric", "--L", "3", "--sector", "x",
            "--m-max", "6", "--oracle", "-o", str(out),
        )
        assert rc == 0
        lines = out.read_text().splitlines()
        assert lines[2].split(",")[:5] == ["m", "distinct", "irreducible",
                                           "irreducible_nonstabilizer", "paths"]
        data = [ln.split(",") for ln in lines[3:]]
        assert [row[0] for row in data] == ["3", "4", "5", "6"]
        assert data[0][3] == "6"
        for row in data:
            assert int(row[5]) >= int(row[4])  # bound >= paths

    def test_byte_identical_across_workers(self, tmp_path):
        paths = []
        for workers in (1, 2):
            out = tmp_path / f"census_{workers}.csv"
            rc = run(
                "census", "toric", "--L", "2", "--sector", "x",
                "--m-max", "4", "--workers", str(workers), "-o", str(out),
            )
            assert rc == 0
            paths.append(out.read_bytes())
        assert paths[0] == paths[1]

    def test_space_time_census(self, tmp_path):
        out = tmp_path / "ft.csv"
        rc = run(
            "census", "toric", "--L", "2", "--sector", "ft-x", "--rounds", "2",
            "--m-max", "3", "--oracle", "-o", str(out),
        )
        assert rc == 0
        assert "oracle=pass" in out.read_text()

    def test_resource_cap_exit_code(self, capsys):
        rc = run(
            "census", "toric", "--L", "3", "--sector", "x",
            "--m-max", "6", "--max-stored", "5",
        )
        assert rc == 3
        assert "resource cap" in capsys.readouterr().err

    def test_rounds_required_for_ft(self, capsys):
        rc = run("census", "toric", "--L", "2", "--sector", "ft-x", "--m-max", "2")
        assert rc == 2


class TestThreshold:
    def test_solve_erasure(self, capsys):
        assert run("threshold", "--model", "css", "--w", "4", "--D", "inf",
                   "--solve", "y") == 0
        assert "y = 0.333333333" in capsys.readouterr().out

    def test_solve_flip(self, capsys):
        assert run("threshold", "--model", "css", "--w", "4", "--D", "inf",
                   "--solve", "pZ") == 0
        assert "pZ = 0.028595480" in capsys.readouterr().out

    def test_solve_stabilizer_erasure(self, capsys):
        assert run("threshold", "--model", "stabilizer", "--w", "4",
                   "--solve", "y") == 0
        assert "y = 0.166666667" in capsys.readouterr().out

    def test_json_output(self, tmp_path):
        out = tmp_path / "res.json"
        assert run("threshold", "--model", "css", "--w", "4", "--solve", "y",
                   "-o", str(out)) == 0
        text = out.read_text()
        assert '"tool": "clusterbounds"' in text
        assert "0.3333333" in text

    def test_curve_is_monotone(self, tmp_path):
        out = tmp_path / "curve.csv"
        rc = run(
            "threshold", "--model", "ft-css", "--w", "4", "--q", "0.001",
            "--curve", "y:p", "--points", "9", "-o", str(out),
        )
        assert rc == 0
        rows = [ln.split(",") for ln in out.read_text().splitlines()
                if ln and not ln.startswith("#") and not ln.startswith("y")]
        values = [float(r[1]) for r in rows]
        assert all(a >= b - 1e-12 for a, b in zip(values, values[1:]))
        assert values[-1] == pytest.approx(0.0, abs=1e-6)

    def test_missing_solve_spec(self, capsys):
        assert run("threshold", "--model", "css", "--w", "4") == 2


class TestFtExtendCommand:
    def test_writes_alist_pair(self, tmp_path, capsys):
        prefix = str(tmp_path / "ft")
        rc = run("ft-extend", "toric", "--L", "2", "--sector", "x",
                 "--rounds", "3", "-o", prefix)
        assert rc == 0
        out = capsys.readouterr().out
        assert "N=32 K=2 D_ft=2" in out
        assert "P Q^T = 0: pass" in out
        p = read_matrix(prefix + ".p.alist")
        assert p.shape == (12, 32)
        assert p.max_row_weight() <= 6

    def test_single_round_round_trip(self, tmp_path, capsys):
        prefix = str(tmp_path / "bare")
        rc = run("ft-extend", "toric", "--L", "2", "--sector", "x",
                 "--rounds", "1", "-o", prefix)
        assert rc == 0
        from clusterbounds import toric_code

        assert read_matrix(prefix + ".p.alist") == toric_code(2).G_Z


class TestBadprob:
    def test_css_table_dominates(self, tmp_path):
        out = tmp_path / "bp.csv"
        rc = run("badprob", "--kind", "css", "--m-max", "6", "--y", "0.1",
                 "--p", "0.05", "-o", str(out))
        assert rc == 0
        rows = [ln.split(",") for ln in out.read_text().splitlines()[3:]]
        for row in rows:
            assert float(row[1]) <= float(row[2]) + 1e-12

    def test_ft_table(self, tmp_path):
        out = tmp_path / "bpft.csv"
        rc = run("badprob", "--kind", "ft", "--m-max", "3", "--p", "0.1",
                 "--q", "0.05", "-o", str(out))
        assert rc == 0
        header = out.read_text().splitlines()[2]
        assert header == "m,m_q,exact,bound"


class TestFit:
    def test_fit_from_census_csv(self, tmp_path, capsys):
        path = tmp_path / "census.csv"
        rows = [[m, 2 * 3**m] for m in range(2, 9)]
        write_csv(str(path), ["m", "irreducible"], rows, {"command": "census"})
        rc = run("fit", str(path), "--field", "irreducible", "-o",
                 str(tmp_path / "fit.json"))
        assert rc == 0
        out = capsys.readouterr().out
        assert "growth_base = 3" in out
        assert '"growth_base": 3' in (tmp_path / "fit.json").read_text()

    def test_unknown_field(self, tmp_path, capsys):
        path = tmp_path / "census.csv"
        write_csv(str(path), ["m", "distinct"], [[1, 2], [2, 3], [3, 4]], {})
        assert run("fit", str(path), "--field", "nope") == 2


class TestWorkersEnv:
    def test_env_default(self, monkeypatch):
        monkeypatch.setenv("CLUSTERBOUNDS_WORKERS", "3")
        parser = build_parser()
        args = parser.parse_args(["census", "toric", "--L", "2", "--m-max", "2"])
        assert args.workers == 3

    def test_env_garbage_falls_back(self, monkeypatch):
        monkeypatch.setenv("CLUSTERBOUNDS_WORKERS", "many")
        parser = build_parser()
        args = parser.parse_args(["census", "toric", "--L", "2", "--m-max", "2"])
        assert args.workers == 1
