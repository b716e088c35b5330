import io
import subprocess
import sys
from fractions import Fraction as F

import pytest

from latkit.cli import (
    EXIT_BOUND,
    EXIT_CAP,
    EXIT_OK,
    EXIT_PARSE,
    LatticeFileError,
    format_scalar,
    format_vector,
    main,
    parse_lattice_file,
    render_lattice,
)


def run_cli(args, tmp_path, content=None, capsys=None):
    if content is not None:
        path = tmp_path / "input.lat"
        path.write_text(content)
        args = [a if a != "FILE" else str(path) for a in args]
    return main(args)


Z2_REDUNDANT = "# comment line\n2 3\n1 0\n0 1\n1 1\n"
DIAG = "2 2\n1 0\n0 2\n"
GCD = "1 2\n4\n6\n"


class TestParsing:
    def test_round_trip(self):
        d, m, rows = parse_lattice_file("2 2\n1/2 -3\n0 7/5\n")
        assert (d, m) == (2, 2)
        assert rows == [(F(1, 2), F(-3)), (F(0), F(7, 5))]
        text = "\n".join(render_lattice(rows, d))
        assert parse_lattice_file(text)[2] == rows

    def test_comments_and_blanks_skipped(self):
        d, m, rows = parse_lattice_file("# hi\n\n1 1\n# mid\n5\n")
        assert rows == [(F(5),)]

    def test_bad_token(self):
        with pytest.raises(LatticeFileError) as err:
            parse_lattice_file("2 1\n1 2 x\n")
        assert "line 2" in str(err.value)

    def test_missing_rows(self):
        with pytest.raises(LatticeFileError):
            parse_lattice_file("2 2\n1 0\n")

    def test_missing_header(self):
        with pytest.raises(LatticeFileError):
            parse_lattice_file("# nothing here\n")

    def test_format_scalar(self):
        assert format_scalar(F(3)) == "3"
        assert format_scalar(F(-1, 2)) == "-1/2"
        assert format_vector((F(1), F(2, 3))) == "1 2/3"


class TestBasisCommand:
    def test_reports_rank_and_updates(self, tmp_path, capsys):
        code = run_cli(["basis", "FILE", "--trace", "--verify"],
                       tmp_path, Z2_REDUNDANT)
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "# rank: 2" in out
        assert "# update_count: 2" in out
        assert "# bound_holds: true" in out

    def test_gcd_instance(self, tmp_path, capsys):
        code = run_cli(["basis", "FILE", "--trace"], tmp_path, GCD)
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "# rank: 1" in out
        assert "# update_count: 2" in out

    def test_output_is_reparseable(self, tmp_path, capsys):
        run_cli(["basis", "FILE"], tmp_path, Z2_REDUNDANT)
        out = capsys.readouterr().out
        d, m, rows = parse_lattice_file(out)
        assert (d, m) == (2, 2)

    def test_parse_error_exit_code(self, tmp_path, capsys):
        code = run_cli(["basis", "FILE"], tmp_path, "2 1\n1 2 x\n")
        assert code == EXIT_PARSE
        assert "line 2" in capsys.readouterr().err

    def test_verify_does_not_change_output(self, tmp_path, capsys):
        run_cli(["basis", "FILE"], tmp_path, Z2_REDUNDANT)
        plain = capsys.readouterr().out
        run_cli(["basis", "FILE", "--verify"], tmp_path, Z2_REDUNDANT)
        verified = capsys.readouterr().out
        assert plain == verified


class TestMinimaCommand:
    def test_diag(self, tmp_path, capsys):
        code = run_cli(["minima", "FILE", "--bound-sq", "4", "--verify"],
                       tmp_path, DIAG)
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "# minima_sq: 1 4" in out

    def test_unit_lattice(self, tmp_path, capsys):
        code = run_cli(["minima", "FILE", "--bound-sq", "1"],
                       tmp_path, "2 2\n1 0\n0 1\n")
        assert code == EXIT_OK
        assert "# minima_sq: 1 1" in capsys.readouterr().out

    def test_bound_flag_is_squared(self, tmp_path, capsys):
        code = run_cli(["minima", "FILE", "--bound", "2"], tmp_path, DIAG)
        assert code == EXIT_OK
        assert "# minima_sq: 1 4" in capsys.readouterr().out

    def test_bound_below_first_minimum(self, tmp_path, capsys):
        code = run_cli(["minima", "FILE", "--bound-sq", "1/2"],
                       tmp_path, DIAG)
        assert code == EXIT_BOUND

    def test_cap_exceeded(self, tmp_path):
        code = run_cli(["minima", "FILE", "--bound-sq", "4", "--cap", "3"],
                       tmp_path, DIAG)
        assert code == EXIT_CAP


class TestDecomposeCommand:
    def test_diag_two_components(self, tmp_path, capsys):
        code = run_cli(["decompose", "FILE", "--bound-sq", "4", "--verify"],
                       tmp_path, DIAG)
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "# r: 2" in out
        assert "# indices: 1 2" in out

    def test_d4_single_component(self, tmp_path, capsys):
        d4 = "4 4\n1 -1 0 0\n0 1 -1 0\n0 0 1 -1\n0 0 1 1\n"
        code = run_cli(["decompose", "FILE", "--bound-sq", "2", "--verify"],
                       tmp_path, d4)
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "# r: 1" in out
        assert "# indices: 1" in out

    def test_insufficient_bound(self, tmp_path):
        code = run_cli(["decompose", "FILE", "--bound-sq", "1"],
                       tmp_path, DIAG)
        assert code == EXIT_BOUND


class TestBenchCommand:
    def test_deterministic_instances(self, tmp_path, capsys):
        args = ["bench", "--dims", "3", "--gen-counts", "12", "--reps", "2",
                "--seed", "5", "--duplicates"]
        assert main(args) == EXIT_OK
        first = capsys.readouterr().out
        assert main(args) == EXIT_OK
        second = capsys.readouterr().out

        def stable(text):
            rows = [line.split(",") for line in text.strip().splitlines()]
            return [row[:5] for row in rows]  # drop timing columns

        assert stable(first) == stable(second)

    def test_header_and_row_count(self, capsys):
        main(["bench", "--dims", "2", "--gen-counts", "4,6", "--reps", "3",
              "--seed", "1"])
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == ("seed,d,m,update_count,theorem_bound,"
                            "t_incremental,t_batch_mlll")
        assert len(lines) == 1 + 2 * 3


class TestEntryPoint:
    def test_console_script_installed(self, tmp_path):
        path = tmp_path / "z2.lat"
        path.write_text(Z2_REDUNDANT)
        proc = subprocess.run(
            [sys.executable, "-m", "latkit.cli", "basis", str(path)],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "# rank: 2" in proc.stdout
