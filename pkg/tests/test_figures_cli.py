"""Figure data generation and the command-line entry point."""

import csv
import json
import os

import mpmath
import pytest

from qlaurent import figures
from qlaurent.cli import main


def test_limit_figure_rows_converge():
    header, rows = figures.figure_rows("cfig", start=1, stop=12, step=1)
    assert header[0] == "N"
    assert len(rows) == 12
    limit = float(rows[0][2])
    # same limit column everywhere, finite values drifting toward it
    assert all(float(r[2]) == limit for r in rows)
    assert abs(float(rows[-1][1]) - limit) < abs(float(rows[0][1]) - limit)


def test_crossover_figure_rows():
    header, rows = figures.figure_rows("qfig", start=800, stop=802, step=1)
    assert len(rows) == 3
    for row in rows:
        scaled, main = float(row[1]), float(row[2])
        # the scaled coefficient stays within an order of magnitude of the
        # leading term in this range
        assert abs(scaled) < 10 * max(1.0, abs(main))


def test_wave_figure_rows():
    header, rows = figures.figure_rows("wvfig", start=8, stop=24, step=8)
    assert [int(r[0]) for r in rows] == [8, 16, 24]
    for row in rows:
        # log|W_1| is below log p(n): the first wave is smaller than the count
        assert float(row[1]) <= float(row[2])


def test_figure_command_writes_csv_and_png(tmp_path):
    out = tmp_path / "limit.csv"
    rc = main(
        ["figure", "--id", "cfig", "--out", str(out), "--start", "1", "--stop", "6"]
    )
    assert rc == 0
    assert out.exists()
    png = tmp_path / "limit.png"
    assert png.exists() and png.stat().st_size > 0
    with open(out, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0][0] == "N"
    assert len(rows) == 7


def test_const_command_json(capsys):
    rc = main(["const", "--prec", "30", "--format", "json"])
    assert rc == 0
    record = json.loads(capsys.readouterr().out)
    assert record["w0"].startswith("(0.9161978162")
    assert float(record["residual"]) < 1e-25


def test_exact_command_text(capsys):
    rc = main(["exact", "--kind", "laurent", "-k", "1", "-m", "-1", "-N", "3"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "exact: -17/72" in out


def test_exact_wave_command(capsys):
    rc = main(
        ["exact", "--kind", "wave", "-k", "2", "-N", "5", "-n", "60", "--format", "json"]
    )
    assert rc == 0
    record = json.loads(capsys.readouterr().out)
    assert record["exact"] == "135/128"


def test_asym_command_check_exact(capsys):
    rc = main(
        [
            "asym",
            "--kind",
            "laurent",
            "-k",
            "1",
            "-m",
            "-1",
            "-N",
            "300",
            "-r",
            "2",
            "--check-exact",
            "--format",
            "json",
            "--prec",
            "30",
        ]
    )
    assert rc == 0
    record = json.loads(capsys.readouterr().out)
    assert "approximation" in record and "agree_digits" in record


def test_table_command(capsys):
    rc = main(["table", "--id", "T3", "--prec", "40", "--format", "json"])
    assert rc == 0
    record = json.loads(capsys.readouterr().out)
    assert record["r=7"].startswith("2.25819367586")
    assert "exact (published reference)" in record


def test_bad_parameters_exit_code(capsys):
    # h not coprime to k
    assert main(["exact", "--kind", "laurent", "-k", "4", "-H", "2", "-m", "0", "-N", "5"]) == 3
    assert main(["table", "--id", "T99"]) == 3
    assert main(["asym", "--kind", "laurent", "-k", "1", "-m", "0", "-N", "5", "-r", "0"]) == 3
