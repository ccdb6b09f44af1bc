import csv

import pytest

from unimon import classify, torsion_idempotents
from unimon.figures import save_gap_grid, save_hasse, write_report_csv
from unimon.fixtures import plane_fundamental_2, plane_reducible, u3_type_2_2_1

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def test_gap_grid_renders_png(tmp_path):
    out = tmp_path / "grid.png"
    save_gap_grid(plane_reducible(), out)
    assert out.read_bytes()[:8] == PNG_MAGIC


def test_gap_grid_needs_two_positions(tmp_path):
    with pytest.raises(ValueError):
        save_gap_grid(u3_type_2_2_1(), tmp_path / "grid.png")


def test_hasse_renders_png(tmp_path):
    out = tmp_path / "hasse.png"
    save_hasse(torsion_idempotents(plane_fundamental_2()), out)
    assert out.read_bytes()[:8] == PNG_MAGIC


def test_report_csv_contents(tmp_path):
    out = tmp_path / "report.csv"
    write_report_csv(classify(plane_reducible()), out)
    with open(out, newline="") as handle:
        rows = dict(csv.reader(handle))
    assert rows["genus"] == "4"
    assert rows["f_twosided"] == "(0,3) (3,0)"
    assert rows["group"] == "first_row(3)"
