# tests/test_cli.py
import json

import pytest

from app.api.services.oracles_services import OracleService
from app.schemas.contracts.reports_dtos import CheckReport
from app.schemas.settings import Settings
from main import run

from tests.conftest import SAMPLE_TABLE


@pytest.fixture
def settings() -> Settings:
    return Settings(exceptional_table=None, verify_max_rank=2, verify_max_d=2)


@pytest.fixture
def table_path(tmp_path):
    path = tmp_path / "exceptional.txt"
    path.write_text(SAMPLE_TABLE, encoding="utf-8")
    return path


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_unipotent_listing(capsys, settings):
    assert run(["unipotent", "--type", "C", "--rank", "2"], settings) == 0
    out = _json(capsys)
    assert out["count"] == 6
    assert len(out["labels"]) == 6
    assert out["trivial"] == "(2 / -)"
    assert out["input"] == {"group": "C2"}


def test_unipotent_listing_as_text(capsys, settings):
    assert run(["unipotent", "--group", "C1xA1", "--format", "text"], settings) == 0
    out = capsys.readouterr().out
    assert " x\n" in out


def test_series_of_c2(capsys, settings):
    assert run(["series", "--type", "C", "--rank", "2", "--d", "6"], settings) == 0
    out = _json(capsys)
    assert out["regime"] == "d1"
    assert sorted(len(members) for members in out["classes"]) == [1, 5]
    assert out["meta"]["k_thresholds"] == {"0:C2": -1}
    assert "(2 / -)" in out["classes"][out["meta"]["trivial_class_index"]]


def test_one_series_needs_no_d(capsys, settings):
    assert run(["series", "--type", "C", "--rank", "2", "--kind", "one"], settings) == 0
    assert len(_json(capsys)["classes"]) == 2


def test_series_as_text_marks_the_trivial_class(capsys, settings):
    assert run(["series", "--type", "C", "--rank", "2", "--d", "2", "--format", "text"], settings) == 0
    assert capsys.readouterr().out.startswith("class 0  [trivial]:")


def test_series_with_restriction_of_scalars(capsys, settings):
    assert run(["series", "--type", "C", "--rank", "2", "--ext", "2", "--d", "4"], settings) == 0
    out = _json(capsys)
    assert out["input"] == {"group": "C2/2", "d": 4}
    assert len(out["classes"]) == 1


def test_series_of_exceptional_type_from_table(capsys, settings, table_path):
    argv = ["series", "--type", "G2", "--d", "3", "--exceptional-table", str(table_path)]
    assert run(argv, settings) == 0
    assert sorted(len(members) for members in _json(capsys)["classes"]) == [1, 1, 1, 2]


def test_sp_blocks(capsys, settings):
    assert run(["blocks", "--group", "sp", "--n", "4", "--q", "3", "--ell", "7"], settings) == 0
    out = _json(capsys)
    assert out["classes"] == [["(1,1)"], ["(0,0)", "(0,1)", "(1,0)"]]
    assert out["regime"] == "d_even"
    assert out["meta"]["d"] == 6
    assert out["meta"]["merged_class_index"] == 1
    assert out["meta"]["merge_vertices"]["(0,0)"] == [0, 1, 3, 4]


def test_sl_blocks(capsys, settings):
    assert run(["blocks", "--group", "sl", "--n", "5", "--q", "4", "--ell", "3"], settings) == 0
    out = _json(capsys)
    assert out["classes"] == [["(C,1)"]]
    assert out["meta"]["single_block"]


def test_blocks_as_text(capsys, settings):
    assert run(["blocks", "--group", "sp", "--n", "4", "--q", "3", "--ell", "7", "--format", "text"], settings) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["regime d_even, d=6", "block 0: (1,1)", "block 1  [merged]: (0,0) (0,1) (1,0)"]


@pytest.mark.parametrize(
    "argv",
    [
        ["blocks", "--group", "sp", "--n", "2", "--q", "9", "--ell", "3"],
        ["blocks", "--group", "sp", "--n", "2", "--q", "4", "--ell", "4"],
        ["blocks", "--group", "sp", "--n", "2", "--q", "4"],
        ["blocks", "--group", "gl", "--n", "2", "--q", "4", "--ell", "3"],
        ["series", "--type", "C", "--rank", "2"],
        ["series", "--type", "A", "--rank", "2", "--d", "0"],
        ["unipotent", "--type", "E8"],
        ["unipotent", "--type", "Q", "--rank", "2"],
        ["unipotent"],
        ["series", "--type", "G2", "--kind", "d", "--d", "2"],
        ["table-check"],
        ["frobnicate"],
    ],
)
def test_invalid_input_exits_with_one(capsys, settings, argv):
    assert run(argv, settings) == 1
    assert capsys.readouterr().out == ""


def test_help_exits_cleanly(settings):
    assert run(["--help"], settings) == 0


def test_verify_small_suite(capsys, settings):
    assert run(["verify", "--n", "1", "--q", "2", "--ell", "3"], settings) == 0
    reports = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert len(reports) == 7
    assert all(report["passed"] for report in reports)
    assert reports[0]["params"] == {"max_rank": 2, "max_d": 2}


def test_verify_failure_exits_with_two(capsys, settings, monkeypatch):
    monkeypatch.setattr(
        OracleService, "check_lemmas", lambda self, max_rank, max_k: CheckReport.failed("lemmas", "forced")
    )
    assert run(["verify", "--n", "1", "--q", "2", "--ell", "3", "--format", "text"], settings) == 2
    assert "FAIL lemmas {}  forced" in capsys.readouterr().out


def test_verify_needs_q_and_ell_together(settings):
    assert run(["verify", "--n", "2", "--q", "3"], settings) == 1


def test_table_check(capsys, settings, table_path):
    assert run(["table-check", "--exceptional-table", str(table_path)], settings) == 0
    out = _json(capsys)
    assert out["entries"] == 2
    assert out["series_types"] == ["F4", "G2"]
    assert out["keys"] == ["F4 2", "G2 3"]


def test_table_check_dump(capsys, settings, table_path):
    assert run(["table-check", "--dump", "--exceptional-table", str(table_path)], settings) == 0
    assert capsys.readouterr().out.startswith("SERIES G2 : 1, G2[1]")


def test_table_check_from_settings(capsys, table_path):
    assert run(["table-check"], Settings(exceptional_table=table_path)) == 0
    assert _json(capsys)["path"] == str(table_path)


def test_table_check_reports_the_failing_line(capsys, settings, tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("SERIES G2 : 1\nG2 x : {1}\n", encoding="utf-8")
    assert run(["table-check", "--exceptional-table", str(path)], settings) == 1


def test_table_check_missing_file(settings, tmp_path):
    assert run(["table-check", "--exceptional-table", str(tmp_path / "missing.txt")], settings) == 1


def test_table_check_rejects_non_utf8_file(capsys, settings, tmp_path):
    path = tmp_path / "latin1.txt"
    path.write_bytes(b"\xff\xfeSERIES G2 : 1\n")
    assert run(["table-check", "--exceptional-table", str(path)], settings) == 1
    assert capsys.readouterr().out == ""


def test_series_with_missing_table_file(capsys, settings, tmp_path):
    argv = ["series", "--group", "F4", "--d", "2", "--exceptional-table", str(tmp_path / "missing.txt")]
    assert run(argv, settings) == 1
    assert capsys.readouterr().out == ""


def test_unipotent_with_table_path_from_settings_that_does_not_exist(capsys, tmp_path):
    assert run(["unipotent", "--type", "G2"], Settings(exceptional_table=tmp_path / "gone.txt")) == 1
    assert capsys.readouterr().out == ""
