import pytest

from tc_algebra.report import Report, failed, passed
from tc_algebra.storage import make_report_storage
from tc_algebra.storage.storage_csv import ReportStorageCsv
from tc_algebra.storage.storage_json import ReportStorageJson


def _reports():
    return [
        Report("dim --variety free --arity 3", 12),
        Report("check hopf", None, [passed("hopf/coassoc", "10 cases"), failed("hopf/antipode", "f=T1")]),
    ]


@pytest.mark.parametrize("suffix", [".json", ".csv"])
def test_reports_are_appended_in_order(tmp_path, suffix):
    storage = make_report_storage(str(tmp_path / f"log{suffix}"))
    assert storage.list_reports() == []
    for report in _reports():
        storage.add_report(report)
    stored = storage.list_reports()
    assert [r["command"] for r in stored] == ["dim --variety free --arity 3", "check hopf"]
    assert [r["passed"] for r in stored] == [True, False]
    assert [c["name"] for c in stored[1]["checks"]] == ["hopf/coassoc", "hopf/antipode"]
    assert stored[1]["checks"][1]["counterexample"] == "f=T1"
    storage.clear()
    assert storage.list_reports() == []


def test_json_keeps_the_result_payload(tmp_path):
    storage = ReportStorageJson(str(tmp_path / "log.json"))
    storage.add_report(_reports()[0])
    assert storage.list_reports()[0]["result"] == 12


def test_csv_keeps_the_result_as_text(tmp_path):
    storage = ReportStorageCsv(str(tmp_path / "log.csv"), separator=";")
    storage.add_report(_reports()[0])
    assert storage.list_reports()[0]["result"] == "12"
    assert (tmp_path / "log.csv").read_text(encoding="utf-8").startswith("command;result;name")


def test_corrupt_json_log_is_reset(tmp_path):
    path = tmp_path / "log.json"
    path.write_text("{not json", encoding="utf-8")
    storage = ReportStorageJson(str(path))
    assert storage.list_reports() == []
    assert path.read_text(encoding="utf-8") == "[]"


def test_unknown_extension(tmp_path):
    with pytest.raises(ValueError):
        make_report_storage(str(tmp_path / "log.txt"))
