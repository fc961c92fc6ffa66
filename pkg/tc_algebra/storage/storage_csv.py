import csv
import logging
import os

from tc_algebra.output_formatter import format_value
from tc_algebra.storage.istorage import IReportStorage

logger = logging.getLogger(__name__)

FIELDS = ["command", "result", "name", "passed", "detail", "counterexample"]


def report_to_rows(report):
    """One row per checked identity; a report without checks gets a single row."""
    result = "" if report.result is None else format_value(report.result)
    if not report.checks:
        return [{"command": report.command, "result": result, "name": "", "passed": "",
                 "detail": "", "counterexample": ""}]
    return [{"command": report.command, "result": result, "name": check.name,
             "passed": "true" if check.passed else "false", "detail": check.detail,
             "counterexample": check.counterexample or ""}
            for check in report.checks]


class ReportStorageCsv(IReportStorage):
    """Checked identities as CSV rows; rows of one report share the command column."""

    def __init__(self, file_path, separator=","):
        self._file_path = file_path
        self._separator = separator
        # Create the file if it doesn't exist
        if not os.path.exists(self._file_path):
            self._write([])

    def _write(self, rows):
        with open(self._file_path, "w", newline="", encoding="utf-8") as f:
            writer = csv.DictWriter(f, fieldnames=FIELDS, delimiter=self._separator)
            writer.writeheader()
            writer.writerows(rows)

    def _rows(self):
        try:
            with open(self._file_path, "r", newline="", encoding="utf-8") as f:
                reader = csv.DictReader(f, delimiter=self._separator)
                return [row for row in reader if row.get("command")]
        except FileNotFoundError:
            self._write([])
            return []

    def list_reports(self):
        """Returns the stored reports, regrouping consecutive rows of the same command.

        The CSV form keeps check outcomes only, so result payloads come back as text.
        """
        reports = []
        for row in self._rows():
            if not reports or reports[-1]["command"] != row["command"] or row["name"] == "":
                reports.append({"command": row["command"], "result": row["result"] or None, "checks": []})
            if row["name"]:
                reports[-1]["checks"].append({
                    "name": row["name"],
                    "passed": row["passed"] == "true",
                    "detail": row["detail"],
                    "counterexample": row["counterexample"] or None,
                })
        for report in reports:
            report["passed"] = all(check["passed"] for check in report["checks"])
        return reports

    def add_report(self, report):
        """Loads the stored rows, appends the rows of this report, and saves them."""
        rows = self._rows()
        rows.extend(report_to_rows(report))
        self._write(rows)
        logger.debug("stored %d row(s) for %r in %s", len(rows), report.command, self._file_path)

    def clear(self):
        self._write([])
