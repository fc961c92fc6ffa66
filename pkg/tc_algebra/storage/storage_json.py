import json
import logging
import os

from tc_algebra.output_formatter import report_to_dict
from tc_algebra.storage.istorage import IReportStorage

logger = logging.getLogger(__name__)


class ReportStorageJson(IReportStorage):
    """All reports in one JSON array."""

    def __init__(self, file_path):
        self._file_path = file_path
        # Create the file if it doesn't exist
        if not os.path.exists(self._file_path):
            self._write([])

    def _write(self, reports):
        with open(self._file_path, "w", encoding="utf-8") as f:
            f.write(json.dumps(reports, indent=2))

    def list_reports(self):
        """Returns the stored reports as dictionaries.

        A missing or corrupt file is reset to an empty list.
        """
        try:
            with open(self._file_path, "r", encoding="utf-8") as f:
                reports = json.loads(f.read())
            if isinstance(reports, list):
                return reports
        except (FileNotFoundError, json.JSONDecodeError):
            pass
        logger.warning("report log %s is missing or corrupt; starting a new one", self._file_path)
        self._write([])
        return []

    def add_report(self, report):
        """Loads the stored reports, appends this one, and saves them."""
        reports = self.list_reports()
        reports.append(report_to_dict(report))
        self._write(reports)
        logger.debug("stored report for %r in %s", report.command, self._file_path)

    def clear(self):
        self._write([])
