import os

from tc_algebra.storage.storage_csv import ReportStorageCsv
from tc_algebra.storage.storage_json import ReportStorageJson


def make_report_storage(file_path):
    """JSON storage for a .json path, CSV storage for a .csv path."""
    extension = os.path.splitext(file_path)[1].lower()
    if extension == ".json":
        return ReportStorageJson(file_path)
    if extension == ".csv":
        return ReportStorageCsv(file_path)
    raise ValueError(f"report log must end in .json or .csv: {file_path}")
