from abc import ABC, abstractmethod


class IReportStorage(ABC):

    @abstractmethod
    def list_reports(self):
        """Returns a list of dictionaries, one per stored report,
        in the order they were added."""
        pass

    @abstractmethod
    def add_report(self, report):
        """Appends a report to the storage."""
        pass

    @abstractmethod
    def clear(self):
        """Deletes every stored report."""
        pass
