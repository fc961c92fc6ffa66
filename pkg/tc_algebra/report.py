from dataclasses import dataclass, field

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one checked identity; false is a valid result, not an error."""

    name: str
    passed: bool
    detail: str = ""
    counterexample: str = None

    def __bool__(self):
        return self.passed


def passed(name, detail=""):
    return CheckResult(name, True, detail)


def failed(name, counterexample, detail=""):
    return CheckResult(name, False, detail, str(counterexample))


def check(name, condition, counterexample=None, detail=""):
    """Build a result from a boolean, attaching the counterexample only on failure."""
    if condition:
        return passed(name, detail)
    return failed(name, counterexample, detail)


def combine(name, results):
    """Fold many results into one, keeping the first failure as the certificate."""
    results = list(results)
    for result in results:
        if not result.passed:
            return CheckResult(name, False, f"{result.name}: {result.detail}".rstrip(": "),
                               result.counterexample)
    return CheckResult(name, True, f"{len(results)} cases")


@dataclass
class Report:
    """What a CLI command returns: echo, payload, and the identities it checked."""

    command: str
    result: object = None
    checks: list = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    @property
    def passed(self):
        return all(result.passed for result in self.checks)

    @property
    def exit_code(self):
        return 0 if self.passed else 1
