"""Session settings: environment defaults, overridden by command-line flags."""
import dataclasses
import os
from dataclasses import dataclass

ENV_PREFIX = "TC_ALGEBRA_"


@dataclass(frozen=True)
class SessionConfig:
    """Fixes the number of variables, the matrix size, the target backend and
    the operad variety that every expression of a run is validated against."""

    n_vars: int = 1
    matrix_size: int = 1
    backend: str = "cend"
    variety: str = "free"
    ring: str = "rational"
    seed: int = 0
    degree_bound: int = 3
    jobs: int = 1
    log_level: str = "WARNING"
    report_log: str | None = None

    @classmethod
    def from_env(cls, environ=None):
        """Build a config from TC_ALGEBRA_* variables.

        Args:
            environ: Mapping to read from; os.environ when omitted.

        Returns:
            SessionConfig: defaults for every unset variable.
        """
        environ = os.environ if environ is None else environ

        def get(name, cast, default):
            value = environ.get(ENV_PREFIX + name)
            if value is None or value == "":
                return default
            return cast(value)

        defaults = cls()
        return cls(
            n_vars=get("N", int, defaults.n_vars),
            matrix_size=get("MATRIX_SIZE", int, defaults.matrix_size),
            backend=get("BACKEND", str.lower, defaults.backend),
            variety=get("VARIETY", str.lower, defaults.variety),
            ring=get("RING", str.lower, defaults.ring),
            seed=get("SEED", int, defaults.seed),
            degree_bound=get("DEGREE_BOUND", int, defaults.degree_bound),
            jobs=get("JOBS", int, defaults.jobs),
            log_level=get("LOG_LEVEL", str.upper, defaults.log_level),
            report_log=get("REPORT_LOG", str, defaults.report_log),
        )

    def override(self, **changes):
        """Return a copy with every non-None keyword applied."""
        return dataclasses.replace(self, **{key: value for key, value in changes.items() if value is not None})
