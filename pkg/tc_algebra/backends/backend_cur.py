from tc_algebra import linalg
from tc_algebra import multiindex as mi
from tc_algebra.backends.ibackend import IBackend
from tc_algebra.errors import DimensionMismatchError
from tc_algebra.hopf import HPoly, partial_derivative
from tc_algebra.weyl import PolyMatrix


class CurPolyBackend(IBackend):
    """Target M_N(H) with d_i = d/dT_i and basic maps a_M: f -> M f (current algebra)."""

    name = "cur"

    def zero_value(self):
        return PolyMatrix.zero(self._n, self._size)

    def coerce(self, value):
        if isinstance(value, HPoly):
            return PolyMatrix.scalar(value, self._size)
        return value

    def basic_value(self, beta, matrix, alpha):
        self.check_beta(beta)
        return PolyMatrix.from_scalar_matrix(matrix, HPoly.monomial(alpha))

    def derivation(self, value, i):
        return self.coerce(value).map(lambda f: partial_derivative(f, i))

    def q_free_part(self, value):
        """The T-degree-0 part, reported under beta = 0."""
        value = self.coerce(value)
        constant = linalg.from_rows([[f.constant_term() for f in row] for row in value.rows])
        if linalg.is_zero(constant):
            return {}
        return {mi.zero(self._n): constant}

    def witness_terms(self, value):
        value = self.coerce(value)
        grouped = {}
        for i, row in enumerate(value.rows):
            for j, f in enumerate(row):
                for alpha, c in f.items():
                    grouped.setdefault(alpha, [[0] * self._size for _ in range(self._size)])[i][j] = c
        zero = mi.zero(self._n)
        return [(zero, linalg.from_rows(rows), alpha)
                for alpha, rows in sorted(grouped.items(), key=lambda item: mi.grlex_key(item[0]))]

    def check_beta(self, beta):
        if any(beta):
            raise DimensionMismatchError(f"current backend has no basic map for p^{beta}")

    def with_vars(self, n):
        return CurPolyBackend(n, self._size)

    def with_size(self, size):
        return CurPolyBackend(self._n, size)
