from tc_algebra import linalg
from tc_algebra import multiindex as mi
from tc_algebra.backends.ibackend import IBackend
from tc_algebra.errors import VariableCountError
from tc_algebra.weyl import MatWeyl, WeylElement, weyl_derivation


class CendWeylBackend(IBackend):
    """Target M_N(A_n) with d_i = [., p_i] and basic maps a_f: T^alpha -> f q^alpha."""

    name = "cend"

    def zero_value(self):
        return MatWeyl.zero(self._n, self._size)

    def coerce(self, value):
        if isinstance(value, WeylElement):
            return MatWeyl.scalar(value, self._size)
        return value

    def basic_value(self, beta, matrix, alpha):
        return MatWeyl.from_scalar_matrix(matrix, WeylElement.monomial(beta, alpha))

    def derivation(self, value, i):
        return weyl_derivation(self.coerce(value), i)

    def q_free_part(self, value):
        value = self.coerce(value)
        zero = mi.zero(self._n)
        parts = {}
        for i, row in enumerate(value.rows):
            for j, w in enumerate(row):
                for (beta, alpha), c in w.items():
                    if alpha == zero:
                        parts.setdefault(beta, [[0] * self._size for _ in range(self._size)])[i][j] = c
        return {beta: linalg.from_rows(rows) for beta, rows in parts.items()}

    def witness_terms(self, value):
        value = self.coerce(value)
        grouped = {}
        for i, row in enumerate(value.rows):
            for j, w in enumerate(row):
                for (beta, alpha), c in w.items():
                    grouped.setdefault((beta, alpha), [[0] * self._size for _ in range(self._size)])[i][j] = c
        return [(beta, linalg.from_rows(rows), alpha)
                for (beta, alpha), rows in sorted(grouped.items(),
                                                  key=lambda item: (mi.grlex_key(item[0][1]),
                                                                    mi.grlex_key(item[0][0])))]

    def check_beta(self, beta):
        if len(beta) != self._n:
            raise VariableCountError(self._n, len(beta))

    def with_vars(self, n):
        return CendWeylBackend(n, self._size)

    def with_size(self, size):
        return CendWeylBackend(self._n, size)
