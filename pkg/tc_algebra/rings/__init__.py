from tc_algebra.rings.ring_laurent import LaurentRing
from tc_algebra.rings.ring_matrix import MatrixRing
from tc_algebra.rings.ring_rational import RationalRing
from tc_algebra.rings.ring_weyl import WeylRing


def make_ring(name, n=1, size=2):
    """The coefficient ring registered under `name`; n and N apply to weyl and matrix."""
    if name == RationalRing.name:
        return RationalRing()
    if name == MatrixRing.name:
        return MatrixRing(size)
    if name == WeylRing.name:
        return WeylRing(n)
    if name == LaurentRing.name:
        return LaurentRing()
    raise ValueError(f"unknown coefficient ring: {name}")
