from tc_algebra.backends.backend_cend import CendWeylBackend
from tc_algebra.backends.backend_cur import CurPolyBackend

BACKENDS = {
    CendWeylBackend.name: CendWeylBackend,
    CurPolyBackend.name: CurPolyBackend,
}


def make_backend(name, n, size):
    """Build the backend registered under `name` ('cend' or 'cur')."""
    try:
        return BACKENDS[name](n, size)
    except KeyError:
        raise ValueError(f"unknown backend: {name}") from None
