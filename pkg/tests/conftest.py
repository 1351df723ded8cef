import pytest

from superpatterns import _kernels_py

_BACKENDS = {"python": _kernels_py}
try:
    from superpatterns import _kernels

    _BACKENDS["cython"] = _kernels
except ImportError:
    pass


@pytest.fixture(params=sorted(_BACKENDS))
def backend(request):
    """Each available kernel backend module."""
    return _BACKENDS[request.param]


def has_compiled_backend():
    return "cython" in _BACKENDS
