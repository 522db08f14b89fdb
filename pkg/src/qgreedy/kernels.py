"""Kernel backend selection.

The compiled extension ``qgreedy._ckernels`` is used when it imports; the
pure-Python module is the fallback.  Both expose the same five functions
and return identical results.
"""
from qgreedy import _pykernels

try:
    from qgreedy import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

BACKEND = "cython" if _ckernels is not None else "python"

poly_add = poly_sub = poly_mul = poly_scale = torus_mul = None


def available_backends():
    return sorted(_BACKENDS)


def get_backend(name):
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available") from None


def set_backend(name):
    """Rebind the module-level kernels to backend ``name``."""
    global BACKEND, poly_add, poly_sub, poly_mul, poly_scale, torus_mul
    mod = get_backend(name)
    BACKEND = name
    poly_add = mod.poly_add
    poly_sub = mod.poly_sub
    poly_mul = mod.poly_mul
    poly_scale = mod.poly_scale
    torus_mul = mod.torus_mul


set_backend(BACKEND)
