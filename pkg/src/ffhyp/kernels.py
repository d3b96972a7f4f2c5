"""Hot loops, dispatched to the compiled extension when it is importable.

``BACKEND`` names the active implementation.  ``use_backend`` switches it at
runtime, which the benchmark and the cross-backend tests rely on.
"""

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_NAMES = ("legendre_traces", "cubic_trace", "torsion_count", "weierstrass_classes")

BACKEND = ""


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _compiled is not None else [])


def use_backend(name: str) -> None:
    global BACKEND
    if name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e .`")
        impl = _compiled
    elif name == "python":
        impl = _pykernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    g = globals()
    for fn in _NAMES:
        g[fn] = getattr(impl, fn)
    BACKEND = name


def legendre_traces(p):  # replaced by use_backend
    raise NotImplementedError


def cubic_trace(p, a2, a4, a6):
    raise NotImplementedError


def torsion_count(p, a2, a4, a6, m):
    raise NotImplementedError


def weierstrass_classes(p):
    raise NotImplementedError


use_backend("cython" if _compiled is not None else "python")
