"""Backend selection for the hot numeric kernels.

The spectral kernel tables and the closed-form curvature sums exist in two
implementations: numba @njit loops and a pure-numpy fallback.  Selection is
controlled by the environment variable GAUSSGEOM_BACKEND:

    auto   (default) use numba when importable, else numpy
    numba  force numba, raise if unavailable
    numpy  force the pure-numpy path
"""

import os

_ENV_VAR = "GAUSSGEOM_BACKEND"

try:
    import numba  # noqa: F401
    _HAVE_NUMBA = True
except ImportError:
    _HAVE_NUMBA = False


def backend_name():
    """Resolve the active backend ("numba" or "numpy")."""
    choice = os.environ.get(_ENV_VAR, "auto").strip().lower()
    if choice in ("", "auto"):
        return "numba" if _HAVE_NUMBA else "numpy"
    if choice == "numba":
        if not _HAVE_NUMBA:
            raise RuntimeError(
                f"{_ENV_VAR}=numba requested but numba is not importable")
        return "numba"
    if choice == "numpy":
        return "numpy"
    raise ValueError(f"unknown {_ENV_VAR} value: {choice!r}")


def use_numba():
    return backend_name() == "numba"
