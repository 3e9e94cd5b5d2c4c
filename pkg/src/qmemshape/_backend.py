"""Numba/NumPy backend selection.

Hot kernels (Bessel evaluation, field-spin marching) have two
implementations: numba-compiled loops and pure-NumPy reference code.
The numba path is used when numba imports cleanly and the environment
variable ``QMEMSHAPE_NO_NUMBA`` is unset/empty. The flag is read at
call time so benchmarks can flip it in-process.
"""

import os

try:
    import numba  # noqa: F401
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

ENV_FLAG = "QMEMSHAPE_NO_NUMBA"


def use_numba() -> bool:
    """True when the compiled kernels should be dispatched to."""
    if not HAVE_NUMBA:
        return False
    return not os.environ.get(ENV_FLAG, "")
