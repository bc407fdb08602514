"""Search kernels with a compiled core and a pure-Python fallback.

The compiled extension is used when it imports; set ``SGCRIT_PURE_PYTHON=1``
to force the fallback. ``BACKEND`` names the active one.
"""

import os

from . import _pykernels

python_backend = _pykernels
compiled_backend = None

if os.environ.get("SGCRIT_PURE_PYTHON", "") not in ("", "0"):
    _active = _pykernels
else:
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None
    _active = compiled_backend or _pykernels

BACKEND = _active.NAME


def c4_switch_search(n, eu, ev, eneg, order):
    return _active.c4_switch_search(n, eu, ev, eneg, order)


def hom_search(n, eu, ev, eneg, compat, domains, budget):
    if len(compat[0]) > 64:
        return _pykernels.hom_search(n, eu, ev, eneg, compat, domains, budget)
    return _active.hom_search(n, eu, ev, eneg, compat, domains, budget)


def backends():
    """Every importable backend module, Python first."""
    return [b for b in (_pykernels, compiled_backend) if b is not None]


def use_backend(name):
    """Switch the active backend (``"python"`` or ``"cython"``); returns the
    previous name."""
    global _active, BACKEND
    for b in backends():
        if b.NAME == name:
            previous, _active, BACKEND = _active.NAME, b, b.NAME
            return previous
    raise ValueError(f"backend {name!r} is not available")
