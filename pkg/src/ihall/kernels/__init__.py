"""Mod-p linear algebra kernels with selectable backend.

The hot loops of the counting layer reduce to batched row reduction of
small int64 matrices over a prime field.  Two implementations are provided:

* ``numba`` -- jit-compiled loops (default when numba imports cleanly),
* ``numpy`` -- pure vectorized fallback.

Selection: environment variable ``IHALL_KERNELS`` set to ``numba``,
``numpy`` or ``auto`` (default).  ``benchmarks/bench_kernels.py`` compares
the two on representative workloads.
"""

import os

_BACKEND = None
_IMPL = None


def _load(name):
    if name == "numba":
        from . import numba_impl
        return numba_impl
    from . import numpy_impl
    return numpy_impl


def backend_name():
    _ensure()
    return _BACKEND


def _ensure():
    global _BACKEND, _IMPL
    if _IMPL is not None:
        return
    choice = os.environ.get("IHALL_KERNELS", "auto").strip().lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"IHALL_KERNELS must be auto|numba|numpy, got {choice!r}")
    if choice == "numpy":
        _BACKEND, _IMPL = "numpy", _load("numpy")
        return
    try:
        _BACKEND, _IMPL = "numba", _load("numba")
    except Exception:
        if choice == "numba":
            raise
        _BACKEND, _IMPL = "numpy", _load("numpy")


def set_backend(name):
    """Force a backend (mainly for tests and benchmarks)."""
    global _BACKEND, _IMPL
    _BACKEND, _IMPL = name, _load(name)


def rank_batch(mats, p):
    """Ranks of a (B, m, n) int64 stack over F_p; returns (B,) int64."""
    _ensure()
    return _IMPL.rank_batch(mats, p)


def rref_batch(mats, p):
    """Row-reduce a (B, k, n) stack over F_p.

    Returns (reduced, ranks, pivots) where ``pivots`` is (B, k) int64 with
    -1 padding; rows of each reduced matrix are in pivot-ascending order
    and pivot columns carry an identity block.
    """
    _ensure()
    return _IMPL.rref_batch(mats, p)
