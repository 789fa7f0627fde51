"""Treewidth search kernel, compiled when available.

`_core` is a Cython extension built at install time; when it is missing
(no compiler, source checkout) the pure-Python `_pure` module provides
the same interface.  `IMPLEMENTATION` tells which one is active.
"""

try:
    from . import _core as _impl  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    from . import _pure as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION
treewidth_order = _impl.treewidth_order
min_fill_order = _impl.min_fill_order
degeneracy = _impl.degeneracy
