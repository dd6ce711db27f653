"""Exact invariants of cyclic singular/regular curve words.

Thin wrapper over the C++ extension module. All integers are exact.
"""

try:
    from ._gsslat import *          # packaged install
    from . import _gsslat as _impl
except ImportError:                 # development tree: module next to the package
    from _gsslat import *
    import _gsslat as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
