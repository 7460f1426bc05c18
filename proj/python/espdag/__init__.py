"""Energy-saving DAG partitioning: exact solvers, reductions, generators.

Thin wrapper around the compiled ``_espdag`` module. When installed as a
wheel the extension lives inside this package; during in-tree development it
sits on ``PYTHONPATH`` next to the build directory.
"""

try:
    from ._espdag import *  # noqa: F401,F403
    from . import _espdag as _impl
except ImportError:  # in-tree build: extension module on PYTHONPATH
    from _espdag import *  # noqa: F401,F403
    import _espdag as _impl

__version__ = getattr(_impl, "__version__", "0.1.0")
__all__ = [name for name in dir(_impl) if not name.startswith("_")]
