"""Exact E_n-homology of functors on planar level trees."""

try:
    from enhom._enhom import *  # noqa: F401,F403  (installed layout)
    from enhom._enhom import __version__  # noqa: F401
except ImportError:  # pragma: no cover - in-tree build layout
    from _enhom import *  # noqa: F401,F403
    from _enhom import __version__  # noqa: F401
