"""Convex-geometry toolkit: polar projection body calculus and
Petty-type inequality verification suites."""

try:
    from pettykit._pettykit import *  # noqa: F401,F403  (installed layout)
    from pettykit._pettykit import __version__  # noqa: F401
except ImportError:  # in-tree builds put _pettykit next to the package
    from _pettykit import *  # noqa: F401,F403
    from _pettykit import __version__  # noqa: F401
