"""Exact factorizations of symmetric groups and their bismash products.

The compiled extension `_bismash` is built by CMake and placed inside
this package directory; see the README for build steps.
"""

from ._bismash import *  # noqa: F401,F403
