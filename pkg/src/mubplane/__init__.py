"""
mubplane
========
Finite projective planes and mutually unbiased bases, side by side.
"""
from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("mubplane")
except PackageNotFoundError:
    __version__ = "dev"
