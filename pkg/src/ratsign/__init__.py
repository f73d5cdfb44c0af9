"""Signed counts of real simple rational functions, computed exactly."""

__version__ = "0.1.0"
