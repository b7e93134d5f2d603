"""Domination/packing toolkit: exact oracles, certified constant-ratio
constructions for structured graph classes, extremal family generators, and
a conjecture-scan harness."""

from .graph import Graph, Mode, XYInstance

__all__ = ["Graph", "Mode", "XYInstance"]
__version__ = "0.1.0"
