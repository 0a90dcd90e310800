"""Exact Hall-Littlewood polynomial engine over the t-boson lattice model."""

__version__ = "0.1.0"
