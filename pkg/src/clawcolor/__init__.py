"""Coloring claw-free graphs within the (Delta + 1 + omega) / 2 bound."""

__version__ = "0.1.0"
