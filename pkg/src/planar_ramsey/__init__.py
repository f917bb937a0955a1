"""Planar Ramsey graph constructions, avoidance colorings and arrow checks."""

__version__ = "0.1.0"
