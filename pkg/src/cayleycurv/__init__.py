"""Medium-scale comparison curvature on Cayley graphs."""

__version__ = "0.1.0"
