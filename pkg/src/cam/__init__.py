"""cam: mine Java repositories into a per-class code-metrics dataset."""

__version__ = "0.1.0"
