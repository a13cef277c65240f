"""Execution, validation and evaluation kernel for modular building layout programs."""

__version__ = "0.1.0"
