"""Polarization, depolarization and reliability of monomial ideals."""

__version__ = "0.1.0"
