"""Exact symbolic workbench for q-deformed Hopf algebras, their Galois
extensions, Haar functionals and fibre-functor data."""

__version__ = "0.1.0"
