"""Exact Chevalley coefficients for motivic Chern classes of Schubert cells."""

__version__ = "0.1.0"
