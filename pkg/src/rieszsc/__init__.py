"""Superconvergence of spectral approximations to Riesz fractional derivatives."""

__version__ = "0.1.0"
