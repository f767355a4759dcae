"""Chromatic quasisymmetric and vertical-strip LLT machinery with F_q brute-force oracles."""

__version__ = "0.1.0"
