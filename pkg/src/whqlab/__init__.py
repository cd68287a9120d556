"""Exact workbench for weak Hopf quasigroups and their Galois/cleft extensions."""

__version__ = "0.1.0"
