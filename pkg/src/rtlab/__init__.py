"""rtlab: a desk-scale laboratory for Ramsey-Turan extremal graph theory."""

__version__ = "0.1.0"
