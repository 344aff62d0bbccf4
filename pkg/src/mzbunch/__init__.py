"""Thermal photon bunching from laser light through cascaded asymmetric interferometers."""

__version__ = "0.1.0"
