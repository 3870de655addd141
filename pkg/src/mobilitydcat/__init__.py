"""Toolkit for mobilityDCAT-AP metadata: build, validate, convert, publish, federate."""

__version__ = "1.1.0"
