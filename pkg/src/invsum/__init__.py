"""Functional graphs of x -> x + 1/x on binary fields: enumeration and prediction."""

__version__ = "0.1.0"
