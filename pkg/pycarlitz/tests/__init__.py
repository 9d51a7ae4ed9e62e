"""
Unit tests for pycarlitz.
"""
