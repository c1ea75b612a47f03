"""
Unit tests for the gabidulin package.
"""
