"""
Integration tests package for wspec.

These tests run the experiment suite end to end at desk scale and check
the published reference values, extremal trees and enumeration oracles.
"""
