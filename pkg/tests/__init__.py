"""
Ideal Convergence Test Suite
Tests for index sets, ideals, sequences, convergence, compactness, closure and the command line
"""
