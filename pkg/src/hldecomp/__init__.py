"""Graded decompositions of prime representations in Hernandez-Leclerc
categories for sl(n+1), computed two independent ways: a lattice point
count over an explicit polytope, and the dimension of a space of
symmetric Laurent polynomials cut out by vanishing and pole conditions.
"""

__version__ = "0.1.0"
