"""leibxmod: exact-rational computer algebra for Leibniz algebras.

Non-abelian tensor and exterior products, crossed modules and their
Schur multipliers, classification of central extensions (stem
extensions, stem covers), six-term exact-sequence verification, and an
independent Loday-complex homology oracle.  Everything is computed over
the rational field with exact arithmetic.
"""

__version__ = "0.1.0"
