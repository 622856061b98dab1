"""Characteristic polynomials of representations of complex simple Lie algebras.

Exact arithmetic throughout: root systems, weight multiplicities, the
linearized characteristic polynomial and its resolution product, recovery of a
representation from its weights, sl(2) subalgebra spectra and Borel spectral
matrices.
"""
from .charpoly import (CharPoly, LinearFactors, expand_small, linearize, product_on_charpoly,
                       resolution_product, trivial)
from .errors import LieCPError, NotACharacter, NotDominant, UnsupportedType
from .reconstruct import decompose
from .rootsys import RootSystem, build, pairing, reflect, to_ambient, to_fundamental
from .weights import Decomposition, WeightMultiset, irrep_weights, rep_weights, weyl_dim

__version__ = "0.1.0"
