"""Exact Laurent polynomial algebra: gradings, monomial automorphisms and cancellation procedures."""
from .algebras import AlgebraPresentation, AssertedFlags, MonomialGenerator, MonomialSubalgebra, localize
from .automorphisms import MonomialAutomorphism, compose, inverse, phi, psi
from .domains import GF, QQ, ZZ, LocalizedIntegers, parse_domain
from .errors import *  # noqa: F401,F403
from .gradings import Grading, grading_lattice, presentation_neutral
from .lattice import IntMatrix, LatticeBasis, hermite_normal_form, integer_kernel, smith_normal_form
from .laurent import LaurentPoly, format_poly, is_unit_poly, substitute
from .syntax import parse_poly

__version__ = "0.1.0"
