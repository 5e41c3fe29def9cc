"""Hilbert functions of ideals containing powers of variables or regular
sequences: lex-plus-powers ideals, growth bounds, liaison and slicing."""

from .egh import egh_at_degree, egh_witness, liaison_transform, slice_construct
from .lpp import LppIdeal, cl_compress, is_lpp, lpp_from_hf, lpp_growth, macaulay_growth, refined_bound
from .mideal import HilbertFunction, MonomialIdeal, ci_hilbert, colon, hilbert_function
from .monom import DegreeSequence, Monomial, Ring
from .polyfp import Polynomial, PolynomialIdeal, PrimeField, buchberger, hilbert_function_poly, is_regular_sequence

__version__ = "0.1.0"

__all__ = [
    "DegreeSequence", "HilbertFunction", "LppIdeal", "Monomial", "MonomialIdeal", "Polynomial",
    "PolynomialIdeal", "PrimeField", "Ring", "buchberger", "ci_hilbert", "cl_compress", "colon",
    "egh_at_degree", "egh_witness", "hilbert_function", "hilbert_function_poly", "is_lpp",
    "is_regular_sequence", "liaison_transform", "lpp_from_hf", "lpp_growth", "macaulay_growth",
    "refined_bound", "slice_construct",
]
