"""Exact character tables of the Iwahori-Hecke algebra H_n(q).

Traces of generator words are reduced to traces of disjoint sequences, those
are rewritten as traces of Murphy-operator products, and the latter are
summed over chains in the Young lattice.
"""
from .errors import (
    DoesNotFit,
    HeckeError,
    IndexOutOfRange,
    InvalidProduct,
    MalformedSpec,
    NotPolynomial,
    NotSquareFree,
    SingularPivot,
    SizeMismatch,
)
from .hecke import HeckeElement, Permutation, Word, murphy_op, regular_trace, word_regular_trace
from .murphy import MurphyProduct, murphy_product_trace, murphy_trace_table
from .qpoly import LaurentPoly, RationalFn
from .reduce import ReducedTraceCombo, canonical_cycle_type, reduce_trace, representative_word
from .solver import CharacterTable, MurphyCombo, character_table, solve_all, verify_table
from .sym import mn_character, sn_table
from .young import CycleType, YoungDiagram, conjugate, cycle_type_partition, dimension, enumerate_diagrams

__version__ = "0.1.0"

__all__ = [
    "CharacterTable",
    "CycleType",
    "DoesNotFit",
    "HeckeElement",
    "HeckeError",
    "IndexOutOfRange",
    "InvalidProduct",
    "LaurentPoly",
    "MalformedSpec",
    "MurphyCombo",
    "MurphyProduct",
    "NotPolynomial",
    "NotSquareFree",
    "Permutation",
    "RationalFn",
    "ReducedTraceCombo",
    "SingularPivot",
    "SizeMismatch",
    "Word",
    "YoungDiagram",
    "canonical_cycle_type",
    "character_table",
    "conjugate",
    "cycle_type_partition",
    "dimension",
    "enumerate_diagrams",
    "mn_character",
    "murphy_op",
    "murphy_product_trace",
    "murphy_trace_table",
    "reduce_trace",
    "regular_trace",
    "representative_word",
    "sn_table",
    "solve_all",
    "verify_table",
    "word_regular_trace",
]
