"""Exact algebraic invariants of high-dimensional knots and their projections."""

from .errors import HDKnotsError, ParseError, PreconditionError, UnsupportedError, ValidationError
from .forms import FormInvariants, SymForm, direct_sum, e8, form_invariants, hyperbolic, kummer_form, signature
from .laurent import LaurentPoly
from .seifert import (
    KnotModel,
    SeifertMatrix,
    alexander,
    connected_sum,
    is_unknotted_simple,
    is_valid,
    knot_signature,
    kummer_knot,
    kummer_seifert,
    mirror_reverse,
    realizable_3knot_signature,
    trefoil,
)
from .spin import is_knotted_tower, spin_knot

__version__ = "0.1.0"
