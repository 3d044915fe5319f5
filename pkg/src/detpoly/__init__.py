#!/usr/bin/env python3

from .detcore import (
    PolyMap,
    almost_surjectivity,
    decompose,
    determined_theorem_route,
    is_determined,
    radchi_membership,
    rational_membership,
    subalgebra_membership,
)
from .expr import parse
from .field import FieldSpec
from .main import main
from .poly import Polynomial, VarContext

__all__ = [
    "FieldSpec",
    "PolyMap",
    "Polynomial",
    "VarContext",
    "almost_surjectivity",
    "decompose",
    "determined_theorem_route",
    "is_determined",
    "main",
    "parse",
    "radchi_membership",
    "rational_membership",
    "subalgebra_membership",
]
