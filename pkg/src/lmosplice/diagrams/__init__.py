"""Jacobi diagrams modulo AS and IHX, truncated by internal degree."""
from .element import (
    Element,
    QuadraticForm,
    apply_gaussian,
    apply_operator,
    exp_element,
    pair,
    product,
    reduce,
    relabel_scale,
)
from .space import DegreeOverflow, Space, build_space

__all__ = [
    "DegreeOverflow", "Element", "QuadraticForm", "Space",
    "apply_gaussian", "apply_operator", "build_space", "exp_element", "pair", "product",
    "reduce", "relabel_scale",
]
