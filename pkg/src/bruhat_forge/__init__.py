"""Exact-arithmetic engine for Billey-Postnikov decompositions."""

from .polynomial import IntPolynomial, q_integer
from .coxeter_core import (
    CoxeterSystem,
    GroupElement,
    ParabolicDecomposition,
    build_system,
    bruhat_leq,
    descents,
    enumerate_group,
    longest_element,
    lower_interval,
    max_in_interval_parabolic,
    multiply,
    parabolic_decompose,
    parse_element,
    poincare,
    relative_lower_interval,
    relative_poincare,
    support,
    to_literal,
    word_element,
)

__version__ = "0.1.0"
