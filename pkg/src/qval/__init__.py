"""Exact quasi-valuations on Q and Q(√d), the ultrametric topology they
induce, and constructive simultaneous approximation."""

from .approximation import (
    ApproxSolution,
    ApproxTarget,
    Certificate,
    intersection_basis,
    rational_approx,
    weak_approx,
)
from .errors import (
    DomainError,
    ParseError,
    PrecisionExceededError,
    PropertyViolation,
    QvalError,
)
from .exprparse import format_element, parse_element
from .quadratic import QuadElem, Rational, as_quad, is_squarefree
from .quasi import (
    MinOf,
    NAdic,
    QVRing,
    Scaled,
    check_axioms,
    instability_witness,
    is_stable,
    min_extension,
    n_adic,
    n_adic_decomposition,
    ring_member,
    value_bound,
    value_witness,
)
from .qvspec import parse_qv
from .report import PropertyReport
from .topology import (
    Ball,
    BallRefinement,
    Side,
    dichotomy,
    integer_refinement,
    membership_scaling_chain,
    recenter,
    ring_value_equivalence,
    separation_witness,
)
from .valuations import (
    ExtendedValuation,
    PAdicValuation,
    SplitKind,
    classify,
    extensions_of,
    get_precision_cap,
    hensel_sqrt,
    set_precision_cap,
    v_p,
)
from .values import INFINITY, Value

__all__ = [
    "ApproxSolution",
    "ApproxTarget",
    "Ball",
    "BallRefinement",
    "Certificate",
    "DomainError",
    "ExtendedValuation",
    "INFINITY",
    "MinOf",
    "NAdic",
    "PAdicValuation",
    "ParseError",
    "PrecisionExceededError",
    "PropertyReport",
    "PropertyViolation",
    "QVRing",
    "QuadElem",
    "QvalError",
    "Rational",
    "Scaled",
    "Side",
    "SplitKind",
    "Value",
    "as_quad",
    "check_axioms",
    "classify",
    "dichotomy",
    "extensions_of",
    "format_element",
    "get_precision_cap",
    "hensel_sqrt",
    "instability_witness",
    "integer_refinement",
    "intersection_basis",
    "is_squarefree",
    "is_stable",
    "membership_scaling_chain",
    "min_extension",
    "n_adic",
    "n_adic_decomposition",
    "parse_element",
    "parse_qv",
    "rational_approx",
    "recenter",
    "ring_member",
    "ring_value_equivalence",
    "separation_witness",
    "set_precision_cap",
    "v_p",
    "value_bound",
    "value_witness",
    "weak_approx",
]
