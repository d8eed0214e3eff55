"""LCLMs of linear differential operators with coefficients in F_p[x].

An operator is a list of coefficient lists, ascending in D and then in x:
``[[0], [1]]`` is D and ``[[-1], [0, 1]]`` is x*D - 1.
"""

from ._core import (
    DEFAULT_PRIME,
    DocumentError,
    algorithms,
    clm,
    clm_bound,
    format_document,
    gcrd,
    is_known_algorithm,
    lclm,
    mul,
    order_of_lclm,
    parse_document,
    random_operators,
    right_divides,
)

__all__ = [
    "DEFAULT_PRIME",
    "DocumentError",
    "algorithms",
    "clm",
    "clm_bound",
    "format_document",
    "gcrd",
    "is_known_algorithm",
    "lclm",
    "mul",
    "order_of_lclm",
    "parse_document",
    "random_operators",
    "right_divides",
]
