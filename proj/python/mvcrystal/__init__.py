"""Exact computations with MV polytopes through their BZ data."""

from ._core import (
    BZDatum,
    Conflict,
    CapExceeded,
    InvalidArgument,
    ParseError,
    UnsupportedType,
    amscan,
    crystal_size,
    from_lusztig,
    from_string_datum,
    graph_json,
    lex_least_word,
    sp6_counterexample,
    weyl_order,
)

__all__ = [
    "BZDatum",
    "CapExceeded",
    "Conflict",
    "InvalidArgument",
    "ParseError",
    "UnsupportedType",
    "amscan",
    "crystal_size",
    "from_lusztig",
    "from_string_datum",
    "graph_json",
    "lex_least_word",
    "sp6_counterexample",
    "weyl_order",
]
