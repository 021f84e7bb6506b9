"""2-step nilpotent groups of weighted graphs.

Graphs are dicts {"vertices": [...], "edges": [[u, v, weight?], ...]};
matrices are row-major lists of integers.
"""

from ._core import (
    GraphError,
    PreconditionError,
    SchemaError,
    analyze,
    automorphisms,
    bounds,
    certify,
    char_poly,
    check,
    multiply,
    remark_group_H,
    reproduce,
    reproduce_ids,
    search,
    smith_normal_form,
    verify_certificate,
)

__all__ = [
    "GraphError",
    "PreconditionError",
    "SchemaError",
    "analyze",
    "automorphisms",
    "bounds",
    "certify",
    "char_poly",
    "check",
    "multiply",
    "remark_group_H",
    "reproduce",
    "reproduce_ids",
    "search",
    "smith_normal_form",
    "verify_certificate",
]
