"""Finite graded-algebra laboratory.

Builds finite graded rings and graded left modules from JSON configs,
decides the submodule/ideal predicates, and verifies the theorem suite.
"""

from gralab._core import (
    CapExceeded,
    Structure,
    ValidationError,
    predicate_names,
    search_separating_example,
    theorem_ids,
    verify_corpus,
)

__all__ = [
    "CapExceeded",
    "Structure",
    "ValidationError",
    "predicate_names",
    "search_separating_example",
    "theorem_ids",
    "verify_corpus",
]
