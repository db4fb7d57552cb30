"""Exact combinatorics of Coxeter diagrams, Artin monoids and groups.

The package is organized around a frozen CoxeterDiagram value: diagram
classification and taxonomy, the canonical real bilinear form and its
reflection representation, word problems for the Coxeter group and the
positive monoid, Garside normal forms and the Delta-power group form,
finite poset models of the associated complexes with integer homology,
and a chamber-complex shelling verifier.
"""

from .diagram import (
    INF,
    CoxeterDiagram,
    TaxonomyReport,
    TypeLabel,
    classify_taxonomy,
    finite_type_subsets,
    is_finite_type,
    parse_diagram,
    preset,
)
from .errors import (
    ArtinError,
    CapExceededError,
    DiagramError,
    FiniteTypeRequiredError,
    GarsideError,
    RankGuardError,
)

__version__ = "0.1.0"

__all__ = [
    "INF",
    "CoxeterDiagram",
    "TaxonomyReport",
    "TypeLabel",
    "classify_taxonomy",
    "finite_type_subsets",
    "is_finite_type",
    "parse_diagram",
    "preset",
    "ArtinError",
    "CapExceededError",
    "DiagramError",
    "FiniteTypeRequiredError",
    "GarsideError",
    "RankGuardError",
    "__version__",
]
