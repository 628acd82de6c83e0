"""Executable complexity dichotomy for TRVB variants.

Every (B, U, planar, simple) variant lands in exactly one of three classes:
polynomial because breakable degrees stay at most 3, polynomial because no
valid instance is ever a "yes", or NP-complete.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import VariantSpec


class ComplexityClass(enum.Enum):
    P_SMALL_BREAKABLE = "P (small breakable degrees)"
    P_ALWAYS_NO = "P (every instance is a no)"
    NP_COMPLETE = "NP-complete"


@dataclass(frozen=True)
class Classification:
    complexity: ComplexityClass
    citation: str


_CITE_SMALL = ("solvable in polynomial time when every breakable degree is at most 3, "
               "via the spanning-tree formulation of the broken-vertex choice")
_CITE_NPC_UNRESTRICTED = ("NP-complete once some breakable degree k >= 4 is allowed, in the "
                          "multigraph, planar, and simple-graph settings alike")
_CITE_NPC_PLANAR_SIMPLE = ("NP-complete for planar simple graphs when some breakable degree "
                           "k >= 4 is allowed together with a low-degree vertex type "
                           "(breakable degree <= 5 or unbreakable degree <= 4)")
_CITE_ALWAYS_NO = ("polynomial for planar simple graphs with all breakable degrees >= 6 and "
                   "all unbreakable degrees >= 5: a bundle-scoring argument shows no such "
                   "instance has a tree-yielding break set")


def classify(spec: VariantSpec) -> Classification:
    """Map a variant to its complexity class and the governing result.

    Decision order: small breakable degrees are polynomial regardless of other
    flags; otherwise a breakable degree k >= 4 exists and every setting short of
    planar-and-simple is NP-complete; planar simple variants are NP-complete
    exactly when a degree in B meets {1..5} or a degree in U meets {1..4}, and
    otherwise (all breakable degrees >= 6, all unbreakable >= 5) every valid
    instance answers "no".
    """
    if spec.B.subset_of({1, 2, 3}):
        return Classification(ComplexityClass.P_SMALL_BREAKABLE, _CITE_SMALL)
    # B now contains some k >= 4.
    if not (spec.planar and spec.simple):
        return Classification(ComplexityClass.NP_COMPLETE, _CITE_NPC_UNRESTRICTED)
    if spec.B.intersects_range(1, 5) or spec.U.intersects_range(1, 4):
        return Classification(ComplexityClass.NP_COMPLETE, _CITE_NPC_PLANAR_SIMPLE)
    return Classification(ComplexityClass.P_ALWAYS_NO, _CITE_ALWAYS_NO)
