"""Exact rank and degree bookkeeping for the isomonodromy contradiction.

For a rank-two flat bundle with determinant of degree det_deg and a Hodge line
subbundle of degree d, the quotient of endomorphisms by filtration-preserving
ones is Hom(Fil^1, E/Fil^1), of degree det_deg - 2d, while the logarithmic
tangent sheaf has degree 2 - 2g - n.  A nonzero map between line bundles of
equal degree on a proper curve is an isomorphism; when the two degrees agree
the induced H^1 isomorphism forces the isomonodromy deformation class of any
filtration-preserving family to vanish, contradicting its nontriviality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .rigidity import CurveType


@dataclass(frozen=True)
class BundleClass:
    """Rank and degree of a vector bundle on a curve of the given type."""

    rank: int
    degree: int
    context: CurveType

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")


@dataclass(frozen=True)
class ExactTriple:
    """Sub, total and quotient classes of a short exact sequence; additivity is enforced."""

    sub: BundleClass
    total: BundleClass
    quotient: BundleClass

    def __post_init__(self) -> None:
        if not (self.sub.context == self.total.context == self.quotient.context):
            raise ValueError("exact triple mixes bundles on different curve types")
        if self.total.rank != self.sub.rank + self.quotient.rank:
            raise ValueError(
                f"rank additivity fails: {self.total.rank} != {self.sub.rank} + {self.quotient.rank}"
            )
        if self.total.degree != self.sub.degree + self.quotient.degree:
            raise ValueError(
                f"degree additivity fails: {self.total.degree} != {self.sub.degree} + {self.quotient.degree}"
            )


class AtiyahClasses(NamedTuple):
    end: BundleClass
    atiyah: BundleClass


@dataclass(frozen=True)
class ContradictionVerdict:
    """Degree comparison underlying the contradiction step."""

    deg_tangent: int
    deg_hom: int
    forced_iso: bool
    conclusion: str


def hom_degree(fil1_deg: int, det_deg: int) -> int:
    """Degree of Hom(Fil^1, E/Fil^1) for a rank-two bundle: det_deg - 2 * fil1_deg."""
    return det_deg - 2 * fil1_deg


def tangent_degree(ct: CurveType) -> int:
    """Degree 2 - 2g - n of the tangent sheaf, logarithmic along the punctures."""
    return 2 - 2 * ct.g - ct.n


def atiyah_classes(e: BundleClass) -> AtiyahClasses:
    """Endomorphism and Atiyah-extension classes of a bundle.

    End(E) has rank r^2 and degree zero for any E; the Atiyah bundle extends
    the (log) tangent sheaf by End(E), so its class follows by additivity.
    """
    end = BundleClass(rank=e.rank**2, degree=0, context=e.context)
    tangent = BundleClass(rank=1, degree=tangent_degree(e.context), context=e.context)
    triple = ExactTriple(
        sub=end,
        total=BundleClass(
            rank=end.rank + tangent.rank,
            degree=end.degree + tangent.degree,
            context=e.context,
        ),
        quotient=tangent,
    )
    return AtiyahClasses(end=end, atiyah=triple.total)


def rr_chi(g: int, degree: int) -> int:
    """Euler characteristic degree + 1 - g of a line bundle on a genus-g curve."""
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    return degree + 1 - g


def contradiction_check(ct: CurveType, fil1_deg: int, det_deg: int) -> ContradictionVerdict:
    """Compare the tangent degree with the Hom-quotient degree.

    With a positive filtration degree the map from the tangent sheaf to the
    endomorphism quotient is nonzero; equal degrees then make it an
    isomorphism, the induced H^1 map kills the deformation class, and the
    verdict is a contradiction.  Otherwise the comparison is inconclusive.
    """
    deg_tangent = tangent_degree(ct)
    deg_hom = hom_degree(fil1_deg, det_deg)
    forced = deg_tangent == deg_hom and fil1_deg >= 1
    return ContradictionVerdict(
        deg_tangent=deg_tangent,
        deg_hom=deg_hom,
        forced_iso=forced,
        conclusion="contradiction" if forced else "inconclusive",
    )
