"""Canonical components of hyperbolic 3-orbifolds, computed from boundary data.

The input is the list of boundary components of a compact orientable
3-orbifold whose interior is hyperbolic.  That hyperbolicity is taken on
trust and is never checked.  The dimension of the component containing
tau o hol is half the dimension of the boundary character variety.  Each
closed hyperbolic boundary contributes -chi~/2 and each Euclidean cusp
contributes char_dim/2.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .centralizer import InconsistentDimensions
from .dimension import (
    euclidean_char_dim,
    hitchin_dim,
    sphere_hitchin_pgl,
    twisted_euler_2orbifold,
)
from .lie import LieType
from .orbifold import (
    BoundaryList,
    EuclideanClass,
    disc,
    euclidean_class,
    render_signature,
    sphere,
)

ASSUMPTIONS = (
    "the 3-orbifold with this boundary is hyperbolic (asserted by the caller, not verified)",
    "tau o hol is a good representation and its Euclidean restrictions are strongly regular "
    "(hypotheses of the lower bound, recorded not checked)",
)


@dataclass(frozen=True)
class CanonicalReport:
    total: int
    per_boundary: tuple[tuple[str, int], ...]
    group: LieType
    assumptions: tuple[str, ...] = field(default=ASSUMPTIONS)

    def __post_init__(self):
        if any(h < 0 for _, h in self.per_boundary):
            raise InconsistentDimensions("negative half dimension in canonical report")
        if self.total != sum(h for _, h in self.per_boundary):
            raise AssertionError("CanonicalReport total does not match its parts")

    def as_dict(self) -> dict:
        return {
            "group": str(self.group),
            "dimension": self.total,
            "per_boundary": [[name, h] for name, h in self.per_boundary],
        }


def boundary_char_dim(o, g: LieType) -> int:
    """dim X(boundary component, G) at the principal character."""
    e = euclidean_class(o)
    if e is not None:
        return euclidean_char_dim(e, g)
    return -twisted_euler_2orbifold(o, g)


def canonical_dim(boundary: BoundaryList, g: LieType) -> CanonicalReport:
    parts = []
    for o in boundary:
        full = boundary_char_dim(o, g)
        if full % 2:
            raise InconsistentDimensions(
                f"boundary character variety of {render_signature(o)} in {g} has odd dimension {full}"
            )
        parts.append((render_signature(o), full // 2))
    return CanonicalReport(sum(h for _, h in parts), tuple(parts), g)


def lower_bound_dim(boundary: BoundaryList, g: LieType) -> int:
    """Lower bound for every component through a good representation; same
    right-hand side as :func:`canonical_dim`."""
    return canonical_dim(boundary, g).total


_COINCIDENT = {EuclideanClass.S2222, EuclideanClass.S244, EuclideanClass.S236}


def sl3_psl2_coincidence(boundary: BoundaryList) -> bool:
    """True when every cusp is S2(2,2,2,2), S2(2,4,4) or S2(2,3,6).

    In that case the canonical components for SL(3) and PSL(2) have the same
    dimension, which is asserted.
    """
    classes = [euclidean_class(o) for o in boundary]
    if any(e is None for e in classes):
        raise ValueError("coincidence test needs Euclidean boundary components only")
    if not all(e in _COINCIDENT for e in classes):
        return False
    d3 = canonical_dim(boundary, LieType.psl(3)).total
    d2 = canonical_dim(boundary, LieType.psl(2)).total
    if d3 != d2:
        raise InconsistentDimensions(f"SL(3) and PSL(2) canonical dimensions differ: {d3} != {d2}")
    return True


# Seifert fillings of the figure-eight knot and partial fillings of the
# Whitehead link, with the base orbifolds of the resulting fibrations.
FIG8_BASES = ((3, 3, 4), (2, 4, 5), (2, 3, 7))
WHITEHEAD_BASES = ((3, 3), (2, 4), (2, 3))


def fig8_component_dims(n: int) -> tuple[int, int, int]:
    """Hitchin dimensions in PGL(n) of S2(3,3,4), S2(2,4,5), S2(2,3,7)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return tuple(sphere_hitchin_pgl(orders, n) for orders in FIG8_BASES)


def whitehead_component_dims(n: int) -> tuple[int, int, int]:
    """Hitchin dimensions in PGL(n) of D2(3,3), D2(2,4), D2(2,3), one hole."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return tuple(hitchin_dim(disc(*orders, c=1), LieType.psl(n)).value for orders in WHITEHEAD_BASES)


def fig8_signatures():
    return tuple(sphere(*orders) for orders in FIG8_BASES)
