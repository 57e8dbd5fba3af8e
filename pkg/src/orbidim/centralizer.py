"""Dimensions of fixed subalgebras g^{rho(H)} at the principal representation.

Only the principal composition tau o hol is modelled: a cyclic stabilizer of
order k maps to the image of a rotation of angle 2 pi / k, a dihedral one to
the corresponding dihedral group.  The answers depend only on the exponents.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .lie import LieType


class InconsistentDimensions(ValueError):
    """Raised when half-sums that must be integers are not."""


class StabType(enum.Enum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"  # order 2k
    REFLECTION = "reflection"  # dihedral of order 2, i.e. k = 1


@dataclass(frozen=True)
class StabKind:
    kind: StabType
    k: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"stabilizer order parameter must be >= 1, got {self.k}")
        if self.kind is StabType.REFLECTION and self.k != 1:
            raise ValueError("a reflection stabilizer has k = 1")

    @classmethod
    def cyclic(cls, k: int) -> StabKind:
        return cls(StabType.CYCLIC, k)

    @classmethod
    def dihedral(cls, k: int) -> StabKind:
        return cls(StabType.DIHEDRAL, k)

    @classmethod
    def reflection(cls) -> StabKind:
        return cls(StabType.REFLECTION, 1)

    @property
    def order(self) -> int:
        return self.k if self.kind is StabType.CYCLIC else 2 * self.k


def stab_dim_cyclic(g: LieType, k: int) -> int:
    """dim g^{C_k}: each Sym^{2d} summand contributes 2*floor(d/k) + 1."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return sum(2 * (d // k) + 1 for d in g.exponents)


def stab_dim_dihedral(g: LieType, k: int) -> int:
    """dim g^{D_{2k}}; k = 1 is a single reflection (mirror point)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return sum(d // k for d in g.exponents) + sum(1 for d in g.exponents if d % 2 == 0)


def stab_dim(g: LieType, stab: StabKind) -> int:
    if stab.kind is StabType.CYCLIC:
        return stab_dim_cyclic(g, stab.k)
    return stab_dim_dihedral(g, stab.k)


def _half(total: int, what: str) -> int:
    if total % 2 or total < 0:
        raise InconsistentDimensions(f"{what} = {total}/2 is not a nonnegative integer")
    return total // 2


def corner_center(dim_ck: int, dim_s1: int, dim_s2: int, dim_g: int) -> int:
    """Invariants of a corner stabilizer from its rotation subgroup and the
    two adjacent mirror reflections."""
    return _half(dim_ck + dim_s1 + dim_s2 - dim_g, "corner centralizer dimension")


def dinfty_dims(dim_s1: int, dim_s2: int, dim_prod: int, dim_g: int) -> tuple[int, int, int]:
    """(chi~, h^0, h^1) of the mirrored interval [[0,1]] = R / D_infinity.

    dim_s1, dim_s2 are the fixed dimensions of the two reflections and
    dim_prod that of their product.
    """
    chi = dim_s1 + dim_s2 - dim_g
    h0 = _half(dim_prod + dim_s1 + dim_s2 - dim_g, "h^0")
    h1 = _half(dim_prod - dim_s1 - dim_s2 + dim_g, "h^1")
    return chi, h0, h1


def principal_interval_dims(g: LieType) -> tuple[int, int, int]:
    """dinfty_dims at the principal representation of a mirror interval.

    Both reflections have the mirror-point dimension and their product is
    hyperbolic, hence regular, with centralizer of dimension rank(g).
    """
    refl = stab_dim_dihedral(g, 1)
    return dinfty_dims(refl, refl, g.rank, g.dim)
