"""Simple complex adjoint Lie groups, described by their exponents.

Everything downstream (centralizer dimensions, Hitchin dimensions, Euclidean
character varieties) only needs the exponents d_1..d_r of the Lie algebra,
i.e. the integers with  Ad o tau = (+)_a Sym^{2 d_a}  for the principal
PSL(2) -> G.  All arithmetic here is on Python ints.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property


class InvalidLieType(ValueError):
    pass


class Family(enum.Enum):
    PSL = "PSL"
    PSP = "PSp"
    PO_ODD = "POodd"
    PO_EVEN = "POeven"
    G2 = "G2"
    F4 = "F4"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"

    @property
    def exceptional(self) -> bool:
        return self in _EXCEPTIONAL_EXPONENTS


_EXCEPTIONAL_EXPONENTS = {
    Family.G2: (1, 5),
    Family.F4: (1, 5, 7, 11),
    Family.E6: (1, 4, 5, 7, 8, 11),
    Family.E7: (1, 5, 7, 9, 11, 13, 17),
    Family.E8: (1, 7, 11, 13, 17, 19, 23, 29),
}

# smallest admissible parameter (n for PSL, m otherwise)
_MIN_PARAM = {
    Family.PSL: 2,
    Family.PSP: 1,
    Family.PO_ODD: 1,
    Family.PO_EVEN: 3,  # so(4) is not simple
}


@dataclass(frozen=True)
class LieType:
    """A simple adjoint group: a family plus n (PSL) or m (PSp, PO)."""

    family: Family
    param: int | None = None

    def __post_init__(self):
        if self.family.exceptional:
            if self.param is not None:
                raise InvalidLieType(f"{self.family.value} takes no parameter")
            return
        if self.param is None:
            raise InvalidLieType(f"{self.family.value} needs a parameter")
        if not isinstance(self.param, int) or self.param < _MIN_PARAM[self.family]:
            raise InvalidLieType(
                f"{self.family.value} parameter must be >= {_MIN_PARAM[self.family]}, got {self.param}"
            )

    @classmethod
    def psl(cls, n: int) -> LieType:
        return cls(Family.PSL, n)

    @classmethod
    def psp(cls, m: int) -> LieType:
        """PSp(2m)."""
        return cls(Family.PSP, m)

    @classmethod
    def po_odd(cls, m: int) -> LieType:
        """PO(2m+1)."""
        return cls(Family.PO_ODD, m)

    @classmethod
    def po_even(cls, m: int) -> LieType:
        """PO(2m)."""
        return cls(Family.PO_EVEN, m)

    @cached_property
    def exponents(self) -> tuple[int, ...]:
        fam, p = self.family, self.param
        if fam.exceptional:
            return _EXCEPTIONAL_EXPONENTS[fam]
        if fam is Family.PSL:
            return tuple(range(1, p))
        if fam in (Family.PSP, Family.PO_ODD):
            return tuple(range(1, 2 * p, 2))
        return tuple(range(1, 2 * p - 2, 2)) + (p - 1,)

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @property
    def dim(self) -> int:
        return sum(2 * d + 1 for d in self.exponents)

    @property
    def matrix_size(self) -> int | None:
        """Size of the defining representation for classical families."""
        fam, p = self.family, self.param
        if fam is Family.PSL:
            return p
        if fam in (Family.PSP, Family.PO_EVEN):
            return 2 * p
        if fam is Family.PO_ODD:
            return 2 * p + 1
        return None

    def __str__(self) -> str:
        fam = self.family
        if fam.exceptional:
            return fam.value
        if fam is Family.PSL:
            return f"PSL({self.param})"
        if fam is Family.PSP:
            return f"PSp({2 * self.param})"
        return f"PO({self.matrix_size})"


def exponents(g: LieType) -> tuple[int, ...]:
    return g.exponents


def dim(g: LieType) -> int:
    return g.dim


def rank(g: LieType) -> int:
    return g.rank


def sigma(n: int, k: int) -> int:
    """q*n + (q+1)*r where n = q*k + r; sigma(n,k) - 1 is the centralizer
    dimension of an order-k principal elliptic in PGL(n)."""
    if k < 1 or n < 1:
        raise ValueError(f"sigma needs n, k >= 1, got n={n}, k={k}")
    q, r = divmod(n, k)
    return q * n + (q + 1) * r


_LIE_RE = re.compile(r"^(PGL|PSL|SL|PSP|SP|PO|SO|G2|F4|E6|E7|E8)(?:\((\d+)\))?$")


def parse_lie_type(text: str) -> LieType:
    """Parse `PSL(7)`, `PSp(10)`, `PO(9)`, `PO(8)`, `E8`, ...

    Case-insensitive and whitespace-insensitive.  SL/PGL are accepted for
    PSL, Sp for PSp and SO for PO since only the Lie algebra matters.
    """
    s = re.sub(r"\s+", "", text).upper()
    mt = _LIE_RE.match(s)
    if mt is None:
        raise InvalidLieType(f"cannot parse Lie type {text!r}")
    head, arg = mt.group(1), mt.group(2)
    if head in ("G2", "F4", "E6", "E7", "E8"):
        if arg is not None:
            raise InvalidLieType(f"{head} takes no parameter")
        return LieType(Family(head))
    if arg is None:
        raise InvalidLieType(f"{head} needs a parameter, e.g. {head}(3)")
    n = int(arg)
    if head in ("PGL", "PSL", "SL"):
        return LieType.psl(n)
    if head in ("PSP", "SP"):
        if n % 2:
            raise InvalidLieType(f"symplectic groups need even size, got {n}")
        return LieType.psp(n // 2)
    if n % 2:
        return LieType.po_odd((n - 1) // 2)
    return LieType.po_even(n // 2)


def catalog(max_param: int) -> list[LieType]:
    """Every supported group with classical parameter up to max_param."""
    out = [LieType(f) for f in _EXCEPTIONAL_EXPONENTS]
    for fam, lo in _MIN_PARAM.items():
        out.extend(LieType(fam, p) for p in range(lo, max_param + 1))
    return out
