"""Twisted Euler characteristics and dimension formulas for 2-orbifolds.

All evaluations are at the principal point tau o hol, where the stabilizer
dimensions come from :mod:`orbidim.centralizer`.  Dimensions are complex
dimensions of character varieties, equivalently real dimensions of Hitchin
components.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .centralizer import (
    InconsistentDimensions,
    StabKind,
    principal_interval_dims,
    stab_dim,
    stab_dim_cyclic,
    stab_dim_dihedral,
)
from .lie import Family, LieType, sigma
from .orbifold import (
    EuclideanClass,
    Geometry,
    OrbifoldSignature,
    classify_geometry,
    euler_char,
    is_bad,
    render_signature,
)


class GeometryError(ValueError):
    pass


# ------------------------------------------------------------------ CW route

Cell = tuple[int, int]  # (cell dimension, dim g^{Stab})


def twisted_euler_cw(cells: Iterable[Cell]) -> int:
    """Signed sum of stabilizer invariant dimensions over cells."""
    return sum((-1) ** d * s for d, s in cells)


def cell_structure(o: OrbifoldSignature) -> list[tuple[int, StabKind | None]]:
    """An explicit CW structure on |O| adapted to the singular locus.

    Returns (cell dimension, stabilizer) pairs, None for a trivial
    stabilizer.  Built from a one-vertex skeleton of the closed surface:
    one base vertex, the handle (or cross-cap) loops and one 2-cell, then
    for each cone point and each boundary circle a vertex joined to the base
    vertex by an arc.  Boundary circles are subdivided at corners and at the
    endpoints of mirror intervals.  Every corner sits on the first mirror
    component, which does not change any count.
    """
    cells: list[tuple[int, StabKind | None]] = [(0, None), (2, None)]
    loops = 2 * o.underlying_genus if o.underlying_orientable else o.underlying_genus
    cells += [(1, None)] * loops
    for k in o.cones:
        cells += [(0, StabKind.cyclic(k)), (1, None)]

    corners = list(o.corners)
    refl = StabKind.reflection()
    for _ in range(o.boundary_circles):
        cells += [(1, None), (0, None), (1, None)]  # connector, vertex, circle
    for _ in range(o.full_mirror_circles):
        cells.append((1, None))
        if corners:
            cells += [(0, StabKind.dihedral(l)) for l in corners]
            cells += [(1, refl)] * len(corners)
            corners = []
        else:
            cells += [(0, refl), (1, refl)]
    mixed = o.mixed_circles
    for i in range(mixed):
        arcs = o.mirror_intervals - (mixed - 1) if i == 0 else 1
        cells.append((1, None))
        for _ in range(arcs):
            # mirror arc with its two endpoints' worth of vertices, then the free arc
            cells += [(0, refl), (0, refl), (1, None), (1, refl)]
            if corners:
                cells += [(0, StabKind.dihedral(l)) for l in corners]
                cells += [(1, refl)] * len(corners)
                corners = []
    assert not corners
    return cells


def cells_for(o: OrbifoldSignature, g: LieType) -> list[Cell]:
    return [(d, g.dim if s is None else stab_dim(g, s)) for d, s in cell_structure(o)]


def euler_char_cw(o: OrbifoldSignature) -> Fraction:
    """Orbifold Euler characteristic summed over cells, 1/|Stab| per cell."""
    return sum(
        (Fraction((-1) ** d, 1 if s is None else s.order) for d, s in cell_structure(o)),
        Fraction(0),
    )


# ---------------------------------------------------------- closed-form route

def nonsingular_euler(o: OrbifoldSignature) -> int:
    """chi(O minus singular locus) = chi(|O|) - cp - b."""
    return o.underlying_euler - len(o.cones) - o.mirror_intervals


def mirror_excess(o: OrbifoldSignature) -> int:
    """(mirror edges) - (mirror points on the boundary) = cr - b."""
    return len(o.corners) - o.mirror_intervals


def twisted_euler_2orbifold(o: OrbifoldSignature, g: LieType) -> int:
    """chi~(O, Ad tau o hol) for a non-spherical 2-orbifold.

    Cones and corners are 0-cells and enter positively; mirror edges are
    1-cells with a reflection stabilizer and enter negatively.
    """
    if euler_char(o) > 0:
        raise GeometryError(f"{render_signature(o)} is spherical; use the spherical identity")
    return (
        nonsingular_euler(o) * g.dim
        + sum(stab_dim_cyclic(g, k) for k in o.cones)
        + sum(stab_dim_dihedral(g, l) for l in o.corners)
        - mirror_excess(o) * stab_dim_dihedral(g, 1)
    )


def check_spherical(chi_tilde: int, invariant_dim: int) -> None:
    """Spherical 2-orbifolds have chi~ = 2 dim g^{rho(pi_1)}."""
    if chi_tilde != 2 * invariant_dim:
        raise InconsistentDimensions(
            f"spherical data violates chi~ = 2 dim g^Gamma: {chi_tilde} != 2*{invariant_dim}"
        )


# ------------------------------------------------------------------- Hitchin

@dataclass(frozen=True)
class DimReport:
    value: int
    trace: tuple[tuple[str, int], ...]
    group: LieType
    orbifold: OrbifoldSignature

    def __post_init__(self):
        if self.value != sum(v for _, v in self.trace):
            raise AssertionError("DimReport value does not match its trace")

    def as_dict(self) -> dict:
        return {
            "orbifold": render_signature(self.orbifold),
            "group": str(self.group),
            "dimension": self.value,
            "trace": [[label, v] for label, v in self.trace],
        }


def require_hyperbolic(o: OrbifoldSignature) -> None:
    if o.closed:
        geom = classify_geometry(o)
        if geom is not Geometry.HYPERBOLIC:
            raise GeometryError(f"{render_signature(o)} is {geom.value.lower()}, not hyperbolic")
    elif is_bad(o) or euler_char(o) >= 0:
        raise GeometryError(f"{render_signature(o)} has chi = {euler_char(o)} >= 0, not hyperbolic")


def hitchin_dim(o: OrbifoldSignature, g: LieType) -> DimReport:
    """Dimension of Hit(O, G_R) from the exponents of G."""
    require_hyperbolic(o)
    ex = g.exponents
    trace = [("-chi(|O|)*dim G", -o.underlying_euler * g.dim)]
    for k in o.cones:
        trace.append((f"cone C_{k}", sum(2 * (d - d // k) for d in ex)))
    for l in o.corners:
        trace.append((f"corner D_{2 * l}", sum(d - d // l for d in ex)))
    if o.mirror_intervals:
        trace.append((f"mirror intervals x{o.mirror_intervals}",
                      o.mirror_intervals * sum(2 * ((d + 1) // 2) for d in ex)))
    return DimReport(sum(v for _, v in trace), tuple(trace), g, o)


def hitchin_dim_pgl_closed_form(o: OrbifoldSignature, n: int) -> int:
    """Hitchin dimension in PGL(n, R) through sigma(n, k)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    require_hyperbolic(o)
    twice = (
        -2 * (n * n - 1) * o.underlying_euler
        + 2 * sum(n * n - sigma(n, k) for k in o.cones)
        + sum(n * n - sigma(n, l) for l in o.corners)
        + 2 * o.mirror_intervals * (n * n // 2)
    )
    assert twice % 2 == 0
    return twice // 2


def sphere_hitchin_pgl(orders: Sequence[int], n: int) -> int:
    """n^2 (cp - 2) + 2 - sum sigma(n, k_i) for a sphere with cone points."""
    return n * n * (len(orders) - 2) + 2 - sum(sigma(n, k) for k in orders)


# ----------------------------------------------------------------- Euclidean

def euclidean_invariant_dim(e: EuclideanClass, g: LieType) -> int:
    """dim g^{rho(Gamma)} at a horospherical cusp: exponents divisible by k."""
    return sum(1 for d in g.exponents if d % e.k == 0)


def euclidean_twisted_euler(e: EuclideanClass, g: LieType) -> int:
    return twisted_euler_2orbifold(e.signature, g)


def euclidean_char_dim(e: EuclideanClass, g: LieType) -> int:
    return -euclidean_twisted_euler(e, g) + 2 * euclidean_invariant_dim(e, g)


def rep_variety_dim_euclidean(e: EuclideanClass, g: LieType) -> int:
    return -euclidean_twisted_euler(e, g) + g.dim + euclidean_invariant_dim(e, g)


# ------------------------------------------------------------------ relative

def relative_dim(o: OrbifoldSignature, g: LieType) -> int:
    """Dimension of the relative character variety, boundary holonomy fixed.

    -chi~ - (c + b/2) rank + chi~(boundary)/2; boundary circles contribute
    nothing to chi~(boundary), each mirror interval contributes its
    D_infinity Euler characteristic.
    """
    require_hyperbolic(o)
    chi = twisted_euler_2orbifold(o, g)
    interval_chi = principal_interval_dims(g)[0]
    c, b = o.boundary_circles, o.mirror_intervals
    twice = -2 * chi - (2 * c + b) * g.rank + b * interval_chi
    if twice % 2:
        raise InconsistentDimensions(
            f"relative dimension of {render_signature(o)} in {g} is not an integer ({twice}/2)"
        )
    return twice // 2


# -------------------------------------------------------------------- growth

def growth_period(o: OrbifoldSignature) -> int:
    """A period of the growth defect in n: lcm of k_i, 2 l_j and 2."""
    return lcm(2, *o.cones, *(2 * l for l in o.corners))


def growth_defect(o: OrbifoldSignature, n: int) -> Fraction:
    """dim Hit(O, PGL(n)) + chi(O) (n^2 - 1); bounded and periodic in n."""
    return hitchin_dim(o, LieType.psl(n)).value + euler_char(o) * (n * n - 1)


def psp_correction(o: OrbifoldSignature) -> Fraction:
    """Coefficient of m in the linear drift of the PSp Hitchin dimension."""
    return (
        sum(Fraction(1, k) for k in o.cones if k % 2 == 0)
        + sum(Fraction(1, 2 * l) for l in o.corners if l % 2 == 0)
        + Fraction(o.mirror_intervals, 2)
    )


def growth_defect_psp(o: OrbifoldSignature, m: int) -> Fraction:
    """dim Hit(O, PSp(2m)) + chi(O) dim G - correction * m; periodic in m."""
    g = LieType(Family.PSP, m)
    return hitchin_dim(o, g).value + euler_char(o) * g.dim - psp_correction(o) * m
