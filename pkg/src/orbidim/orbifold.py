"""Compact 2-orbifolds: data model, text signatures, Euler characteristic.

A signature records the underlying surface |O| (orientability, genus or
cross-cap count, number of boundary circles) and the singular data living
on it: cone points, corner reflectors, and how each boundary circle of |O|
is used.  A boundary circle of |O| is either genuine orbifold boundary
(``boundary_circles``), entirely mirror (``full_mirror_circles``), or mixed,
alternating mirror arcs and boundary arcs.  Each boundary arc of a mixed
circle is an orbifold-boundary component [[0,1]] with mirror endpoints;
``mirror_intervals`` counts them.

Text syntax (whitespace-insensitive)::

    S2(3,3,4)        sphere with cone points
    T2               torus
    Sg(g=2)          closed orientable surface, optional cone list after it
    Ng(g=1)(3,3)     closed non-orientable surface with g cross-caps
    D2(3,3;c=1)      sphere with c holes and cone points (c defaults to 1)
    T(3,3,4)         reflection triangle; Q(...) quadrilateral, P(...) polygon
    D(3;4)           disc with mirror boundary, cones ; corners
    D(3;4);b=2       same, boundary circle split into b mirror intervals
    O(o=1,g=0,h=1,c=0,m=1,b=0;3;4)   general form, used when no shorthand fits
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable


class OrbifoldError(ValueError):
    pass


class SignatureSyntaxError(OrbifoldError):
    def __init__(self, message: str, offset: int, expected: Iterable[str] = ()):
        self.offset = offset
        self.expected = tuple(expected)
        hint = f"; expected {' or '.join(self.expected)}" if self.expected else ""
        super().__init__(f"{message} at byte {offset}{hint}")


class UnsupportedClassification(OrbifoldError):
    pass


def _orders(values: Iterable[int], what: str) -> tuple[int, ...]:
    out = tuple(sorted(int(v) for v in values))
    for v in out:
        if v < 2:
            raise OrbifoldError(f"{what} order must be >= 2, got {v}")
    return out


@dataclass(frozen=True)
class OrbifoldSignature:
    underlying_orientable: bool = True
    underlying_genus: int = 0
    underlying_boundary_circles: int = 0
    cones: tuple[int, ...] = ()
    corners: tuple[int, ...] = ()  # l_j: corner reflector with stabilizer D_{2 l_j}
    boundary_circles: int = 0
    mirror_intervals: int = 0
    full_mirror_circles: int = 0

    def __post_init__(self):
        object.__setattr__(self, "cones", _orders(self.cones, "cone"))
        object.__setattr__(self, "corners", _orders(self.corners, "corner"))
        for name in ("underlying_genus", "underlying_boundary_circles", "boundary_circles",
                     "mirror_intervals", "full_mirror_circles"):
            if getattr(self, name) < 0:
                raise OrbifoldError(f"{name} must be nonnegative")
        if not self.underlying_orientable and self.underlying_genus < 1:
            raise OrbifoldError("a non-orientable surface needs at least one cross-cap")
        mixed = self.mixed_circles
        if mixed < 0:
            raise OrbifoldError(
                "boundary circles and mirror circles exceed the boundary circles of |O|"
            )
        if mixed > self.mirror_intervals or (mixed == 0) != (self.mirror_intervals == 0):
            raise OrbifoldError(
                f"{mixed} mixed boundary circle(s) cannot carry {self.mirror_intervals} mirror interval(s)"
            )
        if self.corners and self.full_mirror_circles + mixed == 0:
            raise OrbifoldError("corner reflectors need a mirror boundary")

    @property
    def mixed_circles(self) -> int:
        return self.underlying_boundary_circles - self.boundary_circles - self.full_mirror_circles

    @property
    def has_mirrors(self) -> bool:
        return bool(self.full_mirror_circles or self.mirror_intervals)

    @property
    def orientable(self) -> bool:
        return self.underlying_orientable and not self.has_mirrors

    @property
    def closed(self) -> bool:
        return self.boundary_circles == 0 and self.mirror_intervals == 0

    @property
    def underlying_euler(self) -> int:
        """chi(|O|), mirror circles counted as boundary of |O|."""
        g, h = self.underlying_genus, self.underlying_boundary_circles
        return (2 - 2 * g - h) if self.underlying_orientable else (2 - g - h)

    @property
    def euler_char(self) -> Fraction:
        return euler_char(self)

    def __str__(self) -> str:
        return render_signature(self)


def sphere(*cones: int) -> OrbifoldSignature:
    return OrbifoldSignature(cones=cones)


def surface(genus: int, *cones: int) -> OrbifoldSignature:
    return OrbifoldSignature(underlying_genus=genus, cones=cones)


def disc(*cones: int, c: int = 1) -> OrbifoldSignature:
    """Sphere with c holes and the given cone points; D2(k1,k2) for c=1."""
    return OrbifoldSignature(underlying_boundary_circles=c, boundary_circles=c, cones=cones)


def mirror_disc(cones: Iterable[int] = (), corners: Iterable[int] = (), b: int = 0) -> OrbifoldSignature:
    """Disc whose boundary circle is mirror (b=0) or split into b mirror intervals."""
    return OrbifoldSignature(
        underlying_boundary_circles=1,
        cones=tuple(cones),
        corners=tuple(corners),
        mirror_intervals=b,
        full_mirror_circles=0 if b else 1,
    )


def polygon(*corners: int) -> OrbifoldSignature:
    """Reflection group of a polygon with angles pi/l_j."""
    return mirror_disc((), corners)


def euler_char(o: OrbifoldSignature) -> Fraction:
    """Rational orbifold Euler characteristic.

    chi(|O|) - sum(1 - 1/k) - 1/2 sum(1 - 1/l) - b/2; each mirror interval
    carries two mirror endpoints of weight 1/2 more than its half-edge.
    """
    chi = Fraction(o.underlying_euler)
    chi -= sum(1 - Fraction(1, k) for k in o.cones)
    chi -= Fraction(1, 2) * sum(1 - Fraction(1, l) for l in o.corners)
    chi -= Fraction(o.mirror_intervals, 2)
    return chi


class Geometry(enum.Enum):
    SPHERICAL = "Spherical"
    EUCLIDEAN = "Euclidean"
    HYPERBOLIC = "Hyperbolic"
    BAD = "Bad"


def _is_mirror_disc(o: OrbifoldSignature) -> bool:
    return (o.underlying_orientable and o.underlying_genus == 0
            and o.underlying_boundary_circles == 1 and o.full_mirror_circles == 1)


def is_bad(o: OrbifoldSignature) -> bool:
    """Teardrops, unequal spindles, and their mirror quotients."""
    if o.orientable and o.underlying_genus == 0 and o.underlying_boundary_circles == 0:
        return len(o.cones) == 1 or (len(o.cones) == 2 and o.cones[0] != o.cones[1])
    if _is_mirror_disc(o) and not o.cones:
        return len(o.corners) == 1 or (len(o.corners) == 2 and o.corners[0] != o.corners[1])
    return False


def classify_geometry(o: OrbifoldSignature) -> Geometry:
    if not o.closed:
        raise UnsupportedClassification(f"{render_signature(o)} has boundary; classification needs a closed orbifold")
    if is_bad(o):
        return Geometry.BAD
    chi = euler_char(o)
    if chi > 0:
        return Geometry.SPHERICAL
    if chi == 0:
        return Geometry.EUCLIDEAN
    return Geometry.HYPERBOLIC


def orientation_double(o: OrbifoldSignature) -> OrbifoldSignature:
    """Orientable double cover of a disc with mirror boundary.

    Corners of order 2l become cones of order l, cones are doubled, and
    each mirror interval's boundary arc doubles to a boundary circle.
    """
    if o.orientable:
        raise OrbifoldError(f"{render_signature(o)} is already orientable")
    supported = (o.underlying_orientable and o.underlying_genus == 0
                 and o.underlying_boundary_circles == 1 and o.boundary_circles == 0)
    if not supported:
        raise NotImplementedError(
            "orientation_double is implemented for discs with mirror boundary only, "
            f"not {render_signature(o)}"
        )
    b = o.mirror_intervals
    return OrbifoldSignature(
        underlying_boundary_circles=b,
        boundary_circles=b,
        cones=o.cones + o.cones + o.corners,
    )


class EuclideanClass(enum.Enum):
    """The five closed orientable Euclidean 2-orbifolds; k = |Gamma/Gamma_0|."""

    T2 = (1, ())
    S2222 = (2, (2, 2, 2, 2))
    S333 = (3, (3, 3, 3))
    S244 = (4, (2, 4, 4))
    S236 = (6, (2, 3, 6))

    @property
    def k(self) -> int:
        return self.value[0]

    @property
    def cone_orders(self) -> tuple[int, ...]:
        return self.value[1]

    @property
    def signature(self) -> OrbifoldSignature:
        if self is EuclideanClass.T2:
            return surface(1)
        return sphere(*self.cone_orders)

    @property
    def label(self) -> str:
        return render_signature(self.signature)


def euclidean_class(o: OrbifoldSignature) -> EuclideanClass | None:
    for e in EuclideanClass:
        if e.signature == o:
            return e
    return None


# ---------------------------------------------------------------- rendering

def _join(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)


def render_signature(o: OrbifoldSignature) -> str:
    cones, corners = _join(o.cones), _join(o.corners)
    if o.underlying_orientable and not o.has_mirrors and not o.corners:
        g, h = o.underlying_genus, o.underlying_boundary_circles
        if h == 0:
            if g == 0:
                return f"S2({cones})" if o.cones else "S2"
            if g == 1 and not o.cones:
                return "T2"
            return f"Sg(g={g})" + (f"({cones})" if o.cones else "")
        if g == 0 and o.boundary_circles == h:
            return f"D2({cones})" if h == 1 else f"D2({cones};c={h})"
    if (not o.underlying_orientable and o.underlying_boundary_circles == 0):
        return f"Ng(g={o.underlying_genus})" + (f"({cones})" if o.cones else "")
    if (o.underlying_orientable and o.underlying_genus == 0 and o.underlying_boundary_circles == 1
            and o.boundary_circles == 0):
        if o.mirror_intervals:
            return f"D({cones};{corners});b={o.mirror_intervals}"
        if not o.cones and len(o.corners) == 3:
            return f"T({corners})"
        if not o.cones and len(o.corners) == 4:
            return f"Q({corners})"
        if not o.cones and len(o.corners) >= 1:
            return f"P({corners})"
        return f"D({cones};{corners})"
    return (
        f"O(o={int(o.underlying_orientable)},g={o.underlying_genus},h={o.underlying_boundary_circles},"
        f"c={o.boundary_circles},m={o.full_mirror_circles},b={o.mirror_intervals};{cones};{corners})"
    )


# ------------------------------------------------------------------ parsing

class _Parser:
    def __init__(self, text: str):
        chars, offsets = [], []
        pos = 0
        for ch in text:
            if not ch.isspace():
                chars.append(ch.upper())
                offsets.append(pos)
            pos += len(ch.encode("utf-8"))
        self.s = "".join(chars)
        self.offsets = offsets + [pos]
        self.i = 0

    def error(self, message: str, expected: Iterable[str] = ()) -> SignatureSyntaxError:
        return SignatureSyntaxError(message, self.offsets[self.i], expected)

    def peek(self, token: str) -> bool:
        return self.s.startswith(token, self.i)

    def accept(self, token: str) -> bool:
        if self.peek(token):
            self.i += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            found = self.s[self.i:self.i + 1] or "end of input"
            raise self.error(f"unexpected {found!r}", [repr(token)])

    def at_end(self) -> bool:
        return self.i == len(self.s)

    def integer(self) -> int:
        j = self.i
        while j < len(self.s) and self.s[j].isdigit():
            j += 1
        if j == self.i:
            found = self.s[self.i:self.i + 1] or "end of input"
            raise self.error(f"unexpected {found!r}", ["integer"])
        value = int(self.s[self.i:j])
        self.i = j
        return value

    def orders(self, allow_empty: bool) -> list[int]:
        if allow_empty and (self.peek(")") or self.peek(";")):
            return []
        out = [self.order()]
        while self.accept(","):
            out.append(self.order())
        return out

    def order(self) -> int:
        start = self.i
        value = self.integer()
        if value < 2:
            self.i = start
            raise self.error(f"order {value} is less than 2", ["integer >= 2"])
        return value

    def keyword(self, name: str) -> int:
        self.expect(name)
        self.expect("=")
        return self.integer()

    def parse(self) -> OrbifoldSignature:
        starts = ["S2", "T2", "SG(", "NG(", "D2(", "T(", "Q(", "P(", "D(", "O("]
        if self.accept("S2"):
            cones = []
            if self.accept("("):
                cones = self.orders(allow_empty=True)
                self.expect(")")
            sig = sphere(*cones)
        elif self.accept("T2"):
            sig = surface(1)
        elif self.accept("SG("):
            g = self.keyword("G")
            self.expect(")")
            sig = OrbifoldSignature(underlying_genus=g, cones=self.optional_orders())
        elif self.accept("NG("):
            g = self.keyword("G")
            if g < 1:
                raise self.error("non-orientable genus must be >= 1")
            self.expect(")")
            sig = OrbifoldSignature(underlying_orientable=False, underlying_genus=g,
                                    cones=self.optional_orders())
        elif self.accept("D2("):
            cones = self.orders(allow_empty=True)
            c = 1
            if self.accept(";"):
                c = self.keyword("C")
            self.expect(")")
            sig = disc(*cones, c=c)
        elif self.peek("T(") or self.peek("Q(") or self.peek("P("):
            head = self.s[self.i]
            self.i += 2
            start = self.i
            corners = self.orders(allow_empty=False)
            need = {"T": 3, "Q": 4}.get(head)
            if need is not None and len(corners) != need:
                self.i = start
                raise self.error(f"{head}(...) takes {need} corner orders, got {len(corners)}")
            self.expect(")")
            sig = polygon(*corners)
        elif self.accept("D("):
            cones = self.orders(allow_empty=True)
            self.expect(";")
            corners = self.orders(allow_empty=True)
            b = 0
            if self.accept(";"):
                b = self.keyword("B")
                self.expect(")")
            else:
                self.expect(")")
                if self.accept(";"):
                    b = self.keyword("B")
            sig = self.build(lambda: mirror_disc(cones, corners, b))
        elif self.accept("O("):
            sig = self.general()
        else:
            raise self.error("unknown signature", [repr(t) for t in starts])
        if not self.at_end():
            raise self.error("trailing input", ["end of input"])
        return sig

    def optional_orders(self) -> list[int]:
        if self.accept("("):
            out = self.orders(allow_empty=True)
            self.expect(")")
            return out
        return []

    def general(self) -> OrbifoldSignature:
        values = {"O": 1, "G": 0, "H": 0, "C": 0, "M": 0, "B": 0}
        seen = set()
        while not self.peek(";"):
            for key in values:
                if self.peek(key + "="):
                    if key in seen:
                        raise self.error(f"duplicate key {key.lower()}")
                    seen.add(key)
                    values[key] = self.keyword(key)
                    break
            else:
                raise self.error("unknown key", ["o=", "g=", "h=", "c=", "m=", "b=", "';'"])
            if not self.accept(","):
                break
        self.expect(";")
        cones = self.orders(allow_empty=True)
        self.expect(";")
        corners = self.orders(allow_empty=True)
        self.expect(")")
        return self.build(lambda: OrbifoldSignature(
            underlying_orientable=bool(values["O"]),
            underlying_genus=values["G"],
            underlying_boundary_circles=values["H"],
            cones=cones,
            corners=corners,
            boundary_circles=values["C"],
            mirror_intervals=values["B"],
            full_mirror_circles=values["M"],
        ))

    def build(self, make):
        try:
            return make()
        except SignatureSyntaxError:
            raise
        except OrbifoldError as exc:
            raise SignatureSyntaxError(str(exc), self.offsets[0]) from None


def parse_signature(text: str) -> OrbifoldSignature:
    return _Parser(text).parse()


# --------------------------------------------------------- 3-orbifold boundary

@dataclass(frozen=True)
class BoundaryList:
    """Boundary components of a compact orientable 3-orbifold.

    Each entry is closed and orientable, and either hyperbolic or one of
    the five Euclidean orbifolds.
    """

    components: tuple[OrbifoldSignature, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise OrbifoldError("boundary list is empty")
        for o in self.components:
            name = render_signature(o)
            if not (o.closed and o.orientable):
                raise OrbifoldError(f"boundary component {name} must be closed and orientable")
            geom = classify_geometry(o)
            if geom is Geometry.EUCLIDEAN and euclidean_class(o) is None:
                raise OrbifoldError(f"{name} is Euclidean but not one of the five orientable classes")
            if geom not in (Geometry.EUCLIDEAN, Geometry.HYPERBOLIC):
                raise OrbifoldError(f"boundary component {name} is {geom.value.lower()}")

    @classmethod
    def parse(cls, texts: Iterable[str]) -> BoundaryList:
        return cls(tuple(parse_signature(t) for t in texts))

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

