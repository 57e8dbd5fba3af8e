"""The polynomials P and Q of the Lawton hypersurface.

Coordinates on X(F_2, SL(3, C))::

    x = tr A      y = tr B      z = tr AB        r = tr AB^-1     tau = tr [A, B]
    u = tr A^-1   v = tr B^-1   w = tr (AB)^-1   s = tr A^-1 B

The character variety is the hypersurface tau^2 - P tau + Q = 0.  P and Q
are stored twice: as display text and as integer monomial lists.  The test
suite checks the two against each other.
"""
from __future__ import annotations

VARIABLES = ("x", "y", "z", "u", "v", "w", "r", "s")

P_TEXT = "x*u*y*v - u*y*r - x*v*s - u*v*z - x*y*w + r*s + x*u + y*v + z*w - 3"
Q_TEXT = (
    "v*u^2*x^2*y + u*v^2*y^2*x - r*y*x*u^2 - u*x*v*r*w - r*y^2*v*u + r*x^2*v^2 - r*z*y*x*v"
    " + s*u^2*y^2 - s*w*v*u*y - s*v*u*x^2"
    " - u*x*y*s*z - s*v^2*y*x - u^3*v*y + u^2*v^2*w - z*u^2*x*v - u*v^3*x - z*v^2*y*u"
    " - w*x^2*u*y - u*y^3*x - w*y^2*v*x"
    " - x^3*v*y + x^2*y^2*z + u*w*r^2 - 2*r^2*x*v + r^2*z*y + s*u*r*x + s*v*r*y + w*s*z*r"
    " + r*z*u^2 + r*u*v^2 + r*v*z^2"
    " + x*r*w^2 + r*w*y^2 + x^2*y*r - 2*s^2*u*y + s^2*w*v + x*z*s^2 + u^2*v*s + u*s*z^2"
    " + s*z*v^2 + s*y*w^2 + s*w*x^2"
    " + s*x*y^2 + u^2*w*y - 2*w^2*v*u + x*u*y*v + w*u*z*x + u*y^2*z + x*v^2*w + w*v*z*y"
    " + x^2*z*v - 2*z^2*y*x"
    " + r^3 + 3*u*y*r - 3*r*v*w - 3*r*z*x + s^3 - 3*s*w*u + 3*x*v*s - 3*s*y*z + u^3"
    " + 3*u*v*z + v^3 + w^3"
    " + 3*x*y*w + x^3 + y^3 + z^3 - 6*r*s - 6*x*u - 6*y*v - 6*z*w + 9"
)

# (coefficient, exponents of x, y, z, u, v, w, r, s)
P_TERMS: tuple[tuple[int, tuple[int, ...]], ...] = (
    (1, (1, 1, 0, 1, 1, 0, 0, 0)),
    (-1, (1, 1, 0, 0, 0, 1, 0, 0)),
    (-1, (1, 0, 0, 0, 1, 0, 0, 1)),
    (-1, (0, 1, 0, 1, 0, 0, 1, 0)),
    (-1, (0, 0, 1, 1, 1, 0, 0, 0)),
    (1, (1, 0, 0, 1, 0, 0, 0, 0)),
    (1, (0, 1, 0, 0, 1, 0, 0, 0)),
    (1, (0, 0, 1, 0, 0, 1, 0, 0)),
    (1, (0, 0, 0, 0, 0, 0, 1, 1)),
    (-3, (0, 0, 0, 0, 0, 0, 0, 0)),
)

Q_TERMS: tuple[tuple[int, tuple[int, ...]], ...] = (
    (1, (2, 1, 0, 2, 1, 0, 0, 0)),
    (1, (1, 2, 0, 1, 2, 0, 0, 0)),
    (-1, (3, 1, 0, 0, 1, 0, 0, 0)),
    (1, (2, 2, 1, 0, 0, 0, 0, 0)),
    (-1, (2, 1, 0, 1, 0, 1, 0, 0)),
    (-1, (2, 0, 0, 1, 1, 0, 0, 1)),
    (1, (2, 0, 0, 0, 2, 0, 1, 0)),
    (-1, (1, 3, 0, 1, 0, 0, 0, 0)),
    (-1, (1, 2, 0, 0, 1, 1, 0, 0)),
    (-1, (1, 1, 1, 1, 0, 0, 0, 1)),
    (-1, (1, 1, 1, 0, 1, 0, 1, 0)),
    (-1, (1, 1, 0, 2, 0, 0, 1, 0)),
    (-1, (1, 1, 0, 0, 2, 0, 0, 1)),
    (-1, (1, 0, 1, 2, 1, 0, 0, 0)),
    (-1, (1, 0, 0, 1, 3, 0, 0, 0)),
    (-1, (1, 0, 0, 1, 1, 1, 1, 0)),
    (1, (0, 2, 0, 2, 0, 0, 0, 1)),
    (-1, (0, 2, 0, 1, 1, 0, 1, 0)),
    (-1, (0, 1, 1, 1, 2, 0, 0, 0)),
    (-1, (0, 1, 0, 3, 1, 0, 0, 0)),
    (-1, (0, 1, 0, 1, 1, 1, 0, 1)),
    (1, (0, 0, 0, 2, 2, 1, 0, 0)),
    (1, (2, 1, 0, 0, 0, 0, 1, 0)),
    (1, (2, 0, 1, 0, 1, 0, 0, 0)),
    (1, (2, 0, 0, 0, 0, 1, 0, 1)),
    (1, (1, 2, 0, 0, 0, 0, 0, 1)),
    (-2, (1, 1, 2, 0, 0, 0, 0, 0)),
    (1, (1, 1, 0, 1, 1, 0, 0, 0)),
    (1, (1, 0, 1, 1, 0, 1, 0, 0)),
    (1, (1, 0, 1, 0, 0, 0, 0, 2)),
    (1, (1, 0, 0, 1, 0, 0, 1, 1)),
    (1, (1, 0, 0, 0, 2, 1, 0, 0)),
    (-2, (1, 0, 0, 0, 1, 0, 2, 0)),
    (1, (1, 0, 0, 0, 0, 2, 1, 0)),
    (1, (0, 2, 1, 1, 0, 0, 0, 0)),
    (1, (0, 2, 0, 0, 0, 1, 1, 0)),
    (1, (0, 1, 1, 0, 1, 1, 0, 0)),
    (1, (0, 1, 1, 0, 0, 0, 2, 0)),
    (1, (0, 1, 0, 2, 0, 1, 0, 0)),
    (-2, (0, 1, 0, 1, 0, 0, 0, 2)),
    (1, (0, 1, 0, 0, 1, 0, 1, 1)),
    (1, (0, 1, 0, 0, 0, 2, 0, 1)),
    (1, (0, 0, 2, 1, 0, 0, 0, 1)),
    (1, (0, 0, 2, 0, 1, 0, 1, 0)),
    (1, (0, 0, 1, 2, 0, 0, 1, 0)),
    (1, (0, 0, 1, 0, 2, 0, 0, 1)),
    (1, (0, 0, 1, 0, 0, 1, 1, 1)),
    (1, (0, 0, 0, 2, 1, 0, 0, 1)),
    (1, (0, 0, 0, 1, 2, 0, 1, 0)),
    (-2, (0, 0, 0, 1, 1, 2, 0, 0)),
    (1, (0, 0, 0, 1, 0, 1, 2, 0)),
    (1, (0, 0, 0, 0, 1, 1, 0, 2)),
    (1, (3, 0, 0, 0, 0, 0, 0, 0)),
    (3, (1, 1, 0, 0, 0, 1, 0, 0)),
    (-3, (1, 0, 1, 0, 0, 0, 1, 0)),
    (3, (1, 0, 0, 0, 1, 0, 0, 1)),
    (1, (0, 3, 0, 0, 0, 0, 0, 0)),
    (-3, (0, 1, 1, 0, 0, 0, 0, 1)),
    (3, (0, 1, 0, 1, 0, 0, 1, 0)),
    (1, (0, 0, 3, 0, 0, 0, 0, 0)),
    (3, (0, 0, 1, 1, 1, 0, 0, 0)),
    (1, (0, 0, 0, 3, 0, 0, 0, 0)),
    (-3, (0, 0, 0, 1, 0, 1, 0, 1)),
    (1, (0, 0, 0, 0, 3, 0, 0, 0)),
    (-3, (0, 0, 0, 0, 1, 1, 1, 0)),
    (1, (0, 0, 0, 0, 0, 3, 0, 0)),
    (1, (0, 0, 0, 0, 0, 0, 3, 0)),
    (1, (0, 0, 0, 0, 0, 0, 0, 3)),
    (-6, (1, 0, 0, 1, 0, 0, 0, 0)),
    (-6, (0, 1, 0, 0, 1, 0, 0, 0)),
    (-6, (0, 0, 1, 0, 0, 1, 0, 0)),
    (-6, (0, 0, 0, 0, 0, 0, 1, 1)),
    (9, (0, 0, 0, 0, 0, 0, 0, 0)),
)
