"""Numeric and exact checks on SL(3, C) trace coordinates.

Random-matrix identities run in numpy and are vectorized over a stack of
pairs.  Checks at specific algebraic points use sympy, so values such as
2 + 2 sqrt 2 or (-3 + i sqrt 3)/2 are compared exactly.
"""
from __future__ import annotations

from dataclasses import astuple, dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from .lawton_polys import P_TERMS, Q_TERMS, VARIABLES


class NotUnimodular(ValueError):
    pass


@dataclass(frozen=True)
class LawtonConfig:
    random_rtol: float = 1e-8  # relative, for identities on random pairs
    point_atol: float = 1e-10  # absolute, for fixed algebraic points
    det_tol: float = 1e-8  # |det - 1| accepted by trace_coords
    cayley_hamilton_tol: float = 1e-9
    min_abs_det: float = 1e-6  # rejection threshold when sampling


DEFAULT_CONFIG = LawtonConfig()


# ----------------------------------------------------------------- polynomials

def eval_terms(terms, values: Sequence[Any]):
    """Sum of c * prod(values ** e); values may be scalars, arrays or sympy."""
    total = 0
    for coef, exps in terms:
        t = coef
        for val, e in zip(values, exps):
            if e:
                t = t * val**e
        total = total + t
    return total


@dataclass(frozen=True)
class TraceCoordinates:
    x: complex
    y: complex
    z: complex
    u: complex
    v: complex
    w: complex
    r: complex
    s: complex
    tau: complex

    @property
    def base(self) -> tuple:
        return astuple(self)[:8]

    def as_dict(self) -> dict:
        return dict(zip(VARIABLES + ("tau",), astuple(self)))


def _base(c) -> Sequence[Any]:
    return c.base if isinstance(c, TraceCoordinates) else c


def eval_P(c):
    return eval_terms(P_TERMS, _base(c))


def eval_Q(c):
    return eval_terms(Q_TERMS, _base(c))


def lawton_polynomial(c, tau):
    return tau * tau - eval_P(c) * tau + eval_Q(c)


# -------------------------------------------------------------------- matrices

def _as_matrix(M, name: str, det_tol: float) -> np.ndarray:
    a = np.asarray(M, dtype=complex)
    if a.shape != (3, 3):
        raise ValueError(f"{name} must be 3x3, got shape {a.shape}")
    det = np.linalg.det(a)
    if abs(det - 1) > det_tol:
        raise NotUnimodular(f"{name} has determinant {det:.6g}, not 1")
    return a


def trace_coords(A, B, det_tol: float = DEFAULT_CONFIG.det_tol) -> TraceCoordinates:
    A = _as_matrix(A, "A", det_tol)
    B = _as_matrix(B, "B", det_tol)
    Ai, Bi = np.linalg.inv(A), np.linalg.inv(B)
    AB = A @ B
    vals = (
        np.trace(A), np.trace(B), np.trace(AB),
        np.trace(Ai), np.trace(Bi), np.trace(Bi @ Ai),
        np.trace(A @ Bi), np.trace(Ai @ B), np.trace(AB @ Ai @ Bi),
    )
    return TraceCoordinates(*(complex(t) for t in vals))


def lawton_residual(A, B, det_tol: float = DEFAULT_CONFIG.det_tol) -> float:
    """|tau^2 - P tau + Q| / max(1, |P|, |Q|)."""
    c = trace_coords(A, B, det_tol)
    p, q = eval_P(c), eval_Q(c)
    return abs(c.tau**2 - p * c.tau + q) / max(1.0, abs(p), abs(q))


def cayley_hamilton_residual(A) -> float:
    """Norm of A^3 - tr(A) A^2 + tr(A^-1) A - I for A in SL(3)."""
    A = np.asarray(A, dtype=complex)
    A2 = A @ A
    M = A2 @ A - np.trace(A) * A2 + np.trace(np.linalg.inv(A)) * A - np.eye(3)
    return float(np.linalg.norm(M))


# ------------------------------------------------------------- batched version

def random_unimodular(rng: np.random.Generator, size: int,
                      min_abs_det: float = DEFAULT_CONFIG.min_abs_det) -> np.ndarray:
    """(size, 3, 3) complex Gaussian matrices rescaled to determinant 1."""
    out = np.empty((size, 3, 3), dtype=complex)
    filled = 0
    while filled < size:
        need = size - filled
        M = rng.standard_normal((need, 3, 3)) + 1j * rng.standard_normal((need, 3, 3))
        det = np.linalg.det(M)
        keep = np.abs(det) >= min_abs_det
        M, det = M[keep], det[keep]
        M = M / (det ** (1 / 3))[:, None, None]
        out[filled:filled + len(M)] = M
        filled += len(M)
    return out


def _tr(M: np.ndarray) -> np.ndarray:
    return np.trace(M, axis1=-2, axis2=-1)


def batch_coords(A: np.ndarray, B: np.ndarray) -> tuple[np.ndarray, ...]:
    """The nine coordinates of each pair in the stacks A, B."""
    Ai, Bi = np.linalg.inv(A), np.linalg.inv(B)
    AB = A @ B
    return (
        _tr(A), _tr(B), _tr(AB), _tr(Ai), _tr(Bi), _tr(Bi @ Ai),
        _tr(A @ Bi), _tr(Ai @ B), _tr(AB @ Ai @ Bi),
    )


@dataclass(frozen=True)
class SelftestReport:
    samples: int
    seed: int
    tol: float
    max_residual: float
    max_swap_error: float
    max_cayley_hamilton: float
    max_conjugation_error: float
    passed: bool

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def _shard(seed_seq: np.random.SeedSequence, n: int, config: LawtonConfig) -> tuple[float, ...]:
    rng = np.random.default_rng(seed_seq)
    A = random_unimodular(rng, n, config.min_abs_det)
    B = random_unimodular(rng, n, config.min_abs_det)
    G = random_unimodular(rng, n, config.min_abs_det)
    x, y, z, u, v, w, r, s, tau = batch_coords(A, B)
    base = (x, y, z, u, v, w, r, s)
    p, q = eval_P(base), eval_Q(base)
    scale = np.maximum(1.0, np.maximum(np.abs(p), np.abs(q)))
    residual = np.abs(tau * tau - p * tau + q) / scale
    # tr [B, A] is the other root
    tau_ba = batch_coords(B, A)[8]
    swap = np.maximum(np.abs(tau + tau_ba - p), np.abs(tau * tau_ba - q)) / scale
    A2 = A @ A
    ch = A2 @ A - _tr(A)[:, None, None] * A2 + _tr(np.linalg.inv(A))[:, None, None] * A - np.eye(3)
    Gi = np.linalg.inv(G)
    conj = batch_coords(G @ A @ Gi, G @ B @ Gi)
    cscale = np.maximum(1.0, np.max([np.abs(c) for c in base + (tau,)], axis=0))
    cerr = np.max([np.abs(a - b) for a, b in zip(conj, base + (tau,))], axis=0) / cscale
    return (float(residual.max()), float(swap.max()),
            float(np.linalg.norm(ch, axis=(1, 2)).max()), float(cerr.max()))


def selftest(samples: int = 10_000, seed: int = 42, tol: float | None = None,
             shards: int = 8, config: LawtonConfig = DEFAULT_CONFIG) -> SelftestReport:
    """Lawton identity, root swap, Cayley-Hamilton and conjugation invariance
    on seeded random pairs.  Each shard draws from its own spawned stream."""
    if samples < 1:
        raise ValueError("samples must be positive")
    tol = config.random_rtol if tol is None else tol
    shards = max(1, min(shards, samples))
    sizes = [samples // shards + (i < samples % shards) for i in range(shards)]
    streams = np.random.SeedSequence(seed).spawn(shards)
    results = [_shard(ss, n, config) for ss, n in zip(streams, sizes)]
    res, swap, ch, conj = (max(col) for col in zip(*results))
    passed = res <= tol and swap <= tol and ch <= config.cayley_hamilton_tol and conj <= tol
    return SelftestReport(samples, seed, tol, res, swap, ch, conj, passed)


# ---------------------------------------------------------- reference points

@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class PaperPointsReport:
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def _exact_zero(expr) -> bool:
    import sympy as sp

    return sp.simplify(sp.expand(expr)) == 0


def _check_slice_identity() -> Check:
    """x = y = u = v = 0, z = w = 1: P = rs - 2 and Q = r^3 + s^3 - 5rs + 5."""
    import sympy as sp

    r, s = sp.symbols("r s")
    base = (0, 0, 1, 0, 0, 1, r, s)
    ok = _exact_zero(eval_P(base) - (r * s - 2)) and _exact_zero(
        eval_Q(base) - (r**3 + s**3 - 5 * r * s + 5))
    return Check("a: slice z=w=1", ok, "P = rs-2, Q = r^3+s^3-5rs+5 as polynomials")


def _check_isolated_points() -> Check:
    import sympy as sp

    I = sp.I
    points = ((-1 + 2 * I, -1 - 2 * I, 1), (-1 - 2 * I, -1 + 2 * I, 1), (-1, -1, -1))
    bad = []
    for z, w, tau in points:
        base = (0, 0, z, 0, 0, w, 0, 0)
        p, q = eval_P(base), eval_Q(base)
        if not (_exact_zero(tau**2 - p * tau + q) and _exact_zero(p**2 - 4 * q)):
            bad.append(str((z, w, tau)))
    detail = "all three points are double roots" if not bad else "fails at " + ", ".join(bad)
    return Check("b: isolated points", not bad, detail)


def _check_hitchin_basepoint() -> Check:
    import sympy as sp

    r = s = 2 + 2 * sp.sqrt(2)
    tau = 5 + 4 * sp.sqrt(2)
    ok = _exact_zero(tau**2 - (r * s - 2) * tau + (r**3 + s**3 - 5 * r * s + 5))
    also = _exact_zero(lawton_polynomial((0, 0, 1, 0, 0, 1, r, s), tau))
    return Check("c: Hitchin basepoint", ok and also, "(r,s,tau) = (2+2sqrt2, 2+2sqrt2, 5+4sqrt2)")


def _check_symmetric_slice() -> Check:
    import sympy as sp

    r, tau = sp.symbols("r tau")
    f = sp.expand(lawton_polynomial((0, 0, 1, 0, 0, 1, r, r), tau))
    expected = tau**2 - (r**2 - 2) * tau + (2 * r**3 - 5 * r**2 + 5)
    same = _exact_zero(f - expected)
    singular = all(sp.diff(f, var).subs({r: 2, tau: 1}) == 0 for var in (r, tau)) and f.subs(
        {r: 2, tau: 1}) == 0
    disc = sp.expand((r**2 - 2) ** 2 - 4 * (2 * r**3 - 5 * r**2 + 5))
    factored = _exact_zero(disc - (r - 2) ** 2 * (r**2 - 4 * r - 4))
    roots = set(sp.solve(disc, r)) == {2, 2 + 2 * sp.sqrt(2), 2 - 2 * sp.sqrt(2)}
    ok = same and singular and factored and roots
    return Check("d: T(3,3,4) slice", ok,
                 f"curve {same}, singular at (2,1) {singular}, discriminant {factored}, roots {roots}")


def _check_d34_curve() -> Check:
    import sympy as sp

    r, s = sp.symbols("r s")
    curve = r**2 * s**2 - 4 * r**3 - 4 * s**3 + 16 * r * s - 16
    base = (0, 0, 1, 0, 0, 1, r, s)
    is_discriminant = _exact_zero(eval_P(base) ** 2 - 4 * eval_Q(base) - curve)
    pt = 2 + 2 * sp.sqrt(2)
    on_curve = _exact_zero(curve.subs({r: pt, s: pt}))
    return Check("e: D(3;4) curve", is_discriminant and on_curve,
                 f"equals P^2-4Q on the slice {is_discriminant}, contains (2+2sqrt2)^2 {on_curve}")


def hopf_pair() -> tuple[np.ndarray, np.ndarray]:
    """A = diag(1, w, w^2) and B the cyclic permutation, w = exp(2 pi i/3)."""
    om = np.exp(2j * np.pi / 3)
    A = np.diag([1, om, om * om])
    B = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=complex)
    return A, B


def _check_hopf(atol: float) -> Check:
    import sympy as sp

    r, s, z, w = sp.symbols("r s z w")
    base = (0, 0, z, 0, 0, w, r, s)
    eq1 = r * s + z * w - 3
    eq2 = r**3 + s**3 + z**3 + w**3 + r * s * z * w - 6 * r * s - 6 * z * w + 9
    system = _exact_zero(eval_P(base) - eq1) and _exact_zero(eval_Q(base) - eq2)
    a = (-3 + sp.I * sp.sqrt(3)) / 2
    b = (-3 - sp.I * sp.sqrt(3)) / 2
    sub = {r: a, s: a, z: b, w: b}
    point = _exact_zero(eq1.subs(sub)) and _exact_zero(eq2.subs(sub))

    A, B = hopf_pair()
    I3 = np.eye(3)
    orders = (np.abs(np.linalg.matrix_power(A, 3) - I3).max() <= atol
              and np.abs(np.linalg.matrix_power(B, 3) - I3).max() <= atol)
    c = trace_coords(A, B)
    zero = max(abs(t) for t in c.base) <= atol
    om = np.exp(2j * np.pi / 3)
    root = abs(c.tau - 3 * om) <= atol and abs(c.tau**2 + 3 * c.tau + 9) <= atol
    ok = system and point and orders and zero and root
    return Check("f: Hopf example", ok,
                 f"system {system}, point {point}, A^3=B^3=I {orders}, coords zero {zero}, tau=3w {root}")


def verify_paper_points(atol: float = DEFAULT_CONFIG.point_atol) -> PaperPointsReport:
    checks: list[Callable[[], Check]] = [
        _check_slice_identity,
        _check_isolated_points,
        _check_hitchin_basepoint,
        _check_symmetric_slice,
        _check_d34_curve,
        lambda: _check_hopf(atol),
    ]
    return PaperPointsReport(tuple(c() for c in checks))
