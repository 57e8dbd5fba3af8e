"""Printed tables as fixtures, their regeneration from formulas, and a diff.

Each fixture is transcribed by hand from the printed expressions into
lambdas of the row parameter.  Each regenerated value comes from the
exponent-based engine, never from the fixture.  A mismatch is reported as
one named failure per cell and parameter.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .dimension import euclidean_char_dim, euclidean_invariant_dim, hitchin_dim
from .lie import Family, LieType
from .orbifold import EuclideanClass, sphere

Printed = Callable[[int], int]

# ------------------------------------------------------------------ fixtures

# Tables 1 and 2: (exponents, rank, dim) as functions of n or m
TABLE1: dict[Family, tuple[Callable[[int], list[int]], Printed, Printed]] = {
    Family.PSL: (lambda n: list(range(1, n)), lambda n: n - 1, lambda n: n * n - 1),
    Family.PSP: (lambda m: list(range(1, 2 * m, 2)), lambda m: m, lambda m: 2 * m * m + m),
    Family.PO_ODD: (lambda m: list(range(1, 2 * m, 2)), lambda m: m, lambda m: 2 * m * m + m),
    Family.PO_EVEN: (lambda m: list(range(1, 2 * m - 2, 2)) + [m - 1], lambda m: m,
                     lambda m: 2 * m * m - m),
}

TABLE2: dict[Family, tuple[list[int], int, int]] = {
    Family.G2: ([1, 5], 2, 14),
    Family.F4: ([1, 5, 7, 11], 4, 52),
    Family.E6: ([1, 4, 5, 7, 8, 11], 6, 78),
    Family.E7: ([1, 5, 7, 9, 11, 13, 17], 7, 133),
    Family.E8: ([1, 7, 11, 13, 17, 19, 23, 29], 8, 248),
}

# Table 3: dim Hit(S2(3,3,4), PGL(n)) by n mod 12
_T3_BRANCHES: tuple[tuple[tuple[int, ...], str, Printed], ...] = (
    ((0,), "n^2/12+2", lambda n: n * n // 12 + 2),
    ((1, 11, 5, 7), "(n^2-1)/12", lambda n: (n * n - 1) // 12),
    ((2, 10), "(n^2-4)/12", lambda n: (n * n - 4) // 12),
    ((3, 9), "(n^2+15)/12", lambda n: (n * n + 15) // 12),
    ((4, 8), "(n^2+8)/12", lambda n: (n * n + 8) // 12),
    ((6,), "n^2/12+1", lambda n: n * n // 12 + 1),
)


def _t3_branch(n: int) -> tuple[str, Printed]:
    for residues, label, f in _T3_BRANCHES:
        if n % 12 in residues:
            return label, f
    raise AssertionError(n)


def table3_printed(n: int) -> int:
    label, f = _t3_branch(n)
    num = {"n^2/12+2": n * n, "n^2/12+1": n * n, "(n^2-1)/12": n * n - 1,
           "(n^2-4)/12": n * n - 4, "(n^2+15)/12": n * n + 15, "(n^2+8)/12": n * n + 8}[label]
    if num % 12:
        raise AssertionError(f"printed branch {label} is not integral at n={n}")
    return f(n)


def _d(i: int, j: int) -> int:
    return 1 if i % j == 0 else 0


_COLS = (EuclideanClass.T2, EuclideanClass.S2222, EuclideanClass.S333,
         EuclideanClass.S244, EuclideanClass.S236)

# Table 4: dim X(O, G) at a horospherical cusp, one lambda per column
TABLE4: dict[Family, tuple[Printed, ...]] = {
    Family.PSL: (lambda n: 2 * (n - 1), lambda n: 2 * (n // 2), lambda n: 2 * (n // 3),
                 lambda n: 2 * (n // 4), lambda n: 2 * (n // 6)),
    Family.PSP: (lambda m: 2 * m, lambda m: 2 * m, lambda m: 2 * (m // 3),
                 lambda m: 2 * (m // 2), lambda m: 2 * (m // 3)),
    Family.PO_ODD: (lambda m: 2 * m, lambda m: 2 * m, lambda m: 2 * (m // 3),
                    lambda m: 2 * (m // 2), lambda m: 2 * (m // 3)),
    Family.PO_EVEN: (lambda m: 2 * m + 2, lambda m: 4 * (m // 2), lambda m: 2 * (m // 3),
                     lambda m: 2 * (m // 4 + (m + 1) // 4),
                     lambda m: 2 * (m // 6 + (m + 2) // 6)),
    Family.G2: (lambda _: 4, lambda _: 4, lambda _: 2, lambda _: 0, lambda _: 2),
    Family.F4: (lambda _: 8, lambda _: 8, lambda _: 4, lambda _: 4, lambda _: 4),
    Family.E6: (lambda _: 12, lambda _: 8, lambda _: 4, lambda _: 4, lambda _: 6),
    Family.E7: (lambda _: 14, lambda _: 14, lambda _: 6, lambda _: 4, lambda _: 6),
    Family.E8: (lambda _: 16, lambda _: 16, lambda _: 8, lambda _: 8, lambda _: 8),
}

# Table 5: dim g^{tau o hol(Gamma)}
TABLE5: dict[Family, tuple[Printed, ...]] = {
    Family.PSL: (lambda n: n - 1, lambda n: (n - 1) // 2, lambda n: (n - 1) // 3,
                 lambda n: (n - 1) // 4, lambda n: (n - 1) // 6),
    Family.PSP: (lambda m: m, lambda _: 0, lambda m: (m + 1) // 3, lambda _: 0, lambda _: 0),
    Family.PO_ODD: (lambda m: m, lambda _: 0, lambda m: (m + 1) // 3, lambda _: 0, lambda _: 0),
    Family.PO_EVEN: (lambda m: m, lambda m: _d(m - 1, 2), lambda m: m // 3 + _d(m - 1, 3),
                     lambda m: _d(m - 1, 4), lambda m: _d(m - 1, 6)),
    Family.G2: (lambda _: 2, lambda _: 0, lambda _: 0, lambda _: 0, lambda _: 0),
    Family.F4: (lambda _: 4, lambda _: 0, lambda _: 0, lambda _: 0, lambda _: 0),
    Family.E6: (lambda _: 6, lambda _: 2, lambda _: 0, lambda _: 2, lambda _: 0),
    Family.E7: (lambda _: 7, lambda _: 0, lambda _: 1, lambda _: 0, lambda _: 0),
    Family.E8: (lambda _: 8, lambda _: 0, lambda _: 0, lambda _: 0, lambda _: 0),
}

_ROW_LABEL = {Family.PSL: "PSL(n)", Family.PSP: "PSp(2m)", Family.PO_ODD: "PO(2m+1)",
              Family.PO_EVEN: "PO(2m)"}


# ---------------------------------------------------------------- comparison

@dataclass(frozen=True)
class Cell:
    table: int
    row: str
    column: str
    param: int | None
    printed: object
    computed: object

    @property
    def ok(self) -> bool:
        return self.printed == self.computed

    @property
    def name(self) -> str:
        at = "" if self.param is None else f" at {self.param}"
        return f"table {self.table} [{self.row} | {self.column}]{at}"

    def as_dict(self) -> dict:
        return {"table": self.table, "row": self.row, "column": self.column,
                "param": self.param, "printed": self.printed, "computed": self.computed,
                "match": self.ok}


@dataclass(frozen=True)
class RegressionReport:
    cells: tuple[Cell, ...] = field(default_factory=tuple)

    @property
    def failures(self) -> list[Cell]:
        return [c for c in self.cells if not c.ok]

    @property
    def passed(self) -> bool:
        return not self.failures

    def by_table(self, table: int) -> RegressionReport:
        return RegressionReport(tuple(c for c in self.cells if c.table == table))

    def summary(self) -> str:
        lines = [f"{len(self.cells)} cells, {len(self.failures)} mismatches"]
        lines += [f"MISMATCH {c.name}: printed {c.printed}, computed {c.computed}"
                  for c in self.failures]
        return "\n".join(lines)


def _groups(n_max: int, families=None):
    fams = families or list(Family)
    for fam in fams:
        if fam.exceptional:
            yield LieType(fam), None
        else:
            lo = {Family.PSL: 2, Family.PO_EVEN: 3}.get(fam, 1)
            for p in range(lo, n_max + 1):
                yield LieType(fam, p), p


def _row(g: LieType) -> str:
    return _ROW_LABEL.get(g.family, g.family.value)


def table1_cells(n_max: int = 40) -> list[Cell]:
    out = []
    for fam, (ex, rk, dm) in TABLE1.items():
        for g, p in _groups(n_max, [fam]):
            out += [Cell(1, _row(g), "exponents", p, sorted(ex(p)), sorted(g.exponents)),
                    Cell(1, _row(g), "rank", p, rk(p), g.rank),
                    Cell(1, _row(g), "dimension", p, dm(p), g.dim)]
    return out


def table2_cells() -> list[Cell]:
    out = []
    for fam, (ex, rk, dm) in TABLE2.items():
        g = LieType(fam)
        out += [Cell(2, fam.value, "exponents", None, ex, list(g.exponents)),
                Cell(2, fam.value, "rank", None, rk, g.rank),
                Cell(2, fam.value, "dimension", None, dm, g.dim)]
    return out


def table3_cells(n_max: int = 120) -> list[Cell]:
    o = sphere(3, 3, 4)
    return [Cell(3, "S2(3,3,4)", _t3_branch(n)[0], n, table3_printed(n),
                 hitchin_dim(o, LieType.psl(n)).value) for n in range(2, n_max + 1)]


def _euclid_cells(table: int, fixture, compute, n_max: int) -> list[Cell]:
    out = []
    for g, p in _groups(n_max):
        for col, printed in zip(_COLS, fixture[g.family]):
            out.append(Cell(table, _row(g), col.label, p, printed(p), compute(col, g)))
    return out


def table4_cells(n_max: int = 40) -> list[Cell]:
    return _euclid_cells(4, TABLE4, euclidean_char_dim, n_max)


def table5_cells(n_max: int = 40) -> list[Cell]:
    return _euclid_cells(5, TABLE5, euclidean_invariant_dim, n_max)


def table_cells(table: int, n_max: int | None = None) -> list[Cell]:
    if table == 1:
        return table1_cells(n_max or 40)
    if table == 2:
        return table2_cells()
    if table == 3:
        return table3_cells(n_max or 120)
    if table == 4:
        return table4_cells(n_max or 40)
    if table == 5:
        return table5_cells(n_max or 40)
    raise ValueError(f"no table {table}; choose 1..5")


def regression_tables(n_max_classical: int = 40, n_max_table3: int = 120) -> RegressionReport:
    cells = (table1_cells(n_max_classical) + table2_cells() + table3_cells(n_max_table3)
             + table4_cells(n_max_classical) + table5_cells(n_max_classical))
    return RegressionReport(tuple(cells))
