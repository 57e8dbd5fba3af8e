"""Tabulate growth defects of Hitchin dimensions and detect their periods.

For each signature the PGL(n) defect dim Hit + chi (n^2 - 1) and the PSp(2m)
defect (after removing the linear drift) are computed over a range, then the
smallest period of each sequence is found by brute force and compared with
the predicted period lcm(2, k_i, 2 l_j).
"""
from __future__ import annotations

import csv
import sys
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from _config import parse_config  # noqa: E402
from orbidim.dimension import growth_defect, growth_defect_psp, growth_period  # noqa: E402
from orbidim.orbifold import parse_signature  # noqa: E402


@dataclass(frozen=True)
class SweepConfig:
    signatures: tuple[str, ...] = ("S2(3,3,4)", "S2(2,4,5)", "S2(2,3,7)", "T(3,3,4)", "D(3;4)",
                                   "D2(3,3)", "D2(2,4)", "D2(2,3)")
    n_max: int = 240
    csv_out: str = ""


def smallest_period(values) -> int:
    for p in range(1, len(values) // 2 + 1):
        if all(values[i] == values[i + p] for i in range(len(values) - p)):
            return p
    return 0


def sweep(cfg: SweepConfig):
    rows = []
    for text in cfg.signatures:
        o = parse_signature(text)
        pgl = [growth_defect(o, n) for n in range(2, cfg.n_max + 1)]
        psp = [growth_defect_psp(o, m) for m in range(1, cfg.n_max // 2 + 1)]
        rows.append({
            "signature": text,
            "predicted_period": growth_period(o),
            "pgl_period": smallest_period(pgl),
            "psp_period": smallest_period(psp),
            "pgl_min": min(pgl), "pgl_max": max(pgl),
            "psp_min": min(psp), "psp_max": max(psp),
        })
    return rows


def main(argv=None):
    cfg = parse_config(SweepConfig, __doc__.splitlines()[0], argv)
    rows = sweep(cfg)
    cols = list(rows[0])
    print("\t".join(cols))
    for r in rows:
        print("\t".join(str(r[c]) for c in cols))
    if cfg.csv_out:
        with open(cfg.csv_out, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=cols)
            w.writeheader()
            w.writerows({k: str(v) for k, v in r.items()} for r in rows)
    # observed periods must divide the predicted one
    return 0 if all(r["predicted_period"] % r["pgl_period"] == 0 and r["pgl_period"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
