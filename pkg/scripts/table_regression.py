"""Regenerate every table from the exponent engine and list the cells that
disagree with the printed values."""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from _config import parse_config  # noqa: E402
from orbidim.tables import regression_tables  # noqa: E402


@dataclass(frozen=True)
class RegressionConfig:
    n_max: int = 40
    n_max_table3: int = 120
    json_out: str = ""


def main(argv=None):
    cfg = parse_config(RegressionConfig, __doc__.splitlines()[0], argv)
    rep = regression_tables(cfg.n_max, cfg.n_max_table3)
    for t in range(1, 6):
        sub = rep.by_table(t)
        print(f"table {t}: {len(sub.cells)} cells, {len(sub.failures)} mismatches")
    print(rep.summary())
    if cfg.json_out:
        Path(cfg.json_out).write_text(json.dumps([c.as_dict() for c in rep.failures], indent=2))
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
