"""Hitchin dimensions of the base orbifolds of figure-eight and Whitehead
fillings, with their ratios to the leading n^2 term."""
from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from _config import parse_config  # noqa: E402
from orbidim.orbifold import disc, euler_char, sphere  # noqa: E402
from orbidim.three_orbifold import (  # noqa: E402
    FIG8_BASES,
    WHITEHEAD_BASES,
    fig8_component_dims,
    whitehead_component_dims,
)


@dataclass(frozen=True)
class FillingConfig:
    n_values: tuple[int, ...] = (2, 3, 6, 7, 12, 60, 120, 1000)


def leading(bases, make):
    # dim Hit ~ -chi(O) n^2
    return [-euler_char(make(*b)) for b in bases]


def main(argv=None):
    cfg = parse_config(FillingConfig, __doc__.splitlines()[0], argv)
    lead_f = leading(FIG8_BASES, sphere)
    lead_w = leading(WHITEHEAD_BASES, lambda *b: disc(*b, c=1))
    names = ([f"S2({','.join(map(str, b))})" for b in FIG8_BASES]
             + [f"D2({','.join(map(str, b))})" for b in WHITEHEAD_BASES])
    print("n\t" + "\t".join(names) + "\tratios")
    for n in cfg.n_values:
        dims = list(fig8_component_dims(n)) + list(whitehead_component_dims(n))
        ratios = [d / (c * n * n) for d, c in zip(dims, lead_f + lead_w)]
        print(f"{n}\t" + "\t".join(map(str, dims)) + "\t" + " ".join(f"{float(r):.4f}" for r in ratios))
    return 0


if __name__ == "__main__":
    sys.exit(main())
