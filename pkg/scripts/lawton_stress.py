"""Stress the SL(3) trace-coordinate identity over several seeds and sample
sizes and report worst residuals and throughput."""
from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from _config import parse_config  # noqa: E402
from orbidim.lawton import selftest  # noqa: E402


@dataclass(frozen=True)
class StressConfig:
    seeds: tuple[int, ...] = (0, 1, 2, 42)
    samples: int = 20_000
    shards: int = 8


def main(argv=None):
    cfg = parse_config(StressConfig, __doc__.splitlines()[0], argv)
    print("seed\tsamples\tresidual\tswap\tcayley_hamilton\tconjugation\tseconds\tpassed")
    ok = True
    for seed in cfg.seeds:
        t0 = time.perf_counter()
        rep = selftest(cfg.samples, seed=seed, shards=cfg.shards)
        dt = time.perf_counter() - t0
        ok &= rep.passed
        print(f"{seed}\t{rep.samples}\t{rep.max_residual:.2e}\t{rep.max_swap_error:.2e}\t"
              f"{rep.max_cayley_hamilton:.2e}\t{rep.max_conjugation_error:.2e}\t{dt:.2f}\t{rep.passed}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
