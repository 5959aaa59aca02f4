"""Error of the quadrature resolution of the identity against grid size and disk radius."""
import argparse
import time
from dataclasses import dataclass, field

import numpy as np

from cohspace.coherent_spaces import resolution_quadrature


@dataclass
class Config:
    offsets: tuple = (1.0,)
    radii: list = field(default_factory=lambda: [3.0, 4.0, 5.0, 6.0, 7.0])
    grids: list = field(default_factory=lambda: [(25, 32), (50, 64), (100, 128), (200, 256)])
    block: int = 6
    rank_one: bool = False


def main(cfg: Config) -> None:
    I = np.eye(cfg.block)
    print(f"offsets={cfg.offsets} rank_one={cfg.rank_one} block N<{cfg.block}")
    print(f"{'R':>5} {'grid':>10} {'max|est - 1|':>14} {'seconds':>8}")
    for R in cfg.radii:
        for grid in cfg.grids:
            t0 = time.perf_counter()
            est = resolution_quadrature(cfg.offsets, R, grid, block=cfg.block, rank_one=cfg.rank_one)
            err = np.max(np.abs(est - I))
            print(f"{R:5.1f} {grid[0]:>4}x{grid[1]:<5} {err:14.3e} {time.perf_counter() - t0:8.2f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--offset", type=complex, action="append", help="fixed offset d (repeatable)")
    p.add_argument("--rank-one", action="store_true")
    args = p.parse_args()
    cfg = Config(rank_one=args.rank_one)
    if args.offset:
        cfg.offsets = tuple(args.offset)
    main(cfg)
