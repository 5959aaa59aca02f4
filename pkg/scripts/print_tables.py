"""Print the classical gate tables for |R| = 1 and |R| = 2."""
import argparse
from dataclasses import dataclass

from cohspace import classical_gates as cg
from cohspace.complex_sets import CSet


@dataclass
class Config:
    size: int = 2
    order: str = "first-fastest"


def main(cfg: Config) -> None:
    r = CSet([complex(k + 1, 0) for k in range(cfg.size)])
    tables = {k: cg.truth_table(cg.GateKind(k), r).reordered(cfg.order) for k in ("or", "and", "xor")}
    print("in   " + " ".join(f"{i}" for i, _ in tables["or"]))
    for name, rows in tables.items():
        print(f"{name:<4} " + " ".join(f"{o[0]:^{len(str(i))}}" for i, o in rows))
    for size in (1, cfg.size):
        rr = CSet([complex(k + 1, 0) for k in range(size)])
        print(f"\nCNOT, |R| = {size}")
        print(cg.truth_table(cg.GateKind.CNOT, rr).to_csv(), end="")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--size", type=int, default=Config.size)
    p.add_argument("--order", choices=("lex", "first-fastest"), default=Config.order)
    main(Config(**vars(p.parse_args())))
