"""Classical gates whose inputs and outputs are subsets of a finite set R.

With ``|R| = 1`` these are the ordinary binary gates; in general every wire
carries one of ``2**|R|`` values, named by the integer codes of
:func:`cohspace.complex_sets.encode`.
"""
from __future__ import annotations

import csv
import enum
import io
import itertools
from dataclasses import dataclass

from .complex_sets import CSet, decode, encode, is_subset, powerset
from .errors import NotASubset, TooLarge

MAX_TABLE_BASE = 8


class GateKind(enum.Enum):
    OR = "or"
    AND = "and"
    XOR = "xor"
    NOT = "not"
    CNOT = "cnot"

    @property
    def arity(self) -> int:
        return 1 if self is GateKind.NOT else 2

    @property
    def n_outputs(self) -> int:
        return 2 if self is GateKind.CNOT else 1


def _require_subsets(r: CSet, *sets: CSet) -> None:
    for s in sets:
        if not is_subset(s, r):
            raise NotASubset(f"{s!r} is not in the ideal of {r!r}")


def apply_basic(kind: GateKind, s1: CSet, s2: CSet, r: CSet) -> CSet:
    _require_subsets(r, s1, s2)
    if kind is GateKind.OR:
        return s1 + s2 + s1 * s2
    if kind is GateKind.AND:
        return s1 * s2
    if kind is GateKind.XOR:
        return s1 + s2
    raise ValueError(f"{kind} is not a two-input, one-output gate")


def apply_not(s: CSet, r: CSet) -> CSet:
    _require_subsets(r, s)
    return r + s


def apply_cnot(s1: CSet, s2: CSet, r: CSet) -> tuple[CSet, CSet]:
    """Control ``s1`` passes through; the target becomes ``s1 + s2``."""
    _require_subsets(r, s1, s2)
    return s1, s1 + s2


def apply_gate(kind: GateKind, inputs: tuple[CSet, ...], r: CSet) -> tuple[CSet, ...]:
    if kind is GateKind.NOT:
        return (apply_not(inputs[0], r),)
    if kind is GateKind.CNOT:
        return apply_cnot(inputs[0], inputs[1], r)
    return (apply_basic(kind, inputs[0], inputs[1], r),)


@dataclass(frozen=True)
class TruthTable:
    base: CSet
    kind: GateKind
    rows: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def outputs(self) -> list[tuple[int, ...]]:
        return [out for _, out in self.rows]

    def lookup(self, *inputs: int) -> tuple[int, ...]:
        return dict(self.rows)[tuple(inputs)]

    def reordered(self, order: str = "lex") -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Rows in ``"lex"`` order (first input slowest) or ``"first-fastest"``
        order (first input varies fastest, the column order used when the
        OR/AND/XOR outputs are printed side by side)."""
        if order == "lex":
            return list(self.rows)
        if order == "first-fastest":
            return sorted(self.rows, key=lambda row: tuple(reversed(row[0])))
        raise ValueError(f"unknown row order {order!r}")

    def to_csv(self, order: str = "lex") -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.kind is GateKind.CNOT:
            w.writerow(["in_control", "in_target", "out_control", "out_target"])
        elif self.kind is GateKind.NOT:
            w.writerow(["in", "out"])
        else:
            w.writerow(["in1", "in2", "out"])
        for ins, outs in self.reordered(order):
            w.writerow([*ins, *outs])
        return buf.getvalue()


def truth_table(kind: GateKind, r: CSet) -> TruthTable:
    if len(r) > MAX_TABLE_BASE:
        raise TooLarge(f"|R| = {len(r)} exceeds the truth-table guard {MAX_TABLE_BASE}")
    subsets = powerset(r)
    rows = []
    for codes in itertools.product(range(len(subsets)), repeat=kind.arity):
        outs = apply_gate(kind, tuple(subsets[c] for c in codes), r)
        rows.append((codes, tuple(encode(r, s).code for s in outs)))
    return TruthTable(r, kind, tuple(rows))


def check_reversible(table: TruthTable) -> bool:
    """True iff the gate permutes its input tuples."""
    if table.kind.n_outputs != table.kind.arity:
        return False
    ins = [i for i, _ in table.rows]
    outs = table.outputs()
    return len(set(outs)) == len(outs) and set(outs) == set(ins)


def fixed_control_target_map(s1: CSet, r: CSet) -> list[int]:
    """Permutation of target codes induced by a fixed CNOT control ``s1``.

    ``perm[c]`` is the code of ``s1 + decode(r, c)``.  The map is checked to be
    a bijection and its own inverse before it is returned.
    """
    _require_subsets(r, s1)
    perm = [encode(r, s1 + decode(r, c)).code for c in range(2 ** len(r))]
    if sorted(perm) != list(range(len(perm))):
        raise AssertionError("fixed-control target map is not a bijection")
    if any(perm[perm[c]] != c for c in range(len(perm))):
        raise AssertionError("fixed-control target map is not an involution")
    return perm


def cycles(perm: list[int]) -> list[tuple[int, ...]]:
    """Non-trivial cycles of a permutation, each starting at its smallest code."""
    seen, out = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc, c = [], start
        while c not in seen:
            seen.add(c)
            cyc.append(c)
            c = perm[c]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out
