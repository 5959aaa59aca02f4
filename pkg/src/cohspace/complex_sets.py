"""Finite sets of complex labels as a Boolean ring.

Addition is symmetric difference (XOR), multiplication is intersection
(AND).  The empty set is the additive zero; there is no global identity,
but every principal ideal ``I(R)`` (all subsets of a finite ``R``) is a
Boolean algebra with ``R`` as its identity.

A ``CSet`` remembers the order in which its labels were supplied.  That
order has no effect on equality or on the ring operations; it only fixes
the bit assignment used by :func:`encode` / :func:`decode` (bit ``i`` of a
code is membership of the ``i``-th label of the base set).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CodeOutOfRange, DuplicateLabel, NotASubset, ParseError, TooLarge

EPS_DUP = 1e-12
MAX_POWERSET = 20


def label(value) -> complex:
    """Coerce ``value`` (complex, real, or an ``(re, im)`` pair) to a label.

    Signed zeros are folded to ``+0.0`` so that Python equality on the
    result coincides with bitwise equality of the coordinates.
    """
    if isinstance(value, (tuple, list)):
        if len(value) != 2:
            raise ParseError(f"expected [re, im], got {value!r}")
        re, im = value
    else:
        if isinstance(value, (str, bytes)):
            raise ParseError(f"labels are numbers or [re, im] pairs, got {value!r}")
        try:
            z = complex(value)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"not a complex number: {value!r}") from exc
        re, im = z.real, z.imag
    try:
        re, im = float(re), float(im)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"non-numeric coordinate in {value!r}") from exc
    if not (math.isfinite(re) and math.isfinite(im)):
        raise ParseError(f"non-finite label {value!r}")
    return complex(re + 0.0, im + 0.0)


class CSet:
    """Immutable finite set of complex labels."""

    __slots__ = ("_items", "_members")

    def __init__(self, labels: Iterable = ()):
        items: list[complex] = []
        seen: set[complex] = set()
        for raw in labels:
            z = label(raw)
            if z in seen:
                continue
            for w in items:
                if abs(z - w) < EPS_DUP:
                    raise DuplicateLabel(f"labels {w} and {z} are closer than {EPS_DUP}")
            items.append(z)
            seen.add(z)
        self._items = tuple(items)
        self._members = frozenset(items)

    @classmethod
    def _trusted(cls, items: Iterable[complex]) -> "CSet":
        # items already validated and distinct (subsets of an existing CSet)
        obj = cls.__new__(cls)
        obj._items = items if type(items) is tuple else tuple(items)
        obj._members = frozenset(obj._items)
        return obj

    # -- container protocol --------------------------------------------------
    def __iter__(self) -> Iterator[complex]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, z) -> bool:
        try:
            return label(z) in self._members
        except ParseError:
            return False

    def __eq__(self, other) -> bool:
        if not isinstance(other, CSet):
            return NotImplemented
        return self._members == other._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return "CSet([" + ", ".join(repr(z) for z in self._items) + "])"

    @property
    def labels(self) -> tuple[complex, ...]:
        """Labels in ingestion order."""
        return self._items

    def canonical(self) -> tuple[complex, ...]:
        """Labels sorted lexicographically by (re, im)."""
        return tuple(sorted(self._items, key=lambda z: (z.real, z.imag)))

    def conj(self) -> "CSet":
        return CSet._trusted(z.conjugate() + 0j for z in self._items)

    # -- ring / lattice operators -------------------------------------------
    def __or__(self, other: "CSet") -> "CSet":
        return union(self, other)

    def __and__(self, other: "CSet") -> "CSet":
        return intersect(self, other)

    __mul__ = __and__

    def __add__(self, other: "CSet") -> "CSet":
        return sym_diff(self, other)

    __xor__ = __add__
    __sub__ = __add__  # every element is its own additive inverse

    def __neg__(self) -> "CSet":
        return self

    def __le__(self, other: "CSet") -> bool:
        return is_subset(self, other)

    def __ge__(self, other: "CSet") -> bool:
        return is_subset(other, self)

    def difference(self, other: "CSet") -> "CSet":
        return CSet._trusted(z for z in self._items if z not in other._members)

    # -- JSON ----------------------------------------------------------------
    def to_json(self) -> list[list[float]]:
        return [[z.real, z.imag] for z in self.canonical()]

    @classmethod
    def from_json(cls, data) -> "CSet":
        if not isinstance(data, list):
            raise ParseError("a label set must be a JSON list of [re, im] pairs")
        out = []
        for i, pair in enumerate(data):
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise ParseError(f"expected [re, im], got {pair!r}", field=f"[{i}]")
            if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair):
                raise ParseError(f"non-numeric coordinate in {pair!r}", field=f"[{i}]")
            out.append(pair)
        return cls(out)


EMPTY = CSet()


def union(s1: CSet, s2: CSet) -> CSet:
    m1 = s1._members
    return CSet._trusted(s1._items + tuple([z for z in s2._items if z not in m1]))


def intersect(s1: CSet, s2: CSet) -> CSet:
    m2 = s2._members
    return CSet._trusted(tuple([z for z in s1._items if z in m2]))


def sym_diff(s1: CSet, s2: CSet) -> CSet:
    m1, m2 = s1._members, s2._members
    return CSet._trusted(tuple([z for z in s1._items if z not in m2] + [z for z in s2._items if z not in m1]))


def is_subset(s1: CSet, s2: CSet) -> bool:
    return s1._members <= s2._members


def rel_complement(s: CSet, r: CSet) -> CSet:
    """``R \\ S`` for ``S`` inside the ideal of ``R`` (equal to ``R + S``)."""
    if not is_subset(s, r):
        raise NotASubset(f"{s!r} is not a subset of {r!r}")
    return r.difference(s)


@dataclass(frozen=True)
class IdealIndex:
    """Integer name of a subset of ``base``: bit ``i`` <-> ``base.labels[i]``."""

    base: CSet
    code: int

    def __post_init__(self):
        if not 0 <= self.code < 2 ** len(self.base):
            raise CodeOutOfRange(f"code {self.code} outside 0..{2 ** len(self.base) - 1}")

    def __int__(self) -> int:
        return self.code


def encode(r: CSet, s: CSet) -> IdealIndex:
    if not is_subset(s, r):
        raise NotASubset(f"{s!r} is not a subset of {r!r}")
    code = sum(1 << i for i, z in enumerate(r.labels) if z in s._members)
    return IdealIndex(r, code)


def decode(r: CSet, code) -> CSet:
    code = int(code)
    if not 0 <= code < 2 ** len(r):
        raise CodeOutOfRange(f"code {code} outside 0..{2 ** len(r) - 1}")
    return CSet._trusted(z for i, z in enumerate(r.labels) if code >> i & 1)


def powerset(r: CSet) -> list[CSet]:
    """All subsets of ``r``, listed in increasing code order."""
    if len(r) > MAX_POWERSET:
        raise TooLarge(f"|R| = {len(r)} exceeds the powerset guard {MAX_POWERSET}")
    return [decode(r, c) for c in range(2 ** len(r))]
