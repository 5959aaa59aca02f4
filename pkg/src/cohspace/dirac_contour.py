"""Dirac contour representation evaluated by residues.

Kets are entire functions (finite sums ``c e^{a z}`` plus a polynomial),
bras are rational functions (simple poles ``c / (z - p)`` plus a pole of
finite order at the origin, ``b_N / z^{N+1}``, for number-state components),
and operators are kernels

    Theta(z1, z2) = cauchy / (z2 - z1) + sum_p K_p(z1) / (z2 - p)

where each ``K_p`` is a ket function.  The ``cauchy`` term is the identity.
Every contour integral is replaced by its residue sum, so nothing here
samples a contour; the usual annulus conditions (``|z2| > |p|`` for every
pole) are taken as given.

Residue rules used throughout:

* ``<f|s>``: ``sum_p c_p s(p) + sum_N b_N [z^N] s``;
* ``Theta |s>``: ``cauchy s(z) + sum_p K_p(z) s(p)``;
* ``Theta_1 Theta_2``: column ``q`` of the product is
  ``cauchy_1 K2_q + cauchy_2 K1_q + sum_p K1_p * K2_q(p)``;
* ``Tr Theta``: ``sum_p K_p(p)`` (sign fixed so that ``Tr |A><A| = 1``).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .coherent_spaces import CoherentSpace
from .complex_sets import CSet
from .errors import NotTraceClass, ParseError

PRUNE_RTOL = 1e-15


def _prune(coeffs: Mapping[complex, complex]) -> dict[complex, complex]:
    if not coeffs:
        return {}
    scale = max(abs(c) for c in coeffs.values())
    if scale == 0:
        return {}
    return {k: c for k, c in coeffs.items() if abs(c) >= PRUNE_RTOL * scale}


def _trim(poly) -> tuple[complex, ...]:
    poly = [complex(c) for c in poly]
    if not poly:
        return ()
    scale = max(abs(c) for c in poly)
    while poly and abs(poly[-1]) <= PRUNE_RTOL * scale:
        poly.pop()
    return tuple(poly)


def _add_maps(x: Mapping, y: Mapping, sy: complex = 1.0) -> dict:
    out = dict(x)
    for k, c in y.items():
        out[k] = out.get(k, 0) + sy * c
    return out


def _add_seqs(x, y, sy: complex = 1.0) -> list[complex]:
    n = max(len(x), len(y))
    return [(x[i] if i < len(x) else 0) + sy * (y[i] if i < len(y) else 0) for i in range(n)]


def _sorted_items(d: Mapping[complex, complex]):
    return sorted(d.items(), key=lambda kv: (kv[0].real, kv[0].imag))


@dataclass(frozen=True, eq=False)
class Ket:
    """``s(z) = sum_a exp[a] e^{a z} + sum_n poly[n] z^n``."""

    exp: Mapping[complex, complex] = field(default_factory=dict)
    poly: tuple[complex, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "exp", _prune({complex(a): complex(c) for a, c in self.exp.items()}))
        object.__setattr__(self, "poly", _trim(self.poly))

    def __call__(self, z: complex) -> complex:
        val = sum(c * cmath.exp(a * z) for a, c in self.exp.items())
        for n, q in enumerate(self.poly):
            val += q * z**n
        return complex(val)

    def taylor(self, n: int) -> complex:
        """Coefficient of ``z^n`` in the Taylor series at the origin."""
        val = sum(c * a**n for a, c in self.exp.items()) / math.factorial(n)
        if n < len(self.poly):
            val += self.poly[n]
        return complex(val)

    def __add__(self, other: "Ket") -> "Ket":
        return Ket(_add_maps(self.exp, other.exp), _add_seqs(self.poly, other.poly))

    def __sub__(self, other: "Ket") -> "Ket":
        return Ket(_add_maps(self.exp, other.exp, -1), _add_seqs(self.poly, other.poly, -1))

    def __mul__(self, k: complex) -> "Ket":
        return Ket({a: k * c for a, c in self.exp.items()}, [k * q for q in self.poly])

    __rmul__ = __mul__

    def is_zero(self, atol: float = 0.0) -> bool:
        return all(abs(c) <= atol for c in self.exp.values()) and all(abs(q) <= atol for q in self.poly)

    def max_coeff(self) -> float:
        return max([abs(c) for c in self.exp.values()] + [abs(q) for q in self.poly] + [0.0])

    def dagger(self) -> "Bra":
        """The bra of the same state."""
        return Bra({a.conjugate(): c.conjugate() for a, c in self.exp.items()},
                   [q.conjugate() * math.factorial(n) for n, q in enumerate(self.poly)])

    def to_fock(self, dim: int) -> np.ndarray:
        """Number-basis amplitudes ``s_N = sqrt(N!) [z^N] s``."""
        out = np.zeros(dim, complex)
        for a, c in self.exp.items():
            v = c
            for n in range(dim):
                if n:
                    v *= a / math.sqrt(n)
                out[n] += v
        for n, q in enumerate(self.poly[:dim]):
            out[n] += q * math.sqrt(math.factorial(n))
        return out

    @classmethod
    def from_fock(cls, amps) -> "Ket":
        """Polynomial ket of a finite number-state superposition."""
        return cls({}, [complex(s) / math.sqrt(math.factorial(n)) for n, s in enumerate(amps)])

    def __repr__(self) -> str:
        return f"Ket(exp={dict(_sorted_items(self.exp))}, poly={self.poly})"


@dataclass(frozen=True, eq=False)
class Bra:
    """``f(z) = sum_p poles[p] / (z - p) + sum_N number[N] / z^{N+1}``."""

    poles: Mapping[complex, complex] = field(default_factory=dict)
    number: tuple[complex, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "poles", _prune({complex(p): complex(c) for p, c in self.poles.items()}))
        object.__setattr__(self, "number", _trim(self.number))

    def __call__(self, z: complex) -> complex:
        val = sum(c / (z - p) for p, c in self.poles.items())
        for n, b in enumerate(self.number):
            val += b / z ** (n + 1)
        return complex(val)

    def __add__(self, other: "Bra") -> "Bra":
        return Bra(_add_maps(self.poles, other.poles), _add_seqs(self.number, other.number))

    def __sub__(self, other: "Bra") -> "Bra":
        return Bra(_add_maps(self.poles, other.poles, -1), _add_seqs(self.number, other.number, -1))

    def __mul__(self, k: complex) -> "Bra":
        return Bra({p: k * c for p, c in self.poles.items()}, [k * b for b in self.number])

    __rmul__ = __mul__

    def is_zero(self, atol: float = 0.0) -> bool:
        return all(abs(c) <= atol for c in self.poles.values()) and all(abs(b) <= atol for b in self.number)

    def dagger(self) -> Ket:
        return Ket({p.conjugate(): c.conjugate() for p, c in self.poles.items()},
                   [b.conjugate() / math.factorial(n) for n, b in enumerate(self.number)])

    def to_fock(self, dim: int) -> np.ndarray:
        """Amplitudes ``s_N`` of the state whose bra this is."""
        return self.dagger().to_fock(dim)

    def __repr__(self) -> str:
        return f"Bra(poles={dict(_sorted_items(self.poles))}, number={self.number})"


@dataclass(frozen=True, eq=False)
class ContourKernel:
    """``cauchy / (z2 - z1) + sum_p cols[p](z1) / (z2 - p)``."""

    cauchy: complex = 0j
    cols: Mapping[complex, Ket] = field(default_factory=dict)

    def __post_init__(self):
        cols = {complex(p): k for p, k in self.cols.items() if not k.is_zero()}
        if cols:
            scale = max(k.max_coeff() for k in cols.values())
            cols = {p: k for p, k in cols.items() if k.max_coeff() >= PRUNE_RTOL * scale}
        object.__setattr__(self, "cauchy", complex(self.cauchy))
        object.__setattr__(self, "cols", cols)

    def __call__(self, z1: complex, z2: complex) -> complex:
        val = self.cauchy / (z2 - z1)
        for p, k in self.cols.items():
            val += k(z1) / (z2 - p)
        return complex(val)

    def __add__(self, other: "ContourKernel") -> "ContourKernel":
        cols = dict(self.cols)
        for p, k in other.cols.items():
            cols[p] = cols[p] + k if p in cols else k
        return ContourKernel(self.cauchy + other.cauchy, cols)

    def __sub__(self, other: "ContourKernel") -> "ContourKernel":
        return self + (-1) * other

    def __mul__(self, k: complex) -> "ContourKernel":
        return ContourKernel(k * self.cauchy, {p: k * col for p, col in self.cols.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "ContourKernel") -> "ContourKernel":
        return kernel_product(self, other)

    def terms(self) -> list[tuple[complex, complex, complex]]:
        """Exponential-pole terms ``(c, a, p)`` meaning ``c e^{a z1} / (z2 - p)``."""
        out = []
        for p, k in sorted(self.cols.items(), key=lambda kv: (kv[0].real, kv[0].imag)):
            out.extend((c, a, p) for a, c in _sorted_items(k.exp))
        return out

    def max_coeff(self) -> float:
        return max([abs(self.cauchy)] + [k.max_coeff() for k in self.cols.values()])

    def to_fock(self, dim: int) -> np.ndarray:
        n = np.arange(dim)
        lf = 0.5 * np.array([math.lgamma(k + 1) for k in n])
        out = self.cauchy * np.eye(dim, dtype=complex)
        for p, k in self.cols.items():
            row = np.exp(n * np.log(p) - lf) if p != 0 else (n == 0).astype(complex)
            out += np.outer(k.to_fock(dim), row)
        return out

    def to_json(self) -> dict:
        terms = [{"c": [c.real, c.imag], "a": [a.real, a.imag], "p": [p.real, p.imag]} for c, a, p in self.terms()]
        for p, k in self.cols.items():
            if k.poly:
                terms.append({"poly": [[q.real, q.imag] for q in k.poly], "p": [p.real, p.imag]})
        return {"cauchy": [self.cauchy.real, self.cauchy.imag], "terms": terms}

    @classmethod
    def from_json(cls, data) -> "ContourKernel":
        def cx(v, where):
            if not (isinstance(v, (list, tuple)) and len(v) == 2):
                raise ParseError(f"expected [re, im], got {v!r}", field=where)
            return complex(float(v[0]), float(v[1]))

        try:
            cauchy = cx(data.get("cauchy", [0, 0]), "cauchy")
            out = ContourKernel(cauchy)
            for i, t in enumerate(data.get("terms", [])):
                p = cx(t["p"], f"terms[{i}].p")
                if "poly" in t:
                    col = Ket({}, [cx(q, f"terms[{i}].poly") for q in t["poly"]])
                else:
                    col = Ket({cx(t["a"], f"terms[{i}].a"): cx(t["c"], f"terms[{i}].c")})
                out = out + ContourKernel(0, {p: col})
        except (KeyError, AttributeError, TypeError, ValueError) as exc:
            raise ParseError(f"bad kernel: {exc}", field="terms") from exc
        return out


# -- constructors -------------------------------------------------------------

def coherent_ket(A: complex) -> Ket:
    A = complex(A)
    return Ket({A: math.exp(-0.5 * abs(A) ** 2)})


def coherent_bra(A: complex) -> Bra:
    A = complex(A)
    return Bra({A.conjugate(): math.exp(-0.5 * abs(A) ** 2)})


def number_ket(n: int) -> Ket:
    return Ket({}, [0] * n + [1 / math.sqrt(math.factorial(n))])


def number_bra(n: int) -> Bra:
    return Bra({}, [0] * n + [math.sqrt(math.factorial(n))])


def ket_of(coeffs, labels) -> Ket:
    """Ket of ``sum_j coeffs[j] |labels[j]>``."""
    exp: dict[complex, complex] = {}
    for lam, A in zip(coeffs, labels):
        A = complex(A)
        exp[A] = exp.get(A, 0) + complex(lam) * math.exp(-0.5 * abs(A) ** 2)
    return Ket(exp)


def bra_of(coeffs, labels) -> Bra:
    """Bra of the state ``sum_j coeffs[j] |labels[j]>``."""
    return ket_of(coeffs, labels).dagger()


def identity_kernel() -> ContourKernel:
    return ContourKernel(1.0)


def outer(ket: Ket, bra: Bra) -> ContourKernel:
    """``|ket><bra|``; the bra must have simple poles only."""
    if bra.number:
        raise ValueError("outer products with number-state bras are not represented as kernels")
    return ContourKernel(0, {p: c * ket for p, c in bra.poles.items()})


def kernel_of_projector(space: CoherentSpace) -> ContourKernel:
    """``sum_jk G_jk e^{A_j z1 - |A_j|^2/2 - |A_k|^2/2} / (z2 - A_k^*)``."""
    A = space.labels
    half = [math.exp(-0.5 * abs(a) ** 2) for a in A]
    cols = {}
    for k, Ak in enumerate(A):
        cols[Ak.conjugate()] = Ket({A[j]: space.G[j, k] * half[j] * half[k] for j in range(len(A))})
    return ContourKernel(0, cols)


def kernel_of_matrix(lam: np.ndarray, labels) -> ContourKernel:
    """``sum_jk lam[j, k] |A_j><A_k|``, an element of the algebra A(S)."""
    labels = [complex(a) for a in labels]
    half = [math.exp(-0.5 * abs(a) ** 2) for a in labels]
    cols = {}
    for k, Ak in enumerate(labels):
        cols[Ak.conjugate()] = Ket({labels[j]: lam[j, k] * half[j] * half[k] for j in range(len(labels))})
    return ContourKernel(0, cols)


# -- residue evaluations ------------------------------------------------------

def scalar(bra: Bra, ket: Ket) -> complex:
    """``<bra|ket>`` as the sum of residues of ``bra(z) ket(z)``."""
    val = sum(c * ket(p) for p, c in bra.poles.items())
    val += sum(b * ket.taylor(n) for n, b in enumerate(bra.number))
    return complex(val)


def kernel_apply_ket(theta: ContourKernel, ket: Ket) -> Ket:
    out = theta.cauchy * ket
    for p, col in theta.cols.items():
        out = out + ket(p) * col
    return out


def kernel_apply_bra(bra: Bra, theta: ContourKernel) -> Bra:
    out = theta.cauchy * bra
    return out + Bra({p: scalar(bra, col) for p, col in theta.cols.items()})


def kernel_product(t1: ContourKernel, t2: ContourKernel) -> ContourKernel:
    cols: dict[complex, Ket] = {}
    for q, k2 in t2.cols.items():
        col = t1.cauchy * k2
        for p, k1 in t1.cols.items():
            col = col + k2(p) * k1
        cols[q] = col
    for p, k1 in t1.cols.items():
        if t2.cauchy:
            cols[p] = cols[p] + t2.cauchy * k1 if p in cols else t2.cauchy * k1
    return ContourKernel(t1.cauchy * t2.cauchy, cols)


def kernel_trace(theta: ContourKernel) -> complex:
    if theta.cauchy != 0:
        raise NotTraceClass("the identity component is not trace class")
    return complex(sum(col(p) for p, col in theta.cols.items()))


def kernel_difference(t1: ContourKernel, t2: ContourKernel) -> float:
    """Largest coefficient of ``t1 - t2`` relative to the larger coefficient scale."""
    scale = max(t1.max_coeff(), t2.max_coeff(), 1e-300)
    diff = t1 - t2
    worst = max([abs(diff.cauchy)] + [col.max_coeff() for col in diff.cols.values()])
    return float(worst / scale)


def kernel_allclose(t1: ContourKernel, t2: ContourKernel, rtol: float = 1e-12) -> bool:
    """Coefficientwise comparison relative to the larger coefficient scale."""
    return kernel_difference(t1, t2) <= rtol


def lives_in_check(theta: ContourKernel, space: CoherentSpace, rtol: float = 1e-12) -> bool:
    """True iff ``Pi(S) Theta Pi(S) = Theta`` coefficientwise."""
    P = kernel_of_projector(space)
    return kernel_allclose(kernel_product(kernel_product(P, theta), P), theta, rtol)


def pole_set(obj) -> CSet:
    """Distinct pole locations (after cancellation) of a bra or kernel."""
    if isinstance(obj, Bra):
        poles = list(obj.poles)
        if obj.number and 0j not in obj.poles:
            poles.append(0j)
        return CSet(poles)
    if isinstance(obj, ContourKernel):
        return CSet(obj.cols)
    raise TypeError(f"no pole set for {type(obj).__name__}")
