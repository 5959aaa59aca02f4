"""Truncated number-basis linear algebra.

States are complex ndarrays of shape ``(n_max + 1,)`` and operators are
``(n_max + 1, n_max + 1)`` arrays with element ``[M, N] = <M|op|N>``.
Everything here is plain numpy; the module is the numerical reference
against which the analytic identities elsewhere in the package are checked.
"""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import eval_genlaguerre, gammaln
from scipy.stats import poisson

from .errors import DimensionMismatch, InadequateTruncation, ParseError, TruncationWarning


def recommended_n_max(radius: float) -> int:
    """Poisson mean + 10 sigma cutoff for a coherent label of modulus ``radius``."""
    r2 = float(radius) ** 2
    return math.ceil(r2 + 10.0 * math.sqrt(r2 + 1.0))


@dataclass(frozen=True)
class TruncationPolicy:
    n_max: int = 64
    tail_tol: float = 1e-12
    allow_small: bool = False  # accept an undersized cutoff with a TruncationWarning

    @property
    def dim(self) -> int:
        return self.n_max + 1

    def tail_mass(self, radius: float) -> float:
        """Probability weight of ``|A>`` above ``n_max`` for ``|A| = radius``."""
        return float(poisson.sf(self.n_max, float(radius) ** 2))

    def require(self, radius: float) -> None:
        need = recommended_n_max(radius)
        if self.n_max >= need and self.tail_mass(radius) < self.tail_tol:
            return
        msg = f"n_max={self.n_max} too small for |A|={radius:.4g} (need >= {need})"
        if not self.allow_small:
            raise InadequateTruncation(msg)
        warnings.warn(msg, TruncationWarning, stacklevel=3)


DEFAULT_TRUNCATION = TruncationPolicy()


def coherent_amps(A: complex, dim: int) -> np.ndarray:
    """Amplitudes ``exp(-|A|^2/2) A^N / sqrt(N!)`` for ``N < dim``, no checks."""
    A = complex(A)
    out = np.empty(dim, dtype=complex)
    out[0] = math.exp(-0.5 * abs(A) ** 2)
    for n in range(1, dim):
        out[n] = out[n - 1] * A / math.sqrt(n)
    return out


def coherent_vector(A: complex, trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> np.ndarray:
    trunc.require(abs(A))
    return coherent_amps(A, trunc.dim)


def coherent_matrix(labels, trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> np.ndarray:
    """Columns are the truncated coherent vectors of ``labels``."""
    labels = list(labels)
    if labels:
        trunc.require(max(abs(A) for A in labels))
    return np.stack([coherent_amps(A, trunc.dim) for A in labels], axis=1) if labels else np.zeros((trunc.dim, 0), complex)


def number_vector(n: int, trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> np.ndarray:
    if not 0 <= n <= trunc.n_max:
        raise InadequateTruncation(f"|{n}> is outside the retained block")
    v = np.zeros(trunc.dim, dtype=complex)
    v[n] = 1.0
    return v


def ladder_ops(trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> tuple[np.ndarray, np.ndarray]:
    a = np.diag(np.sqrt(np.arange(1, trunc.dim, dtype=float)), k=1).astype(complex)
    return a, a.conj().T


def quadratures(trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> tuple[np.ndarray, np.ndarray]:
    a, ad = ladder_ops(trunc)
    return (a + ad) / math.sqrt(2), 1j * (ad - a) / math.sqrt(2)


def number_op(trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> np.ndarray:
    return np.diag(np.arange(trunc.dim, dtype=float)).astype(complex)


def displacement_op(z: complex, trunc: TruncationPolicy = DEFAULT_TRUNCATION, *, check: bool = True) -> np.ndarray:
    """Retained block of ``D(z) = exp(z a^dag - z^* a)``.

    Elements come from the closed form (m >= n)

        <m|D(z)|n> = sqrt(n!/m!) z^(m-n) exp(-|z|^2/2) L_n^(m-n)(|z|^2)

    with ``<m|D(z)|n> = conj(<n|D(-z)|m>)`` for m < n.
    """
    z = complex(z)
    if check:
        trunc.require(abs(z))
    dim = trunc.dim
    m, n = np.meshgrid(np.arange(dim), np.arange(dim), indexing="ij")
    lo, hi = np.minimum(m, n), np.maximum(m, n)
    k = hi - lo
    x = abs(z) ** 2
    # z^k for the lower triangle, (-z^*)^k for the upper one
    base = np.where(m >= n, z, -z.conjugate())
    power = np.power(base, k)
    ratio = np.exp(0.5 * (gammaln(lo + 1) - gammaln(hi + 1)))
    lag = eval_genlaguerre(lo, k, x)
    return ratio * power * math.exp(-0.5 * x) * lag


def evolution_op(t: float, trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> np.ndarray:
    """``exp(i t a^dag a)``, exactly diagonal."""
    return np.diag(np.exp(1j * float(t) * np.arange(trunc.dim)))


# -- generic linear algebra ---------------------------------------------------

def _check_dims(*arrays) -> None:
    dims = {arr.shape[0] for arr in arrays} | {arr.shape[-1] for arr in arrays}
    if len(dims) != 1:
        raise DimensionMismatch(f"incompatible shapes {[arr.shape for arr in arrays]}")


def inner(f: np.ndarray, s: np.ndarray) -> complex:
    _check_dims(f, s)
    return complex(np.vdot(f, s))


def apply(op: np.ndarray, s: np.ndarray) -> np.ndarray:
    _check_dims(op, s)
    return op @ s


def compose(*ops: np.ndarray) -> np.ndarray:
    _check_dims(*ops)
    out = ops[0]
    for op in ops[1:]:
        out = out @ op
    return out


def adjoint(op: np.ndarray) -> np.ndarray:
    return op.conj().T


def outer(ket: np.ndarray, bra: np.ndarray) -> np.ndarray:
    """``|ket><bra|``."""
    _check_dims(ket, bra)
    return np.outer(ket, bra.conj())


def trace(op: np.ndarray) -> complex:
    return complex(np.trace(op))


def frobenius_norm(op: np.ndarray) -> float:
    return float(np.linalg.norm(op))


def norm(s: np.ndarray) -> float:
    return float(np.linalg.norm(s))


def gram_schmidt(vectors: np.ndarray) -> np.ndarray:
    """Orthonormalize columns in order (modified Gram-Schmidt, one re-pass)."""
    Q = np.array(vectors, dtype=complex)
    for k in range(Q.shape[1]):
        for _ in range(2):
            for j in range(k):
                Q[:, k] -= np.vdot(Q[:, j], Q[:, k]) * Q[:, j]
        Q[:, k] /= np.linalg.norm(Q[:, k])
    return Q


# -- JSON ---------------------------------------------------------------------

def vector_to_json(s: np.ndarray) -> dict:
    return {"n_max": int(s.shape[0] - 1), "amps": [[float(c.real), float(c.imag)] for c in s]}


def vector_from_json(data) -> np.ndarray:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        n_max = int(data["n_max"])
        amps = np.array([complex(re, im) for re, im in data["amps"]], dtype=complex)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad Fock state: {exc}", field="amps") from exc
    if amps.shape[0] != n_max + 1:
        raise ParseError(f"{amps.shape[0]} amplitudes for n_max={n_max}", field="amps")
    if not np.all(np.isfinite(amps)):
        raise ParseError("non-finite amplitude", field="amps")
    return amps
