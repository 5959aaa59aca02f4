"""Coherent subspaces H(S) spanned by finitely many coherent states.

The coherent states of distinct labels are linearly independent, so
``|A_1>, ..., |A_i>`` is a (non-orthogonal) basis of the ``i``-dimensional
space H(S).  Its Gram matrix ``g`` and inverse ``G`` are computed
analytically; everything that needs Fock-space vectors goes through
:mod:`cohspace.fock`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import fock
from .complex_sets import CSet
from .errors import DuplicateLabel, IllConditioned, InadequateTruncation, NotADensityMatrix, NotInSpace, QuadratureNotConverged
from .fock import DEFAULT_TRUNCATION, TruncationPolicy

MAX_COND = 1e12


def gram_matrix(labels) -> np.ndarray:
    """``g[j, k] = <A_j|A_k> = exp(A_j^* A_k - |A_j|^2/2 - |A_k|^2/2)``."""
    A = np.asarray(labels, dtype=complex)
    half = 0.5 * np.abs(A) ** 2
    return np.exp(np.outer(A.conj(), A) - half[:, None] - half[None, :])


@dataclass(frozen=True)
class GramTwoPoint:
    """Two-point Gram data: ``g = [[1, mu e^{i theta}], [mu e^{-i theta}, 1]]``."""

    mu: float
    theta: float

    @classmethod
    def of(cls, A1: complex, A2: complex) -> "GramTwoPoint":
        A1, A2 = complex(A1), complex(A2)
        mu = math.exp(-0.5 * abs(A1 - A2) ** 2)
        theta = (0.5j * (A2.conjugate() * A1 - A1.conjugate() * A2)).real
        return cls(mu, theta)

    def g(self) -> np.ndarray:
        ph = np.exp(1j * self.theta)
        return np.array([[1, self.mu * ph], [self.mu * ph.conjugate(), 1]])

    def G(self) -> np.ndarray:
        ph = np.exp(1j * self.theta)
        return np.array([[1, -self.mu * ph], [-self.mu * ph.conjugate(), 1]]) / (1 - self.mu**2)

    def eigvals(self) -> np.ndarray:
        return np.array([1 + self.mu, 1 - self.mu])

    def eigvecs(self) -> np.ndarray:
        ph = np.exp(1j * self.theta)
        return np.array([[ph, -ph], [1, 1]]) / math.sqrt(2)


@dataclass(frozen=True, eq=False)
class CoherentSpace:
    labels: tuple[complex, ...]
    g: np.ndarray = field(repr=False)
    G: np.ndarray = field(repr=False)
    eigvals: np.ndarray = field(repr=False)  # descending
    eigvecs: np.ndarray = field(repr=False)  # column j pairs with eigvals[j]

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def cond(self) -> float:
        return float(self.eigvals[0] / self.eigvals[-1]) if self.dim else 1.0

    @property
    def eigprojs(self) -> np.ndarray:
        """Stack of eigenprojectors ``E_j = e_j e_j^dag``, shape (i, i, i)."""
        e = self.eigvecs
        return np.einsum("aj,bj->jab", e, e.conj())

    @property
    def max_radius(self) -> float:
        return max((abs(A) for A in self.labels), default=0.0)

    def label_set(self) -> CSet:
        return CSet(self.labels)

    def two_point(self) -> GramTwoPoint:
        if self.dim != 2:
            raise ValueError("two-point data needs exactly two labels")
        return GramTwoPoint.of(*self.labels)

    def shifted(self, z: complex) -> "CoherentSpace":
        return build_space([A + z for A in self.labels])

    def rotated(self, t: float) -> "CoherentSpace":
        ph = np.exp(1j * t)
        return build_space([A * ph for A in self.labels])

    def extended(self, A: complex) -> "CoherentSpace":
        return build_space(self.labels + (complex(A),))

    def to_json(self) -> dict:
        return {"labels": [[A.real, A.imag] for A in self.labels]}


def build_space(labels, max_cond: float = MAX_COND) -> CoherentSpace:
    """Build H(S) for ordered, pairwise-distinct labels.

    Raises DuplicateLabel for labels closer than ``1e-12`` and IllConditioned
    when ``cond(g) > max_cond``.
    """
    labels = list(labels)
    cs = CSet(labels)
    if len(cs) != len(labels):
        raise DuplicateLabel("labels of a coherent space must be distinct")
    labs = cs.labels
    if len(labs) == 2:
        tp = GramTwoPoint.of(*labs)
        g, G = gram_matrix(labs), tp.G()
        vals, vecs = tp.eigvals(), tp.eigvecs()
    else:
        g = gram_matrix(labs)
        if labs:
            vals, vecs = np.linalg.eigh(g)
            vals, vecs = vals[::-1], vecs[:, ::-1]
        else:
            vals, vecs = np.zeros(0), np.zeros((0, 0), complex)
        G = (vecs / vals) @ vecs.conj().T if labs else np.zeros((0, 0), complex)
    if labs and (vals[-1] <= 0 or vals[0] / vals[-1] > max_cond):
        raise IllConditioned(f"cond(g) = {vals[0] / max(vals[-1], 1e-300):.3g} exceeds {max_cond:.3g}")
    for arr in (g, G, vals, vecs):
        arr.setflags(write=False)
    return CoherentSpace(labs, g, G, vals, vecs)


# -- Fock-space operators -----------------------------------------------------

def basis_vectors(space: CoherentSpace, trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> np.ndarray:
    return fock.coherent_matrix(space.labels, trunc)


def projector(space: CoherentSpace, trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> np.ndarray:
    """``Pi(S) = sum_jk G_jk |A_j><A_k|`` on the retained block."""
    V = basis_vectors(space, trunc)
    return V @ space.G @ V.conj().T


def perp_projector(space: CoherentSpace, trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> np.ndarray:
    return np.eye(trunc.dim) - projector(space, trunc)


def gs_chain(space: CoherentSpace, trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> list[np.ndarray]:
    """Rank-one Gram-Schmidt increments ``varpi(A_i | A_1..A_{i-1})``.

    Built by deflation: ``u_i = sqrt(tau_i) Pi_perp(A_1..A_{i-1}) |A_i>`` with
    ``tau_i = 1 / Tr[Pi_perp(A_1..A_{i-1}) Pi(A_i)]``; no Gram inverse is used.
    """
    V = basis_vectors(space, trunc)
    P = np.zeros((trunc.dim, trunc.dim), complex)
    chain = []
    for i in range(space.dim):
        v = V[:, i]
        w = v - P @ v
        tau = 1.0 / np.vdot(v, w).real  # Tr[Pi_perp Pi(A_i)] = <A_i|Pi_perp|A_i>
        u = math.sqrt(tau) * w
        piece = np.outer(u, u.conj())
        chain.append(piece)
        P = P + piece
    return chain


def chain_projector(A: complex, previous, trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> np.ndarray:
    """``varpi(A | previous...)``: the last element of the chain over ``previous + (A,)``."""
    return gs_chain(build_space(tuple(previous) + (complex(A),)), trunc)[-1]


# -- coordinates in the coherent basis ----------------------------------------

def expand(s: np.ndarray, space: CoherentSpace, trunc: TruncationPolicy = DEFAULT_TRUNCATION, tol: float = 1e-8) -> np.ndarray:
    """Coordinates ``s_j = sum_k G_jk <A_k|s>`` of a vector lying in H(S)."""
    V = basis_vectors(space, trunc)
    overlaps = V.conj().T @ s
    coords = space.G @ overlaps
    resid = np.linalg.norm(V @ coords - s)
    if resid > tol * max(1.0, np.linalg.norm(s)):
        raise NotInSpace(f"vector is {resid:.3g} away from H(S)")
    return coords


def synthesize(coords: np.ndarray, space: CoherentSpace, trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> np.ndarray:
    return basis_vectors(space, trunc) @ np.asarray(coords, complex)


def coord_overlap(u: np.ndarray, v: np.ndarray, space: CoherentSpace) -> complex:
    """``<u|v> = u^dag g v`` for coordinate vectors."""
    return complex(np.conj(u) @ space.g @ v)


def coord_norm(u: np.ndarray, space: CoherentSpace) -> float:
    return math.sqrt(max(coord_overlap(u, u, space).real, 0.0))


# -- moment and eigenvalue-type identities ------------------------------------

def s_function(r) -> np.ndarray | float:
    """``|A|^2 / (exp(|A|^2) - 1)``, continued to 1 at the origin."""
    x = np.asarray(r, dtype=float) ** 2
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.where(x == 0, 1.0, x / np.expm1(np.where(x == 0, 1.0, x)))
    return float(out) if out.ndim == 0 else out


def _ell_trunc(space: CoherentSpace, trunc: TruncationPolicy) -> None:
    trunc.require(space.max_radius)


def moment_traces(space: CoherentSpace, ells=(1, 2, 3), trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> dict:
    """Numeric traces against their closed forms.

    Keys ``("a", l)``: Tr[a^l Pi(S)] vs sum A_j^l; ``("chain", l, i)``:
    Tr[a^l varpi_i] vs A_i^l; ``"x"``, ``"p"``: sqrt(2) Re/Im of sum A_j;
    ``"n"`` (two labels only): |A1|^2 + |A2|^2 + s(|A1 - A2|).
    Values are ``(numeric, analytic, abs residual)``.
    """
    _ell_trunc(space, trunc)
    a, _ = fock.ladder_ops(trunc)
    x, p = fock.quadratures(trunc)
    P = projector(space, trunc)
    chain = gs_chain(space, trunc)
    A = np.array(space.labels)
    out = {}

    def rec(key, num, ana):
        out[key] = (complex(num), complex(ana), abs(complex(num) - complex(ana)))

    for ell in ells:
        al = np.linalg.matrix_power(a, ell)
        rec(("a", ell), np.trace(al @ P), np.sum(A**ell))
        for i, w in enumerate(chain):
            rec(("chain", ell, i), np.trace(al @ w), A[i] ** ell)
    rec("x", np.trace(x @ P), math.sqrt(2) * np.sum(A).real)
    rec("p", np.trace(p @ P), math.sqrt(2) * np.sum(A).imag)
    if space.dim == 2:
        rec("n", np.trace(fock.number_op(trunc) @ P),
            abs(A[0]) ** 2 + abs(A[1]) ** 2 + s_function(abs(A[0] - A[1])))
    return out


def eigen_relation_check(space: CoherentSpace, ell: int = 1, trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> dict:
    """Residuals of the annihilation-operator relations for the last label.

    ``chain``: ||varpi a^l varpi - A_last^l varpi||_F with
    ``varpi = varpi(A_last | earlier labels)``;
    ``perp``: ||Pi_perp(S) a^l Pi(S)||_F, and ``perp_prefix`` for the space
    without the last label (zero when that space is empty).
    """
    _ell_trunc(space, trunc)
    a, _ = fock.ladder_ops(trunc)
    al = np.linalg.matrix_power(a, ell)
    w = gs_chain(space, trunc)[-1]
    A_last = space.labels[-1]
    P = projector(space, trunc)
    Pperp = np.eye(trunc.dim) - P
    res = {
        "chain": fock.frobenius_norm(w @ al @ w - A_last**ell * w),
        "perp": fock.frobenius_norm(Pperp @ al @ P),
    }
    if space.dim > 1:
        prefix = build_space(space.labels[:-1])
        Pp = projector(prefix, trunc)
        res["perp_prefix"] = fock.frobenius_norm((np.eye(trunc.dim) - Pp) @ al @ Pp)
    else:
        res["perp_prefix"] = 0.0
    return res


def covariance_check(space: CoherentSpace, z: complex = 0.0, t: float = 0.0,
                     trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> dict:
    """Frobenius residuals of displacement and free-evolution covariance."""
    z = complex(z)
    shifted, rotated = space.shifted(z), space.rotated(t)
    trunc.require(max(shifted.max_radius, space.max_radius + abs(z)))
    P = projector(space, trunc)
    D = fock.displacement_op(z, trunc)
    U = fock.evolution_op(t, trunc)
    chain, chain_shift, chain_rot = gs_chain(space, trunc), gs_chain(shifted, trunc), gs_chain(rotated, trunc)
    return {
        "displacement": fock.frobenius_norm(D @ P @ D.conj().T - projector(shifted, trunc)),
        "displacement_chain": max(fock.frobenius_norm(D @ w @ D.conj().T - ws) for w, ws in zip(chain, chain_shift)),
        "evolution": fock.frobenius_norm(U @ P @ U.conj().T - projector(rotated, trunc)),
        "evolution_chain": max(fock.frobenius_norm(U @ w @ U.conj().T - wr) for w, wr in zip(chain, chain_rot)),
    }


# -- generalized Q-functions --------------------------------------------------

def check_density(rho: np.ndarray, tol: float = 1e-8) -> None:
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise NotADensityMatrix(f"shape {rho.shape} is not square")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise NotADensityMatrix("not Hermitian")
    if abs(np.trace(rho) - 1) > tol:
        raise NotADensityMatrix(f"trace {np.trace(rho):.6g} != 1")
    if np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0] < -tol:
        raise NotADensityMatrix("not positive semidefinite")


def q_function(rho: np.ndarray, space: CoherentSpace, trunc: TruncationPolicy = DEFAULT_TRUNCATION,
               tol: float = 1e-8) -> float:
    """``Q(S) = Tr[Pi(S) rho]``."""
    check_density(rho, tol)
    if rho.shape[0] != trunc.dim:
        trunc = TruncationPolicy(rho.shape[0] - 1, trunc.tail_tol, trunc.allow_small)
    return float(np.trace(projector(space, trunc) @ rho).real)


# -- resolution of the identity by quadrature ---------------------------------

def _batch_block_projectors(label_rows: np.ndarray, block: int) -> np.ndarray:
    """Exact ``block x block`` corner of Pi for each row of labels, shape (N, b, b).

    The corner only needs the first ``block`` amplitudes of each coherent state
    and the analytic Gram inverse, so no Fock cutoff enters.
    """
    N, n = label_rows.shape
    k = np.arange(block)
    logfact = 0.5 * np.cumsum(np.log(np.maximum(k, 1)))
    V = np.exp(-0.5 * np.abs(label_rows)[:, None, :] ** 2 - logfact[None, :, None]) \
        * label_rows[:, None, :] ** k[None, :, None]
    half = 0.5 * np.abs(label_rows) ** 2
    g = np.exp(np.einsum("Nj,Nk->Njk", label_rows.conj(), label_rows) - half[:, :, None] - half[:, None, :])
    G = np.linalg.inv(g)
    return np.einsum("Naj,Njk,Nbk->Nab", V, G, V.conj())


def disk_nodes(disk_radius: float, grid: tuple[int, int]) -> tuple[np.ndarray, np.ndarray]:
    """Polar product rule on ``|A| <= disk_radius``: Gauss-Legendre in r (with
    the Jacobian folded in) times the trapezoid rule in angle."""
    n_r, n_phi = grid
    x, w = np.polynomial.legendre.leggauss(n_r)
    r = 0.5 * disk_radius * (x + 1)
    wr = 0.5 * disk_radius * w * r
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    nodes = (r[:, None] * np.exp(1j * phi[None, :])).ravel()
    weights = (wr[:, None] * np.full(n_phi, 2 * np.pi / n_phi)[None, :]).ravel()
    return nodes, weights


def _integrand_blocks(nodes: np.ndarray, offsets, block: int, rank_one: bool) -> np.ndarray:
    offs = np.asarray([complex(d) for d in offsets], dtype=complex)
    if rank_one:
        # varpi(A | A+d_1, ..., A+d_{n-1}) = Pi(all) - Pi(others)
        others = nodes[:, None] + offs[None, :]
        full = np.concatenate([others, nodes[:, None]], axis=1)
        out = _batch_block_projectors(full, block)
        if len(offs):
            out = out - _batch_block_projectors(others, block)
        return out
    full = np.concatenate([nodes[:, None], nodes[:, None] + offs[None, :]], axis=1)
    return _batch_block_projectors(full, block)


def resolution_quadrature(offsets=(), disk_radius: float = 6.0, grid: tuple[int, int] = (200, 256),
                          block: int = 6, rank_one: bool = False, check_convergence: bool = False,
                          conv_tol: float = 1e-4, chunk: int = 16384) -> np.ndarray:
    """Quadrature estimate of the low-Fock corner of

        (1/(n pi)) * integral d^2A  Pi(A, A+d_2, ..., A+d_n)        (rank_one=False)
        (1/pi)     * integral d^2A  varpi(A | A+d_1, ..., A+d_{n-1})  (rank_one=True)

    which should be the identity.  ``offsets`` are the fixed ``d``'s.  With
    ``check_convergence`` the estimate is recomputed on the doubled grid and
    QuadratureNotConverged is raised if the two differ by more than
    ``conv_tol``.
    """
    offsets = tuple(offsets)
    n = 1 if rank_one else len(offsets) + 1
    nodes, weights = disk_nodes(disk_radius, grid)
    total = np.zeros((block, block), complex)
    for s in range(0, len(nodes), chunk):
        blk = _integrand_blocks(nodes[s:s + chunk], offsets, block, rank_one)
        total += np.einsum("N,Nab->ab", weights[s:s + chunk], blk)
    total /= n * np.pi
    if check_convergence:
        finer = resolution_quadrature(offsets, disk_radius, (2 * grid[0], 2 * grid[1]), block, rank_one, chunk=chunk)
        diff = float(np.max(np.abs(finer - total)))
        if diff > conv_tol:
            raise QuadratureNotConverged(f"grid doubling changed the estimate by {diff:.3g}")
    return total


def q_integral(rho_block: np.ndarray, offsets=(), disk_radius: float = 6.0,
               grid: tuple[int, int] = (200, 256), chunk: int = 16384) -> float:
    """``(1/(n pi)) * integral d^2A Q(A, A+d_2, ...)`` for a density matrix
    supported on the first ``rho_block.shape[0]`` number states."""
    check_density(rho_block)
    offsets = tuple(offsets)
    n = len(offsets) + 1
    block = rho_block.shape[0]
    nodes, weights = disk_nodes(disk_radius, grid)
    total = 0.0
    for s in range(0, len(nodes), chunk):
        blk = _integrand_blocks(nodes[s:s + chunk], offsets, block, False)
        q = np.einsum("Nab,ba->N", blk, rho_block).real
        total += float(weights[s:s + chunk] @ q)
    return total / (n * np.pi)


# -- states orthogonal to H(S) ------------------------------------------------

def orthogonal_state(space: CoherentSpace, trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> np.ndarray:
    """Normalized state with Bargmann function proportional to prod_j (z - A_j^*).

    Its Bargmann function vanishes at every ``A_j^*``, so it is orthogonal to
    each ``|A_j>`` and hence to H(S).
    """
    if 4 * space.dim > trunc.n_max:
        raise InadequateTruncation(f"|S|={space.dim} needs n_max >= {4 * space.dim}")
    coeffs = np.poly(np.conj(np.array(space.labels, dtype=complex)))[::-1] if space.dim else np.array([1.0])
    n = np.arange(len(coeffs))
    amps = np.zeros(trunc.dim, complex)
    amps[: len(coeffs)] = coeffs * np.exp(0.5 * np.cumsum(np.log(np.maximum(n, 1))))
    return amps / np.linalg.norm(amps)


def cross_gram(space1: CoherentSpace, space2: CoherentSpace) -> np.ndarray:
    """``<A_k|B_l>`` for labels of two spaces."""
    A = np.array(space1.labels, complex)
    B = np.array(space2.labels, complex)
    return np.exp(np.outer(A.conj(), B) - 0.5 * np.abs(A)[:, None] ** 2 - 0.5 * np.abs(B)[None, :] ** 2)


def projector_product_trace(space1: CoherentSpace, space2: CoherentSpace) -> complex:
    """``Tr[Pi(S1) Pi(S2)] = sum G1_jk <A_k|B_l> G2_lm <B_m|A_j>``, no Fock cutoff."""
    c = cross_gram(space1, space2)
    return complex(np.trace(space1.G @ c @ space2.G @ c.conj().T))
