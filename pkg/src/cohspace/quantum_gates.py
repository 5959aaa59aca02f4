"""Quantum CNOT gates on products of coherent spaces.

A gate is stored by its matrix ELEMENTS ``<A_k B_m| U |A_l B_n>`` in the
non-orthogonal product basis.  A coordinate vector ``v`` (so that the state
is ``sum v[l, n] |A_l>|B_n>``) is mapped to ``(G_A x G_B) M v``; with this
rule the elements of the identity on H(S) are ``g(S)`` and
unitarity reads ``U (G_A x G_B) U^dag = g_A x g_B``.

Control ``j`` (the eigenvector ``e_j`` of ``g_A``) applies the target
operator ``U_jT = V(phi)`` with ``phi = pi`` on eigencomponent ``j`` of
``g_B`` (none for ``j = 0``).  On coordinates ``G_B U_jT = 1 - 2 E_j``, an
involution.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import dirac_contour as dc
from . import fock
from .coherent_spaces import CoherentSpace, build_space
from .errors import DegenerateSpectrum, DimensionMismatch, IllConditioned
from .fock import DEFAULT_TRUNCATION, TruncationPolicy

DEGENERACY_RTOL = 1e-8


@dataclass(frozen=True, eq=False)
class GateMatrix:
    entries: np.ndarray = field(repr=False)
    space_A: CoherentSpace
    space_B: CoherentSpace
    target_ops: tuple[np.ndarray, ...] = field(default=(), repr=False)

    @property
    def dims(self) -> tuple[int, int]:
        return self.space_A.dim, self.space_B.dim

    @property
    def g(self) -> np.ndarray:
        return np.kron(self.space_A.g, self.space_B.g)

    @property
    def G(self) -> np.ndarray:
        return np.kron(self.space_A.G, self.space_B.G)

    def to_json(self) -> dict:
        cx = lambda m: [[[complex(x).real, complex(x).imag] for x in row] for row in m]
        return {
            "dims": list(self.dims),
            "labels_A": self.space_A.to_json()["labels"],
            "labels_B": self.space_B.to_json()["labels"],
            "entries": cx(self.entries),
            "g_A": cx(self.space_A.g), "g_B": cx(self.space_B.g),
            "G_A": cx(self.space_A.G), "G_B": cx(self.space_B.G),
        }


# -- coordinate algebra -------------------------------------------------------

def _inverse_metric(M, space):
    if isinstance(M, GateMatrix):
        return M.entries, M.G
    if space is None:
        raise ValueError("a single-space matrix needs its CoherentSpace")
    return np.asarray(M), space.G


def metric_apply(M, v, space: CoherentSpace | None = None) -> np.ndarray:
    """Coordinates of ``Theta |v>`` given the elements of Theta: ``G M v``."""
    mat, G = _inverse_metric(M, space)
    v = np.asarray(v, complex)
    if mat.shape[1] != v.shape[0] or G.shape[0] != mat.shape[0]:
        raise DimensionMismatch(f"matrix {mat.shape} cannot act on vector {v.shape}")
    return G @ (mat @ v)


def metric_product(theta: np.ndarray, phi: np.ndarray, space: CoherentSpace) -> np.ndarray:
    """Elements of ``Theta Phi``: ``Theta G Phi``."""
    if theta.shape != phi.shape or theta.shape[1] != space.dim:
        raise DimensionMismatch(f"{theta.shape} vs {phi.shape} in a {space.dim}-dim space")
    return theta @ space.G @ phi


def metric_commutator(theta: np.ndarray, phi: np.ndarray, space: CoherentSpace) -> np.ndarray:
    return metric_product(theta, phi, space) - metric_product(phi, theta, space)


def metric_norm(v: np.ndarray, g: np.ndarray) -> float:
    return math.sqrt(max(float(np.real(np.conj(v) @ g @ v)), 0.0))


def unitarity_residual(M: np.ndarray, G: np.ndarray, g: np.ndarray) -> float:
    return float(np.max(np.abs(M @ G @ M.conj().T - g)))


# -- construction -------------------------------------------------------------

def phase_operator(space: CoherentSpace, phases) -> np.ndarray:
    """``V(phi) = sum_k exp(i phi_k) gamma_k E_k``."""
    E = space.eigprojs
    return np.einsum("k,kab->ab", np.exp(1j * np.asarray(phases, float)) * space.eigvals, E)


def target_operators(space_B: CoherentSpace, n_controls: int) -> list[np.ndarray]:
    """``U_0T = V(0, ..., 0)`` and ``U_jT`` with a pi phase on eigencomponent j."""
    ops = []
    for j in range(n_controls):
        phases = np.zeros(space_B.dim)
        if j:
            phases[j] = np.pi
        ops.append(phase_operator(space_B, phases))
    return ops


def _check_spectrum(space: CoherentSpace, name: str) -> None:
    vals = space.eigvals
    if len(vals) > 1 and np.min(np.abs(np.diff(vals))) < DEGENERACY_RTOL * vals[0]:
        raise DegenerateSpectrum(f"Gram spectrum of space {name} is degenerate: {vals}")


def build_cnot(space_A: CoherentSpace, space_B: CoherentSpace, max_cond: float = 1e12) -> GateMatrix:
    """``U = sum_j gamma_jA E_j(S_A) x U_jT`` for equal-size control/target spaces."""
    if space_A.dim != space_B.dim or space_A.dim < 2:
        raise DimensionMismatch(f"control/target sizes {space_A.dim}, {space_B.dim}")
    for sp, name in ((space_A, "A"), (space_B, "B")):
        if sp.cond > max_cond:
            raise IllConditioned(f"cond(g_{name}) = {sp.cond:.3g}")
        if sp.dim > 2:
            _check_spectrum(sp, name)
    targets = target_operators(space_B, space_A.dim)
    E = space_A.eigprojs
    U = sum(space_A.eigvals[j] * np.kron(E[j], targets[j]) for j in range(space_A.dim))
    return GateMatrix(U, space_A, space_B, tuple(targets))


def build_cnot2(space_A: CoherentSpace, space_B: CoherentSpace) -> GateMatrix:
    if space_A.dim != 2 or space_B.dim != 2:
        raise DimensionMismatch("build_cnot2 needs two 2-point spaces")
    return build_cnot(space_A, space_B)


def build_cnot4(space_A: CoherentSpace, space_B: CoherentSpace) -> GateMatrix:
    if space_A.dim != 4 or space_B.dim != 4:
        raise DimensionMismatch("build_cnot4 needs two 4-point spaces")
    return build_cnot(space_A, space_B)


def square_space(radius: float = 1.0, phase: float = 0.0) -> CoherentSpace:
    """Four labels ``radius * e^{i phase} * (1, i, -1, -i)``."""
    rot = radius * np.exp(1j * phase)
    return build_space([rot * w for w in (1, 1j, -1, -1j)])


def reduced_form(gate: GateMatrix) -> np.ndarray:
    """``E_1(S_A) x 1 + sum_{j>1} E_j(S_A) x U_jT``: the gate once every
    gamma_A -> 1, with the unchanged-target branch written as the identity."""
    E = gate.space_A.eigprojs
    out = np.kron(E[0], np.eye(gate.space_B.dim))
    return out + sum(np.kron(E[j], gate.target_ops[j]) for j in range(1, gate.space_A.dim))


# -- verification helpers -----------------------------------------------------

def target_map(gate: GateMatrix, j: int) -> np.ndarray:
    """Coordinate action ``G_B U_jT`` of control eigenvector ``j`` on the target."""
    return gate.space_B.G @ gate.target_ops[j]


def target_pm(space_B: CoherentSpace) -> tuple[np.ndarray, np.ndarray]:
    """``T_p, T_m = (e_1 +- e_2) / sqrt(2)`` from the first two eigenvectors."""
    e = space_B.eigvecs
    return (e[:, 0] + e[:, 1]) / math.sqrt(2), (e[:, 0] - e[:, 1]) / math.sqrt(2)


def control_eigen_residual(gate: GateMatrix, j: int, T: np.ndarray) -> float:
    """``|| U(e_j x T) - e_j x (G_B U_jT T) ||`` in the product metric."""
    e_j = gate.space_A.eigvecs[:, j]
    got = metric_apply(gate, np.kron(e_j, T))
    want = np.kron(e_j, target_map(gate, j) @ T)
    return metric_norm(got - want, gate.g)


def involution_check(gate: GateMatrix) -> dict:
    """Per control eigenvector: ``max|(G_B U_jT)^2 - 1|``, metric unitarity of
    ``U_jT`` and the condition number of the target map."""
    out = {}
    I = np.eye(gate.space_B.dim)
    for j in range(gate.space_A.dim):
        T = target_map(gate, j)
        out[j] = {
            "involution": float(np.max(np.abs(T @ T - I))),
            "unitarity": unitarity_residual(gate.target_ops[j], gate.space_B.G, gate.space_B.g),
            "cond": float(np.linalg.cond(T)),
        }
    return out


# -- Fock-space embedding -----------------------------------------------------

@dataclass(frozen=True, eq=False)
class LiftedGate:
    """``sum C[k,m,l,n] |A_k><A_l| x |B_m><B_n|`` kept in factored form.

    ``C = (G_A x G_B) M (G_A x G_B)`` so that the operator has the stored
    matrix elements.  States of the two modes are ``(dim, dim)`` arrays.
    """

    VA: np.ndarray
    VB: np.ndarray
    C: np.ndarray  # shape (nA, nB, nA, nB)

    def apply(self, psi: np.ndarray) -> np.ndarray:
        psi = np.asarray(psi).reshape(self.VA.shape[0], self.VB.shape[0])
        ov = self.VA.conj().T @ psi @ self.VB.conj()  # <A_l B_n|psi>
        coef = np.einsum("kmln,ln->km", self.C, ov)
        return self.VA @ coef @ self.VB.T

    def matrix(self) -> np.ndarray:
        L = np.einsum("ak,bm->abkm", self.VA, self.VB).reshape(-1, self.C.shape[0] * self.C.shape[1])
        Cm = self.C.reshape(L.shape[1], L.shape[1])
        return L @ Cm @ L.conj().T


def lift_to_fock(gate: GateMatrix, trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> LiftedGate:
    nA, nB = gate.dims
    C = (gate.G @ gate.entries @ gate.G).reshape(nA, nB, nA, nB)
    return LiftedGate(fock.coherent_matrix(gate.space_A.labels, trunc),
                      fock.coherent_matrix(gate.space_B.labels, trunc), C)


def product_state(v: np.ndarray, gate: GateMatrix, trunc: TruncationPolicy = DEFAULT_TRUNCATION) -> np.ndarray:
    """Fock array ``sum v[l, n] |A_l>|B_n>`` of a coordinate vector."""
    nA, nB = gate.dims
    VA = fock.coherent_matrix(gate.space_A.labels, trunc)
    VB = fock.coherent_matrix(gate.space_B.labels, trunc)
    return VA @ np.asarray(v).reshape(nA, nB) @ VB.T


def contour_apply(gate: GateMatrix, v: np.ndarray) -> np.ndarray:
    """Apply the gate through the residue engine, mode by mode.

    The operator is expanded as ``sum C |A_k><A_l| x |B_m><B_n|``; each factor
    acts on each coherent ket of the input by residues, and the coefficients
    of ``e^{A_k z + B_m w}`` in the resulting two-mode function are read back
    as coordinates.
    """
    nA, nB = gate.dims
    A, B = gate.space_A.labels, gate.space_B.labels
    C = (gate.G @ gate.entries @ gate.G).reshape(nA, nB, nA, nB)
    v = np.asarray(v, complex).reshape(nA, nB)

    def mode_table(labels):
        kets = [dc.coherent_ket(a) for a in labels]
        bras = [dc.coherent_bra(a) for a in labels]
        # out[k, l, l2] = coefficient of e^{labels[k] z} in |k><l| applied to ket l2
        out = np.zeros((len(labels),) * 3, complex)
        for k in range(len(labels)):
            for l in range(len(labels)):
                theta = dc.outer(kets[k], bras[l])
                for l2 in range(len(labels)):
                    res = dc.kernel_apply_ket(theta, kets[l2])
                    out[k, l, l2] = res.exp.get(complex(labels[k]), 0)
        return out

    TA, TB = mode_table(A), mode_table(B)
    coeff = np.einsum("kmln,klp,mnq,pq->km", C, TA, TB, v)
    norm_A = np.array([math.exp(-0.5 * abs(a) ** 2) for a in A])
    norm_B = np.array([math.exp(-0.5 * abs(b) ** 2) for b in B])
    return (coeff / np.outer(norm_A, norm_B)).ravel()


def orthonormal_block(lifted: LiftedGate) -> np.ndarray:
    """Matrix of the lifted gate in the product of Gram-Schmidt bases of
    ``span{|A_k>}`` and ``span{|B_m>}`` (orthonormalized in Fock space)."""
    QA, QB = fock.gram_schmidt(lifted.VA), fock.gram_schmidt(lifted.VB)
    nA, nB = QA.shape[1], QB.shape[1]
    out = np.zeros((nA * nB, nA * nB), complex)
    for k in range(nA):
        for m in range(nB):
            img = lifted.apply(np.outer(QA[:, k], QB[:, m]))
            out[:, k * nB + m] = (QA.conj().T @ img @ QB.conj()).ravel()
    return out


TEXTBOOK_CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
