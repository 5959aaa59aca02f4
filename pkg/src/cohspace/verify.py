"""Seeded verification suites.

Each suite returns a list of :class:`Check` records; a check passes when its
residual does not exceed its tolerance.  Tolerances default to
``DEFAULT_TOLERANCES`` and can be overridden per name through
``VerifyConfig.tolerances``.
"""
from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import classical_gates as cg
from . import coherent_spaces as cs
from . import dirac_contour as dc
from . import fock
from . import quantum_gates as qg
from .complex_sets import EMPTY, CSet, decode, encode, powerset
from .fock import TruncationPolicy

DEFAULT_TOLERANCES = {
    "exact": 0.0,
    "projector": 1e-9,
    "moment": 1e-7,
    "number_moment": 1e-8,
    "eigen_relation": 1e-7,
    "displacement": 1e-7,
    "evolution": 1e-9,
    "q_evolution": 1e-8,
    "resolution": 1e-3,
    "grid_doubling": 1e-4,
    "q_integral": 2e-3,
    "contour": 1e-9,
    "idempotency": 1e-12,
    "lemma": 1e-8,
    "cnot": 1e-12,
    "cnot_mapping": 1e-10,
    "cnot_limit": 1e-8,
    "lift": 1e-8,
}

SUITES = ("ring", "gates", "projectors", "moments", "covariance", "resolution",
          "contour", "lemma", "cnot")


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 0
    n_max: int = 64
    n_max_covariance: int = 96
    disk_radius: float = 6.0
    grid: tuple[int, int] = (200, 256)
    ring_samples: int = 10_000
    projector_spaces: int = 20
    contour_trials: int = 1000
    lemma_spaces: int = 100
    cnot_trials: int = 10
    tolerances: dict = field(default_factory=dict)

    def tol(self, name: str) -> float:
        return float(self.tolerances.get(name, DEFAULT_TOLERANCES[name]))

    def to_json(self) -> dict:
        d = asdict(self)
        d["grid"] = list(self.grid)
        d["tolerances"] = {**DEFAULT_TOLERANCES, **self.tolerances}
        return d


@dataclass(frozen=True)
class Check:
    check: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)

    def to_json(self) -> dict:
        return {"check": self.check, "residual": float(self.residual),
                "tolerance": float(self.tolerance), "pass": self.passed}


class _Collector:
    def __init__(self, config: VerifyConfig):
        self.config = config
        self.checks: list[Check] = []

    def add(self, name: str, residual: float, tol_key: str) -> None:
        self.checks.append(Check(name, float(residual), self.config.tol(tol_key)))

    def worst(self, name: str, residuals, tol_key: str) -> None:
        self.add(name, max(residuals, default=0.0), tol_key)


# -- random fixtures ----------------------------------------------------------

def random_labels(rng: np.random.Generator, n: int, radius: float = 2.0, min_sep: float = 0.5) -> list[complex]:
    """``n`` labels uniform in the disk, pairwise at least ``min_sep`` apart."""
    out: list[complex] = []
    while len(out) < n:
        r = radius * math.sqrt(rng.random())
        z = complex(r * np.exp(2j * np.pi * rng.random()))
        if all(abs(z - w) >= min_sep for w in out):
            out.append(z)
    return out


def random_space(rng, n: int, radius: float = 2.0, min_sep: float = 0.5) -> cs.CoherentSpace:
    return cs.build_space(random_labels(rng, n, radius, min_sep))


def _cvec(rng, n: int) -> np.ndarray:
    return rng.normal(size=n) + 1j * rng.normal(size=n)


# -- ring ---------------------------------------------------------------------

def suite_ring(config: VerifyConfig) -> list[Check]:
    """Boolean-ring axioms on random subsets of an 8-label pool, each
    identity also checked against bitmask arithmetic on the integer codes."""
    c = _Collector(config)
    rng = np.random.default_rng(config.seed)
    pool = CSet([complex(k, (-1) ** k * 0.5 * k) for k in range(8)])
    subsets = powerset(pool)
    codes = rng.integers(0, 256, size=(config.ring_samples, 4))
    fail = {k: 0 for k in ("axioms", "union", "zero_divisor", "mult_monotone", "bitmask")}
    for m0, m1, m2, m3 in codes.tolist():
        S0, S1, S2, S3 = subsets[m0], subsets[m1], subsets[m2], subsets[m3]
        add12, mul12, add23, mul23 = S1 + S2, S1 * S2, S2 + S3, S2 * S3
        ok = (add12 == S2 + S1 and mul12 == S2 * S1
              and add12 + S3 == S1 + add23 and mul12 * S3 == S1 * mul23
              and S1 * add23 == mul12 + S1 * S3
              and S1 + EMPTY == S1 and S1 * pool == S1 and S1 + S1 == EMPTY and S1 * S1 == S1
              and S0 * (add12 + S0) == S0 * S1 + S0 * S2 + S0)
        fail["axioms"] += not ok
        union = S1 | S2
        fail["union"] += not (union == add12 + mul12 and add12 == union.difference(mul12))
        fail["zero_divisor"] += not (mul12 * add12 == EMPTY)
        # mul12 <= S2, so mul12 * S3 <= S2 * S3
        fail["mult_monotone"] += not (mul12 <= S2 and mul12 * S3 <= mul23)
        fail["bitmask"] += not (encode(pool, add12).code == m1 ^ m2
                                and encode(pool, mul12).code == m1 & m2
                                and encode(pool, union).code == m1 | m2
                                and subsets[m3] == decode(pool, m3))
    for k, v in fail.items():
        c.add(f"ring.{k}", v, "exact")
    # S1 <= S2 does not give S1 + S3 <= S2 + S3
    a, b = pool.labels[:2]
    S1, S2, S3 = CSet([a]), CSet([a, b]), CSet([b])
    c.add("ring.additive_counterexample", float(S1 <= S2 and (S1 + S3 <= S2 + S3)), "exact")
    return c.checks


# -- classical gates ----------------------------------------------------------

_BITMASK = {
    cg.GateKind.OR: lambda x, y, full: (x | y,),
    cg.GateKind.AND: lambda x, y, full: (x & y,),
    cg.GateKind.XOR: lambda x, y, full: (x ^ y,),
    cg.GateKind.CNOT: lambda x, y, full: (x, x ^ y),
}


def suite_gates(config: VerifyConfig) -> list[Check]:
    c = _Collector(config)
    for size in (1, 2, 3):
        r = CSet([complex(k + 1, 0) for k in range(size)])
        full = 2**size - 1
        for kind, oracle in _BITMASK.items():
            table = cg.truth_table(kind, r)
            bad = sum(outs != oracle(*ins, full) for ins, outs in table.rows)
            c.add(f"gates.{kind.value}.R{size}", bad, "exact")
        table = cg.truth_table(cg.GateKind.NOT, r)
        c.add(f"gates.not.R{size}", sum(outs != (ins[0] ^ full,) for ins, outs in table.rows), "exact")
        c.add(f"gates.cnot_reversible.R{size}",
              float(not cg.check_reversible(cg.truth_table(cg.GateKind.CNOT, r))), "exact")
        c.add(f"gates.or_irreversible.R{size}",
              float(cg.check_reversible(cg.truth_table(cg.GateKind.OR, r))), "exact")
        bad = 0
        for s1 in powerset(r):
            try:
                cg.fixed_control_target_map(s1, r)
            except AssertionError:
                bad += 1
        c.add(f"gates.fixed_control_involution.R{size}", bad, "exact")
    return c.checks


# -- projectors ---------------------------------------------------------------

def suite_projectors(config: VerifyConfig) -> list[Check]:
    c = _Collector(config)
    rng = np.random.default_rng(config.seed + 1)
    trunc = TruncationPolicy(config.n_max)
    res = {k: [] for k in ("idempotent", "hermitian", "trace", "fixes_members", "chain_sum",
                           "chain_orthogonal", "chain_trace", "expand_kronecker", "expand_roundtrip",
                           "union_range", "intersection_members", "intersection_excludes")}
    for trial in range(config.projector_spaces):
        n = 1 + trial % 4
        sp = random_space(rng, n)
        P = cs.projector(sp, trunc)
        V = cs.basis_vectors(sp, trunc)
        res["idempotent"].append(fock.frobenius_norm(P @ P - P))
        res["hermitian"].append(fock.frobenius_norm(P - P.conj().T))
        res["trace"].append(abs(np.trace(P) - n))
        res["fixes_members"].append(max(np.linalg.norm(P @ V[:, j] - V[:, j]) for j in range(n)))
        chain = cs.gs_chain(sp, trunc)
        res["chain_sum"].append(fock.frobenius_norm(sum(chain) - P))
        res["chain_trace"].append(max(abs(np.trace(w) - 1) for w in chain))
        res["chain_orthogonal"].append(max([fock.frobenius_norm(chain[i] @ chain[j])
                                            for i in range(n) for j in range(n) if i != j], default=0.0))
        res["expand_kronecker"].append(max(np.max(np.abs(cs.expand(V[:, j], sp, trunc) - np.eye(n)[j]))
                                           for j in range(n)))
        s = P @ _cvec(rng, trunc.dim)
        res["expand_roundtrip"].append(np.linalg.norm(cs.synthesize(cs.expand(s, sp, trunc), sp, trunc) - s))

        # lattice: Pi(S1 u S2) contains Pi(S_k); Pi(S1 n S2) keeps shared members only
        extra = random_labels(rng, 2, min_sep=0.5)
        labels = list(sp.labels)
        if any(min(abs(e - a) for a in labels) < 0.5 for e in extra):
            continue
        S1 = sp.label_set()
        S2 = CSet(labels[: max(1, n - 1)] + extra)
        U = cs.projector(cs.build_space((S1 | S2).labels), trunc)
        for Sk in (S1, S2):
            Pk = cs.projector(cs.build_space(Sk.labels), trunc)
            res["union_range"].append(fock.frobenius_norm(U @ Pk - Pk))
        meet = S1 & S2
        Pm = cs.projector(cs.build_space(meet.labels), trunc)
        res["intersection_members"].append(
            max(np.linalg.norm(Pm @ fock.coherent_amps(a, trunc.dim) - fock.coherent_amps(a, trunc.dim)) for a in meet))
        # component of the non-shared labels orthogonal to H(S1 n S2)
        order = list(meet.labels) + [a for a in (S1 | S2) if a not in meet]
        full_chain = cs.gs_chain(cs.build_space(order), trunc)
        res["intersection_excludes"].append(
            max([fock.frobenius_norm(Pm @ w) for w in full_chain[len(meet):]], default=0.0))
    for k, v in res.items():
        c.worst(f"projectors.{k}", v, "projector")
    return c.checks


# -- moments ------------------------------------------------------------------

def suite_moments(config: VerifyConfig) -> list[Check]:
    c = _Collector(config)
    rng = np.random.default_rng(config.seed + 2)
    trunc = TruncationPolicy(config.n_max)
    trace_a, trace_chain, trace_xp, trace_n, eig_chain, eig_perp = [], [], [], [], [], []
    for trial in range(8):
        sp = random_space(rng, 2 + trial % 3)
        rep = cs.moment_traces(sp, (1, 2, 3), trunc)
        for key, (_, _, r) in rep.items():
            if key in ("x", "p"):
                trace_xp.append(r)
            elif key == "n":
                trace_n.append(r)
            elif key[0] == "a":
                trace_a.append(r)
            else:
                trace_chain.append(r)
        for ell in (1, 2, 3):
            e = cs.eigen_relation_check(sp, ell, trunc)
            eig_chain.append(e["chain"])
            eig_perp.append(max(e["perp"], e["perp_prefix"]))
    c.worst("moments.trace_a_power", trace_a, "moment")
    c.worst("moments.trace_chain_power", trace_chain, "moment")
    c.worst("moments.trace_quadratures", trace_xp, "moment")
    c.worst("moments.trace_number_two_point", trace_n, "number_moment")
    c.worst("moments.chain_eigen_relation", eig_chain, "eigen_relation")
    c.worst("moments.perp_a_power_pi", eig_perp, "eigen_relation")
    return c.checks


# -- covariance ---------------------------------------------------------------

def _random_density(rng, trunc: TruncationPolicy, labels) -> np.ndarray:
    """Mixture of a coherent superposition and a low number-state superposition."""
    psi1 = fock.coherent_matrix(labels, trunc) @ _cvec(rng, len(labels))
    psi2 = np.zeros(trunc.dim, complex)
    psi2[:4] = _cvec(rng, 4)
    rho = 0.0
    for psi, w in ((psi1, 0.7), (psi2, 0.3)):
        psi = psi / np.linalg.norm(psi)
        rho = rho + w * np.outer(psi, psi.conj())
    return rho


def suite_covariance(config: VerifyConfig) -> list[Check]:
    c = _Collector(config)
    rng = np.random.default_rng(config.seed + 3)
    trunc = TruncationPolicy(config.n_max_covariance)
    disp, evo, qevo = [], [], []
    for trial in range(4):
        sp = random_space(rng, 1 + trial % 3, radius=1.5)
        z = random_labels(rng, 1, radius=1.5)[0]
        t = float(rng.uniform(-np.pi, np.pi))
        rep = cs.covariance_check(sp, z, t, trunc)
        disp.append(max(rep["displacement"], rep["displacement_chain"]))
        evo.append(max(rep["evolution"], rep["evolution_chain"]))
        # Q of the evolved state at labels rotated by e^{-it} equals Q of the initial state
        rho = _random_density(rng, trunc, random_labels(rng, 2, radius=1.5))
        Ut = fock.evolution_op(-t, trunc)  # exp(-i t N)
        rho_t = Ut @ rho @ Ut.conj().T
        qevo.append(abs(cs.q_function(rho_t, sp.rotated(-t), trunc) - cs.q_function(rho, sp, trunc)))
    c.worst("covariance.displacement", disp, "displacement")
    c.worst("covariance.evolution", evo, "evolution")
    c.worst("covariance.q_evolution", qevo, "q_evolution")
    return c.checks


# -- resolution of identity ---------------------------------------------------

def suite_resolution(config: VerifyConfig) -> list[Check]:
    c = _Collector(config)
    rng = np.random.default_rng(config.seed + 4)
    R, grid = config.disk_radius, tuple(config.grid)
    fine = (2 * grid[0], 2 * grid[1])
    I = np.eye(6)
    for name, offsets, rank_one in (("n1", (), False), ("n2", (1.0,), False), ("rank_one", (1.0,), True)):
        est = cs.resolution_quadrature(offsets, R, grid, block=6, rank_one=rank_one)
        c.add(f"resolution.{name}.identity_block", np.max(np.abs(est - I)), "resolution")
        est2 = cs.resolution_quadrature(offsets, R, fine, block=6, rank_one=rank_one)
        c.add(f"resolution.{name}.grid_doubling", np.max(np.abs(est2 - est)), "grid_doubling")
    psi = _cvec(rng, 6)
    psi /= np.linalg.norm(psi)
    rho = 0.5 * np.outer(psi, psi.conj()) + 0.5 * np.diag([0, 0, 1, 0, 0, 0])
    for name, offsets in (("n1", ()), ("n2", (1.0,))):
        c.add(f"resolution.{name}.q_integral", abs(cs.q_integral(rho, offsets, R, grid) - 1), "q_integral")
    return c.checks


# -- residue engine -----------------------------------------------------------

def _rel(x, y) -> float:
    x, y = np.asarray(x), np.asarray(y)
    return float(np.max(np.abs(x - y)) / max(1.0, float(np.max(np.abs(y)))))


def suite_contour(config: VerifyConfig) -> list[Check]:
    c = _Collector(config)
    rng = np.random.default_rng(config.seed + 5)
    trunc = TruncationPolicy(config.n_max)
    dim = trunc.dim
    errs = {"scalar": [], "apply_ket": [], "apply_bra": [], "product": [], "trace": []}
    for trial in range(config.contour_trials):
        n = 1 + trial % 4
        labels = random_labels(rng, n, min_sep=0.3)
        kind = ("scalar", "apply_ket", "apply_bra", "product", "trace")[trial % 5]
        if kind == "scalar":
            ket = dc.ket_of(_cvec(rng, n), labels)
            bra = dc.bra_of(_cvec(rng, n), labels)
            errs[kind].append(_rel(dc.scalar(bra, ket), np.vdot(bra.to_fock(dim), ket.to_fock(dim))))
            continue
        theta = dc.kernel_of_matrix(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)), labels)
        T = theta.to_fock(dim)
        if kind == "apply_ket":
            ket = dc.ket_of(_cvec(rng, n), labels)
            errs[kind].append(_rel(dc.kernel_apply_ket(theta, ket).to_fock(dim), T @ ket.to_fock(dim)))
        elif kind == "apply_bra":
            bra = dc.bra_of(_cvec(rng, n), labels)
            # <s| Theta is the bra of Theta^dag |s>
            errs[kind].append(_rel(dc.kernel_apply_bra(bra, theta).to_fock(dim), T.conj().T @ bra.to_fock(dim)))
        elif kind == "product":
            other = dc.kernel_of_matrix(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)), labels)
            errs[kind].append(_rel(dc.kernel_product(theta, other).to_fock(dim), T @ other.to_fock(dim)))
        else:
            errs[kind].append(_rel(dc.kernel_trace(theta), np.trace(T)))
    for k, v in errs.items():
        c.worst(f"contour.{k}_vs_fock", v, "contour")

    idem, poles, corollary = [], 0, []
    for trial in range(20):
        sp = random_space(rng, 1 + trial % 4)
        K = dc.kernel_of_projector(sp)
        idem.append(dc.kernel_difference(dc.kernel_product(K, K), K))
        poles += dc.pole_set(K) != sp.label_set().conj() or len(dc.pole_set(K)) != sp.dim
        other = random_space(rng, 1 + (trial + 1) % 4)
        closed = cs.projector_product_trace(sp, other)
        residue = dc.kernel_trace(dc.kernel_product(K, dc.kernel_of_projector(other)))
        numeric = np.trace(cs.projector(sp, trunc) @ cs.projector(other, trunc))
        corollary.append(max(abs(closed - residue), abs(closed - numeric), abs(residue - numeric)))
    c.worst("contour.projector_idempotency", idem, "idempotency")
    c.add("contour.projector_pole_set", poles, "exact")
    c.worst("contour.product_trace_corollary", corollary, "contour")
    return c.checks


# -- orthogonal states --------------------------------------------------------

def suite_lemma(config: VerifyConfig) -> list[Check]:
    c = _Collector(config)
    rng = np.random.default_rng(config.seed + 6)
    trunc = TruncationPolicy(config.n_max)
    proj, overlaps = [], []
    for trial in range(config.lemma_spaces):
        sp = random_space(rng, 1 + trial % 5, min_sep=0.4)
        s = cs.orthogonal_state(sp, trunc)
        proj.append(np.linalg.norm(cs.projector(sp, trunc) @ s))
        overlaps.append(np.max(np.abs(cs.basis_vectors(sp, trunc).conj().T @ s)))
    c.worst("lemma.projected_norm", proj, "lemma")
    c.worst("lemma.member_overlaps", overlaps, "lemma")
    return c.checks


# -- quantum CNOT -------------------------------------------------------------

def _gate_checks(c: _Collector, gate: qg.GateMatrix, rng, tag: str, acc: dict) -> None:
    acc["unitarity"].append(qg.unitarity_residual(gate.entries, gate.G, gate.g))
    inv = qg.involution_check(gate)
    acc["involution"].append(max(d["involution"] for d in inv.values()))
    acc["target_unitarity"].append(max(d["unitarity"] for d in inv.values()))
    acc["target_cond"].append(max(d["cond"] for d in inv.values()))
    B = gate.space_B
    ops = gate.target_ops
    acc["commutator"].append(max(np.max(np.abs(qg.metric_commutator(ops[0], ops[j], B)))
                                 for j in range(1, len(ops))))
    acc["target_square"].append(max(np.max(np.abs(qg.metric_product(op, op, B) - B.g)) for op in ops))
    for _ in range(3):
        T = _cvec(rng, B.dim)
        acc["e1_fixes_target"].append(qg.control_eigen_residual(gate, 0, T)
                                      + np.linalg.norm(qg.target_map(gate, 0) @ T - T))
        acc["control_semantics"].append(max(qg.control_eigen_residual(gate, j, T) for j in range(gate.space_A.dim)))
    if gate.space_A.dim == 2:
        Tp, Tm = qg.target_pm(B)
        e1, e2 = gate.space_A.eigvecs[:, 0], gate.space_A.eigvecs[:, 1]
        g = gate.g
        maps = [(np.kron(e1, Tp), np.kron(e1, Tp)), (np.kron(e1, Tm), np.kron(e1, Tm)),
                (np.kron(e2, Tp), np.kron(e2, Tm)), (np.kron(e2, Tm), np.kron(e2, Tp))]
        acc["pm_mappings"].append(max(qg.metric_norm(qg.metric_apply(gate, x) - y, g) for x, y in maps))


def suite_cnot(config: VerifyConfig) -> list[Check]:
    c = _Collector(config)
    rng = np.random.default_rng(config.seed + 7)
    acc = {k: [] for k in ("unitarity", "involution", "target_unitarity", "target_cond", "commutator",
                           "target_square", "e1_fixes_target", "control_semantics", "pm_mappings")}
    tri, lifted_unit = [], []
    trunc = TruncationPolicy(config.n_max)
    for trial in range(config.cnot_trials):
        A, B = random_space(rng, 2, min_sep=0.8), random_space(rng, 2, min_sep=0.8)
        gate = qg.build_cnot2(A, B)
        _gate_checks(c, gate, rng, "cnot2", acc)
        radius = float(rng.uniform(0.8, 1.5))
        gate4 = qg.build_cnot4(qg.square_space(radius, float(rng.uniform(0, np.pi))),
                               qg.square_space(float(rng.uniform(0.8, 1.5)), float(rng.uniform(0, np.pi))))
        _gate_checks(c, gate4, rng, "cnot4", acc)
        # coordinates, residues and Fock space must agree
        for gt in (gate, gate4):
            v = _cvec(rng, gt.dims[0] * gt.dims[1])
            coords = qg.metric_apply(gt, v)
            via_contour = qg.contour_apply(gt, v)
            lifted = qg.lift_to_fock(gt, trunc)
            via_fock = lifted.apply(qg.product_state(v, gt, trunc))
            expected = qg.product_state(coords, gt, trunc)
            tri.append(max(_rel(via_contour, coords), _rel(via_fock, expected),
                           _rel(qg.product_state(via_contour, gt, trunc), via_fock)))
        if trial < 2:
            small = TruncationPolicy(fock.recommended_n_max(max(A.max_radius, B.max_radius)))
            L = qg.lift_to_fock(gate, small).matrix()
            PA, PB = cs.projector(A, small), cs.projector(B, small)
            lifted_unit.append(np.max(np.abs(L.conj().T @ L - np.kron(PA, PB))))
    c.worst("cnot.metric_unitarity", acc["unitarity"], "cnot")
    c.worst("cnot.target_metric_unitarity", acc["target_unitarity"], "cnot")
    c.worst("cnot.target_commutator", acc["commutator"], "cnot")
    c.worst("cnot.target_involution", acc["involution"], "cnot")
    c.worst("cnot.target_square_is_unit", acc["target_square"], "cnot")
    c.add("cnot.target_map_cond_excess", max(0.0, max(acc["target_cond"]) - 1e3), "exact")
    c.worst("cnot.e1_fixes_target", acc["e1_fixes_target"], "cnot_mapping")
    c.worst("cnot.control_eigen_semantics", acc["control_semantics"], "cnot_mapping")
    c.worst("cnot.e2_swaps_Tp_Tm", acc["pm_mappings"], "cnot_mapping")
    c.worst("cnot.consistency_triangle", tri, "lift")
    c.worst("cnot.lifted_unitarity_on_subspace", lifted_unit, "lift")

    # almost-orthogonal limit
    A5, B5 = cs.build_space([5.0, -5.0]), cs.build_space([5.0j, -5.0j])
    gate = qg.build_cnot2(A5, B5)
    c.add("cnot.limit_reduced_form", np.max(np.abs(gate.entries - qg.reduced_form(gate))), "cnot_limit")
    c.add("cnot.limit_metric_is_unit", np.max(np.abs(A5.g - np.eye(2))), "cnot_limit")
    lifted = qg.lift_to_fock(gate, TruncationPolicy(96))
    H = np.kron(qg.HADAMARD, np.eye(2))
    c.add("cnot.limit_textbook", np.max(np.abs(H @ qg.orthonormal_block(lifted) @ H - qg.TEXTBOOK_CNOT)), "cnot_limit")
    return c.checks


SUITE_FUNCS = {
    "ring": suite_ring, "gates": suite_gates, "projectors": suite_projectors,
    "moments": suite_moments, "covariance": suite_covariance, "resolution": suite_resolution,
    "contour": suite_contour, "lemma": suite_lemma, "cnot": suite_cnot,
}


def run_suites(names, config: VerifyConfig = VerifyConfig()) -> dict:
    """Run suites by name (``"all"`` expands to every suite)."""
    names = list(SUITES) if "all" in names else list(names)
    for n in names:
        if n not in SUITE_FUNCS:
            raise KeyError(f"unknown suite {n!r}; choose from {', '.join(SUITES)} or all")
    out = {"suites": {}, "checks": []}
    for n in names:
        t0 = time.perf_counter()
        checks = SUITE_FUNCS[n](config)
        out["suites"][n] = {"seconds": round(time.perf_counter() - t0, 3),
                            "pass": all(ch.passed for ch in checks)}
        out["checks"].extend(ch.to_json() for ch in checks)
    out["pass"] = all(ch["pass"] for ch in out["checks"])
    return out
