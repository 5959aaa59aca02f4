"""Command-line front end.

Exit status: 0 when every reported check passes, 1 when a check fails,
2 on a usage, parse or input-validation error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

import numpy as np

from . import classical_gates as cg
from . import coherent_spaces as cs
from . import dirac_contour as dc
from . import fock
from . import quantum_gates as qg
from . import verify
from .complex_sets import CSet, decode
from .errors import (CohSpaceError, DegenerateSpectrum, DimensionMismatch, DuplicateLabel, IllConditioned,
                     InadequateTruncation, NotADensityMatrix, NotASubset, ParseError, TooLarge)
from .fock import TruncationPolicy

INPUT_ERRORS = (ParseError, DuplicateLabel, IllConditioned, InadequateTruncation, TooLarge, NotASubset,
                DimensionMismatch, DegenerateSpectrum, NotADensityMatrix)

DEFAULT_TOL = {
    "gram": 1e-10, "projector": 1e-9, "chain": 1e-9, "contour": 1e-12, "cnot-quantum": 1e-12,
    "resolution": 1e-3, "qfunction": 1e-8,
}


# -- input parsing ------------------------------------------------------------

def _load(text: str, name: str):
    """Inline JSON, or the path of a file holding JSON."""
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} col {exc.colno}: {exc.msg}", field=name) from exc


def parse_labels(text: str, name: str = "labels") -> CSet:
    data = _load(text, name)
    if isinstance(data, dict):
        if "labels" not in data:
            raise ParseError("object input needs a 'labels' key", field=name)
        data = data["labels"]
    try:
        return CSet.from_json(data)
    except ParseError as exc:
        raise ParseError(str(exc), field=name) from exc


def parse_space(text: str, max_cond: float = cs.MAX_COND) -> cs.CoherentSpace:
    """Parse a space (``{"labels": [[re, im], ...]}`` or a bare list) and
    build the space, applying the duplicate and conditioning guards."""
    return cs.build_space(parse_labels(text).labels, max_cond)


def parse_tolerances(items) -> dict:
    """``--tol`` values: a bare number sets the command default, ``name=value``
    overrides one named tolerance."""
    out = {}
    for item in items or ():
        key, _, val = item.rpartition("=")
        try:
            out[key or "default"] = float(val)
        except ValueError as exc:
            raise ParseError(f"bad tolerance {item!r}", field="--tol") from exc
    return out


def _grid(text: str) -> tuple[int, int]:
    try:
        n_r, n_phi = (int(x) for x in text.lower().split("x"))
    except ValueError as exc:
        raise ParseError(f"grid must look like 200x256, got {text!r}", field="--grid") from exc
    return n_r, n_phi


def _trunc(args, radius: float) -> TruncationPolicy:
    n_max = args.n_max if args.n_max is not None else max(64, fock.recommended_n_max(radius))
    trunc = TruncationPolicy(n_max)
    trunc.require(radius)
    return trunc


# -- report helpers -----------------------------------------------------------

def _cx(x):
    x = np.asarray(x)
    if x.ndim == 0:
        return [float(x.real), float(x.imag)]
    return [_cx(v) for v in x]


def _check(name, residual, tol) -> dict:
    return verify.Check(name, float(residual), float(tol)).to_json()


def _hash(payload) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True, default=str).encode()).hexdigest()[:16]


def _report(command: str, inputs: dict, tolerances: dict, checks: list, **results) -> dict:
    return {"command": command, "input_hash": _hash(inputs), "inputs": inputs,
            "tolerances": tolerances, "checks": checks,
            "pass": all(c["pass"] for c in checks), **results}


# -- commands -----------------------------------------------------------------

def cmd_gram(args, tol):
    sp = parse_space(args.labels)
    t = tol.get("default", DEFAULT_TOL["gram"])
    E = sp.eigprojs
    checks = [
        _check("g_times_G_is_identity", np.max(np.abs(sp.g @ sp.G - np.eye(sp.dim))), t),
        _check("spectral_sum_is_g", np.max(np.abs(np.einsum("k,kab->ab", sp.eigvals, E) - sp.g)), t),
        _check("eigenprojectors_sum_to_identity", np.max(np.abs(E.sum(axis=0) - np.eye(sp.dim))), t),
    ]
    extra = {}
    if sp.dim == 2:
        tp = sp.two_point()
        extra = {"mu": tp.mu, "theta": tp.theta}
    return _report("gram", {"labels": sp.to_json()["labels"]}, {"default": t}, checks,
                   g=_cx(sp.g), G=_cx(sp.G), eigvals=sp.eigvals.tolist(), eigvecs=_cx(sp.eigvecs),
                   cond=sp.cond, **extra)


def cmd_projector(args, tol):
    sp = parse_space(args.labels)
    trunc = _trunc(args, sp.max_radius)
    t = tol.get("default", DEFAULT_TOL["projector"])
    P = cs.projector(sp, trunc)
    V = cs.basis_vectors(sp, trunc)
    checks = [
        _check("idempotent", fock.frobenius_norm(P @ P - P), t),
        _check("hermitian", fock.frobenius_norm(P - P.conj().T), t),
        _check("trace_equals_dim", abs(np.trace(P) - sp.dim), t),
        _check("fixes_members", max([np.linalg.norm(P @ V[:, j] - V[:, j]) for j in range(sp.dim)], default=0.0), t),
    ]
    extra = {"projector": _cx(P)} if args.matrix else {}
    return _report("projector", {"labels": sp.to_json()["labels"], "n_max": trunc.n_max}, {"default": t},
                   checks, trace=_cx(np.trace(P)), **extra)


def cmd_chain(args, tol):
    sp = parse_space(args.labels)
    trunc = _trunc(args, sp.max_radius)
    t = tol.get("default", DEFAULT_TOL["chain"])
    chain = cs.gs_chain(sp, trunc)
    P = cs.projector(sp, trunc)
    n = len(chain)
    checks = [
        _check("chain_sums_to_projector", fock.frobenius_norm(sum(chain, np.zeros_like(P)) - P), t),
        _check("unit_traces", max([abs(np.trace(w) - 1) for w in chain], default=0.0), t),
        _check("mutually_orthogonal", max([fock.frobenius_norm(chain[i] @ chain[j])
                                           for i in range(n) for j in range(n) if i != j], default=0.0), t),
    ]
    # tau_i = 1 / <A_i| Pi_perp(A_1..A_{i-1}) |A_i>
    taus = []
    for i in range(n):
        v = fock.coherent_amps(sp.labels[i], trunc.dim)
        prev = cs.projector(cs.build_space(sp.labels[:i]), trunc) if i else np.zeros_like(P)
        taus.append(float(1 / np.vdot(v, v - prev @ v).real))
    return _report("chain", {"labels": sp.to_json()["labels"], "n_max": trunc.n_max}, {"default": t},
                   checks, tau=taus)


def cmd_truth_table(args, tol):
    r = parse_labels(args.R, "R")
    table = cg.truth_table(cg.GateKind(args.gate), r)
    return table.to_csv(args.order)


def cmd_cnot_classical(args, tol):
    r = parse_labels(args.R, "R")
    table = cg.truth_table(cg.GateKind.CNOT, r)
    checks = [_check("reversible", float(not cg.check_reversible(table)), 0.0)]
    controls = []
    for code in range(2 ** len(r)):
        s1 = decode(r, code)
        try:
            perm = cg.fixed_control_target_map(s1, r)
            ok = True
        except AssertionError:
            perm, ok = [], False
        controls.append({"control": code, "target_map": perm, "cycles": [list(c) for c in cg.cycles(perm)]})
        checks.append(_check(f"control_{code}_involution", float(not ok), 0.0))
    return _report("cnot-classical", {"R": r.to_json()}, {"default": 0.0}, checks,
                   rows=[{"in": list(i), "out": list(o)} for i, o in table.rows], controls=controls)


def cmd_cnot_quantum(args, tol):
    A = parse_space(args.labels)
    B = parse_space(args.target_labels) if args.target_labels else A
    t = tol.get("default", DEFAULT_TOL["cnot-quantum"])
    t_map = tol.get("mapping", 1e-10)
    gate = qg.build_cnot(A, B)
    inv = qg.involution_check(gate)
    ops = gate.target_ops
    rng = np.random.default_rng(args.seed)
    checks = [
        _check("metric_unitarity", qg.unitarity_residual(gate.entries, gate.G, gate.g), t),
        _check("target_involution", max(d["involution"] for d in inv.values()), t),
        _check("target_commutator", max(np.max(np.abs(qg.metric_commutator(ops[0], o, B))) for o in ops[1:]), t),
    ]
    semantics = []
    for _ in range(5):
        T = rng.normal(size=B.dim) + 1j * rng.normal(size=B.dim)
        semantics.append(max(qg.control_eigen_residual(gate, j, T) for j in range(A.dim)))
    checks.append(_check("control_eigen_semantics", max(semantics), t_map))
    return _report("cnot-quantum", {"labels_A": A.to_json()["labels"], "labels_B": B.to_json()["labels"],
                                    "seed": args.seed}, {"default": t, "mapping": t_map}, checks,
                   gate=gate.to_json(),
                   target_maps={str(j): {k: float(v) for k, v in d.items()} for j, d in inv.items()})


def cmd_contour(args, tol):
    sp = parse_space(args.labels)
    t = tol.get("default", DEFAULT_TOL["contour"])
    K = dc.kernel_of_projector(sp)
    checks = [
        _check("idempotent", dc.kernel_difference(dc.kernel_product(K, K), K), t),
        _check("trace_equals_dim", abs(dc.kernel_trace(K) - sp.dim), t),
        _check("pole_set_is_conjugate_labels", float(dc.pole_set(K) != sp.label_set().conj()), 0.0),
    ]
    return _report("contour", {"labels": sp.to_json()["labels"]}, {"default": t}, checks,
                   kernel=K.to_json(), poles=dc.pole_set(K).to_json())


def cmd_resolution(args, tol):
    offsets = parse_labels(args.offsets, "offsets").labels if args.offsets else ()
    grid = _grid(args.grid)
    t = tol.get("default", DEFAULT_TOL["resolution"])
    t_conv = tol.get("grid_doubling", 1e-4)
    est = cs.resolution_quadrature(offsets, args.disk_radius, grid, block=args.block, rank_one=args.rank_one)
    finer = cs.resolution_quadrature(offsets, args.disk_radius, (2 * grid[0], 2 * grid[1]),
                                     block=args.block, rank_one=args.rank_one)
    checks = [
        _check("identity_block", np.max(np.abs(est - np.eye(args.block))), t),
        _check("grid_doubling", np.max(np.abs(finer - est)), t_conv),
    ]
    return _report("resolution", {"offsets": [_cx(d) for d in offsets], "grid": list(grid),
                                  "disk_radius": args.disk_radius, "block": args.block, "rank_one": args.rank_one},
                   {"default": t, "grid_doubling": t_conv}, checks, block_estimate=_cx(est))


def cmd_qfunction(args, tol):
    sp = parse_space(args.labels)
    t = tol.get("default", DEFAULT_TOL["qfunction"])
    if args.state:
        psi = fock.vector_from_json(_load(args.state, "state"))
        psi = psi / np.linalg.norm(psi)
        trunc = TruncationPolicy(len(psi) - 1)
        trunc.require(sp.max_radius)
    else:
        trunc = _trunc(args, sp.max_radius)
        psi = fock.number_vector(0, trunc)
    rho = np.outer(psi, psi.conj())
    q = cs.q_function(rho, sp, trunc, tol=t)
    checks = [_check("within_unit_interval", max(0.0, -q, q - 1), t)]
    return _report("qfunction", {"labels": sp.to_json()["labels"], "n_max": trunc.n_max,
                                 "state": fock.vector_to_json(psi)}, {"default": t}, checks, q=q)


def cmd_verify(args, tol):
    config = verify.VerifyConfig(seed=args.seed, n_max=args.n_max or 64, disk_radius=args.disk_radius,
                                 grid=_grid(args.grid), tolerances={k: v for k, v in tol.items() if k != "default"})
    unknown = set(config.tolerances) - set(verify.DEFAULT_TOLERANCES)
    if unknown:
        raise ParseError(f"unknown tolerance names {sorted(unknown)}", field="--tol")
    try:
        result = verify.run_suites(args.suite or ["all"], config)
    except KeyError as exc:
        raise ParseError(exc.args[0], field="--suite") from exc
    return {"command": "verify", "input_hash": _hash(config.to_json()), "inputs": config.to_json(),
            "tolerances": config.to_json()["tolerances"], **result}


COMMANDS = {
    "gram": cmd_gram, "projector": cmd_projector, "chain": cmd_chain, "truth-table": cmd_truth_table,
    "cnot-classical": cmd_cnot_classical, "cnot-quantum": cmd_cnot_quantum, "contour": cmd_contour,
    "resolution": cmd_resolution, "qfunction": cmd_qfunction, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cohspace", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the artifact here instead of stdout")
    common.add_argument("--tol", action="append", metavar="[NAME=]VALUE",
                        help="override a tolerance; a bare value sets the command default")
    common.add_argument("--n-max", type=int, default=None, help="Fock cutoff (default: max(64, rule for the labels))")
    common.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    for name, help_ in (("gram", "Gram matrix, inverse and eigensystem"),
                        ("projector", "projector onto a coherent space, with checks"),
                        ("chain", "Gram-Schmidt chain of rank-one projectors"),
                        ("contour", "residue-engine kernel of the projector")):
        add(name, help_).add_argument("--labels", required=True, help="JSON labels or labels object (inline or file)")
    sub.choices["projector"].add_argument("--matrix", action="store_true", help="include the projector matrix")

    tt = add("truth-table", "CSV truth table of a classical gate")
    tt.add_argument("--gate", required=True, choices=[k.value for k in cg.GateKind])
    tt.add_argument("--R", required=True, help="JSON base set R")
    tt.add_argument("--order", choices=("lex", "first-fastest"), default="lex")

    add("cnot-classical", "classical CNOT table and fixed-control maps").add_argument("--R", required=True)

    cq = add("cnot-quantum", "metric-unitary CNOT on two coherent spaces")
    cq.add_argument("--labels", required=True, help="control space labels")
    cq.add_argument("--target-labels", help="target space labels (default: same as control)")

    rs = add("resolution", "quadrature check of the resolution of the identity")
    rs.add_argument("--offsets", help="JSON list of fixed offsets d_2..d_n")
    rs.add_argument("--grid", default="200x256")
    rs.add_argument("--disk-radius", type=float, default=6.0)
    rs.add_argument("--block", type=int, default=6, help="compare the first BLOCK number states")
    rs.add_argument("--rank-one", action="store_true", help="integrate the rank-one chain projector instead")

    qf = add("qfunction", "generalized Q-function of a pure state")
    qf.add_argument("--labels", required=True)
    qf.add_argument("--state", help='Fock state JSON {"n_max", "amps"} (default: vacuum)')

    vf = add("verify", "run verification suites")
    vf.add_argument("--suite", action="append", help=f"one of {', '.join(verify.SUITES)}, all (repeatable)")
    vf.add_argument("--grid", default="200x256")
    vf.add_argument("--disk-radius", type=float, default=6.0)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        tol = parse_tolerances(args.tol)
        result = COMMANDS[args.command](args, tol)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CohSpaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = result if isinstance(result, str) else json.dumps(result, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if isinstance(result, str) or result["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
