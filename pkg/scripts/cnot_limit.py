"""How the metric CNOT approaches the textbook CNOT as the labels separate.

Control labels are (r, -r) and target labels (ir, -ir).  For each r the
script reports the overlap mu = exp(-2 r^2), the distance of the gate
elements from the reduced form sum_j E_j x U_jT, and the distance of the
Fock-space gate, written in Gram-Schmidt bases and rotated by a Hadamard
on the control, from the 4x4 CNOT.
"""
import argparse
from dataclasses import dataclass, field

import numpy as np

from cohspace import quantum_gates as qg
from cohspace.coherent_spaces import build_space
from cohspace.fock import TruncationPolicy, recommended_n_max


@dataclass
class Config:
    radii: list = field(default_factory=lambda: [0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0])


def main(cfg: Config) -> None:
    H = np.kron(qg.HADAMARD, np.eye(2))
    print(f"{'r':>5} {'mu':>11} {'|U - reduced|':>14} {'|U_on - CNOT|':>14}")
    for r in cfg.radii:
        gate = qg.build_cnot2(build_space([r, -r]), build_space([1j * r, -1j * r]))
        trunc = TruncationPolicy(recommended_n_max(r))
        lifted = qg.lift_to_fock(gate, trunc)
        textbook = np.max(np.abs(H @ qg.orthonormal_block(lifted) @ H - qg.TEXTBOOK_CNOT))
        reduced = np.max(np.abs(gate.entries - qg.reduced_form(gate)))
        print(f"{r:5.2f} {gate.space_A.two_point().mu:11.3e} {reduced:14.3e} {textbook:14.3e}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--radii", type=float, nargs="+", default=Config().radii)
    main(Config(radii=p.parse_args().radii))
