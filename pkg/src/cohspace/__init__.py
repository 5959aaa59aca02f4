"""Finite coherent spaces, their Boolean-ring labels, and CNOT gates on them."""
from .complex_sets import CSet, decode, encode, powerset
from .coherent_spaces import CoherentSpace, build_space, gs_chain, projector
from .fock import TruncationPolicy
from .quantum_gates import GateMatrix, build_cnot, build_cnot2, build_cnot4

__all__ = [
    "CSet", "encode", "decode", "powerset",
    "CoherentSpace", "build_space", "projector", "gs_chain",
    "TruncationPolicy",
    "GateMatrix", "build_cnot", "build_cnot2", "build_cnot4",
]
