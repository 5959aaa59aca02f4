import math
import warnings

import numpy as np
import pytest
from scipy.linalg import expm

from cohspace import fock
from cohspace.errors import DimensionMismatch, InadequateTruncation, ParseError, TruncationWarning
from cohspace.fock import TruncationPolicy

Z = 0.3 + 0.4j


def test_cutoff_rule():
    assert fock.recommended_n_max(0) == 10
    assert fock.recommended_n_max(2) == math.ceil(4 + 10 * math.sqrt(5))
    TruncationPolicy(64).require(2.0)
    with pytest.raises(InadequateTruncation):
        TruncationPolicy(20).require(3.0)
    with pytest.warns(TruncationWarning):
        TruncationPolicy(20, allow_small=True).require(3.0)


def test_coherent_vector():
    v = fock.coherent_vector(Z)
    assert np.linalg.norm(v) == pytest.approx(1, abs=1e-14)
    # frozen high-precision value of <2|z>
    assert v[2] == pytest.approx(-0.043681368093558401358 + 0.14976469060648594751j, abs=1e-15)
    a, _ = fock.ladder_ops(TruncationPolicy(64))
    assert np.allclose((a @ v)[:50], Z * v[:50], atol=1e-14)


def test_displacement_matches_matrix_exponential():
    big = TruncationPolicy(150)
    a, ad = fock.ladder_ops(big)
    ref = expm(Z * ad - np.conj(Z) * a)[:41, :41]
    D = fock.displacement_op(Z, TruncationPolicy(40))
    assert np.max(np.abs(D - ref)) < 1e-12
    assert D[1, 1] == pytest.approx(0.66187267693844655215, abs=1e-15)


def test_displacement_group_properties():
    trunc = TruncationPolicy(96)
    D = fock.displacement_op(1.2 - 0.5j, trunc)
    vac = fock.number_vector(0, trunc)
    assert np.max(np.abs(D @ vac - fock.coherent_vector(1.2 - 0.5j, trunc))) < 1e-15
    Dinv = fock.displacement_op(-1.2 + 0.5j, trunc)
    assert np.max(np.abs((D @ Dinv)[:40, :40] - np.eye(40))) < 1e-12
    assert np.max(np.abs(fock.displacement_op(0, trunc) - np.eye(trunc.dim))) == 0


def test_evolution_rotates_coherent_states():
    U = fock.evolution_op(0.7)
    v = fock.coherent_vector(1 + 1j)
    assert np.allclose(U @ v, fock.coherent_vector((1 + 1j) * np.exp(0.7j)), atol=1e-15)


def test_quadratures_and_number():
    trunc = TruncationPolicy(30)
    x, p = fock.quadratures(trunc)
    a, ad = fock.ladder_ops(trunc)
    assert np.allclose(ad @ a, fock.number_op(trunc))
    comm = x @ p - p @ x
    assert np.allclose(comm[:-1, :-1], 1j * np.eye(trunc.n_max))


def test_linear_algebra_helpers():
    trunc = TruncationPolicy(20)
    u, v = fock.coherent_vector(0.5, trunc), fock.coherent_vector(-0.5j, trunc)
    assert fock.inner(u, v) == pytest.approx(np.exp(0.5 * -0.5j - 0.25), abs=1e-14)
    P = fock.outer(u, u)
    assert fock.trace(P) == pytest.approx(1)
    assert np.allclose(fock.apply(fock.compose(P, P), u), u)
    assert fock.frobenius_norm(fock.adjoint(P) - P) < 1e-15
    with pytest.raises(DimensionMismatch):
        fock.inner(u, np.zeros(5))
    with pytest.raises(InadequateTruncation):
        fock.number_vector(21, trunc)


def test_gram_schmidt_orthonormalizes():
    V = fock.coherent_matrix([0, 0.5, 1j], TruncationPolicy(40))
    Q = fock.gram_schmidt(V)
    assert np.allclose(Q.conj().T @ Q, np.eye(3), atol=1e-14)
    assert np.allclose(Q[:, 0], V[:, 0])


def test_json_round_trip():
    v = fock.coherent_vector(0.2, TruncationPolicy(12))
    assert np.array_equal(fock.vector_from_json(fock.vector_to_json(v)), v)
    with pytest.raises(ParseError):
        fock.vector_from_json({"n_max": 3, "amps": [[1, 0]]})
    with pytest.raises(ParseError):
        fock.vector_from_json('{"amps": []}')
