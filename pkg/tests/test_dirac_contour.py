import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cohspace import coherent_spaces as cs
from cohspace import dirac_contour as dc
from cohspace import fock
from cohspace.complex_sets import CSet
from cohspace.errors import NotTraceClass, ParseError

from conftest import TRUNC64, label_lists

DIM = TRUNC64.dim


def test_coherent_bra_pole():
    A = 0.4 - 1.1j
    bra = dc.coherent_bra(A)
    assert dc.pole_set(bra) == CSet([A.conjugate()])
    assert bra.poles[A.conjugate()] == pytest.approx(math.exp(-0.5 * abs(A) ** 2))
    assert dc.ket_of([0, 0], [1, 2]).is_zero()
    assert dc.pole_set(dc.number_bra(3)) == CSet([0])
    assert dc.number_bra(3).number[-1] == pytest.approx(math.sqrt(6))


def test_scalar_products():
    A1, A2 = 0.3 + 0.5j, -0.7 + 0.1j
    overlap = np.exp(A1.conjugate() * A2 - 0.5 * abs(A1) ** 2 - 0.5 * abs(A2) ** 2)
    assert dc.scalar(dc.coherent_bra(A1), dc.coherent_ket(A2)) == pytest.approx(overlap, abs=1e-12)
    assert dc.scalar(dc.coherent_bra(0), dc.coherent_ket(0)) == 1
    # number bra against coherent ket: <2|A>
    assert dc.scalar(dc.number_bra(2), dc.coherent_ket(A2)) == pytest.approx(fock.coherent_vector(A2)[2])


def test_superposition_norm_matches_metric(rng):
    sp = cs.build_space([0, 1, 1j])
    u = rng.normal(size=3) + 1j * rng.normal(size=3)
    ket = dc.ket_of(u, sp.labels)
    assert dc.scalar(ket.dagger(), ket) == pytest.approx(cs.coord_overlap(u, u, sp), abs=1e-12)


def test_projector_kernel():
    sp = cs.build_space([0, 1])
    K = dc.kernel_of_projector(sp)
    assert len(K.terms()) == 4
    assert dc.pole_set(K) == CSet([0, 1])
    one = dc.kernel_of_projector(cs.build_space([0.5j]))
    (c, a, p), = one.terms()
    assert a == 0.5j and p == -0.5j and c == pytest.approx(math.exp(-0.25))
    assert dc.kernel_trace(K) == pytest.approx(2, abs=1e-12)
    assert dc.kernel_allclose(dc.kernel_product(K, K), K)
    assert np.max(np.abs(K.to_fock(DIM) - cs.projector(sp, TRUNC64))) < 1e-13


def test_identity_kernel():
    K = dc.kernel_of_projector(cs.build_space([0, 1j]))
    I = dc.identity_kernel()
    assert dc.kernel_allclose(dc.kernel_product(I, K), K)
    assert dc.kernel_allclose(dc.kernel_product(K, I), K)
    ket = dc.coherent_ket(0.3) + dc.number_ket(2)
    assert dc.kernel_apply_ket(I, ket).to_fock(20) == pytest.approx(ket.to_fock(20))
    with pytest.raises(NotTraceClass):
        dc.kernel_trace(I)


def test_outer_product_chain():
    A1, A2, A3 = 0.2, 1j, -0.5
    t1 = dc.outer(dc.coherent_ket(A1), dc.coherent_bra(A2))
    t2 = dc.outer(dc.coherent_ket(A2), dc.coherent_bra(A3))
    assert dc.kernel_allclose(dc.kernel_product(t1, t2), dc.outer(dc.coherent_ket(A1), dc.coherent_bra(A3)))
    with pytest.raises(ValueError):
        dc.outer(dc.coherent_ket(0), dc.number_bra(1))


def test_projector_fixes_members_and_kills_orthogonal_state():
    sp = cs.build_space([0, 1, 1j])
    K = dc.kernel_of_projector(sp)
    for A in sp.labels:
        out = dc.kernel_apply_ket(K, dc.coherent_ket(A))
        diff = out - dc.coherent_ket(A)
        assert diff.is_zero(atol=1e-12)
    s = dc.Ket.from_fock(cs.orthogonal_state(sp, TRUNC64))
    assert dc.kernel_apply_ket(K, s).is_zero(atol=1e-12)


def test_lives_in():
    sp = cs.build_space([0.5, 1j])
    assert dc.lives_in_check(dc.outer(dc.coherent_ket(0.5), dc.coherent_bra(1j)), sp)
    assert dc.lives_in_check(dc.kernel_of_projector(sp), sp)
    counter = dc.outer(dc.number_ket(1), dc.coherent_bra(0.5))
    assert not dc.lives_in_check(counter, cs.build_space([0.5]))


def test_pole_set_cancellation():
    f = dc.coherent_bra(0.7)
    assert dc.pole_set(f - f) == CSet()
    g = dc.coherent_bra(1j)
    assert dc.pole_set(f + g) == CSet([0.7, -1j])
    assert dc.pole_set((f + g) - g) == CSet([0.7])


@given(label_lists(1, 4), st.integers(0, 2**31 - 1))
def test_oracle_equivalence(labels, seed):
    rng = np.random.default_rng(seed)
    n = len(labels)
    lam = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    mu = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    t1, t2 = dc.kernel_of_matrix(lam, labels), dc.kernel_of_matrix(mu, labels)
    T1, T2 = t1.to_fock(DIM), t2.to_fock(DIM)
    ket = dc.ket_of(rng.normal(size=n), labels)
    bra = dc.bra_of(rng.normal(size=n) + 1j, labels)
    scale = lambda x: max(1.0, np.max(np.abs(x)))
    ref = np.vdot(bra.to_fock(DIM), ket.to_fock(DIM))
    assert abs(dc.scalar(bra, ket) - ref) < 1e-9 * scale(ref)
    ref = T1 @ ket.to_fock(DIM)
    assert np.max(np.abs(dc.kernel_apply_ket(t1, ket).to_fock(DIM) - ref)) < 1e-9 * scale(ref)
    ref = T1 @ T2
    assert np.max(np.abs(dc.kernel_product(t1, t2).to_fock(DIM) - ref)) < 1e-9 * scale(ref)
    assert abs(dc.kernel_trace(t1) - np.trace(T1)) < 1e-9 * scale(np.trace(T1))


@given(label_lists(1, 4), label_lists(1, 4))
def test_product_trace_three_ways(l1, l2):
    s1, s2 = cs.build_space(l1), cs.build_space(l2)
    closed = cs.projector_product_trace(s1, s2)
    residue = dc.kernel_trace(dc.kernel_product(dc.kernel_of_projector(s1), dc.kernel_of_projector(s2)))
    numeric = np.trace(cs.projector(s1, TRUNC64) @ cs.projector(s2, TRUNC64))
    assert abs(closed - residue) < 1e-9 and abs(closed - numeric) < 1e-9


def test_ket_fock_round_trip():
    amps = fock.coherent_vector(0.4 + 0.2j, fock.TruncationPolicy(30))
    ket = dc.Ket.from_fock(amps)
    assert np.allclose(ket.to_fock(31), amps)
    assert ket(0.3) == pytest.approx(dc.coherent_ket(0.4 + 0.2j)(0.3), abs=1e-12)


def test_json_round_trip():
    K = dc.kernel_of_projector(cs.build_space([0, 1 + 1j]))
    back = dc.ContourKernel.from_json(K.to_json())
    assert dc.kernel_allclose(back, K, rtol=0)
    assert set(K.to_json()) == {"cauchy", "terms"}
    with pytest.raises(ParseError):
        dc.ContourKernel.from_json({"cauchy": [0, 0], "terms": [{"c": [1, 0]}]})
