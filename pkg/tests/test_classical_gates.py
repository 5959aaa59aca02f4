import pytest

from cohspace import classical_gates as cg
from cohspace.complex_sets import CSet
from cohspace.errors import NotASubset, TooLarge

R1 = CSet([1])
R2 = CSet([1, 2])

# Published OR/AND/XOR outputs for |R| = 2, columns (in1, in2) with in1 varying fastest
TABLE_1_INPUTS = [(i, j) for j in range(4) for i in range(4)]
TABLE_1 = {
    "or": [0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3],
    "and": [0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3],
    "xor": [0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0],
}
TABLE_2 = [((0, 0), (0, 0)), ((0, 1), (0, 1)), ((1, 0), (1, 1)), ((1, 1), (1, 0))]
TABLE_3 = [
    ((0, 0), (0, 0)), ((0, 1), (0, 1)), ((0, 2), (0, 2)), ((0, 3), (0, 3)),
    ((1, 0), (1, 1)), ((1, 1), (1, 0)), ((1, 2), (1, 3)), ((1, 3), (1, 2)),
    ((2, 0), (2, 2)), ((2, 1), (2, 3)), ((2, 2), (2, 0)), ((2, 3), (2, 1)),
    ((3, 0), (3, 3)), ((3, 1), (3, 2)), ((3, 2), (3, 1)), ((3, 3), (3, 0)),
]


@pytest.mark.parametrize("gate", ["or", "and", "xor"])
def test_basic_gates_match_published_table(gate):
    rows = cg.truth_table(cg.GateKind(gate), R2).reordered("first-fastest")
    assert [ins for ins, _ in rows] == TABLE_1_INPUTS
    assert [out[0] for _, out in rows] == TABLE_1[gate]


def test_cnot_tables():
    assert list(cg.truth_table(cg.GateKind.CNOT, R1).rows) == TABLE_2
    assert list(cg.truth_table(cg.GateKind.CNOT, R2).rows) == TABLE_3


def test_not_gate_is_complement():
    table = cg.truth_table(cg.GateKind.NOT, R2)
    assert table.outputs() == [(3,), (2,), (1,), (0,)]
    assert cg.check_reversible(table)


def test_reversibility():
    assert cg.check_reversible(cg.truth_table(cg.GateKind.CNOT, R2))
    for kind in ("or", "and", "xor"):
        assert not cg.check_reversible(cg.truth_table(cg.GateKind(kind), R2))


def test_cnot_special_controls():
    s2 = CSet([2])
    assert cg.apply_cnot(CSet(), s2, R2) == (CSet(), s2)
    assert cg.apply_cnot(R2, s2, R2) == (R2, CSet([1]))
    # control inside target removes it; target inside control gives the remainder
    assert cg.apply_cnot(CSet([1]), R2, R2)[1] == CSet([2])
    assert cg.apply_cnot(R2, CSet([1]), R2)[1] == CSet([2])


@pytest.mark.parametrize("code", range(8))
def test_fixed_control_maps_are_involutions(code):
    r = CSet([1, 2, 3])
    perm = cg.fixed_control_target_map(cg.decode(r, code), r)
    assert [perm[perm[c]] for c in range(8)] == list(range(8))
    cycles = cg.cycles(perm)
    assert all(len(c) == 2 for c in cycles)
    assert len(cycles) == (0 if code == 0 else 4)


def test_csv_and_lookup():
    table = cg.truth_table(cg.GateKind.CNOT, R2)
    lines = table.to_csv().splitlines()
    assert lines[0] == "in_control,in_target,out_control,out_target"
    assert lines[5] == "1,0,1,1"
    assert table.lookup(2, 1) == (2, 3)
    assert cg.truth_table(cg.GateKind.OR, R1).to_csv().splitlines()[0] == "in1,in2,out"
    with pytest.raises(ValueError):
        table.reordered("random")


def test_guards():
    with pytest.raises(TooLarge):
        cg.truth_table(cg.GateKind.CNOT, CSet(range(9)))
    with pytest.raises(NotASubset):
        cg.apply_cnot(CSet([7]), CSet(), R2)
    with pytest.raises(ValueError):
        cg.apply_basic(cg.GateKind.NOT, CSet(), CSet(), R2)
