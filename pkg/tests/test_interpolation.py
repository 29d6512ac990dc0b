"""Interpolation machinery: projective sets, Cayley chains, Vandermonde."""

import random

import pytest

from holant import (
    BinarySignature,
    DimensionMismatch,
    GadgetSpec,
    Matrix,
    QI,
    Signature,
    eval_holant_by_elimination,
    k4,
    k33,
    pendant_grid,
)
from holant.interpolation import (
    FiniteGroupError,
    ProjectiveSetError,
    cayley_enumerate,
    collapse_projector,
    group_lemma_interpolate,
    kernel_basis,
    lift_projector,
    projective_case,
    projective_set_for,
    rank_preserving_member,
    vandermonde_solve,
)

F = BinarySignature(1, 2, 3, 4)
PENDANT = Signature.unary(QI(5), QI(7))


def demo_grid(graph, occurrences, f=F, pendant=PENDANT):
    removed = list(range((occurrences + 1) // 2))
    return pendant_grid(graph, f, removed, occurrences, pendant)


def test_vandermonde_exact():
    # nodes 1, 2, 3 against rhs from c = (5, -1, 1/2)
    cs = (QI(5), QI(-1), QI(1) / QI(2))
    nodes = [QI(1), QI(2), QI(3)]
    rhs = [sum((cs[j] * r**j for j in range(3)), QI(0)) for r in nodes]
    assert vandermonde_solve(nodes, rhs) == cs


def test_vandermonde_rejects_repeats_and_mismatch():
    with pytest.raises(ValueError):
        vandermonde_solve([QI(1), QI(1)], [QI(0), QI(0)])
    with pytest.raises(DimensionMismatch):
        vandermonde_solve([QI(1)], [QI(0), QI(0)])


def test_projective_case_assignments():
    assert projective_case(BinarySignature(1, 2, 3, 5)) == 1
    assert projective_case(BinarySignature(0, 1, -1, 0)) is None
    assert projective_case(BinarySignature(1, 0, 0, 1)) is None


def test_projective_set_certificate_geometry():
    pset = projective_set_for(BinarySignature(1, 2, 3, 5))
    assert pset.case == 1
    assert len(pset.matrices) == 7
    for m in pset.matrices:
        assert m.shape == (2, 4)
    cert = pset.certificate
    # shared kernel vectors really lie in the stated kernels
    for role in range(3):
        prod = pset.matrices[role] @ Matrix.column(list(cert.shared_u))
        assert all(prod[i, 0] == QI(0) for i in range(2))
    for role in range(3, 6):
        prod = pset.matrices[role] @ Matrix.column(list(cert.shared_v))
        assert all(prod[i, 0] == QI(0) for i in range(2))


def test_projective_set_error():
    with pytest.raises(ProjectiveSetError):
        projective_set_for(BinarySignature(1, 0, 0, 1))


def test_rank_preserving_member_random():
    rng = random.Random(88)
    pset = projective_set_for(BinarySignature(1, 2, 3, 5))
    for _ in range(30):
        while True:
            n = Matrix(
                [
                    [QI(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(2)]
                    for _ in range(4)
                ]
            )
            if n.rank() == 2:
                break
        idx = rank_preserving_member(pset, n)
        assert idx is not None
        assert (pset.matrices[idx] @ n).rank() == 2


def test_lift_and_collapse_projector():
    p = Matrix([[QI(1), QI(0), QI(0), QI(0)], [QI(0), QI(0), QI(0), QI(1)]])
    assert lift_projector(p, 2) == p
    # k = 3 passes the top bit through: I_2 (x) p maps 8 coords to 4
    assert lift_projector(p, 3).shape == (4, 8)
    assert collapse_projector(p, 2) == p
    assert collapse_projector(p, 3).shape == (2, 8)
    with pytest.raises(DimensionMismatch):
        lift_projector(Matrix.identity(2), 3)


def test_kernel_basis_matches_matrix_method():
    m = Matrix([[QI(1), QI(2), QI(3), QI(4)], [QI(2), QI(4), QI(6), QI(8)]])
    basis = kernel_basis(m)
    assert len(basis) == 3
    for vec in basis:
        prod = m @ Matrix.column(list(vec))
        assert all(prod[i, 0] == QI(0) for i in range(2))


def test_cayley_enumerate_powers():
    g = Matrix.diagonal([QI(1), QI(0, 1)])
    els = cayley_enumerate([g], 4)
    assert els[0] == Matrix.identity(2)
    assert els[1] == g
    assert els[2] == g @ g
    with pytest.raises(FiniteGroupError):
        cayley_enumerate([g], 5)


def test_cayley_rejects_singular_generator():
    with pytest.raises(ValueError):
        cayley_enumerate([Matrix.diagonal([QI(1), QI(0)])], 2)


@pytest.mark.parametrize("occurrences", [1, 2, 3])
def test_interpolation_matches_direct_value(occurrences):
    grid = demo_grid(k4(), occurrences)
    run = group_lemma_interpolate(None, ("m4", "m5"), None, grid)
    assert run.value == eval_holant_by_elimination(grid)
    assert run.occurrences == occurrences
    assert not run.target_evaluated_directly
    assert len(run.nodes) == occurrences + 1


def test_interpolation_on_k33():
    grid = demo_grid(k33(), 2)
    run = group_lemma_interpolate(None, ("m4", "m5"), None, grid)
    assert run.value == eval_holant_by_elimination(grid)
    assert not run.target_evaluated_directly


def test_interpolation_audit_is_complete():
    grid = demo_grid(k4(), 2)
    calls = []

    def oracle(g):
        calls.append(g)
        return eval_holant_by_elimination(g)

    run = group_lemma_interpolate(oracle, ("m4", "m5"), None, grid)
    assert len(run.audit) == len(calls)
    for record, g in zip(run.audit, calls):
        assert record.edges == g.edge_count
        assert not record.target_present


def test_interpolation_uses_oracle_values():
    # corrupting one oracle answer must corrupt the interpolated value
    grid = demo_grid(k4(), 2)
    honest = group_lemma_interpolate(None, ("m4", "m5"), None, grid)

    state = {"count": 0}

    def liar(g):
        state["count"] += 1
        value = eval_holant_by_elimination(g)
        if state["count"] == 1:
            return value + QI(1)
        return value

    tampered = group_lemma_interpolate(liar, ("m4", "m5"), None, grid)
    assert tampered.value != honest.value


def test_interpolation_unary_generator_route():
    grid = demo_grid(k4(), 2)
    run = group_lemma_interpolate(
        None, ("gadget:unary:0:001", "gadget:unary:0:101"), None, grid
    )
    assert run.value == eval_holant_by_elimination(grid)
    assert not run.target_evaluated_directly


def test_interpolation_explicit_projective_set():
    grid = demo_grid(k4(), 1)
    pset = projective_set_for(F)
    run = group_lemma_interpolate(None, ("m4", "m5"), pset, grid)
    assert run.value == eval_holant_by_elimination(grid)


def test_interpolation_finite_group_detected():
    # a bare-edge gadget realizes [[w, x], [y, z]]; at (0, 1, -1, 0) that
    # matrix squares to a scalar, so the word set can never supply enough
    # distinct interpolation nodes
    edge = GadgetSpec(
        name="custom:edge",
        vertices=1,
        edges=(),
        leading=(("in", 0),),
        trailing=(0,),
    )
    f = BinarySignature(0, 1, -1, 0)
    grid = demo_grid(k4(), 1, f=f)
    pset = projective_set_for(BinarySignature(1, 2, 3, 5))
    with pytest.raises(FiniteGroupError):
        group_lemma_interpolate(None, (edge,), pset, grid)


def test_run_json_shape():
    grid = demo_grid(k4(), 2)
    run = group_lemma_interpolate(None, ("m4", "m5"), None, grid)
    obj = run.to_json()
    assert obj["occurrences"] == 2
    assert obj["target"] == ["5", "7"]
    assert obj["target_evaluated_directly"] is False
    assert len(obj["oracle_calls"]) == len(run.audit)
    assert all(not c["target_present"] for c in obj["oracle_calls"])
