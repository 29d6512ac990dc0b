"""Spin-world partition functions, Holant grids, and the bridge between them."""

import itertools
import json
import random

import pytest

from holant import (
    BinarySignature,
    DirectedMultiGraph,
    GridFormatError,
    Matrix,
    QI,
    Signature,
    SignatureGrid,
    SizeGuardError,
    cycle_graph,
    dumps_graph,
    dumps_grid,
    eval_holant,
    eval_holant_by_elimination,
    eval_partition,
    gate_signature,
    k4,
    k33,
    pendant_grid,
    random_3_regular,
    random_multigraph,
    to_incidence_grid,
)


def brute_z(graph, f):
    """Reference enumerator, independent of eval_partition's internals."""
    total = QI(0)
    vals = (f.w, f.x, f.y, f.z)
    for sigma in itertools.product((0, 1), repeat=graph.vertex_count):
        prod = QI(1)
        for t, h in graph.edges:
            prod = prod * vals[2 * sigma[t] + sigma[h]]
        total = total + prod
    return total


def test_signature_canonicalizes_ints():
    f = BinarySignature(1, 2, 3, 4)
    assert f.w == QI(1) and f.z == QI(4)
    assert f.is_exact
    g = f.to_float()
    assert not g.is_exact


def test_signature_parse():
    f = BinarySignature.parse("1, i, -i, -1")
    assert f.tuple() == (QI(1), QI(0, 1), QI(0, -1), QI(-1))
    with pytest.raises(GridFormatError):
        BinarySignature.parse("1,2,3")


def test_unary_signature():
    u = Signature.unary(QI(5), QI(7))
    assert u.arity == 1
    assert u.values == (QI(5), QI(7))


def test_equality_signature():
    eq = Signature.equality(3)
    assert eq.values[0] == QI(1) and eq.values[7] == QI(1)
    assert all(v == QI(0) for v in eq.values[1:7])


def test_known_partition_values():
    one = BinarySignature(1, 1, 1, 1)
    assert eval_partition(k4(), one) == QI(16)
    # w = 0 counts vertex covers
    vc = BinarySignature(0, 1, 1, 1)
    assert eval_partition(k4(), vc) == QI(5)
    assert eval_partition(k33(), vc) == QI(15)


def test_cycle_is_a_trace():
    f = BinarySignature(1, 2, 3, 4)
    b1 = Matrix([[f.w, f.x], [f.y, f.z]])
    for n in (3, 4, 5):
        p = b1.pow(n)
        assert eval_partition(cycle_graph(n), f) == p[0, 0] + p[1, 1]


def test_partition_matches_reference_enumerator():
    rng = random.Random(42)
    f = BinarySignature(QI(1, 1), QI(0, -2), QI(3), QI(-1, 1))
    for _ in range(10):
        g = random_multigraph(rng, max_vertices=6, max_edges=8)
        assert eval_partition(g, f) == brute_z(g, f)


def test_incidence_grid_holant_equals_partition():
    rng = random.Random(7)
    f = BinarySignature(2, QI(0, 1), -1, 3)
    for _ in range(10):
        g = random_multigraph(rng, max_vertices=6, max_edges=8)
        grid = to_incidence_grid(g, f)
        z = eval_partition(g, f)
        assert eval_holant(grid) == z
        assert eval_holant_by_elimination(grid) == z


def test_elimination_handles_large_instances():
    g = random_3_regular(random.Random(3), 20)
    # rank-1 signature: outer product of u = (1, 3) and v = (1, 2)
    f = BinarySignature(1, 2, 3, 6)
    grid = to_incidence_grid(g, f)
    # 30 edges exceed the enumeration guard but not the elimination route
    with pytest.raises(SizeGuardError):
        eval_holant(grid)
    expected = QI(1)
    for vtx in range(g.vertex_count):
        od = sum(1 for t, _ in g.edges if t == vtx)
        ind = sum(1 for _, h in g.edges if h == vtx)
        expected = expected * (QI(1) + QI(3) ** od * QI(2) ** ind)
    assert eval_holant_by_elimination(grid) == expected


def test_partition_size_guard():
    g = random_3_regular(random.Random(5), 28)
    f = BinarySignature(1, 1, 1, 1)
    with pytest.raises(SizeGuardError):
        eval_partition(g, f)
    # the flag itself must be accepted on guarded-size instances too
    assert eval_partition(k4(), f, allow_large=True) == QI(16)


def test_3_regular_generator_degrees():
    rng = random.Random(11)
    for n in (4, 6, 10):
        g = random_3_regular(rng, n)
        assert g.vertex_count == n
        assert len(g.edges) == 3 * n // 2
        for v in range(n):
            assert g.degree(v) == 3
    with pytest.raises(ValueError):
        random_3_regular(rng, 5)


def test_graph_json_round_trip():
    g = k33()
    g2 = DirectedMultiGraph.from_json(json.loads(dumps_graph(g)))
    assert g2.edges == g.edges
    assert g2.vertex_count == g.vertex_count


def test_grid_json_round_trip():
    grid = to_incidence_grid(k4(), BinarySignature(1, 2, 3, 4))
    grid2 = SignatureGrid.from_json(json.loads(dumps_grid(grid)))
    assert eval_holant_by_elimination(grid2) == eval_holant_by_elimination(grid)


def test_gate_signature_methods_agree():
    # one f generator exposed on both sides is the matrix [[w,x],[y,z]]
    f = BinarySignature(1, 2, 3, 4)
    gate = SignatureGrid(
        [f.signature()],
        [],
        [],
        leading=[("gen", 0, 0)],
        trailing=[("gen", 0, 1)],
    )
    a = gate_signature(gate, method="eliminate")
    b = gate_signature(gate, method="enumerate")
    assert a == b == Matrix([[f.w, f.x], [f.y, f.z]])


def pendant_reference(graph, f, removed, count, pendant):
    """Direct enumeration over spins with pendants and dropped slots."""
    vals = (f.w, f.x, f.y, f.z)
    removed_set = set(removed)
    freed = []
    for e in removed:
        t, h = graph.edges[e]
        freed.extend([t, h])
    pendant_vertices = freed[:count]
    total = QI(0)
    for sigma in itertools.product((0, 1), repeat=graph.vertex_count):
        prod = QI(1)
        for i, (t, h) in enumerate(graph.edges):
            if i in removed_set:
                continue
            prod = prod * vals[2 * sigma[t] + sigma[h]]
        for v in pendant_vertices:
            prod = prod * pendant.values[sigma[v]]
        total = total + prod
    return total


@pytest.mark.parametrize("count", [1, 2, 3, 4])
def test_pendant_grid_semantics(count):
    graph = k4()
    f = BinarySignature(1, 2, 3, 5)
    pendant = Signature.unary(QI(5), QI(7))
    removed = list(range((count + 1) // 2))
    grid = pendant_grid(graph, f, removed, count, pendant)
    expected = pendant_reference(graph, f, removed, count, pendant)
    assert eval_holant_by_elimination(grid) == expected


def test_pendant_grid_rejects_bad_input():
    graph = k4()
    f = BinarySignature(1, 2, 3, 4)
    u = Signature.unary(QI(1), QI(1))
    with pytest.raises(GridFormatError):
        pendant_grid(graph, f, [0, 0], 2, u)
    with pytest.raises(GridFormatError):
        pendant_grid(graph, f, [0], 3, u)


def test_closed_grid_required_for_elimination():
    f = BinarySignature(1, 2, 3, 4)
    gate = SignatureGrid(
        [f.signature()], [], [], leading=[("gen", 0, 0)], trailing=[("gen", 0, 1)]
    )
    with pytest.raises(GridFormatError):
        eval_holant_by_elimination(gate)
