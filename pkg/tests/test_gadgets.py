"""Gadget catalog: gate graphs, component expressions, order machinery."""

import random

import pytest

from holant import (
    BinarySignature,
    GADGET_ALIASES,
    GADGET_LIBRARY,
    GadgetExprError,
    GadgetSpec,
    Matrix,
    QI,
    anti_gadget_product,
    basic_component,
    char_poly_coefficients,
    eval_gadget_expr,
    finite_order_up_to_scalar,
    library_names,
    parse_gadget_expr,
    resolve_gadget,
    same_norm_necessary_condition,
    transition_matrix,
)

F = BinarySignature(1, 2, 3, 5)
RNG_SPREAD = [
    BinarySignature(QI(1, 1), QI(0, -2), QI(3), QI(-1, 2)),
    BinarySignature(2, QI(0, 1), -1, QI(1, -1)),
]


def test_aliases_resolve():
    for short, full in GADGET_ALIASES.items():
        assert resolve_gadget(short).name == full


def test_resolve_unknown_raises():
    with pytest.raises(KeyError):
        resolve_gadget("gadget:no:such:thing")


def test_basic_components():
    f = F
    assert basic_component("B1", f) == Matrix([[f.w, f.x], [f.y, f.z]])
    assert basic_component("B2", f) == Matrix([[f.w, f.y], [f.x, f.z]])
    assert basic_component("B3", f) == Matrix(
        [[QI(1), QI(0), QI(0), QI(0)], [QI(0), QI(0), QI(0), QI(1)]]
    )
    assert basic_component("B4", f) == basic_component("B3", f).transpose()
    assert basic_component("B5", f) == Matrix.column([f.w, f.x, f.y, f.z])
    assert basic_component("I4", f) == Matrix.identity(4)
    with pytest.raises(GadgetExprError):
        basic_component("nonsense", f)


def test_every_expression_matches_its_gate_graph():
    # the expression route and the gate-elimination route are independent
    for name in library_names():
        spec = resolve_gadget(name)
        if spec.expr is None or spec.pendants:
            continue
        for f in [F] + RNG_SPREAD:
            got = transition_matrix(spec, f)
            want = eval_gadget_expr(spec.expr, f)
            assert got == want, f"{name} at {f!r}"


def test_transition_methods_agree_on_small_gadgets():
    for name in ("m1", "m2", "m4", "gadget:unary:0:001"):
        a = transition_matrix(name, F, method="eliminate")
        b = transition_matrix(name, F, method="enumerate")
        assert a == b, name


def test_frozen_main_binary_matrix():
    got = transition_matrix("gadget:main:binary:0:110", F)
    assert got == Matrix(
        [
            [QI(1), QI(4), QI(6), QI(20)],
            [QI(3), QI(10), QI(18), QI(50)],
            [QI(3), QI(12), QI(15), QI(50)],
            [QI(9), QI(30), QI(45), QI(125)],
        ]
    )


def test_m4_closed_form_anchor():
    f = F
    b1 = basic_component("B1", f)
    want = b1.kron(b1) @ Matrix.diagonal([f.w, f.x, f.y, f.z])
    assert transition_matrix("m4", f) == want


def test_anti_gadget_main_identity():
    f = BinarySignature(1, 2, 3, 4)
    m4 = transition_matrix("m4", f)
    m5 = transition_matrix("m5", f)
    ratio = anti_gadget_product(m4, m5)
    # y/x = 3/2 and x/y = 2/3 on the inner diagonal
    assert ratio == Matrix.diagonal(
        [QI(1), QI(3) / QI(2), QI(2) / QI(3), QI(1)]
    )


def test_expr_parser_rejects_garbage():
    for bad in ("prod(", "prod(B1", "unknown(B1)", "B9", "prod(B1,)", ""):
        with pytest.raises((GadgetExprError, KeyError)):
            eval_gadget_expr(bad, F)


def test_expr_evaluation():
    got = eval_gadget_expr("prod(B2,B3)", BinarySignature(1, 2, 3, 4))
    assert got == Matrix([[QI(1), QI(0), QI(0), QI(3)], [QI(2), QI(0), QI(0), QI(4)]])


def test_custom_gadget_spec_gate():
    # a single f generator with both slots dangling realizes [[w,x],[y,z]]
    spec = GadgetSpec(
        name="custom:edge",
        vertices=1,
        edges=(),
        leading=(("in", 0),),
        trailing=(0,),
    )
    f = BinarySignature(1, 2, 3, 4)
    assert transition_matrix(spec, f) == f.matrix()


def test_finite_order_diagonal():
    res = finite_order_up_to_scalar(Matrix.diagonal([QI(1), QI(0, 1)]))
    assert res.order == 4 and res.is_finite
    res = finite_order_up_to_scalar(Matrix.diagonal([QI(1), QI(-1)]))
    assert res.order == 2
    res = finite_order_up_to_scalar(Matrix.identity(3))
    assert res.order == 1


def test_finite_order_certified_infinite():
    res = finite_order_up_to_scalar(Matrix.diagonal([QI(1), QI(2)]))
    assert not res.is_finite and res.certified_infinite
    uni = Matrix([[QI(1), QI(1)], [QI(0), QI(1)]])
    res = finite_order_up_to_scalar(uni)
    assert not res.is_finite and res.certified_infinite


def test_finite_order_search_path():
    rot = Matrix([[QI(0), QI(1)], [QI(-1), QI(0)]])
    # rot^2 = -I, proportional to the identity
    res = finite_order_up_to_scalar(rot)
    assert res.order == 2


def test_finite_order_search_exhaustion():
    m = Matrix([[1.0 + 0j, 0j], [0j, 1.1 + 0j]])
    res = finite_order_up_to_scalar(m, kmax=10)
    assert not res.is_finite and not res.certified_infinite


def test_char_poly_coefficients_convention():
    m = Matrix.diagonal([QI(2), QI(3)])
    # det(XI - M) = X^2 - 5X + 6
    assert char_poly_coefficients(m) == (QI(-5), QI(6))


def test_same_norm_condition_degree2():
    # roots 1 and -1 share a norm
    assert same_norm_necessary_condition((QI(0), QI(-1)))
    # roots 1 and 2i: probe (1+2i)^2 * (-2i) = 8 + 6i is not real positive
    assert not same_norm_necessary_condition((QI(-1, -2), QI(0, 2)))
    # the condition is only necessary: roots 1 and 2 slip through
    assert same_norm_necessary_condition((QI(-3), QI(2)))


def test_same_norm_condition_degree4():
    m = Matrix.diagonal([QI(1), QI(0, 1), QI(-1), QI(0, -1)])
    assert same_norm_necessary_condition(char_poly_coefficients(m))
    m = Matrix.diagonal([QI(1), QI(1), QI(1), QI(3)])
    assert not same_norm_necessary_condition(char_poly_coefficients(m))


def test_same_norm_condition_rejects_odd_degree():
    with pytest.raises(ValueError):
        same_norm_necessary_condition((QI(1), QI(1), QI(1)))


def test_library_names_sorted_and_complete():
    names = library_names()
    assert names == sorted(names)
    assert set(GADGET_ALIASES.values()) <= set(names)
    assert len(names) == len(GADGET_LIBRARY)
