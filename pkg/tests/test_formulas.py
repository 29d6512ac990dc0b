"""Closed-form statements checked against gate-graph elimination.

Each registered statement carries its own sampler for the validity domain;
these tests draw fresh seeds, so together with the acceptance criteria the
formulas are exercised on two independent random streams.
"""

import random

import pytest

from holant import BinarySignature, QI, transition_matrix
from holant.formulas import (
    ANTI_GADGET_STATEMENTS,
    CHAR_POLY_STATEMENTS,
    DETERMINANT_STATEMENTS,
    MATRIX_STATEMENTS,
    sample_general,
    signature_invariants,
    ternary_ratio_char_poly,
)


@pytest.mark.parametrize("stmt", MATRIX_STATEMENTS, ids=lambda s: s.label)
def test_matrix_statement(stmt):
    rng = random.Random(hash(stmt.label) & 0xFFFF)
    for _ in range(8):
        assert stmt.check(stmt.sample(rng))


@pytest.mark.parametrize("stmt", ANTI_GADGET_STATEMENTS, ids=lambda s: s.name)
def test_anti_gadget_statement(stmt):
    rng = random.Random(hash(stmt.name) & 0xFFFF)
    for _ in range(8):
        assert stmt.check(stmt.sample(rng))


@pytest.mark.parametrize("stmt", DETERMINANT_STATEMENTS, ids=lambda s: s.label)
def test_determinant_statement(stmt):
    rng = random.Random(hash(stmt.label) & 0xFFFF)
    for _ in range(8):
        assert stmt.check(stmt.sample(rng))


@pytest.mark.parametrize("stmt", CHAR_POLY_STATEMENTS, ids=lambda s: s.name)
def test_char_poly_statement(stmt):
    rng = random.Random(hash(stmt.name) & 0xFFFF)
    for _ in range(6):
        assert stmt.check(stmt.sample(rng))


def test_invariant_glossary_identities():
    rng = random.Random(4242)
    for _ in range(30):
        f = sample_general(rng)
        inv = signature_invariants(f)
        a, b = inv["A"], inv["B"]
        c, d = inv["C"], inv["D"]
        e, ff = inv["E"], inv["F"]
        assert e + ff == c * d
        assert e * ff == QI(-4) * a**3 * b + b * c**2 + a**3 * d**2


def test_invariants_definitions():
    f = BinarySignature(1, 2, 3, 5)
    inv = signature_invariants(f)
    assert inv["A"] == QI(5)          # wz
    assert inv["B"] == QI(6)          # xy
    assert inv["C"] == QI(126)        # w^3 + z^3
    assert inv["D"] == QI(5)          # x + y
    assert inv["E"] == QI(2 + 3 * 125)   # w^3 x + y z^3
    assert inv["F"] == QI(3 + 2 * 125)   # w^3 y + x z^3


def test_ternary_tuple_full_width():
    # every slot of the 8-tuple, not only the acceptance-pinned ones
    rng = random.Random(997)
    found = 0
    while found < 5:
        w = QI(rng.randint(-4, 4), rng.randint(-4, 4))
        z = QI(rng.randint(-4, 4), rng.randint(-4, 4))
        if w * z == QI(0) or w * z == QI(1):
            continue
        x = QI(rng.choice([1, 2, 3, -1, -2]))
        f = BinarySignature(w, x, QI(1) / x, z)  # xy = 1
        got = ternary_ratio_char_poly(f)
        a = w * z
        d = x + QI(1) / x
        assert len(got) == 8
        assert got[0] == (a - 1) * (a * d * d + 2 * a + 2)
        assert got[6] == a**6 * (a - 1) ** 7 * (2 * a * d * d - 2 * a + d * d - 2)
        assert got[7] == a**8 * (a - 1) ** 8
        found += 1


def test_statement_counts():
    # registry sizes are load-bearing for the acceptance sample counts
    assert len(MATRIX_STATEMENTS) == 16
    assert len(ANTI_GADGET_STATEMENTS) == 5
    assert len(DETERMINANT_STATEMENTS) == 8
    assert len(CHAR_POLY_STATEMENTS) == 7


def test_determinant_anchor_point():
    # at (1, i, -i, -1): A = -1, B = 1, E = 2i, so the E-family determinants
    # become 2^8, -2^6 E^2 = 256 and 2^6 (E^2 + 4) = 0
    f = BinarySignature(1, QI(0, 1), QI(0, -1), -1)
    inv = signature_invariants(f)
    assert inv["A"] == QI(-1) and inv["B"] == QI(1) and inv["E"] == QI(0, 2)
    assert transition_matrix("gadget:binary:4:110000", f).det() == QI(256)
    assert transition_matrix("gadget:binary:5:110010", f).det() == QI(256)
    assert transition_matrix("gadget:binary:7:110010", f).det() == QI(0)


def test_samplers_respect_constraints():
    rng = random.Random(31337)
    for stmt in MATRIX_STATEMENTS:
        f = stmt.sample(rng)
        assert isinstance(f, BinarySignature) and f.is_exact
    for stmt in CHAR_POLY_STATEMENTS:
        f = stmt.sample(rng)
        assert isinstance(f, BinarySignature) and f.is_exact
