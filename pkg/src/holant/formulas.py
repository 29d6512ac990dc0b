"""Closed-form statements about catalog gadgets, with validity domains.

Every transition matrix in the gadget catalog can be computed by gate-graph
elimination.  For many of them an explicit product formula over the basic
components B1..B5 is also known, and for the recursive families there are
closed forms for determinants and characteristic polynomials in terms of
the invariant combinations A..F.  This module records those statements as
data: each entry carries the formula, the constraint under which it holds,
and a sampler that draws random exact signatures satisfying the constraint.
None of the formulas call gate-graph elimination, so checking a statement
at a sample point compares two independent routes to the same matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .gadgets import anti_gadget_product, basic_component, transition_matrix
from .grids import BinarySignature
from .linalg import Matrix
from .scalars import GaussianRational, Scalar, is_zero, scalars_equal

QI = GaussianRational

Sampler = Callable[[random.Random], BinarySignature]


# -- invariant combinations ------------------------------------------------------


def signature_invariants(f: BinarySignature) -> dict[str, Scalar]:
    """The six combinations of (w, x, y, z) steering the dichotomy analysis.

    A = wz, B = xy, C = w^3 + z^3, D = x + y, E = w^3 x + y z^3, and
    F = w^3 y + x z^3.  They are tied together by E + F = C D and
    E F = -4 A^3 B + B C^2 + A^3 D^2.
    """
    w, x, y, z = f.w, f.x, f.y, f.z
    return {
        "A": w * z,
        "B": x * y,
        "C": w**3 + z**3,
        "D": x + y,
        "E": w**3 * x + y * z**3,
        "F": w**3 * y + x * z**3,
    }


# -- samplers --------------------------------------------------------------------


def _qi(rng: random.Random, spread: int = 7) -> GaussianRational:
    return QI(rng.randint(-spread, spread), rng.randint(-spread, spread))


def _nonzero(rng: random.Random, spread: int = 7) -> GaussianRational:
    while True:
        v = _qi(rng, spread)
        if not is_zero(v):
            return v


def sample_general(rng: random.Random) -> BinarySignature:
    return BinarySignature(_qi(rng), _qi(rng), _qi(rng), _qi(rng))


def sample_x_zero(rng: random.Random) -> BinarySignature:
    return BinarySignature(_qi(rng), QI(0), _qi(rng), _qi(rng))


def sample_w_zero(rng: random.Random) -> BinarySignature:
    return BinarySignature(QI(0), _qi(rng), _qi(rng), _qi(rng))


def sample_invertible_core(rng: random.Random) -> BinarySignature:
    # wz != xy and wxyz != 0, so both main binary matrices are invertible
    while True:
        f = BinarySignature(_nonzero(rng), _nonzero(rng), _nonzero(rng), _nonzero(rng))
        if not is_zero(f.w * f.z - f.x * f.y):
            return f


def sample_unary_ratio(rng: random.Random) -> BinarySignature:
    # wz != +-xy keeps both general unary matrices invertible
    while True:
        f = sample_general(rng)
        a, b = f.w * f.z, f.x * f.y
        if not (is_zero(a - b) or is_zero(a + b)):
            return f


def sample_x_zero_invertible(rng: random.Random) -> BinarySignature:
    # w and z nonzero keep the x = 0 unary pair invertible
    return BinarySignature(_nonzero(rng), QI(0), _qi(rng), _nonzero(rng))


def sample_w_zero_invertible(rng: random.Random) -> BinarySignature:
    # x, y, z nonzero keep the w = 0 unary pair invertible
    return BinarySignature(QI(0), _nonzero(rng), _nonzero(rng), _nonzero(rng))


def _sample_symmetric_invertible(gadget: str) -> Sampler:
    def draw(rng: random.Random) -> BinarySignature:
        while True:
            x = _nonzero(rng, 4)
            f = BinarySignature(_qi(rng, 4), x, x, _qi(rng, 4))
            if not is_zero(transition_matrix(gadget, f).det()):
                return f

    return draw


def sample_unit_b(rng: random.Random) -> BinarySignature:
    # xy = 1 with wz distinct from 0, 1, and -1
    while True:
        w, z, x = _qi(rng), _qi(rng), _nonzero(rng)
        a = w * z
        if not (is_zero(a) or a == QI(1) or a == QI(-1)):
            return BinarySignature(w, x, x**-1, z)


def sample_unit_b_zero_d(rng: random.Random) -> BinarySignature:
    # xy = 1 and x = -y force x to be a square root of -1
    x = QI(0, 1) if rng.random() < 0.5 else QI(0, -1)
    return BinarySignature(_qi(rng), x, -x, _qi(rng))


def sample_conjugate_corner(rng: random.Random) -> BinarySignature:
    # wz = -1 and xy = 1, the corner where the E and F statements live
    w, x = _nonzero(rng), _nonzero(rng)
    return BinarySignature(w, x, x**-1, -(w**-1))


# -- stated product formulas -----------------------------------------------------


def _diag(values) -> Matrix:
    return Matrix.diagonal(list(values))


def _b(f: BinarySignature, name: str) -> Matrix:
    return basic_component(name, f)


def _zero(f: BinarySignature) -> Scalar:
    return QI(0) if f.is_exact else complex(0)


def _m1_formula(f: BinarySignature) -> Matrix:
    w, x, y, z = f.w, f.x, f.y, f.z
    o = _zero(f)
    return Matrix([[w, o, o, y], [x, o, o, z]])


def _m2_formula(f: BinarySignature) -> Matrix:
    w, x, y, z = f.w, f.x, f.y, f.z
    return Matrix(
        [
            [w**3 + x**3, w * y**2 + x * z**2],
            [w**2 * y + x**2 * z, y**3 + z**3],
        ]
    )


def _inner_square(f: BinarySignature) -> Matrix:
    # B3 (B1 x B2) B4 contracts to this symmetric core
    w, x, y, z = f.w, f.x, f.y, f.z
    return Matrix([[w**2, x * y], [x * y, z**2]])


def _m3_formula(f: BinarySignature) -> Matrix:
    return _b(f, "B1") @ _inner_square(f)


def _m4_formula(f: BinarySignature) -> Matrix:
    b1 = _b(f, "B1")
    return b1.kron(b1) @ _diag([f.w, f.x, f.y, f.z])


def _m5_formula(f: BinarySignature) -> Matrix:
    b1 = _b(f, "B1")
    return b1.kron(b1) @ _diag([f.w, f.y, f.x, f.z])


def _m6_w_zero_formula(f: BinarySignature) -> Matrix:
    # valid only on the w = 0 slice
    x, y, z = f.x, f.y, f.z
    o = _zero(f)
    return Matrix([[o, x], [y, z]]) @ Matrix(
        [[o, x * y * z**3], [x * y * z**3, x * y**2 * z**2 + z**5]]
    )


def _unary_001_formula(f: BinarySignature) -> Matrix:
    return _b(f, "B2") @ _inner_square(f)


def _unary_101_formula(f: BinarySignature) -> Matrix:
    return _b(f, "B1") @ _inner_square(f)


def _m2_x_zero_formula(f: BinarySignature) -> Matrix:
    w, y, z = f.w, f.y, f.z
    o = _zero(f)
    return Matrix([[w, o], [y, z]]) @ Matrix([[w**2, y**2], [o, z**2]])


def _m3_x_zero_formula(f: BinarySignature) -> Matrix:
    w, y, z = f.w, f.y, f.z
    o = _zero(f)
    return Matrix([[w, o], [y, z]]) @ Matrix([[w**2, o], [o, z**2]])


def _m3_w_zero_formula(f: BinarySignature) -> Matrix:
    x, y, z = f.x, f.y, f.z
    o = _zero(f)
    return Matrix([[o, x], [y, z]]) @ Matrix([[o, x * y], [x * y, z**2]])


def _binary_e4_formula(f: BinarySignature) -> Matrix:
    # composition of the two main binary forms
    return _m4_formula(f) @ _m5_formula(f)


def _binary_e7_formula(f: BinarySignature) -> Matrix:
    w, x, y, z = f.w, f.x, f.y, f.z
    o = _zero(f)
    b1 = _b(f, "B1")
    core = Matrix(
        [
            [w**4 + w * x * y**2, w**2 * x * y + x * y**2 * z, o, o],
            [w**2 * x * y + x * y**2 * z, w * x * y * z + y * z**3, o, o],
            [o, o, w**3 * x + w * x * y * z, w * x**2 * y + x * y * z**2],
            [o, o, w * x**2 * y + x * y * z**2, x**2 * y * z + z**4],
        ]
    )
    return b1.kron(b1) @ core


def _binary_e5_formula(f: BinarySignature) -> Matrix:
    w, x, y, z = f.w, f.x, f.y, f.z
    tail = _b(f, "B2") @ _diag([w**2 + y * z, w * x + z**2])
    return _m5_formula(f) @ Matrix.identity(2, exact=f.is_exact).kron(tail)


def _binary_f7_formula(f: BinarySignature) -> Matrix:
    w, x, y, z = f.w, f.x, f.y, f.z
    o = _zero(f)
    b1 = _b(f, "B1")
    core = Matrix(
        [
            [w**4 + w * x**2 * y, w**2 * x * y + x**2 * y * z, o, o],
            [w**2 * x * y + x**2 * y * z, w * x * y * z + x * z**3, o, o],
            [o, o, w**3 * y + w * x * y * z, w * x * y**2 + x * y * z**2],
            [o, o, w * x * y**2 + x * y * z**2, x * y**2 * z + z**4],
        ]
    )
    return b1.kron(b1) @ core


def _binary_f5_formula(f: BinarySignature) -> Matrix:
    w, x, y, z = f.w, f.x, f.y, f.z
    tail = _b(f, "B1") @ _diag([w**2 + x * z, w * y + z**2])
    return _m4_formula(f) @ Matrix.identity(2, exact=f.is_exact).kron(tail)


@dataclass(frozen=True)
class MatrixStatement:
    """A stated closed form for one gadget's transition matrix."""

    gadget: str
    constraint: str
    formula: Callable[[BinarySignature], Matrix]
    sampler: Sampler

    @property
    def label(self) -> str:
        if self.constraint:
            return f"{self.gadget} [{self.constraint}]"
        return self.gadget

    def sample(self, rng: random.Random) -> BinarySignature:
        return self.sampler(rng)

    def check(self, f: BinarySignature) -> bool:
        return self.formula(f) == transition_matrix(self.gadget, f)


MATRIX_STATEMENTS: tuple[MatrixStatement, ...] = (
    MatrixStatement("gadget:main:finish:0:0", "", _m1_formula, sample_general),
    MatrixStatement("gadget:main:unary:0:111", "", _m2_formula, sample_general),
    MatrixStatement("gadget:main:unary:0:110", "", _m3_formula, sample_general),
    MatrixStatement("gadget:main:binary:0:110", "", _m4_formula, sample_general),
    MatrixStatement("gadget:main:binary:0:111", "", _m5_formula, sample_general),
    MatrixStatement(
        "gadget:main:unary:4:101010", "w = 0", _m6_w_zero_formula, sample_w_zero
    ),
    MatrixStatement("gadget:unary:0:001", "", _unary_001_formula, sample_general),
    MatrixStatement("gadget:unary:0:101", "", _unary_101_formula, sample_general),
    MatrixStatement(
        "gadget:main:unary:0:111", "x = 0", _m2_x_zero_formula, sample_x_zero
    ),
    MatrixStatement(
        "gadget:main:unary:0:110", "x = 0", _m3_x_zero_formula, sample_x_zero
    ),
    MatrixStatement(
        "gadget:main:unary:0:110", "w = 0", _m3_w_zero_formula, sample_w_zero
    ),
    MatrixStatement("gadget:binary:4:110000", "", _binary_e4_formula, sample_general),
    MatrixStatement("gadget:binary:7:110010", "", _binary_e7_formula, sample_general),
    MatrixStatement("gadget:binary:5:110010", "", _binary_e5_formula, sample_general),
    MatrixStatement("gadget:binary:7:111010", "", _binary_f7_formula, sample_general),
    MatrixStatement("gadget:binary:5:111100", "", _binary_f5_formula, sample_general),
)


# -- anti-gadget identities ------------------------------------------------------


def _one(f: BinarySignature) -> Scalar:
    return QI(1) if f.is_exact else complex(1)


def _binary_anti_expected(f: BinarySignature) -> Matrix:
    x, y = f.x, f.y
    return _diag([_one(f), y * x**-1, x * y**-1, _one(f)])


def _x_zero_anti_expected(f: BinarySignature) -> Matrix:
    w, y = f.w, f.y
    o, e = _zero(f), _one(f)
    return Matrix([[e, y**2 * w**-2], [o, e]])


def _w_zero_anti_expected(f: BinarySignature) -> Matrix:
    y, z = f.y, f.z
    o = _zero(f)
    return Matrix([[z**3, y * z**2], [o, z**3]])


def _vertical_ratio_expected(f: BinarySignature) -> Matrix:
    # x = y on this domain; the middle ratio is wz / x^2
    ratio = f.w * f.z * f.x**-2
    return _diag([_one(f), ratio, ratio, _one(f)])


@dataclass(frozen=True)
class AntiGadgetStatement:
    """M_left^-1 M_right collapses to a stated simple form."""

    name: str
    left: str
    right: str
    constraint: str
    expected: Optional[Callable[[BinarySignature], Matrix]]
    sampler: Sampler

    def sample(self, rng: random.Random) -> BinarySignature:
        return self.sampler(rng)

    def product(self, f: BinarySignature) -> Matrix:
        return anti_gadget_product(
            transition_matrix(self.left, f), transition_matrix(self.right, f)
        )

    def check(self, f: BinarySignature) -> bool:
        prod = self.product(f)
        if self.expected is None:
            return prod.is_diagonal()
        return prod == self.expected(f)


ANTI_GADGET_STATEMENTS: tuple[AntiGadgetStatement, ...] = (
    AntiGadgetStatement(
        "main binary ratio",
        "gadget:main:binary:0:110",
        "gadget:main:binary:0:111",
        "wz != xy and wxyz != 0",
        _binary_anti_expected,
        sample_invertible_core,
    ),
    AntiGadgetStatement(
        "x = 0 unipotent",
        "gadget:main:unary:0:110",
        "gadget:main:unary:0:111",
        "x = 0 and wz != 0",
        _x_zero_anti_expected,
        sample_x_zero_invertible,
    ),
    AntiGadgetStatement(
        "w = 0 unipotent",
        "gadget:main:unary:0:110",
        "gadget:main:unary:4:101010",
        "w = 0 and xyz != 0",
        _w_zero_anti_expected,
        sample_w_zero_invertible,
    ),
    AntiGadgetStatement(
        "vertical-path ratio",
        "gadget:TAMC:m1",
        "gadget:TAMC:m2",
        "x = y != 0",
        _vertical_ratio_expected,
        _sample_symmetric_invertible("gadget:TAMC:m1"),
    ),
    AntiGadgetStatement(
        "planar-path ratio",
        "gadget:COCOON:m1",
        "gadget:COCOON:m2",
        "x = y != 0",
        None,
        _sample_symmetric_invertible("gadget:COCOON:m1"),
    ),
)


# -- determinant statements ------------------------------------------------------


@dataclass(frozen=True)
class DeterminantStatement:
    """det of a gadget's transition matrix in terms of the invariants."""

    gadget: str
    constraint: str
    expected: Callable[[BinarySignature], Scalar]
    sampler: Sampler

    @property
    def label(self) -> str:
        if self.constraint:
            return f"det {self.gadget} [{self.constraint}]"
        return f"det {self.gadget}"

    def sample(self, rng: random.Random) -> BinarySignature:
        return self.sampler(rng)

    def check(self, f: BinarySignature) -> bool:
        got = transition_matrix(self.gadget, f).det()
        return scalars_equal(got, self.expected(f))


def _det_m4_general(f: BinarySignature) -> Scalar:
    inv = signature_invariants(f)
    a, b = inv["A"], inv["B"]
    return (a - b) ** 4 * a * b


def _det_unary_pair_general(f: BinarySignature) -> Scalar:
    inv = signature_invariants(f)
    a, b = inv["A"], inv["B"]
    return (a - b) ** 2 * (a + b)


def _det_e4(f: BinarySignature) -> Scalar:
    return _one(f) * 256


def _det_e5(f: BinarySignature) -> Scalar:
    e = signature_invariants(f)["E"]
    return e**2 * -64


def _det_e7(f: BinarySignature) -> Scalar:
    e = signature_invariants(f)["E"]
    return (e**2 + 4) * 64


def _det_f5(f: BinarySignature) -> Scalar:
    v = signature_invariants(f)["F"]
    return v**2 * -64


def _det_f7(f: BinarySignature) -> Scalar:
    v = signature_invariants(f)["F"]
    return (v**2 + 4) * 64


DETERMINANT_STATEMENTS: tuple[DeterminantStatement, ...] = (
    DeterminantStatement("gadget:main:binary:0:110", "", _det_m4_general, sample_general),
    DeterminantStatement("gadget:unary:0:001", "", _det_unary_pair_general, sample_general),
    DeterminantStatement("gadget:unary:0:101", "", _det_unary_pair_general, sample_general),
    DeterminantStatement(
        "gadget:binary:4:110000", "wz = -1 and xy = 1", _det_e4, sample_conjugate_corner
    ),
    DeterminantStatement(
        "gadget:binary:5:110010", "wz = -1 and xy = 1", _det_e5, sample_conjugate_corner
    ),
    DeterminantStatement(
        "gadget:binary:7:110010", "wz = -1 and xy = 1", _det_e7, sample_conjugate_corner
    ),
    DeterminantStatement(
        "gadget:binary:5:111100", "wz = -1 and xy = 1", _det_f5, sample_conjugate_corner
    ),
    DeterminantStatement(
        "gadget:binary:7:111010", "wz = -1 and xy = 1", _det_f7, sample_conjugate_corner
    ),
)


# -- characteristic-polynomial statements ----------------------------------------


@dataclass(frozen=True)
class CharPolyStatement:
    """Coefficients (a_{n-1}, ..., a_0) of det(XI - M) for a derived matrix."""

    name: str
    constraint: str
    matrix: Callable[[BinarySignature], Matrix]
    expected: Callable[[BinarySignature], tuple]
    sampler: Sampler

    def sample(self, rng: random.Random) -> BinarySignature:
        return self.sampler(rng)

    def coefficients(self, f: BinarySignature) -> tuple:
        return self.matrix(f).char_poly()

    def check(self, f: BinarySignature) -> bool:
        got = self.coefficients(f)
        want = self.expected(f)
        return len(got) == len(want) and all(
            scalars_equal(g, e) for g, e in zip(got, want)
        )


def _binary_0110_matrix(f: BinarySignature) -> Matrix:
    return transition_matrix("gadget:binary:0:110", f)


def _binary_0110_char_poly(f: BinarySignature) -> tuple:
    inv = signature_invariants(f)
    a, c = inv["A"], inv["C"]
    return (
        -c,
        (a + 1) ** 2 * (a - 1),
        -((a - 1) ** 2) * c,
        a * (a - 1) ** 4,
    )


def _ternary_ratio_matrix(f: BinarySignature) -> Matrix:
    # the clearing factor is A(1 - A) under this catalog's port orientation
    m0 = transition_matrix("gadget:ternary:0:000", f)
    m1 = transition_matrix("gadget:ternary:1:001", f)
    a = f.w * f.z
    return anti_gadget_product(m0, m1).scale(a * (1 - a))


def ternary_ratio_char_poly(f: BinarySignature) -> tuple:
    """Stated coefficients for A(1-A) times the ternary gadget ratio, xy = 1."""
    inv = signature_invariants(f)
    a, d = inv["A"], inv["D"]
    d2 = d**2
    d4 = d**4
    a7 = (a - 1) * (a * d2 + 2 * a + 2)
    a6 = (a - 1) ** 2 * (5 * a**2 * d2 - 3 * a**2 + 2 * a * d2 + 2 * a + 1)
    a5 = (
        a
        * (a - 1) ** 3
        * (a**2 * d4 + 5 * a**2 * d2 - 6 * a**2 + 7 * a * d2 - 6 * a + d2)
    )
    a4 = (
        a**2
        * (a - 1) ** 4
        * (
            3 * a**2 * d4
            - 4 * a**2 * d2
            + 4 * a**2
            + a * d4
            + 4 * a * d2
            - 4 * a
            + 2 * d2
            - 2
        )
    )
    a3 = (
        a**3
        * (a - 1) ** 5
        * (3 * a**2 * d4 - 6 * a**2 * d2 + 6 * a**2 + 2 * a * d4 - 4 * a * d2 + 6 * a + d2)
    )
    a2 = (
        a**4
        * (a - 1) ** 6
        * (a**2 * d4 + a**2 * d2 - 3 * a**2 + a * d4 - 2 * a * d2 + 2 * a + 1)
    )
    a1 = a**6 * (a - 1) ** 7 * (2 * a * d2 - 2 * a + d2 - 2)
    a0 = a**8 * (a - 1) ** 8
    return (a7, a6, a5, a4, a3, a2, a1, a0)


def _unary_ratio_matrix(f: BinarySignature) -> Matrix:
    m001 = transition_matrix("gadget:unary:0:001", f)
    m101 = transition_matrix("gadget:unary:0:101", f)
    return m001 @ m101.inverse()


def _unary_ratio_char_poly(f: BinarySignature) -> tuple:
    inv = signature_invariants(f)
    a, b, d = inv["A"], inv["B"], inv["D"]
    trace = (2 * a - d**2 + 2 * b) / (a - b)
    return (-trace, _one(f))


def _e_slow_matrix(f: BinarySignature) -> Matrix:
    m4 = transition_matrix("gadget:binary:4:110000", f)
    m5 = transition_matrix("gadget:binary:5:110010", f)
    return anti_gadget_product(m4, m5).scale(QI(-2) if f.is_exact else complex(-2))


def _e_slow_char_poly(f: BinarySignature) -> tuple:
    e2 = signature_invariants(f)["E"] ** 2
    return (_one(f) * 4, -e2 + 8, e2 * -4, e2 * -4)


def _e_fast_matrix(f: BinarySignature) -> Matrix:
    m4 = transition_matrix("gadget:binary:4:110000", f)
    m7 = transition_matrix("gadget:binary:7:110010", f)
    return anti_gadget_product(m4, m7).scale(QI(2) if f.is_exact else complex(2))


def _e_fast_char_poly(f: BinarySignature) -> tuple:
    e2 = signature_invariants(f)["E"] ** 2
    return (_one(f) * -4, e2 + 12, (e2 + 4) * -4, (e2 + 4) * 4)


def _f_slow_matrix(f: BinarySignature) -> Matrix:
    m4 = transition_matrix("gadget:binary:4:110000", f)
    m5 = transition_matrix("gadget:binary:5:111100", f)
    return anti_gadget_product(m4, m5).scale(QI(-2) if f.is_exact else complex(-2))


def _f_slow_char_poly(f: BinarySignature) -> tuple:
    f2 = signature_invariants(f)["F"] ** 2
    return (_one(f) * 4, -f2 + 8, f2 * -4, f2 * -4)


def _f_fast_matrix(f: BinarySignature) -> Matrix:
    m4 = transition_matrix("gadget:binary:4:110000", f)
    m7 = transition_matrix("gadget:binary:7:111010", f)
    return anti_gadget_product(m4, m7).scale(QI(2) if f.is_exact else complex(2))


def _f_fast_char_poly(f: BinarySignature) -> tuple:
    f2 = signature_invariants(f)["F"] ** 2
    return (_one(f) * -4, f2 + 12, (f2 + 4) * -4, (f2 + 4) * 4)


CHAR_POLY_STATEMENTS: tuple[CharPolyStatement, ...] = (
    CharPolyStatement(
        "binary recursion 0:110",
        "xy = 1 and x = -y",
        _binary_0110_matrix,
        _binary_0110_char_poly,
        sample_unit_b_zero_d,
    ),
    CharPolyStatement(
        "ternary ratio scaled by A(1-A)",
        "xy = 1 and wz not in {0, 1}",
        _ternary_ratio_matrix,
        ternary_ratio_char_poly,
        sample_unit_b,
    ),
    CharPolyStatement(
        "unary ratio 0:001 over 0:101",
        "wz != xy and wz != -xy",
        _unary_ratio_matrix,
        _unary_ratio_char_poly,
        sample_unary_ratio,
    ),
    CharPolyStatement(
        "-2 E-ratio slow",
        "wz = -1 and xy = 1",
        _e_slow_matrix,
        _e_slow_char_poly,
        sample_conjugate_corner,
    ),
    CharPolyStatement(
        "2 E-ratio fast",
        "wz = -1 and xy = 1",
        _e_fast_matrix,
        _e_fast_char_poly,
        sample_conjugate_corner,
    ),
    CharPolyStatement(
        "-2 F-ratio slow",
        "wz = -1 and xy = 1",
        _f_slow_matrix,
        _f_slow_char_poly,
        sample_conjugate_corner,
    ),
    CharPolyStatement(
        "2 F-ratio fast",
        "wz = -1 and xy = 1",
        _f_fast_matrix,
        _f_fast_char_poly,
        sample_conjugate_corner,
    ),
)
