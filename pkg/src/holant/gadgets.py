"""Transition-matrix calculus for gate fragments of directed 3-regular graphs.

A gadget here is a fragment of a signature grid: internal vertices carrying
equality recognizers, internal edges carrying the binary signature f, and
dangling edge stubs split into a leading group (matrix rows) and a trailing
group (matrix columns).  Composing two gadgets end to end multiplies their
transition matrices; placing two side by side takes a tensor product.

Small gadget matrices factor through five basic components, named B1..B5 in
the text expression grammar::

    B1 = [[w, x], [y, z]]          an edge crossed tail to head
    B2 = [[w, y], [x, z]]          an edge crossed head to tail
    B3 = [[1,0,0,0], [0,0,0,1]]    an equality vertex read as 1-in 2-out
    B4 = B3 transposed             an equality vertex read as 2-in 1-out
    B5 = column (w, x, y, z)       an edge bent into a starting column

``eval_gadget_expr`` evaluates ``prod``/``tensor`` expressions over these
atoms; ``directed_gate``/``transition_matrix`` evaluate gate graphs directly.
``GADGET_LIBRARY`` is the named catalog of every gate used by the classifier
and the interpolation pipeline.  Where a catalog entry stores both a gate
graph and an expression, the two are redundant encodings of the same matrix,
and the test suite holds them equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .grids import BinarySignature, GridFormatError, Signature, SignatureGrid, gate_signature
from .linalg import Matrix, SingularMatrixError
from .scalars import (
    GaussianRational,
    QI_ONE,
    Scalar,
    conj,
    is_gaussian_root_of_unity,
    is_zero,
    norm_sq,
    scalars_equal,
)


# -- basic components ----------------------------------------------------------


def _const(value: int, exact: bool) -> Scalar:
    if exact:
        return GaussianRational(value)
    return complex(value)


def basic_component(name: str, f: BinarySignature) -> Matrix:
    """One of the atoms B1..B5, I2, I4, in the arithmetic mode of ``f``."""
    exact = f.is_exact
    one, zero = _const(1, exact), _const(0, exact)
    if name == "B1":
        return Matrix([[f.w, f.x], [f.y, f.z]])
    if name == "B2":
        return Matrix([[f.w, f.y], [f.x, f.z]])
    if name == "B3":
        return Matrix([[one, zero, zero, zero], [zero, zero, zero, one]])
    if name == "B4":
        return Matrix([[one, zero], [zero, zero], [zero, zero], [zero, one]])
    if name == "B5":
        return Matrix.column([f.w, f.x, f.y, f.z])
    if name == "I2":
        return Matrix.identity(2, exact=exact)
    if name == "I4":
        return Matrix.identity(4, exact=exact)
    raise GadgetExprError(f"unknown component {name!r}")


# -- expression grammar --------------------------------------------------------


class GadgetExprError(ValueError):
    """Malformed gadget expression text."""


#: AST nodes: ("atom", name) | ("prod", [nodes]) | ("tensor", [nodes])
GadgetExpr = Union[tuple]

_TOKEN_RE = re.compile(r"\s*([A-Za-z][A-Za-z0-9]*|\(|\)|,)")


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise GadgetExprError(f"bad character at {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def parse_gadget_expr(text: str) -> GadgetExpr:
    """Parse ``prod(...)`` / ``tensor(...)`` expressions over B1..B5, I2, I4."""
    tokens = _tokenize(text)
    pos = 0

    def parse_node():
        nonlocal pos
        if pos >= len(tokens):
            raise GadgetExprError("unexpected end of expression")
        tok = tokens[pos]
        pos += 1
        if tok in ("prod", "tensor"):
            if pos >= len(tokens) or tokens[pos] != "(":
                raise GadgetExprError(f"expected '(' after {tok}")
            pos += 1
            args = [parse_node()]
            while pos < len(tokens) and tokens[pos] == ",":
                pos += 1
                args.append(parse_node())
            if pos >= len(tokens) or tokens[pos] != ")":
                raise GadgetExprError(f"unclosed {tok}(...)")
            pos += 1
            return (tok, args)
        if tok in ("(", ")", ","):
            raise GadgetExprError(f"unexpected {tok!r}")
        return ("atom", tok)

    node = parse_node()
    if pos != len(tokens):
        raise GadgetExprError(f"trailing tokens: {' '.join(tokens[pos:])}")
    return node


def eval_gadget_expr(expr: Union[str, GadgetExpr], f: BinarySignature) -> Matrix:
    """Evaluate an expression to its transition matrix.

    ``prod`` multiplies left to right; ``tensor`` takes Kronecker products
    with the first factor on the top (most significant) wires.
    """
    if isinstance(expr, str):
        expr = parse_gadget_expr(expr)
    kind = expr[0]
    if kind == "atom":
        return basic_component(expr[1], f)
    parts = [eval_gadget_expr(node, f) for node in expr[1]]
    out = parts[0]
    for part in parts[1:]:
        out = out @ part if kind == "prod" else out.kron(part)
    return out


# -- gate graphs ---------------------------------------------------------------


def directed_gate(
    f: BinarySignature,
    vertices: int,
    edges: Sequence[tuple[int, int]],
    leading: Sequence[tuple[str, int]],
    trailing: Sequence[int],
    pendants: Sequence[tuple[int, Signature]] = (),
) -> SignatureGrid:
    """Gate of a directed-graph fragment with equality vertices.

    ``edges`` lists internal (tail, head) pairs; repeats and self-loops are
    allowed.  A leading stub ``("in", v)`` is an f-edge whose head lands on
    vertex v and whose tail dangles; ``("out", v)`` is the reverse.  Each
    entry of ``trailing`` leaves one bare slot on that vertex, to be met by
    an edge outside the gate.  Vertex arity is inferred, so the same builder
    covers the degree-4 recursive pairs.
    """
    degree = [0] * vertices
    for t, h in edges:
        degree[t] += 1
        degree[h] += 1
    for _, v in leading:
        degree[v] += 1
    for v, _ in pendants:
        degree[v] += 1
    for v in trailing:
        degree[v] += 1
    recognizers = [Signature.equality(d) for d in degree]
    if not f.is_exact:
        # keep the whole gate in one arithmetic backend
        recognizers = [r.to_float() for r in recognizers]
        pendants = [(v, s.to_float()) for v, s in pendants]
    next_slot = [0] * vertices

    def attach(rec: int) -> int:
        slot = next_slot[rec]
        next_slot[rec] += 1
        return slot

    fsig = f.signature()
    generators: list[Signature] = []
    grid_edges: list[tuple[int, int, int, int]] = []
    for t, h in edges:
        g = len(generators)
        generators.append(fsig)
        grid_edges.append((g, 0, t, attach(t)))
        grid_edges.append((g, 1, h, attach(h)))
    lead_ports = []
    for direction, v in leading:
        if direction not in ("in", "out"):
            raise GridFormatError(f"bad stub direction {direction!r}")
        g = len(generators)
        generators.append(fsig)
        # an "in" stub dangles at the tail slot, an "out" stub at the head
        inner, outer = (1, 0) if direction == "in" else (0, 1)
        grid_edges.append((g, inner, v, attach(v)))
        lead_ports.append(("gen", g, outer))
    for v, sig in pendants:
        if sig.arity != 1:
            raise GridFormatError("pendant signatures must be unary")
        g = len(generators)
        generators.append(sig)
        grid_edges.append((g, 0, v, attach(v)))
    trail_ports = [("rec", v, attach(v)) for v in trailing]
    return SignatureGrid(generators, recognizers, grid_edges, lead_ports, trail_ports)


@dataclass(frozen=True)
class GadgetSpec:
    """Catalog entry: a gate graph plus an optional equivalent expression."""

    name: str
    vertices: int
    edges: tuple[tuple[int, int], ...]
    leading: tuple[tuple[str, int], ...]
    trailing: tuple[int, ...]
    expr: Optional[str] = None
    #: label names for parametric unary pendants, position-aligned
    pendants: tuple[tuple[int, str], ...] = ()

    def gate(
        self, f: BinarySignature, labels: Optional[dict[str, Signature]] = None
    ) -> SignatureGrid:
        bound = []
        for v, label in self.pendants:
            if labels is None or label not in labels:
                raise GridFormatError(f"gadget {self.name} needs unary label {label!r}")
            bound.append((v, labels[label]))
        return directed_gate(f, self.vertices, self.edges, self.leading, self.trailing, bound)


def transition_matrix(
    gadget: Union[str, GadgetSpec],
    f: BinarySignature,
    labels: Optional[dict[str, Signature]] = None,
    *,
    method: str = "eliminate",
) -> Matrix:
    spec = resolve_gadget(gadget) if isinstance(gadget, str) else gadget
    return gate_signature(spec.gate(f, labels), method=method)


# -- the catalog ---------------------------------------------------------------


def _spec(name, vertices, edges, leading, trailing, expr=None, pendants=()):
    return GadgetSpec(
        name,
        vertices,
        tuple(tuple(e) for e in edges),
        tuple(tuple(s) for s in leading),
        tuple(trailing),
        expr,
        tuple(tuple(p) for p in pendants),
    )


def _entries() -> list[GadgetSpec]:
    specs = []

    # arity 2 -> 1 starters and their appendix kin
    specs.append(_spec("gadget:main:finish:0:0", 1, [], [("out", 0)], [0, 0], "prod(B2, B3)"))
    specs.append(_spec("gadget:finish:0:1", 1, [], [("in", 0)], [0, 0], "prod(B1, B3)"))

    # unary recursive gadgets; 0:110 and 0:101 share one gate graph
    hub = dict(vertices=2, edges=[(0, 1), (1, 0)], trailing=[0])
    specs.append(
        _spec(
            "gadget:main:unary:0:111",
            2,
            [(0, 1), (0, 1)],
            [("in", 1)],
            [0],
            "prod(B1, B3, tensor(B2, B2), B4)",
        )
    )
    specs.append(
        _spec(
            "gadget:main:unary:0:110",
            hub["vertices"],
            hub["edges"],
            [("in", 1)],
            hub["trailing"],
            "prod(B1, B3, tensor(B1, B2), B4)",
        )
    )
    specs.append(
        _spec(
            "gadget:unary:0:101",
            hub["vertices"],
            hub["edges"],
            [("in", 1)],
            hub["trailing"],
            "prod(B1, B3, tensor(B1, B2), B4)",
        )
    )
    specs.append(
        _spec(
            "gadget:unary:0:001",
            hub["vertices"],
            hub["edges"],
            [("out", 1)],
            hub["trailing"],
            "prod(B2, B3, tensor(B1, B2), B4)",
        )
    )
    specs.append(
        _spec(
            "gadget:main:unary:4:101010",
            4,
            [(2, 0), (0, 3), (1, 1), (1, 2), (3, 2)],
            [("in", 3)],
            [0],
            "prod(B1, B3, tensor(B1, I2), tensor(B3, I2),"
            " tensor(prod(B2, B3, B5), I4), tensor(B1, B2), B4)",
        )
    )

    # binary recursive gadgets
    specs.append(
        _spec(
            "gadget:main:binary:0:110",
            2,
            [(1, 0)],
            [("in", 1), ("in", 0)],
            [1, 0],
            "prod(tensor(B1, B1), tensor(B3, I2), tensor(I2, B1, I2), tensor(I2, B4))",
        )
    )
    specs.append(
        _spec(
            "gadget:main:binary:0:111",
            2,
            [(0, 1)],
            [("in", 1), ("in", 0)],
            [1, 0],
            "prod(tensor(B1, B1), tensor(B3, I2), tensor(I2, B2, I2), tensor(I2, B4))",
        )
    )
    specs.append(
        _spec(
            "gadget:binary:4:110000",
            4,
            [(1, 0), (3, 0), (2, 1), (3, 2)],
            [("in", 3), ("in", 2)],
            [0, 1],
        )
    )
    specs.append(
        _spec(
            "gadget:binary:7:110010",
            4,
            [(2, 0), (2, 1), (1, 3), (3, 2)],
            [("in", 0), ("in", 3)],
            [0, 1],
        )
    )
    specs.append(
        _spec(
            "gadget:binary:7:111010",
            4,
            [(0, 2), (2, 1), (1, 3), (3, 2)],
            [("in", 0), ("in", 3)],
            [0, 1],
        )
    )
    specs.append(
        _spec(
            "gadget:binary:5:110010",
            4,
            [(3, 0), (2, 1), (1, 3), (2, 2)],
            [("in", 0), ("in", 3)],
            [0, 1],
        )
    )
    specs.append(
        _spec(
            "gadget:binary:5:111100",
            4,
            [(0, 3), (1, 2), (3, 1), (2, 2)],
            [("in", 0), ("in", 3)],
            [0, 1],
        )
    )

    # ternary recursive gadgets
    specs.append(
        _spec(
            "gadget:ternary:0:000",
            4,
            [(3, 2), (3, 1), (0, 1)],
            [("in", 0), ("in", 3), ("in", 2)],
            [0, 1, 2],
        )
    )
    specs.append(
        _spec(
            "gadget:ternary:1:001",
            4,
            [(0, 3), (3, 1), (2, 1)],
            [("in", 0), ("in", 3), ("in", 2)],
            [0, 1, 2],
        )
    )

    # projectors from arity 2 to 1
    specs.append(_spec("gadget:finish:2:1000", 3, [(1, 0), (2, 0), (2, 1)], [("in", 2)], [0, 1]))
    specs.append(_spec("gadget:finish:2:1010", 3, [(1, 0), (0, 2), (2, 1)], [("in", 2)], [0, 1]))
    specs.append(_spec("gadget:finish:2:1011", 3, [(1, 0), (0, 2), (1, 2)], [("in", 2)], [0, 1]))
    specs.append(_spec("gadget:finish:3:1000", 3, [(2, 0), (2, 1), (2, 1)], [("in", 0)], [0, 1]))
    specs.append(_spec("gadget:finish:3:1010", 3, [(2, 0), (1, 2), (2, 1)], [("in", 0)], [0, 1]))
    specs.append(
        _spec(
            "gadget:finish:14:1001010",
            5,
            [(3, 0), (4, 0), (1, 2), (3, 1), (2, 3), (4, 2)],
            [("in", 4)],
            [0, 1],
        )
    )
    specs.append(
        _spec(
            "gadget:finish:13:1000000",
            5,
            [(3, 0), (4, 0), (2, 1), (4, 1), (2, 2), (3, 3)],
            [("in", 4)],
            [0, 1],
        )
    )
    specs.append(
        _spec(
            "gadget:finish:13:1000100",
            5,
            [(3, 0), (4, 0), (2, 1), (1, 4), (2, 2), (3, 3)],
            [("in", 4)],
            [0, 1],
        )
    )
    specs.append(
        _spec(
            "gadget:finish:13:1010100",
            5,
            [(3, 0), (0, 4), (2, 1), (1, 4), (2, 2), (3, 3)],
            [("in", 4)],
            [0, 1],
        )
    )
    specs.append(
        _spec(
            "gadget:finish:19:1000110",
            5,
            [(3, 0), (3, 0), (2, 1), (1, 2), (2, 4), (4, 3)],
            [("in", 4)],
            [0, 1],
        )
    )
    specs.append(
        _spec(
            "gadget:finish:19:1010100",
            5,
            [(3, 0), (0, 3), (2, 1), (1, 2), (4, 2), (4, 3)],
            [("in", 4)],
            [0, 1],
        )
    )
    specs.append(
        _spec(
            "gadget:finish:19:1010111",
            5,
            [(3, 0), (0, 3), (2, 1), (1, 2), (2, 4), (3, 4)],
            [("in", 4)],
            [0, 1],
        )
    )
    specs.append(
        _spec(
            "gadget:finish:27:1000010",
            5,
            [(1, 0), (3, 0), (2, 1), (3, 2), (2, 4), (4, 3)],
            [("in", 4)],
            [0, 1],
        )
    )
    specs.append(
        _spec(
            "gadget:finish:27:1010011",
            5,
            [(1, 0), (0, 3), (2, 1), (3, 2), (2, 4), (3, 4)],
            [("in", 4)],
            [0, 1],
        )
    )

    # degree-4 recursive pairs
    specs.append(
        _spec("gadget:TAMC:m1", 2, [(1, 0), (1, 0)], [("in", 1), ("in", 0)], [1, 0])
    )
    specs.append(
        _spec("gadget:TAMC:m2", 2, [(0, 0), (1, 1)], [("in", 1), ("in", 0)], [1, 0])
    )
    specs.append(
        _spec("gadget:COCOON:m1", 2, [(0, 0), (1, 1), (1, 1)], [("in", 0)], [0])
    )
    specs.append(
        _spec("gadget:COCOON:m2", 2, [(0, 1), (1, 0), (1, 1)], [("in", 0)], [0])
    )

    # parametric generators of binary signatures
    specs.append(
        _spec(
            "gadget:oneWeed",
            1,
            [],
            [("in", 0), ("in", 0)],
            [],
            pendants=[(0, "theta")],
        )
    )
    specs.append(
        _spec(
            "gadget:threeWeeds",
            5,
            [(1, 0), (1, 2), (3, 2), (3, 4)],
            [("in", 0), ("in", 4)],
            [],
            pendants=[(0, "rho"), (1, "gamma"), (2, "theta"), (3, "gamma"), (4, "rho")],
        )
    )
    specs.append(
        _spec(
            "gadget:symmetricGenerator1",
            2,
            [(1, 0), (0, 1)],
            [("in", 1), ("in", 0)],
            [],
        )
    )
    specs.append(
        _spec(
            "gadget:symmetricGenerator2",
            2,
            [(1, 0), (0, 1)],
            [("out", 1), ("out", 0)],
            [],
        )
    )
    return specs


GADGET_LIBRARY: dict[str, GadgetSpec] = {s.name: s for s in _entries()}

#: appendix names whose figures repeat a gate already in the catalog
_SAME_GATE = {
    "gadget:unary:0:111": "gadget:main:unary:0:111",
    "gadget:unary:0:110": "gadget:main:unary:0:110",
    "gadget:unary:4:101010": "gadget:main:unary:4:101010",
    "gadget:binary:0:110": "gadget:main:binary:0:110",
    "gadget:binary:0:111": "gadget:main:binary:0:111",
}
for _alias, _target in _SAME_GATE.items():
    GADGET_LIBRARY[_alias] = GADGET_LIBRARY[_target]

GADGET_ALIASES = {
    "m1": "gadget:main:finish:0:0",
    "m2": "gadget:main:unary:0:111",
    "m3": "gadget:main:unary:0:110",
    "m4": "gadget:main:binary:0:110",
    "m5": "gadget:main:binary:0:111",
    "m6": "gadget:main:unary:4:101010",
}


def resolve_gadget(name: str) -> GadgetSpec:
    key = GADGET_ALIASES.get(name, name)
    if key in GADGET_LIBRARY:
        return GADGET_LIBRARY[key]
    prefixed = f"gadget:{key}"
    if prefixed in GADGET_LIBRARY:
        return GADGET_LIBRARY[prefixed]
    raise KeyError(f"unknown gadget {name!r}")


def library_names() -> list[str]:
    return sorted(GADGET_LIBRARY)


# -- recursive-gadget certificates ----------------------------------------------


def anti_gadget_product(m: Matrix, n: Matrix) -> Matrix:
    """m^-1 n: the identity-like residue left when n undoes m.

    When n's gate extends m's by structure that cancels, the product is a
    scalar multiple of a very simple matrix (diagonal or unipotent), which
    is what the hardness certificates inspect.
    """
    return m.inverse() @ n


@dataclass(frozen=True)
class FiniteOrderResult:
    """Outcome of the order-up-to-scalar search for a matrix power chain."""

    order: Optional[int]  # least k >= 1 with M^k proportional to I, if found
    certified_infinite: bool
    reason: str

    @property
    def is_finite(self) -> bool:
        return self.order is not None


def _diag_ratio_orders(diag_entries, tol):
    # None marks a ratio that is provably not a root of unity
    base = diag_entries[0]
    orders = []
    for d in diag_entries[1:]:
        if is_zero(base, tol) or is_zero(d, tol):
            return None
        orders.append(is_gaussian_root_of_unity(d / base, tol))
    return orders


def finite_order_up_to_scalar(m: Matrix, kmax: int = 48) -> FiniteOrderResult:
    """Least k with M^k proportional to the identity, or a proof there is none.

    Exact diagonal and triangular matrices get a decision: the only roots of
    unity among Gaussian rationals are the fourth roots, so a diagonal ratio
    outside {1, -1, i, -i} never returns to the identity, and a triangular
    matrix with unit ratios but a nilpotent part grows that part linearly
    forever.  Anything else is searched up to ``kmax``.
    """
    rows, cols = m.shape
    if rows != cols:
        raise SingularMatrixError("order is defined for square matrices only")
    tol = None if m.is_exact else 1e-9
    if m.is_exact:
        if m.is_diagonal():
            diag = [m[i, i] for i in range(rows)]
            orders = _diag_ratio_orders(diag, tol)
            if orders is None:
                return FiniteOrderResult(None, False, "singular diagonal")
            if any(o is None for o in orders):
                return FiniteOrderResult(
                    None, True, "diagonal ratio is not a root of unity"
                )
            k = 1
            for o in orders:
                k = _lcm(k, o)
            return FiniteOrderResult(k, False, "diagonal with fourth-root ratios")
        if m.is_upper_triangular() or m.is_lower_triangular():
            diag = [m[i, i] for i in range(rows)]
            orders = _diag_ratio_orders(diag, tol)
            if orders is None:
                return FiniteOrderResult(None, False, "singular triangular")
            if any(o is None for o in orders):
                return FiniteOrderResult(
                    None, True, "eigenvalue ratio is not a root of unity"
                )
            k = 1
            for o in orders:
                k = _lcm(k, o)
            p = m.pow(k)
            if p.proportional_to(Matrix.identity(rows, exact=True)):
                return FiniteOrderResult(k, False, "triangular, power reaches identity")
            return FiniteOrderResult(
                None, True, "unipotent part never cancels in a triangular matrix"
            )
    ident = Matrix.identity(rows, exact=m.is_exact)
    p = m
    for k in range(1, kmax + 1):
        if p.proportional_to(ident, tol):
            return FiniteOrderResult(k, False, f"power {k} proportional to identity")
        if k < kmax:
            p = p @ m
    return FiniteOrderResult(None, False, f"no power up to {kmax} is scalar")


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


def char_poly_coefficients(m: Matrix) -> tuple:
    """Coefficients (a_{n-1}, ..., a_0) of det(XI - M), leading 1 implied."""
    return m.char_poly()


def same_norm_necessary_condition(coeffs: Sequence[Scalar]) -> bool:
    """Whether char-poly coefficients permit all roots sharing one norm.

    Degree 2: a1 |a0|^(1/2)-free form   a1 = 0, or a0 = 0, or a1^2 conj(a0)
    real and positive.  Degree 4: a2 |a1|^2 = |a3|^2 conj(a2) a0.  Degree 8:
    the three analogous identities.  A False answer proves two eigenvalues
    have different norms, hence infinite order up to a scalar.
    """
    cs = list(coeffs)
    if len(cs) == 2:
        a1, a0 = cs
        if is_zero(a1) or is_zero(a0):
            return True
        probe = a1 * a1 * conj(a0)
        if isinstance(probe, GaussianRational):
            return probe.im == 0 and probe.re > 0
        return abs(probe.imag) <= 1e-9 * max(1.0, abs(probe)) and probe.real > 0
    if len(cs) == 4:
        a3, a2, a1, a0 = cs
        return scalars_equal(a2 * norm_sq(a1), conj(a2) * a0 * norm_sq(a3))
    if len(cs) == 8:
        a7, a6, a5, a4, a3, a2, a1, a0 = cs
        eq1 = scalars_equal(
            a3 * a3 * norm_sq(a1), conj(a5) * conj(a5) * a0 * a0 * norm_sq(a7)
        )
        eq2 = scalars_equal(a4 * norm_sq(a2), conj(a4) * a0 * norm_sq(a6))
        eq3 = scalars_equal(a2 * norm_sq(a3), conj(a6) * a0 * norm_sq(a5))
        return eq1 and eq2 and eq3
    raise ValueError(f"no same-norm test for degree {len(cs)}")


# -- parametric simulation of symmetric generators -------------------------------


def simulate_symmetric_generator(
    gadget: str, f: BinarySignature, labels: dict[str, Sequence[Scalar]]
) -> BinarySignature:
    """Binary signature produced by a weed gadget with the given unary labels."""
    spec = resolve_gadget(gadget)
    if len(spec.leading) != 2 or spec.trailing:
        raise GridFormatError("generator gadgets have two leading stubs and no trailing")
    bound = {name: Signature.unary(v[0], v[1]) for name, v in labels.items()}
    column = gate_signature(spec.gate(f, bound))
    return BinarySignature(
        column[0, 0], column[1, 0], column[2, 0], column[3, 0]
    )


def vertex_cover_generator_plan(f: BinarySignature):
    """Unary labels turning a weed gadget into a symmetric generator.

    Returns (gadget name, labels, simulated signature) per the case split on
    (w, x, y, z); the simulated signature is symmetric of the form
    (a, 1, 1, b) with ab != 1, the stepping stone to counting vertex covers.
    Requires a non-degenerate signature with yz != 0.
    """
    w, x, y, z = f.w, f.x, f.y, f.z
    one = QI_ONE if f.is_exact else 1 + 0j
    if is_zero(y) or is_zero(z):
        raise ValueError("plan requires y z != 0; flip spins first")
    wz, xy = w * z, x * y
    if scalars_equal(wz, xy):
        raise ValueError("degenerate signature has no hard generator")
    if is_zero(w):
        theta = ((z / (y * y)) / x, (one / z) / x)
        target = BinarySignature(x / z, one, one, (z + z) / x)
        return "gadget:oneWeed", {"theta": theta}, target
    if is_zero(x):
        theta = ((one / y) / w, (y / (z * z)) / w)
        target = BinarySignature(w / y, one, one, (y + y) / w)
        return "gadget:oneWeed", {"theta": theta}, target
    if is_zero(wz + xy):
        theta = (((x + x) / w) / xy, (w / x) / xy)
        three = one + one + one
        target = BinarySignature(three * w / y, one, one, three * y / w)
        return "gadget:oneWeed", {"theta": theta}, target
    theta_scale = (wz + xy) / (w * x * (wz - xy))
    theta = (-x / w * theta_scale, w / x * theta_scale)
    gamma_scale = one / (wz - xy)
    gamma = (
        -one / (w * x) * gamma_scale,
        (w * x) / (y * z * (wz + xy)) * gamma_scale,
    )
    rho = (x * z, -(w * y))
    target = BinarySignature(one * 0, one, one, one)
    return (
        "gadget:threeWeeds",
        {"theta": theta, "gamma": gamma, "rho": rho},
        target,
    )
