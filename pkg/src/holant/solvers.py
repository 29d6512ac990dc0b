"""Polynomial-time evaluators for the tractable signature classes.

Each solver targets one class of the dichotomy and returns exactly what the
brute-force evaluator would:

  * degenerate signatures split every edge into two unary weights, so the
    partition function is a product over vertices;
  * generalized equality (x = y = 0) forces every component monochromatic;
  * generalized disequality (w = z = 0) forces a proper 2-coloring;
  * affine signatures (class 4) reduce to a quadratic Gauss sum over Z4
    whose cross terms all carry even coefficients, summable by variable
    elimination in polynomial time.

``solve_dispatch`` routes a (graph, signature) pair to the right solver and
falls back to brute force, within the size guard, when none applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classify import class4_epsilon, matched_classes
from .grids import BinarySignature, DirectedMultiGraph, SizeGuardError, eval_partition
from .scalars import (
    QI_ONE,
    Scalar,
    Zeta8,
    i_power,
    is_zero,
    scalars_equal,
    to_complex,
)


class SolverError(ValueError):
    """The signature does not satisfy the solver's class precondition."""


def _one_like(f: BinarySignature):
    return QI_ONE if f.is_exact else 1 + 0j


def _zero_like(f: BinarySignature):
    return QI_ONE * 0 if f.is_exact else 0j


# -- class 1: degenerate ---------------------------------------------------------


@dataclass(frozen=True)
class Rank1Factorization:
    """Unary pair with f(u, v) = p(u) * q(v)."""

    p: tuple[Scalar, Scalar]
    q: tuple[Scalar, Scalar]


def rank1_factorization(f: BinarySignature) -> Rank1Factorization:
    """Split a degenerate f into tail and head unary weights.

    The first nonzero row of [[w, x], [y, z]] serves as q; the all-zero
    signature factors through the zero pair.
    """
    if not scalars_equal(f.w * f.z, f.x * f.y):
        raise SolverError("rank-1 factorization needs w z = x y")
    one, zero = _one_like(f), _zero_like(f)
    rows = ((f.w, f.x), (f.y, f.z))
    if all(is_zero(v) for row in rows for v in row):
        return Rank1Factorization((zero, zero), (zero, zero))
    if not is_zero(f.w) or not is_zero(f.x):
        q = rows[0]
        pivot = f.w if not is_zero(f.w) else f.x
        other = f.y if not is_zero(f.w) else f.z
        p = (one, other / pivot)
    else:
        q = rows[1]
        p = (zero, one)
    return Rank1Factorization(p, q)


def solve_degenerate(graph: DirectedMultiGraph, f: BinarySignature) -> Scalar:
    """Product over vertices of the two spin contributions.

    A vertex with out-degree o and in-degree i contributes
    p(0)^o q(0)^i + p(1)^o q(1)^i; a self-loop counts once on each side.
    """
    fact = rank1_factorization(f)
    p, q = fact.p, fact.q
    total = _one_like(f)
    for v in range(graph.vertex_count):
        o, i = graph.out_degree(v), graph.in_degree(v)
        total = total * (p[0] ** o * q[0] ** i + p[1] ** o * q[1] ** i)
    return total


# -- classes 2 and 3: generalized equality and disequality -------------------------


def solve_generalized_equality(graph: DirectedMultiGraph, f: BinarySignature) -> Scalar:
    """x = y = 0: each component is all-0 or all-1, contributing w^m + z^m."""
    if not (is_zero(f.x) and is_zero(f.y)):
        raise SolverError("generalized equality needs x = y = 0")
    total = _one_like(f)
    for _, edge_ids in graph.components():
        m = len(edge_ids)
        total = total * (f.w**m + f.z**m)
    return total


def solve_generalized_disequality(
    graph: DirectedMultiGraph, f: BinarySignature
) -> Scalar:
    """w = z = 0: only proper 2-colorings survive.

    Per component, a BFS 2-coloring either fails (value 0) or yields the two
    complementary assignments x^m01 y^m10 + x^m10 y^m01, where m01 counts
    edges directed from color 0 to color 1.
    """
    if not (is_zero(f.w) and is_zero(f.z)):
        raise SolverError("generalized disequality needs w = z = 0")
    total = _one_like(f)
    for vertices, edge_ids in graph.components():
        adjacency = {v: [] for v in vertices}
        for e in edge_ids:
            t, h = graph.edges[e]
            adjacency[t].append(h)
            adjacency[h].append(t)
        color = {}
        bipartite = True
        for start in sorted(vertices):
            if start in color:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for u in adjacency[v]:
                    if u not in color:
                        color[u] = 1 - color[v]
                        queue.append(u)
                    elif color[u] == color[v]:
                        bipartite = False
        if not bipartite:
            total = total * _zero_like(f)
            continue
        m01 = sum(1 for e in edge_ids if color[graph.edges[e][0]] == 0)
        m10 = len(edge_ids) - m01
        total = total * (f.x**m01 * f.y**m10 + f.x**m10 * f.y**m01)
    return total


# -- class 4: affine -------------------------------------------------------------


@dataclass(frozen=True)
class AffineNormalForm:
    """f rescaled to lam * i^(2uv + b u + c v) after the cube-root transform."""

    lam: Scalar
    b: int
    c: int
    alpha: Scalar


def _i_power_index(ratio, tol=None) -> Optional[int]:
    for k in range(4):
        if scalars_equal(ratio, i_power(k), tol):
            return k
    return None


def affine_normal_form(f: BinarySignature) -> AffineNormalForm:
    """Normal-form data for a class-4 signature that is not identically zero.

    When w z != 0 the transform (w, x, y, z) -> (a^2 w, x, y, a z) with
    a = eps w^2 / z^2 (a cube root of unity) lands the signature on the
    exponential-quadratic form; exact inputs always have a = 1 because the
    Gaussian rationals contain no other cube root of unity.
    """
    eps = class4_epsilon(f)
    if eps is None:
        raise SolverError("not in the affine class")
    if is_zero(f.w * f.z):
        # class-4 conditions force every entry to zero with wz = 0
        raise SolverError("the all-zero signature has no affine normal form")
    one = _one_like(f)
    if f.is_exact:
        alpha = one
        g = f
    else:
        w2, z2 = f.w * f.w, f.z * f.z
        alpha = w2 / z2 if eps == 1 else -(w2 / z2)
        g = BinarySignature(alpha * alpha * f.w, f.x, f.y, alpha * f.z)
    lam = g.w
    c = _i_power_index(g.x / lam)
    b = _i_power_index(g.y / lam)
    if b is None or c is None or not scalars_equal(
        g.z / lam, i_power(2 + b + c)
    ):
        raise SolverError("affine normal form verification failed")
    return AffineNormalForm(lam=lam, b=b, c=c, alpha=alpha)


class QuadraticFormZ4:
    """Quadratic polynomial over Z4 on {0,1} variables, even cross terms.

    Stored as cross coefficients (u < v, values 0 or 2), linear coefficients,
    and a constant, all mod 4.  Parallel contributions accumulate mod 4.
    """

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        self.n = n
        self.cross: dict[tuple[int, int], int] = {}
        self.linear: list[int] = [0] * n
        self.const: int = 0

    def add_cross(self, u: int, v: int, coeff: int) -> None:
        if coeff % 2:
            raise ValueError("cross coefficients must be even")
        if u == v:
            # sigma^2 = sigma on {0,1}
            self.add_linear(u, coeff)
            return
        key = (min(u, v), max(u, v))
        value = (self.cross.get(key, 0) + coeff) % 4
        if value:
            self.cross[key] = value
        else:
            self.cross.pop(key, None)

    def add_linear(self, v: int, coeff: int) -> None:
        self.linear[v] = (self.linear[v] + coeff) % 4

    def add_const(self, coeff: int) -> None:
        self.const = (self.const + coeff) % 4

    def evaluate(self, bits) -> int:
        total = self.const
        for (u, v), cf in self.cross.items():
            total += cf * bits[u] * bits[v]
        for v, cf in enumerate(self.linear):
            total += cf * bits[v]
        return total % 4


def gauss_sum_quadratic_z4(q: QuadraticFormZ4) -> Zeta8:
    """Exact sum of i^Q over {0,1}^n, in time polynomial in n.

    Eliminating a variable t with Q = Q0 + t (d + 2 L(sigma)) splits on d:
    an odd d contributes the constant factor (1 + i^d) and folds the parity
    -d L back into Q0; an even d pins the affine constraint L = d/2 (mod 2),
    worth a factor 2 (or killing the branch), after which the constraint is
    eliminated by substituting its pivot variable.  All cross terms stay
    even throughout, so the recursion closes.
    """
    cross: dict[tuple[int, int], int] = {}
    for (u, v), cf in q.cross.items():
        if cf % 2:
            raise ValueError("cross coefficients must be even")
        if cf % 4:
            cross[(min(u, v), max(u, v))] = cf % 4
    linear = {v: q.linear[v] % 4 for v in range(q.n)}
    const = q.const % 4
    factor = QI_ONE
    active = set(range(q.n))
    two = QI_ONE + QI_ONE

    def partners(t):
        out = []
        for u, v in cross:
            if u == t:
                out.append(v)
            elif v == t:
                out.append(u)
        return sorted(out)

    def bump_cross(u, v, cf):
        if u == v:
            linear[u] = (linear[u] + cf) % 4
            return
        key = (min(u, v), max(u, v))
        value = (cross.get(key, 0) + cf) % 4
        if value:
            cross[key] = value
        else:
            cross.pop(key, None)

    while active:
        t = min(active)
        active.discard(t)
        d = linear.pop(t)
        t_partners = partners(t)
        for v in t_partners:
            cross.pop((min(t, v), max(t, v)), None)
        if d % 2:
            # sum over t gives (1 + i^d) i^(-d L); fold the parity of the
            # partner set back in via  L = sum sigma - 2 sum pairs  (mod 4)
            factor = factor * (QI_ONE + i_power(d))
            for v in t_partners:
                linear[v] = (linear[v] - d) % 4
            for a in range(len(t_partners)):
                for b in range(a + 1, len(t_partners)):
                    bump_cross(t_partners[a], t_partners[b], 2)
            continue
        h = (d // 2) % 2
        if not t_partners:
            if h:
                return Zeta8.from_qi(QI_ONE * 0)
            factor = factor * two
            continue
        # constraint: parity of the partner set must equal h; solve for the
        # highest partner and substitute it away
        factor = factor * two
        j = t_partners[-1]
        rest = t_partners[:-1]
        active.discard(j)
        bj = linear.pop(j)
        for u in partners(j):
            cross.pop((min(j, u), max(j, u)), None)
            linear[u] = (linear[u] + 2 * h) % 4
            for v in rest:
                bump_cross(u, v, 2)
        const = (const + bj * h) % 4
        coef = (bj * (1 - 2 * h)) % 4
        for v in rest:
            linear[v] = (linear[v] + coef) % 4
        pair_coef = (-2 * bj) % 4
        if pair_coef:
            for a in range(len(rest)):
                for b in range(a + 1, len(rest)):
                    bump_cross(rest[a], rest[b], pair_coef)
    return Zeta8.from_qi(factor * i_power(const))


def solve_affine(graph: DirectedMultiGraph, f: BinarySignature) -> Scalar:
    """Class-4 value lam^|E| * sum_sigma i^Q(sigma) via the Gauss sum.

    Q collects 2 s_u s_v + b s_u + c s_v per edge (u, v).  The cube-root
    transform used for inexact signatures preserves the partition function
    on 3-regular graphs only, so non-3-regular float instances with a
    nontrivial transform are refused rather than silently wrong.
    """
    if class4_epsilon(f) is None:
        raise SolverError("not in the affine class")
    if all(is_zero(v) for v in f.tuple()):
        return solve_degenerate(graph, f)
    nf = affine_normal_form(f)
    if not scalars_equal(nf.alpha, _one_like(f)) and not graph.is_3_regular():
        raise SolverError(
            "cube-root transform is only partition-preserving on 3-regular graphs"
        )
    q = QuadraticFormZ4(graph.vertex_count)
    for t, h in graph.edges:
        if t == h:
            q.add_linear(t, 2 + nf.b + nf.c)
        else:
            q.add_cross(t, h, 2)
            q.add_linear(t, nf.b)
            q.add_linear(h, nf.c)
    total = gauss_sum_quadratic_z4(q)
    m = len(graph.edges)
    if f.is_exact:
        return nf.lam**m * total.to_qi()
    return to_complex(nf.lam) ** m * total.to_complex()


# -- dispatch --------------------------------------------------------------------


@dataclass(frozen=True)
class DispatchResult:
    value: Optional[Scalar]
    route: str
    classes: tuple[int, ...]
    notes: tuple[str, ...]


def solve_dispatch(
    graph: DirectedMultiGraph, f: BinarySignature, allow_large: bool = False
) -> DispatchResult:
    """Route to the first applicable solver, else brute force within guard."""
    classes, _, _ = matched_classes(f)
    if 1 in classes:
        return DispatchResult(solve_degenerate(graph, f), "degenerate", classes, ())
    if 3 in classes:
        return DispatchResult(
            solve_generalized_equality(graph, f), "generalized-equality", classes, ()
        )
    if 2 in classes:
        return DispatchResult(
            solve_generalized_disequality(graph, f),
            "generalized-disequality",
            classes,
            (),
        )
    if 4 in classes:
        return DispatchResult(solve_affine(graph, f), "affine", classes, ())
    notes = ["no poly-time solver for this signature"]
    if 5 in classes:
        notes.append("planar instances are tractable (matchgate class)")
    try:
        value = eval_partition(graph, f, allow_large=allow_large)
    except SizeGuardError:
        notes.append("instance exceeds the brute-force size guard")
        return DispatchResult(None, "none", classes, tuple(notes))
    return DispatchResult(value, "brute-force", classes, tuple(notes))
