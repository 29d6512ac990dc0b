"""Polynomial interpolation through recursive gadget families.

The value of a closed grid that uses an arbitrary unary signature (X, Y) at
n places is a homogeneous polynomial sum(c_i X^i Y^(n-i)).  If a family of
gadgets realizes unary signatures (X_t, Y_t) with pairwise distinct ratios
X_t/Y_t, evaluating the grid with those gadgets spliced in pins down the
coefficients c_i through a Vandermonde system, and with them the value at
the original (X, Y) without ever evaluating it directly.

The gadget family comes from a monoid of transition matrices: words over a
small recursive set S, dressed with an invertible binary signature, then
projected down to arity one by a chain of arity-reducing gadgets.  The
projector is drawn from a fixed per-signature set with a kernel-geometry
certificate guaranteeing that some member preserves any two distinct
projective points; that is what turns "infinitely many matrices" into
"infinitely many distinct unary ratios".
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Iterable, Optional, Sequence, Union

from .scalars import Scalar, format_scalar, is_zero, scalars_equal
from .linalg import DimensionMismatch, Matrix
from .grids import (
    BinarySignature,
    Signature,
    SignatureGrid,
    combine_gates,
    eval_holant_by_elimination,
    gate_signature,
    rewire,
    splice_unary_gates,
)
from .gadgets import GadgetSpec, resolve_gadget, transition_matrix


class ProjectiveSetError(ValueError):
    """A projective gadget set failed its certificate or does not apply."""


class FiniteGroupError(RuntimeError):
    """The recursive gadget matrices generate a finite group up to scalars."""


class InterpolationError(RuntimeError):
    """Interpolation could not be completed; the message says why."""


# -- projective gadget sets -----------------------------------------------------
#
# Seven arity-2-to-1 gadget roles per applicability case.  The first three
# share the kernel vector u = (0, -1, 1, 0), the next three share
# v = (0, -x, y, 0), and the last contributes a two-dimensional kernel
# completing the geometry.  Together they guarantee: for every rank-2
# matrix N with 4 rows, some member Phi has rank(Phi N) = 2, so distinct
# projective points stay distinct under at least one projection.

PROJECTIVE_ROLE_TABLE: dict[int, tuple[str, ...]] = {
    1: (
        "gadget:finish:0:1",
        "gadget:finish:13:1000000",
        "gadget:finish:13:1010100",
        "gadget:finish:0:1",
        "gadget:finish:2:1000",
        "gadget:finish:2:1011",
        "gadget:finish:3:1010",
    ),
    2: (
        "gadget:finish:0:1",
        "gadget:finish:2:1010",
        "gadget:finish:13:1010100",
        "gadget:finish:0:1",
        "gadget:finish:2:1000",
        "gadget:finish:13:1000100",
        "gadget:finish:3:1010",
    ),
    3: (
        "gadget:finish:0:1",
        "gadget:finish:2:1010",
        "gadget:finish:27:1010011",
        "gadget:finish:0:1",
        "gadget:finish:2:1000",
        "gadget:finish:27:1000010",
        "gadget:finish:14:1001010",
    ),
    4: (
        "gadget:finish:0:1",
        "gadget:finish:2:1010",
        "gadget:finish:19:1010100",
        "gadget:finish:0:1",
        "gadget:finish:2:1000",
        "gadget:finish:19:1000110",
        "gadget:finish:3:1000",
    ),
    5: (
        "gadget:finish:0:1",
        "gadget:finish:19:1010111",
        "gadget:finish:19:1010100",
        "gadget:finish:0:1",
        "gadget:finish:2:1000",
        "gadget:finish:2:1011",
        "gadget:finish:3:1000",
    ),
}


def projective_case(f: BinarySignature, tol: Optional[float] = None) -> Optional[int]:
    """Lowest-numbered applicability case of ``f``, or None.

    All five cases require wz != xy.  Cases 1 to 3 further require
    wxyz != 0 and split on the polynomial w^3 x + wxyz + w^2 z^2 + y z^3
    and on how x relates to y; cases 4 and 5 cover one vanishing corner
    entry.  Signatures with y = 0 or z = 0 have no case in this table;
    the spin-flipped form (z, y, x, w) reaches the same grid values.
    """
    w, x, y, z = f.tuple()
    if scalars_equal(w * z, x * y, tol):
        return None
    poly = w * w * w * x + w * x * y * z + w * w * z * z + y * z * z * z
    interior = not is_zero(w * x * y * z, tol)
    if interior and not is_zero(poly, tol):
        if not scalars_equal(x * x, y * y, tol):
            return 1
        if scalars_equal(x, -y, tol) and not scalars_equal(w * w * w, -(z * z * z), tol):
            return 2
    if interior and is_zero(poly, tol) and not scalars_equal(x, y, tol):
        return 3
    if is_zero(w, tol) and not is_zero(z, tol) and not scalars_equal(x, y, tol):
        return 4
    if is_zero(x, tol) and not is_zero(y, tol):
        return 5
    return None


@dataclass(frozen=True)
class ProjectiveCertificate:
    """Kernel geometry backing the rank-preservation property.

    ``shared_u`` lies in the kernels of roles 0..2, ``shared_v`` in the
    kernels of roles 3..5; the complements extend each of those kernels to
    a basis, and ``closing_kernel`` is a basis of the last role's kernel.
    The three recorded spans are all of C^4, which is exactly what the
    2-to-1 selection argument needs.
    """

    shared_u: tuple
    shared_v: tuple
    u_complements: tuple[tuple, ...]
    v_complements: tuple[tuple, ...]
    closing_kernel: tuple[tuple, ...]

    def to_json(self) -> dict:
        fmt = lambda vec: [format_scalar(v) for v in vec]
        return {
            "shared_u": fmt(self.shared_u),
            "shared_v": fmt(self.shared_v),
            "u_complements": [fmt(v) for v in self.u_complements],
            "v_complements": [fmt(v) for v in self.v_complements],
            "closing_kernel": [fmt(v) for v in self.closing_kernel],
        }


@dataclass(frozen=True)
class ProjectiveSet:
    """A certified family of 2x4 projector matrices for one signature."""

    case: int
    names: tuple[str, ...]
    matrices: tuple[Matrix, ...]
    certificate: ProjectiveCertificate

    def distinct(self) -> list[tuple[str, Matrix]]:
        """Role list with duplicates removed, first occurrence order."""
        seen = set()
        out = []
        for name, m in zip(self.names, self.matrices):
            if name not in seen:
                seen.add(name)
                out.append((name, m))
        return out

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "roles": list(self.names),
            "matrices": [
                [[format_scalar(v) for v in row] for row in m.data]
                for m in self.matrices
            ],
            "certificate": self.certificate.to_json(),
        }


def kernel_basis(m: Matrix, tol: Optional[float] = None) -> list[tuple]:
    """Basis of the right null space of ``m``."""
    return m.kernel_basis(tol)


def _span_rank(vectors: Sequence[tuple], tol) -> int:
    return Matrix(list(vectors)).rank(tol)


def _in_kernel(m: Matrix, vec: tuple, tol) -> bool:
    img = m @ Matrix.column(list(vec))
    return all(is_zero(img[i, 0], tol) for i in range(img.rows))


def _kernel_complement(m: Matrix, shared: tuple, role: int, tol) -> tuple:
    basis = m.kernel_basis(tol)
    if len(basis) != 2:
        raise ProjectiveSetError(
            f"role {role}: kernel dimension {len(basis)}, expected 2"
        )
    if not _in_kernel(m, shared, tol):
        raise ProjectiveSetError(f"role {role}: shared kernel vector not in kernel")
    for cand in basis:
        if _span_rank([shared, cand], tol) == 2:
            return cand
    raise ProjectiveSetError(f"role {role}: kernel collapsed onto the shared vector")


def projective_certificate_2to1(
    matrices: Sequence[Matrix], f: BinarySignature, tol: Optional[float] = None
) -> ProjectiveCertificate:
    """Verify the kernel geometry of a seven-role projector family.

    Raises ProjectiveSetError naming the first failed check.  The checks
    are sufficient for rank preservation: a rank-2 matrix N that loses
    rank under every member would need its column span to meet seven
    kernels whose union spans C^4 three times over, which the recorded
    span conditions rule out.
    """
    mats = list(matrices)
    if len(mats) != 7:
        raise ProjectiveSetError(f"expected 7 roles, got {len(mats)}")
    for i, m in enumerate(mats):
        if m.shape != (2, 4):
            raise ProjectiveSetError(f"role {i}: shape {m.shape}, expected (2, 4)")
        if m.rank(tol) != 2:
            raise ProjectiveSetError(f"role {i}: rank below 2")
    w, x, y, z = f.tuple()
    # build u = (0, -1, 1, 0) and v = (0, -x, y, 0) in f's arithmetic
    if f.is_exact:
        from .scalars import QI_ONE, QI_ZERO

        u = (QI_ZERO, -QI_ONE, QI_ONE, QI_ZERO)
        v = (QI_ZERO, -x, y, QI_ZERO)
    else:
        u = (0j, -1 + 0j, 1 + 0j, 0j)
        v = (0j, -x, y, 0j)
    u_comp = tuple(_kernel_complement(mats[i], u, i, tol) for i in range(3))
    v_comp = tuple(_kernel_complement(mats[i], v, i, tol) for i in range(3, 6))
    closing = mats[6].kernel_basis(tol)
    if len(closing) != 2:
        raise ProjectiveSetError(
            f"role 6: kernel dimension {len(closing)}, expected 2"
        )
    if _span_rank([u, *u_comp], tol) != 4:
        raise ProjectiveSetError("u and its complements do not span C^4")
    if _span_rank([v, *v_comp], tol) != 4:
        raise ProjectiveSetError("v and its complements do not span C^4")
    if _span_rank([u, v, *closing], tol) != 4:
        raise ProjectiveSetError("u, v and the closing kernel do not span C^4")
    return ProjectiveCertificate(u, v, u_comp, v_comp, tuple(closing))


def projective_set_for(
    f: BinarySignature, *, case: Optional[int] = None, tol: Optional[float] = None
) -> ProjectiveSet:
    """Certified projector family for ``f``; raises if no case applies."""
    if case is None:
        case = projective_case(f, tol)
    if case is None:
        raise ProjectiveSetError(
            "no projective gadget set applies to this signature; "
            "for y = 0 or z = 0 try the spin-flipped form (z, y, x, w)"
        )
    names = PROJECTIVE_ROLE_TABLE[case]
    mats = tuple(transition_matrix(name, f) for name in names)
    cert = projective_certificate_2to1(mats, f, tol)
    return ProjectiveSet(case, names, mats, cert)


def rank_preserving_member(
    pset: Union[ProjectiveSet, Sequence[Matrix]],
    n: Matrix,
    tol: Optional[float] = None,
) -> Optional[int]:
    """Index of the first member with rank(member @ n) == rank(n), else None."""
    mats = pset.matrices if isinstance(pset, ProjectiveSet) else list(pset)
    target = n.rank(tol)
    for i, m in enumerate(mats):
        if (m @ n).rank(tol) == target:
            return i
    return None


# -- arity reduction chains -----------------------------------------------------


def lift_projector(f_matrix: Matrix, k: int) -> Matrix:
    """The 2x4 projector acting on the two low-order bits of k bits.

    Returns I_{2^(k-2)} (x) F, mapping 2^k coordinates to 2^(k-1); the
    top k-2 bits pass through untouched.
    """
    if f_matrix.shape != (2, 4):
        raise DimensionMismatch(f"projector must be 2x4, got {f_matrix.shape}")
    if k < 2:
        raise ValueError("lifting needs at least 2 bits")
    if k == 2:
        return f_matrix
    return Matrix.identity(1 << (k - 2), exact=f_matrix.is_exact).kron(f_matrix)


def collapse_projector(f_matrix: Matrix, k: int) -> Matrix:
    """Chain of lifted projectors taking 2^k coordinates down to 2."""
    chain = f_matrix
    for j in range(3, k + 1):
        chain = chain @ lift_projector(f_matrix, j)
    return chain


def _independent2(a: tuple, b: tuple, tol) -> bool:
    det = a[0] * b[1] - a[1] * b[0]
    scale = None
    if not isinstance(det, complex):
        return not is_zero(det, tol)
    # scale the float test so large vectors do not mask dependence
    norm = max(abs(a[0]), abs(a[1])) * max(abs(b[0]), abs(b[1]))
    return abs(det) > (tol if tol is not None else 1e-9) * max(1.0, norm)


class _Prefix:
    """Materialize an iterable lazily, capped at a fixed prefix length."""

    def __init__(self, source: Iterable[Matrix], bound: int):
        self._bound = bound
        if isinstance(source, (list, tuple)):
            self._items = list(source[:bound])
            self._it = None
        else:
            self._items: list[Matrix] = []
            self._it = iter(source)

    def get(self, i: int) -> Optional[Matrix]:
        if i >= self._bound:
            return None
        while self._it is not None and len(self._items) <= i:
            try:
                self._items.append(next(self._it))
            except StopIteration:
                self._it = None
        return self._items[i] if i < len(self._items) else None


def select_projection(
    vectors: Iterable[Matrix],
    projectors: Sequence[Matrix],
    n: int,
    *,
    tol: Optional[float] = None,
) -> tuple[int, tuple[int, ...]]:
    """Find a projector giving ``n`` pairwise-independent plane images.

    ``vectors`` are column matrices, pairwise linearly independent; only a
    prefix of length n^len(projectors) + 1 is ever inspected, which is
    enough whenever the projectors carry the rank-preservation property.
    Scans projectors in order and vectors in order, keeping the first
    vector of each new image direction; returns (projector index, vector
    indices).  Raises InterpolationError if every projector falls short.
    """
    projs = list(projectors)
    if not projs:
        raise ValueError("no projectors supplied")
    bound = n ** len(projs) + 1
    store = _Prefix(vectors, bound)
    achieved = []
    for pi, proj in enumerate(projs):
        picked: list[int] = []
        images: list[tuple] = []
        t = 0
        while len(picked) < n:
            vec = store.get(t)
            if vec is None:
                break
            img = proj @ vec
            pt = (img[0, 0], img[1, 0])
            t += 1
            if is_zero(pt[0], tol) and is_zero(pt[1], tol):
                continue
            if all(_independent2(pt, other, tol) for other in images):
                images.append(pt)
                picked.append(t - 1)
        if len(picked) >= n:
            return pi, tuple(picked)
        achieved.append(f"projector {pi}: {len(picked)}")
    raise InterpolationError(
        f"no projector reached {n} independent images within {bound} vectors "
        f"({'; '.join(achieved)})"
    )


# -- monoid enumeration ----------------------------------------------------------


def _normal_key(m: Matrix, tol):
    nf = m.scalar_normal_form(tol)
    if m.is_exact:
        return nf
    return tuple(
        (round(v.real, 9), round(v.imag, 9)) for row in nf.data for v in row
    )


def _check_generators(gens: Sequence[Matrix]) -> int:
    if not gens:
        raise ValueError("empty generator set")
    size = gens[0].rows
    for m in gens:
        if m.shape != (size, size):
            raise DimensionMismatch("generators must share one square shape")
        if is_zero(m.det()):
            raise ValueError("singular generator; its gadget cannot recurse")
    return size


def _cayley_iter(gens: Sequence[Matrix], tol=None):
    """Breadth-first (word, matrix) pairs, distinct up to scalars.

    Starts at the empty word (identity).  Exhausts silently when the
    generated group is finite mod scalars.
    """
    size = _check_generators(gens)
    ident = Matrix.identity(size, exact=gens[0].is_exact)
    seen = {_normal_key(ident, tol)}
    queue = deque([((), ident)])
    while queue:
        word, mat = queue.popleft()
        yield word, mat
        for idx, g in enumerate(gens):
            nxt = mat @ g
            key = _normal_key(nxt, tol)
            if key not in seen:
                seen.add(key)
                queue.append((word + (idx,), nxt))


def cayley_enumerate(
    generators: Sequence[Matrix], count: int, *, tol: Optional[float] = None
) -> list[Matrix]:
    """First ``count`` group elements mod scalars, breadth-first from S.

    The identity comes first, so a single generator h yields its powers
    h^0, h^1, ...  Raises FiniteGroupError when the group runs out early
    and ValueError on a singular generator.
    """
    out = []
    for _, mat in _cayley_iter(list(generators), tol):
        out.append(mat)
        if len(out) == count:
            return out
    raise FiniteGroupError(f"finite group of order {len(out)}")


# -- exact Vandermonde solving ----------------------------------------------------


def vandermonde_solve(ratios: Sequence[Scalar], rhs: Sequence[Scalar]) -> tuple:
    """Coefficients c with sum(c_j r_t^j) = rhs_t for each node r_t."""
    rs = list(ratios)
    if len(rs) != len(rhs):
        raise DimensionMismatch(
            f"{len(rs)} nodes but {len(rhs)} right-hand sides"
        )
    for a, b in itertools.combinations(range(len(rs)), 2):
        if scalars_equal(rs[a], rs[b]):
            raise ValueError(f"repeated interpolation node at positions {a}, {b}")
    v = Matrix([[r ** c for c in range(len(rs))] for r in rs])
    sol = v.inverse() @ Matrix.column(list(rhs))
    return tuple(sol[i, 0] for i in range(sol.rows))


# -- physical gadget assembly ------------------------------------------------------


def _shift(port, go: int, ro: int):
    side, vtx, slot = port
    return (side, vtx + (go if side == "gen" else ro), slot)


def _bit_reverse(value: int, bits: int) -> int:
    out = 0
    for _ in range(bits):
        out = (out << 1) | (value & 1)
        value >>= 1
    return out


def _flatten_dressed(m: Matrix, d: int) -> Matrix:
    """Column vector of a dressed word matrix, bits c_d..c_1 b_1..b_d.

    Entry (b, c) of the 2^d square matrix lands at row rev(c) * 2^d + b:
    the head bits of the dressing sit above the dangling tail bits, with
    the head of the last dressed slot as the top bit.
    """
    size = 1 << d
    out: list = [None] * (size * size)
    for b in range(size):
        for c in range(size):
            out[(_bit_reverse(c, d) << d) | b] = m[b, c]
    return Matrix.column(out)


def _dressing_grid(gsig: Signature, d: int) -> SignatureGrid:
    # d free generator vertices: tails at the bottom bits, heads reversed on top
    leading = [("gen", j, 1) for j in reversed(range(d))] + [
        ("gen", j, 0) for j in range(d)
    ]
    return SignatureGrid([gsig] * d, [], [], leading, [])


def _word_gate(
    word: Sequence[int], specs: Sequence[GadgetSpec], f: BinarySignature
) -> Optional[SignatureGrid]:
    if not word:
        return None
    gates = [specs[i].gate(f) for i in word]
    out = gates[0]
    for nxt in gates[1:]:
        out = _join(out, nxt)
    return out


def _join(left: SignatureGrid, right: SignatureGrid) -> SignatureGrid:
    combined, offsets = combine_gates([left, right])
    lo, ro = offsets[1]
    connect = list(
        zip(left.trailing, (_shift(p, lo, ro) for p in right.leading))
    )
    return rewire(
        combined,
        connect,
        list(left.leading),
        [_shift(p, lo, ro) for p in right.trailing],
    )


def _dressed_gate(
    word: Sequence[int],
    specs: Sequence[GadgetSpec],
    f: BinarySignature,
    g: BinarySignature,
    d: int,
) -> SignatureGrid:
    """Gate whose column signature is _flatten_dressed(W_word @ Mg^(x)d, d)."""
    dress = _dressing_grid(g.signature(), d)
    wg = _word_gate(word, specs, f)
    if wg is None:
        return dress
    combined, offsets = combine_gates([wg, dress])
    go, ro = offsets[1]
    connect = [
        (wg.trailing[j], ("gen", j + go, 0)) for j in range(d)
    ]
    heads = [("gen", j + go, 1) for j in reversed(range(d))]
    return rewire(combined, connect, heads + list(wg.leading), [])


def _attach_chain(
    gate: SignatureGrid, proj: GadgetSpec, f: BinarySignature
) -> SignatureGrid:
    """Fold the gate's wires pairwise through copies of one 2-to-1 gadget."""
    cur = gate
    while len(cur.leading) > 1:
        fg = proj.gate(f)
        if len(fg.leading) != 1 or len(fg.trailing) != 2:
            raise InterpolationError(
                f"projector gadget {proj.name} is not 2-to-1"
            )
        combined, offsets = combine_gates([cur, fg])
        go, ro = offsets[1]
        lead = list(cur.leading)
        ftrail = [_shift(p, go, ro) for p in fg.trailing]
        flead = [_shift(p, go, ro) for p in fg.leading]
        connect = [(lead[-2], ftrail[0]), (lead[-1], ftrail[1])]
        cur = rewire(combined, connect, lead[:-2] + flead, [])
    return cur


# -- the interpolation driver ------------------------------------------------------


@dataclass(frozen=True)
class OracleCall:
    """One audited oracle evaluation during an interpolation run."""

    index: int
    generators: int
    edges: int
    target_present: bool
    value: Scalar

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "generators": self.generators,
            "edges": self.edges,
            "target_present": self.target_present,
            "value": format_scalar(self.value),
        }


@dataclass(frozen=True)
class InterpolationRun:
    """Everything an interpolation did, sufficient to replay or audit it."""

    target: tuple
    occurrences: int
    value: Scalar
    case: Optional[int] = None
    set_names: tuple[str, ...] = ()
    projector: Optional[str] = None
    words: tuple[tuple[int, ...], ...] = ()
    nodes: tuple[tuple, ...] = ()
    ratios: tuple = ()
    coefficients: tuple = ()
    audit: tuple[OracleCall, ...] = ()

    @property
    def target_evaluated_directly(self) -> bool:
        return any(call.target_present for call in self.audit)

    def to_json(self) -> dict:
        return {
            "target": [format_scalar(v) for v in self.target],
            "occurrences": self.occurrences,
            "value": format_scalar(self.value),
            "case": self.case,
            "set_names": list(self.set_names),
            "projector": self.projector,
            "words": [list(w) for w in self.words],
            "nodes": [[format_scalar(a), format_scalar(b)] for a, b in self.nodes],
            "ratios": [format_scalar(r) for r in self.ratios],
            "coefficients": [format_scalar(c) for c in self.coefficients],
            "oracle_calls": [c.to_json() for c in self.audit],
            "target_evaluated_directly": self.target_evaluated_directly,
        }


def _distinct_binary(grid: SignatureGrid) -> BinarySignature:
    sigs = []
    for s in grid.generators:
        if s.arity == 2 and s not in sigs:
            sigs.append(s)
    if len(sigs) != 1:
        raise ValueError(
            f"grid carries {len(sigs)} distinct binary signatures, need exactly 1"
        )
    return BinarySignature(*sigs[0].values)


def _resolve_target(grid: SignatureGrid, target) -> Signature:
    if target is not None:
        if isinstance(target, Signature):
            return target
        return Signature(list(target))
    unaries = []
    for s in grid.generators:
        if s.arity == 1 and s not in unaries:
            unaries.append(s)
    if len(unaries) != 1:
        raise ValueError(
            f"grid carries {len(unaries)} distinct unary signatures; pass target="
        )
    return unaries[0]


def group_lemma_interpolate(
    oracle: Optional[Callable[[SignatureGrid], Scalar]],
    S: Sequence[Union[str, GadgetSpec]],
    P: Optional[ProjectiveSet],
    grid: SignatureGrid,
    *,
    target=None,
    tol: Optional[float] = None,
) -> InterpolationRun:
    """Evaluate a closed grid without ever evaluating its unary target.

    The grid must use exactly one binary signature f plus some copies of a
    unary target (X, Y).  Words over the recursive set ``S``, dressed with
    f and projected through a member of ``P`` (derived from f when None),
    realize unary gadgets (X_t, Y_t); splicing those in place of the
    target and solving the resulting Vandermonde system recovers the
    grid's value at (X, Y).  Every oracle call is audited; none of them
    contains the target.  Raises FiniteGroupError when ``S`` generates
    too small a group to supply enough interpolation nodes.
    """
    if oracle is None:
        oracle = eval_holant_by_elimination
    audit: list[OracleCall] = []

    def call(g: SignatureGrid, tsig: Signature) -> Scalar:
        present = any(s.arity == 1 and s == tsig for s in g.generators)
        value = oracle(g)
        audit.append(
            OracleCall(len(audit), len(g.generators), g.edge_count, present, value)
        )
        return value

    f = _distinct_binary(grid)
    tsig = _resolve_target(grid, target)
    if tsig.arity != 1:
        raise ValueError("target must be unary")
    big_x, big_y = tsig.values
    n = sum(1 for s in grid.generators if s.arity == 1 and s == tsig)
    if n == 0:
        value = call(grid, tsig)
        return InterpolationRun((big_x, big_y), 0, value, audit=tuple(audit))

    specs = [resolve_gadget(s) if isinstance(s, str) else s for s in S]
    if not specs:
        raise ValueError("empty recursive gadget set")
    d = len(specs[0].trailing)
    for sp in specs:
        if len(sp.trailing) != d or len(sp.leading) != d:
            raise ValueError(
                f"recursive gadget {sp.name} is not {d}-to-{d} like the others"
            )
    letters = [transition_matrix(sp, f) for sp in specs]
    _check_generators(letters)
    gm = f.matrix()
    if gm.rank(tol) != 2:
        raise ValueError("degenerate binary signature cannot dress the words")
    gtensor = reduce(lambda a, b: a.kron(b), [gm] * d)
    pset = P if P is not None else projective_set_for(f, tol=tol)
    members = pset.distinct()
    chains = [collapse_projector(m, 2 * d) for _, m in members]

    words: list[tuple[int, ...]] = []
    mats: list[Matrix] = []
    exhausted = [False]

    def stream():
        for word, mat in _cayley_iter(letters, tol):
            words.append(word)
            mats.append(mat)
            yield _flatten_dressed(mat @ gtensor, d)
        exhausted[0] = True

    try:
        chosen, picked = select_projection(stream(), chains, n + 2, tol=tol)
    except InterpolationError:
        if exhausted[0]:
            raise FiniteGroupError(
                f"finite group of order {len(words)}"
            ) from None
        raise
    proj_name, _ = members[chosen]
    proj_spec = resolve_gadget(proj_name)

    float_tol = None if f.is_exact else (tol if tol is not None else 1e-6)
    kept: list[tuple[tuple[int, ...], Scalar, Scalar, SignatureGrid]] = []
    dropped_zero = False
    for t in picked:
        vec = _flatten_dressed(mats[t] @ gtensor, d)
        image = chains[chosen] @ vec
        xt, yt = image[0, 0], image[1, 0]
        gate = _attach_chain(_dressed_gate(words[t], specs, f, f, d), proj_spec, f)
        physical = gate_signature(gate)
        if not physical.equal_within(Matrix.column([xt, yt]), float_tol):
            raise InterpolationError(
                f"physical gadget for word {words[t]} disagrees with the "
                "matrix calculus; wiring convention broken"
            )
        if is_zero(yt, tol):
            dropped_zero = True
            continue
        kept.append((words[t], xt, yt, gate))
    if len(kept) < n + 1:
        raise InterpolationError(
            f"only {len(kept)} usable nodes after dropping Y=0, need {n + 1}"
        )
    kept = kept[: n + 1]

    ratios = [xt / yt for _, xt, yt, _ in kept]
    rhs = []
    for _, xt, yt, gate in kept:
        omega = splice_unary_gates(grid, tsig, gate)
        rhs.append(call(omega, tsig) / yt ** n)
    coeffs = vandermonde_solve(ratios, rhs)
    value = None
    for i, c in enumerate(coeffs):
        term = c * big_x ** i * big_y ** (n - i)
        value = term if value is None else value + term
    return InterpolationRun(
        (big_x, big_y),
        n,
        value,
        case=pset.case,
        set_names=tuple(sp.name for sp in specs),
        projector=proj_name,
        words=tuple(w for w, _, _, _ in kept),
        nodes=tuple((xt, yt) for _, xt, yt, _ in kept),
        ratios=tuple(ratios),
        coefficients=tuple(coeffs),
        audit=tuple(audit),
    )
