"""Directed multigraphs, signature grids, gates, and Holant evaluation.

A spin system on a directed multigraph G assigns 0/1 to vertices; its
partition function multiplies one binary weight f(tail, head) per edge.
The same number is a Holant value on the edge-vertex incidence grid, where
every vertex becomes an equality recognizer and every edge a generator
carrying f.  Gates are grids with dangling edges; their signatures are the
transition matrices that the gadget calculus composes.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .linalg import Matrix
from .scalars import (
    GaussianRational,
    QI_ONE,
    QI_ZERO,
    Scalar,
    format_scalar,
    parse_scalar,
    to_complex,
)

#: Brute-force enumeration refuses larger instances unless overridden.
SIZE_GUARD = 26


class SizeGuardError(RuntimeError):
    """Instance exceeds the brute-force size guard and no override was given."""


class GridFormatError(ValueError):
    """Malformed graph/grid/gate description."""


def _canonical_scalar(v):
    if isinstance(v, GaussianRational):
        return v
    if isinstance(v, (int, Fraction)):
        return GaussianRational(v)
    if isinstance(v, (float, complex)):
        return complex(v)
    raise TypeError(f"unsupported signature value {v!r}")


class Signature:
    """A function {0,1}^arity -> scalars, stored densely.

    values[i] is the output on the bit string spelled by i in binary, most
    significant bit first; the first listed wire owns the top bit.
    """

    __slots__ = ("values", "arity")

    def __init__(self, values: Sequence[Scalar]):
        vals = tuple(_canonical_scalar(v) for v in values)
        if any(isinstance(v, complex) for v in vals):
            vals = tuple(to_complex(v) for v in vals)
        n = len(vals)
        if n == 0 or n & (n - 1):
            raise GridFormatError(f"signature length {n} is not a power of two")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "arity", n.bit_length() - 1)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Signature is immutable")

    @classmethod
    def equality(cls, arity: int) -> "Signature":
        """The all-equal recognizer; arity 0 degenerates to the scalar 2.

        An isolated spin vertex sums 1 over its two states, hence the 2.
        """
        if arity == 0:
            return cls([GaussianRational(2)])
        vals = [QI_ZERO] * (1 << arity)
        vals[0] = QI_ONE
        vals[-1] = QI_ONE
        return cls(vals)

    @classmethod
    def unary(cls, x0: Scalar, x1: Scalar) -> "Signature":
        return cls([x0, x1])

    def __getitem__(self, idx: int) -> Scalar:
        return self.values[idx]

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        return self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Signature({[format_scalar(v) for v in self.values]})"

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, GaussianRational) for v in self.values)

    def to_float(self) -> "Signature":
        return Signature([complex(v.to_complex() if isinstance(v, GaussianRational) else v) for v in self.values])


class BinarySignature:
    """An edge weight f with f(0,0)=w, f(0,1)=x, f(1,0)=y, f(1,1)=z."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w: Scalar, x: Scalar, y: Scalar, z: Scalar):
        vals = [_canonical_scalar(v) for v in (w, x, y, z)]
        if any(isinstance(v, complex) for v in vals):
            vals = [to_complex(v) for v in vals]
        for name, v in zip("wxyz", vals):
            object.__setattr__(self, name, v)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("BinarySignature is immutable")

    @classmethod
    def parse(cls, text: str) -> "BinarySignature":
        from .scalars import parse_signature_values

        vals = parse_signature_values(text)
        if len(vals) != 4:
            raise GridFormatError(f"need exactly 4 scalars, got {len(vals)}")
        return cls(*vals)

    def signature(self) -> Signature:
        return Signature([self.w, self.x, self.y, self.z])

    def matrix(self) -> Matrix:
        """Rows indexed by the tail spin, columns by the head spin."""
        return Matrix([[self.w, self.x], [self.y, self.z]])

    def reversed(self) -> "BinarySignature":
        """Weight seen when every edge flips direction: swap x and y."""
        return BinarySignature(self.w, self.y, self.x, self.z)

    def spin_flipped(self) -> "BinarySignature":
        """Weight after exchanging the spin labels 0 and 1."""
        return BinarySignature(self.z, self.y, self.x, self.w)

    def tuple(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, GaussianRational) for v in self.tuple())

    def to_float(self) -> "BinarySignature":
        from .scalars import to_complex

        return BinarySignature(*(to_complex(v) for v in self.tuple()))

    def __eq__(self, other):
        if not isinstance(other, BinarySignature):
            return NotImplemented
        return self.tuple() == other.tuple()

    def __hash__(self):
        return hash(self.tuple())

    def __repr__(self):
        return f"BinarySignature({', '.join(format_scalar(v) for v in self.tuple())})"


class DirectedMultiGraph:
    """Vertices 0..n-1 with an ordered list of directed edges (tail, head)."""

    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        edges = tuple((int(t), int(h)) for t, h in edges)
        if vertex_count < 0:
            raise GridFormatError("negative vertex count")
        for t, h in edges:
            if not (0 <= t < vertex_count and 0 <= h < vertex_count):
                raise GridFormatError(f"edge ({t},{h}) out of range")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", edges)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("DirectedMultiGraph is immutable")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Endpoint count at v; a self-loop contributes 2."""
        return sum((t == v) + (h == v) for t, h in self.edges)

    def out_degree(self, v: int) -> int:
        return sum(t == v for t, _ in self.edges)

    def in_degree(self, v: int) -> int:
        return sum(h == v for _, h in self.edges)

    def is_3_regular(self) -> bool:
        return all(self.degree(v) == 3 for v in range(self.vertex_count))

    def reversed(self) -> "DirectedMultiGraph":
        return DirectedMultiGraph(self.vertex_count, [(h, t) for t, h in self.edges])

    def disjoint_union(self, other: "DirectedMultiGraph") -> "DirectedMultiGraph":
        off = self.vertex_count
        return DirectedMultiGraph(
            off + other.vertex_count,
            list(self.edges) + [(t + off, h + off) for t, h in other.edges],
        )

    def components(self) -> list[tuple[list[int], list[int]]]:
        """Weakly connected components as (vertex list, edge id list) pairs."""
        parent = list(range(self.vertex_count))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for t, h in self.edges:
            ra, rb = find(t), find(h)
            if ra != rb:
                parent[ra] = rb
        groups: dict[int, tuple[list[int], list[int]]] = {}
        for v in range(self.vertex_count):
            groups.setdefault(find(v), ([], []))[0].append(v)
        for i, (t, _) in enumerate(self.edges):
            groups[find(t)][1].append(i)
        return [groups[k] for k in sorted(groups)]

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, obj) -> "DirectedMultiGraph":
        try:
            n = int(obj["vertices"])
            edges = [(int(e[0]), int(e[1])) for e in obj["edges"]]
            for e in obj["edges"]:
                if len(e) != 2:
                    raise GridFormatError(f"edge {e!r} is not a pair")
        except (KeyError, TypeError, ValueError) as exc:
            raise GridFormatError(f"bad graph object: {exc}") from exc
        return cls(n, edges)

    def __eq__(self, other):
        if not isinstance(other, DirectedMultiGraph):
            return NotImplemented
        return (self.vertex_count, self.edges) == (other.vertex_count, other.edges)

    def __repr__(self):
        return f"DirectedMultiGraph({self.vertex_count}, {list(self.edges)})"


def k4() -> DirectedMultiGraph:
    """Complete graph on 4 vertices, edges oriented low to high."""
    return DirectedMultiGraph(4, [(a, b) for a, b in itertools.combinations(range(4), 2)])


def k33() -> DirectedMultiGraph:
    """Complete bipartite 3+3 graph, edges oriented left to right."""
    return DirectedMultiGraph(6, [(i, j) for i in range(3) for j in range(3, 6)])


def cycle_graph(n: int) -> DirectedMultiGraph:
    return DirectedMultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def random_multigraph(rng, max_vertices: int = 12, max_edges: int = 14) -> DirectedMultiGraph:
    """Random directed multigraph; self-loops and parallel edges allowed."""
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_edges)
    return DirectedMultiGraph(
        n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]
    )


def random_3_regular(rng, n: int) -> DirectedMultiGraph:
    """Random 3-regular directed multigraph by the pairing model; n even."""
    if n % 2:
        raise GridFormatError("3-regular graphs need an even vertex count")
    stubs = [v for v in range(n) for _ in range(3)]
    rng.shuffle(stubs)
    return DirectedMultiGraph(
        n, [(stubs[2 * i], stubs[2 * i + 1]) for i in range(3 * n // 2)]
    )


# -- signature grids and gates ----------------------------------------------

#: A dangling-edge port: ("gen" | "rec", per-side vertex id, slot index).
Port = tuple[str, int, int]


class SignatureGrid:
    """A bipartite incidence structure of generators and recognizers.

    Grid edges connect a generator slot to a recognizer slot.  Slots listed
    in ``leading``/``trailing`` stay dangling, making the grid a gate; a grid
    with no dangling slots is closed and has a Holant value.
    """

    __slots__ = ("generators", "recognizers", "edges", "leading", "trailing")

    def __init__(
        self,
        generators: Sequence[Signature],
        recognizers: Sequence[Signature],
        edges: Iterable[tuple[int, int, int, int]],
        leading: Sequence[Port] = (),
        trailing: Sequence[Port] = (),
    ):
        generators = tuple(generators)
        recognizers = tuple(recognizers)
        edges = tuple(tuple(int(x) for x in e) for e in edges)
        leading = tuple((str(s), int(v), int(k)) for s, v, k in leading)
        trailing = tuple((str(s), int(v), int(k)) for s, v, k in trailing)
        seen: set[Port] = set()

        def claim(side, v, k):
            sigs = generators if side == "gen" else recognizers
            if side not in ("gen", "rec"):
                raise GridFormatError(f"bad side {side!r}")
            if not (0 <= v < len(sigs)):
                raise GridFormatError(f"no {side} vertex {v}")
            if not (0 <= k < sigs[v].arity):
                raise GridFormatError(f"slot {k} out of range for {side} {v}")
            port = (side, v, k)
            if port in seen:
                raise GridFormatError(f"slot used twice: {port}")
            seen.add(port)

        for g, gs, r, rs in edges:
            claim("gen", g, gs)
            claim("rec", r, rs)
        for side, v, k in leading:
            claim(side, v, k)
        for side, v, k in trailing:
            claim(side, v, k)
        expected = sum(s.arity for s in generators) + sum(s.arity for s in recognizers)
        if len(seen) != expected:
            raise GridFormatError(
                f"{expected - len(seen)} slot(s) left unconnected"
            )
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "recognizers", recognizers)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "leading", leading)
        object.__setattr__(self, "trailing", trailing)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("SignatureGrid is immutable")

    @property
    def is_closed(self) -> bool:
        return not self.leading and not self.trailing

    @property
    def dangling(self) -> tuple[Port, ...]:
        return self.leading + self.trailing

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def map_signatures(self, fn: Callable[[Signature], Signature]) -> "SignatureGrid":
        return SignatureGrid(
            [fn(s) for s in self.generators],
            [fn(s) for s in self.recognizers],
            self.edges,
            self.leading,
            self.trailing,
        )

    def to_float(self) -> "SignatureGrid":
        return self.map_signatures(lambda s: s.to_float())

    def to_json(self) -> dict:
        vertices = [
            {
                "side": "generator",
                "signature": {
                    "arity": s.arity,
                    "values": [format_scalar(v) for v in s.values],
                },
            }
            for s in self.generators
        ] + [
            {
                "side": "recognizer",
                "signature": {
                    "arity": s.arity,
                    "values": [format_scalar(v) for v in s.values],
                },
            }
            for s in self.recognizers
        ]
        obj = {"vertices": vertices, "edges": [list(e) for e in self.edges]}
        if self.leading or self.trailing:
            obj["leading"] = [list(p) for p in self.leading]
            obj["trailing"] = [list(p) for p in self.trailing]
        return obj

    @classmethod
    def from_json(cls, obj) -> "SignatureGrid":
        try:
            gens, recs = [], []
            for vtx in obj["vertices"]:
                side = vtx["side"]
                sig = vtx["signature"]
                values = [parse_scalar(v) for v in sig["values"]]
                if len(values) != 1 << int(sig["arity"]):
                    raise GridFormatError("arity does not match value count")
                (gens if side == "generator" else recs).append(Signature(values))
                if side not in ("generator", "recognizer"):
                    raise GridFormatError(f"bad side {side!r}")
            edges = [tuple(int(x) for x in e) for e in obj["edges"]]
            leading = [tuple(p) for p in obj.get("leading", [])]
            trailing = [tuple(p) for p in obj.get("trailing", [])]
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            if isinstance(exc, GridFormatError):
                raise
            raise GridFormatError(f"bad grid object: {exc}") from exc
        return cls(gens, recs, edges, leading, trailing)


#: Gates are grids with dangling slots; same representation.
GateGraph = SignatureGrid


# -- evaluation ---------------------------------------------------------------


def eval_partition(
    graph: DirectedMultiGraph, f: BinarySignature, *, allow_large: bool = False
) -> Scalar:
    """Partition function: sum over 0/1 vertex spins of the edge-weight product."""
    n = graph.vertex_count
    if n > SIZE_GUARD and not allow_large:
        raise SizeGuardError(f"{n} vertices exceeds the size guard {SIZE_GUARD}")
    vals = (f.w, f.x, f.y, f.z)
    one = QI_ONE if f.is_exact else 1 + 0j
    edges = graph.edges
    total = None
    for mask in range(1 << n):
        prod = one
        for t, h in edges:
            prod = prod * vals[(((mask >> t) & 1) << 1) | ((mask >> h) & 1)]
        total = prod if total is None else total + prod
    if total is None:
        total = one
    return total


def _vertex_wiring(grid: SignatureGrid):
    """Per vertex: (signature, var id per slot).  Vars: grid edges first,
    then leading then trailing dangling slots."""
    port_var: dict[Port, int] = {}
    for i, (g, gs, r, rs) in enumerate(grid.edges):
        port_var[("gen", g, gs)] = i
        port_var[("rec", r, rs)] = i
    base = len(grid.edges)
    for k, port in enumerate(grid.leading):
        port_var[port] = base + k
    for k, port in enumerate(grid.trailing):
        port_var[port] = base + len(grid.leading) + k
    wiring = []
    for side, sigs in (("gen", grid.generators), ("rec", grid.recognizers)):
        for v, sig in enumerate(sigs):
            wiring.append((sig, [port_var[(side, v, s)] for s in range(sig.arity)]))
    return wiring


def _grid_is_exact(grid: SignatureGrid) -> bool:
    return all(s.is_exact for s in grid.generators) and all(
        s.is_exact for s in grid.recognizers
    )


def eval_holant(grid: SignatureGrid, *, allow_large: bool = False) -> Scalar:
    """Holant value by brute-force enumeration over edge assignments."""
    if not grid.is_closed:
        raise GridFormatError("eval_holant needs a closed grid (no dangling slots)")
    m = len(grid.edges)
    if m > SIZE_GUARD and not allow_large:
        raise SizeGuardError(f"{m} edges exceeds the size guard {SIZE_GUARD}")
    wiring = _vertex_wiring(grid)
    one = QI_ONE if _grid_is_exact(grid) else 1 + 0j
    total = None
    for mask in range(1 << m):
        prod = one
        for sig, slots in wiring:
            idx = 0
            for var in slots:
                idx = (idx << 1) | ((mask >> var) & 1)
            prod = prod * sig.values[idx]
        total = prod if total is None else total + prod
    return one * 0 if total is None else total


# -- elimination-based evaluation --------------------------------------------


def _axis_maps(vars_: Sequence[int], pos: dict[int, int], e: int):
    k = len(vars_)
    return [(k - 1 - i, None if v == e else pos[v]) for i, v in enumerate(vars_)]


def _pair_contract(vars1, t1, vars2, t2, e):
    out_vars = [v for v in vars1 if v != e]
    seen = set(out_vars)
    for v in vars2:
        if v != e and v not in seen:
            out_vars.append(v)
            seen.add(v)
    w = len(out_vars)
    pos = {v: w - 1 - i for i, v in enumerate(out_vars)}
    m1 = _axis_maps(vars1, pos, e)
    m2 = _axis_maps(vars2, pos, e)
    out = []
    for m in range(1 << w):
        acc = None
        for eb in (0, 1):
            i1 = 0
            for shift, src in m1:
                bit = eb if src is None else (m >> src) & 1
                i1 |= bit << shift
            i2 = 0
            for shift, src in m2:
                bit = eb if src is None else (m >> src) & 1
                i2 |= bit << shift
            term = t1[i1] * t2[i2]
            acc = term if acc is None else acc + term
        out.append(acc)
    return out_vars, out


def _axis_sum(vars_, table, e):
    out_vars = [v for v in vars_ if v != e]
    w = len(out_vars)
    pos = {v: w - 1 - i for i, v in enumerate(out_vars)}
    maps = _axis_maps(vars_, pos, e)
    out = []
    for m in range(1 << w):
        acc = None
        for eb in (0, 1):
            idx = 0
            for shift, src in maps:
                bit = eb if src is None else (m >> src) & 1
                idx |= bit << shift
            acc = table[idx] if acc is None else acc + table[idx]
        out.append(acc)
    return out_vars, out


def _contract_all(grid: SignatureGrid):
    """Eliminate all internal edge variables; returns (factors, one).

    Each factor is (vars, table) over the surviving dangling variables; the
    factors have pairwise disjoint variable sets.
    """
    wiring = _vertex_wiring(grid)
    one = QI_ONE if _grid_is_exact(grid) else 1 + 0j
    factors = [(list(slots), list(sig.values)) for sig, slots in wiring]
    internal = set(range(len(grid.edges)))
    while internal:
        best = None
        for e in sorted(internal):
            holders = [i for i, (vs, _) in enumerate(factors) if e in vs]
            if len(holders) == 1:
                width = len(factors[holders[0]][0]) - 1
            else:
                i, j = holders
                width = len(set(factors[i][0]) | set(factors[j][0])) - 1
            key = (width, e)
            if best is None or key < best[0]:
                best = (key, e, holders)
        _, e, holders = best
        if len(holders) == 1:
            vs, tb = factors[holders[0]]
            nv, nt = _axis_sum(vs, tb, e)
            factors[holders[0]] = (nv, nt)
        else:
            i, j = holders
            nv, nt = _pair_contract(*factors[i], *factors[j], e)
            factors[i] = (nv, nt)
            del factors[j]
        internal.discard(e)
    return factors, one


def eval_holant_by_elimination(grid: SignatureGrid) -> Scalar:
    """Holant value by iterated factor contraction; exact, no size guard.

    Agrees with eval_holant on every closed grid; the contraction cost is
    bounded by the width of the elimination order rather than 2^|E|.
    """
    if not grid.is_closed:
        raise GridFormatError("closed grid required; use gate_signature for gates")
    factors, one = _contract_all(grid)
    total = one
    for vars_, table in factors:
        assert not vars_
        total = total * table[0]
    return total


def gate_signature(gate: SignatureGrid, *, method: str = "eliminate") -> Matrix:
    """Transition matrix of a gate: rows over leading, columns over trailing.

    Row index bits follow the leading list order (first port = top bit);
    column bits likewise for the trailing list.
    """
    n_lead = len(gate.leading)
    n_trail = len(gate.trailing)
    rows, cols = 1 << n_lead, 1 << n_trail
    if method == "enumerate":
        m = len(gate.edges)
        total_vars = m + n_lead + n_trail
        if total_vars > SIZE_GUARD:
            raise SizeGuardError(
                f"{total_vars} variables exceeds the size guard {SIZE_GUARD}"
            )
        wiring = _vertex_wiring(gate)
        one = QI_ONE if _grid_is_exact(gate) else 1 + 0j
        zero = one * 0
        table = [zero] * (rows * cols)
        for mask in range(1 << total_vars):
            prod = one
            for sig, slots in wiring:
                idx = 0
                for var in slots:
                    idx = (idx << 1) | ((mask >> var) & 1)
                prod = prod * sig.values[idx]
            out = 0
            for k in range(m, total_vars):
                out = (out << 1) | ((mask >> k) & 1)
            table[out] = table[out] + prod
        return Matrix([table[r * cols : (r + 1) * cols] for r in range(rows)])
    if method != "eliminate":
        raise ValueError(f"unknown method {method!r}")
    factors, one = _contract_all(gate)
    zero = one * 0
    base = len(gate.edges)
    out_order = list(range(base, base + n_lead + n_trail))
    w = len(out_order)
    pos = {v: w - 1 - i for i, v in enumerate(out_order)}
    table = []
    for m in range(1 << w):
        prod = one
        for vars_, tb in factors:
            idx = 0
            for i, v in enumerate(vars_):
                idx |= ((m >> pos[v]) & 1) << (len(vars_) - 1 - i)
            prod = prod * tb[idx]
        table.append(prod)
    return Matrix([table[r * cols : (r + 1) * cols] for r in range(rows)])


# -- spin world to Holant world ------------------------------------------------


def to_incidence_grid(graph: DirectedMultiGraph, f: BinarySignature) -> SignatureGrid:
    """Edge-vertex incidence grid whose Holant equals the partition function.

    Each vertex v becomes an equality recognizer of arity degree(v); each
    edge becomes an f generator whose slot 0 (tail) and slot 1 (head) attach
    to the endpoint recognizers.
    """
    recognizers = [Signature.equality(graph.degree(v)) for v in range(graph.vertex_count)]
    next_slot = [0] * graph.vertex_count
    fsig = f.signature()
    generators = []
    edges = []
    for i, (t, h) in enumerate(graph.edges):
        generators.append(fsig)
        edges.append((i, 0, t, next_slot[t]))
        next_slot[t] += 1
        edges.append((i, 1, h, next_slot[h]))
        next_slot[h] += 1
    return SignatureGrid(generators, recognizers, edges)


def pendant_grid(
    graph: DirectedMultiGraph,
    f: BinarySignature,
    removed_edges: Sequence[int],
    pendant_count: int,
    pendant: Signature,
) -> SignatureGrid:
    """Incidence grid with some f edges removed and unary pendants attached.

    Removing edge (t, h) frees one slot at each endpoint, tail first.  The
    first ``pendant_count`` freed slots receive a unary ``pendant`` generator;
    any remaining freed slots are dropped, shrinking the recognizer arity.
    """
    removed = list(removed_edges)
    if len(set(removed)) != len(removed):
        raise GridFormatError("duplicate removed edge ids")
    freed: list[int] = []
    for e in removed:
        t, h = graph.edges[e]
        freed.extend([t, h])
    if pendant_count > len(freed):
        raise GridFormatError("more pendants than freed slots")
    pendant_vertices = freed[:pendant_count]
    arity = [graph.degree(v) for v in range(graph.vertex_count)]
    for v in freed:
        arity[v] -= 1
    for v in pendant_vertices:
        arity[v] += 1
    recognizers = [Signature.equality(a) for a in arity]
    next_slot = [0] * graph.vertex_count
    generators: list[Signature] = []
    edges = []
    fsig = f.signature()
    removed_set = set(removed)
    for i, (t, h) in enumerate(graph.edges):
        if i in removed_set:
            continue
        g = len(generators)
        generators.append(fsig)
        edges.append((g, 0, t, next_slot[t]))
        next_slot[t] += 1
        edges.append((g, 1, h, next_slot[h]))
        next_slot[h] += 1
    for v in pendant_vertices:
        g = len(generators)
        generators.append(pendant)
        edges.append((g, 0, v, next_slot[v]))
        next_slot[v] += 1
    return SignatureGrid(generators, recognizers, edges)


# -- gate surgery --------------------------------------------------------------


def combine_gates(parts: Sequence[SignatureGrid]):
    """Disjoint union of gates; returns (gate, offsets) with offsets[i] =
    (generator offset, recognizer offset) for part i."""
    gens: list[Signature] = []
    recs: list[Signature] = []
    edges: list[tuple[int, int, int, int]] = []
    leading: list[Port] = []
    trailing: list[Port] = []
    offsets = []
    for part in parts:
        go, ro = len(gens), len(recs)
        offsets.append((go, ro))
        gens.extend(part.generators)
        recs.extend(part.recognizers)
        edges.extend((g + go, gs, r + ro, rs) for g, gs, r, rs in part.edges)
        leading.extend(_shift_port(p, go, ro) for p in part.leading)
        trailing.extend(_shift_port(p, go, ro) for p in part.trailing)
    return SignatureGrid(gens, recs, edges, leading, trailing), offsets


def _shift_port(port: Port, go: int, ro: int) -> Port:
    side, v, k = port
    return (side, v + (go if side == "gen" else ro), k)


def rewire(
    gate: SignatureGrid,
    connect: Sequence[tuple[Port, Port]],
    leading: Sequence[Port],
    trailing: Sequence[Port],
) -> SignatureGrid:
    """Join pairs of dangling ports and impose a new dangling order.

    Every port mentioned must currently dangle; each connect pair must have
    one generator-side and one recognizer-side port.
    """
    dangling = set(gate.dangling)
    new_edges = list(gate.edges)
    used = set()
    for a, b in connect:
        if a not in dangling or b not in dangling or a in used or b in used:
            raise GridFormatError(f"cannot connect {a} and {b}")
        used.update((a, b))
        if a[0] == "rec" and b[0] == "gen":
            a, b = b, a
        if a[0] != "gen" or b[0] != "rec":
            raise GridFormatError(f"connection needs one gen and one rec port")
        new_edges.append((a[1], a[2], b[1], b[2]))
    remaining = [p for p in gate.dangling if p not in used]
    if sorted(map(tuple, list(leading) + list(trailing))) != sorted(map(tuple, remaining)):
        raise GridFormatError("leading/trailing must cover the remaining dangling ports")
    return SignatureGrid(gate.generators, gate.recognizers, new_edges, leading, trailing)


def join_gates(left: SignatureGrid, right: SignatureGrid) -> SignatureGrid:
    """Series composition: left's trailing ports merge with right's leading."""
    if len(left.trailing) != len(right.leading):
        raise GridFormatError(
            f"cannot join: {len(left.trailing)} trailing vs {len(right.leading)} leading"
        )
    combined, offsets = combine_gates([left, right])
    lo, ro = offsets[1]
    left_trail = [_shift_port(p, *offsets[0]) for p in left.trailing]
    right_lead = [_shift_port(p, lo, ro) for p in right.leading]
    return rewire(
        combined,
        list(zip(left_trail, right_lead)),
        [_shift_port(p, *offsets[0]) for p in left.leading],
        [_shift_port(p, lo, ro) for p in right.trailing],
    )


def parallel_gates(top: SignatureGrid, bottom: SignatureGrid) -> SignatureGrid:
    """Parallel composition; the first gate supplies the high-order bits."""
    combined, _ = combine_gates([top, bottom])
    return combined


def splice_unary_gates(
    grid: SignatureGrid, target: Signature, gate: SignatureGrid
) -> SignatureGrid:
    """Replace every unary generator equal to ``target`` by a copy of ``gate``.

    The gate must expose exactly one dangling generator-side port, which is
    attached to the recognizer slot the unary generator occupied.
    """
    if len(gate.dangling) != 1 or gate.dangling[0][0] != "gen":
        raise GridFormatError("spliced gate needs exactly one generator-side port")
    victims = [
        g
        for g, sig in enumerate(grid.generators)
        if sig.arity == 1 and sig == target
    ]
    keep = [g for g in range(len(grid.generators)) if g not in victims]
    remap = {g: i for i, g in enumerate(keep)}
    gens = [grid.generators[g] for g in keep]
    recs = list(grid.recognizers)
    edges = []
    open_slots = []  # recognizer slots freed by removed unary generators
    victim_set = set(victims)
    victim_slot = {}
    for g, gs, r, rs in grid.edges:
        if g in victim_set:
            victim_slot[g] = (r, rs)
        else:
            edges.append((remap[g], gs, r, rs))
    cur_gens, cur_recs, cur_edges = gens, recs, edges
    for g in victims:
        r, rs = victim_slot[g]
        go, ro = len(cur_gens), len(cur_recs)
        cur_gens = cur_gens + list(gate.generators)
        cur_recs = cur_recs + list(gate.recognizers)
        cur_edges = cur_edges + [
            (gg + go, gs, rr + ro, rrs) for gg, gs, rr, rrs in gate.edges
        ]
        side, v, k = gate.dangling[0]
        cur_edges.append((v + go, k, r, rs))
    return SignatureGrid(cur_gens, cur_recs, cur_edges)


def dumps_grid(grid: SignatureGrid) -> str:
    return json.dumps(grid.to_json(), indent=2, sort_keys=True)


def dumps_graph(graph: DirectedMultiGraph) -> str:
    return json.dumps(graph.to_json(), indent=2, sort_keys=True)
