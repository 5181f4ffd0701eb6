"""Core combinatorial types for quivers and vertex-indexed integer vectors.

Conventions (used consistently across the package and documented in the
README):

* Euler form: ``<e, f> = sum_i e_i f_i - sum_a e_{source(a)} f_{target(a)}``,
  the bilinear form of the path algebra of an acyclic quiver.
* Slope: ``mu(e) = theta(e) / sum_i e_i`` for a nonzero dimension vector,
  computed in exact rational arithmetic.
* Canonical stability: ``theta_can(e) = <d, e> - <e, d>``; it always pairs to
  zero with ``d``.

All types are immutable values; all operations are pure functions and safe to
share across threads. All arithmetic is exact (Python integers / fractions):
stability decisions are sign decisions and must never suffer rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    CyclicQuiverError,
    DivisibleDimensionVectorError,
    UnknownVertexError,
    VertexSetMismatchError,
)

Arrow = tuple[str, str]


@dataclass(frozen=True)
class Quiver:
    """A finite directed multigraph with ordered vertices.

    ``vertices`` fixes a total order used for every matrix indexing and for
    lexicographic enumerations, so all reports are deterministic.  Parallel
    arrows are distinct first-class objects, identified by their index in
    ``arrows``.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __init__(self, vertices: Iterable[str], arrows: Iterable[tuple[str, str]]):
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "arrows", tuple((s, t) for s, t in arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex identifiers")
        declared = set(self.vertices)
        for k, (s, t) in enumerate(self.arrows):
            if s not in declared or t not in declared:
                raise UnknownVertexError(f"arrow #{k} ({s} -> {t}) uses an undeclared vertex")

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def arrow_indices(self) -> tuple[tuple[int, int], ...]:
        """Arrows as (source index, target index) pairs in vertex order."""
        idx = self._index
        return tuple((idx[s], idx[t]) for s, t in self.arrows)

    def vertex_index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    def source(self, arrow: int) -> str:
        return self.arrows[arrow][0]

    def target(self, arrow: int) -> str:
        return self.arrows[arrow][1]

    @cached_property
    def adjacency_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Arrow-count matrix A with A[i][j] = number of arrows i -> j."""
        n = len(self.vertices)
        rows = [[0] * n for _ in range(n)]
        for s, t in self.arrow_indices:
            rows[s][t] += 1
        return tuple(tuple(r) for r in rows)

    def arrows_into(self, v: str) -> tuple[int, ...]:
        return tuple(k for k, (_, t) in enumerate(self.arrows) if t == v)

    def arrows_out_of(self, v: str) -> tuple[int, ...]:
        return tuple(k for k, (s, _) in enumerate(self.arrows) if s == v)


class VertexVector:
    """An integer-valued function on a vertex set, stored canonically.

    Base class of :class:`DimensionVector`, :class:`StabilityParameter` and
    :class:`Character`; equality and ordering helpers require matching vertex
    sets and matching concrete type.
    """

    __slots__ = ("_entries",)

    def __init__(self, values: Mapping[str, int] | Iterable[tuple[str, int]]):
        items = dict(values).items()
        entries = tuple(sorted((str(v), int(c)) for v, c in items))
        object.__setattr__(self, "_entries", entries)
        self._validate()

    def _validate(self) -> None:  # overridden by subclasses
        pass

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def entries(self) -> tuple[tuple[str, int], ...]:
        return self._entries

    def as_dict(self) -> dict[str, int]:
        return dict(self._entries)

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(v for v, _ in self._entries)

    def __getitem__(self, vertex: str) -> int:
        for v, c in self._entries:
            if v == vertex:
                return c
        raise UnknownVertexError(f"unknown vertex {vertex!r}")

    def aligned(self, vertices: tuple[str, ...]) -> tuple[int, ...]:
        """Values as a tuple in the given vertex order (must match the set)."""
        d = dict(self._entries)
        if set(vertices) != set(d):
            raise VertexSetMismatchError(
                f"vector defined on {sorted(d)} but expected vertex set {sorted(vertices)}"
            )
        return tuple(d[v] for v in vertices)

    def total(self) -> int:
        return sum(c for _, c in self._entries)

    def is_zero(self) -> bool:
        return all(c == 0 for _, c in self._entries)

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._entries))

    def __repr__(self) -> str:
        body = ", ".join(f"{v}: {c}" for v, c in self._entries)
        return f"{type(self).__name__}({{{body}}})"


class DimensionVector(VertexVector):
    """A nonnegative integer for every vertex."""

    __slots__ = ()

    def _validate(self) -> None:
        for v, c in self.entries:
            if c < 0:
                raise ValueError(f"dimension vector entry at {v!r} is negative")

    def _comparable(self, other: "DimensionVector") -> None:
        if self.vertex_set != other.vertex_set:
            raise VertexSetMismatchError("dimension vectors on different vertex sets")

    def __le__(self, other: "DimensionVector") -> bool:
        self._comparable(other)
        theirs = other.as_dict()
        return all(c <= theirs[v] for v, c in self.entries)

    def __sub__(self, other: "DimensionVector") -> "DimensionVector":
        self._comparable(other)
        theirs = other.as_dict()
        return DimensionVector({v: c - theirs[v] for v, c in self.entries})

    def __add__(self, other: "DimensionVector") -> "DimensionVector":
        self._comparable(other)
        theirs = other.as_dict()
        return DimensionVector({v: c + theirs[v] for v, c in self.entries})

    def is_thin(self) -> bool:
        return all(c == 1 for _, c in self.entries)

    def is_indivisible(self) -> bool:
        """True when the gcd of the entries is 1."""
        import math

        g = 0
        for _, c in self.entries:
            g = math.gcd(g, c)
        return g == 1


class _PairingVector(VertexVector):
    __slots__ = ()

    def __call__(self, d: VertexVector) -> int:
        """Pair with a vector on the same vertex set: sum of products."""
        if self.vertex_set != d.vertex_set:
            raise VertexSetMismatchError("pairing of vectors on different vertex sets")
        theirs = d.as_dict()
        return sum(c * theirs[v] for v, c in self.entries)


class StabilityParameter(_PairingVector):
    """An integer weight for every vertex; paired with a designated dimension
    vector ``d`` it must satisfy ``theta(d) = 0`` before any stability query.
    """

    __slots__ = ()


class Character(_PairingVector):
    """An integer covector normalized against a designated dimension vector
    ``d`` by ``a(d) = 1``.
    """

    __slots__ = ()


@dataclass(frozen=True)
class AcyclicityCertificate:
    """Outcome of the acyclicity test, with evidence either way.

    Exactly one of ``topological_order`` (vertices, sources first) and
    ``cycle`` (arrow indices whose composition is a directed cycle) is set.
    """

    acyclic: bool
    topological_order: tuple[str, ...] | None = None
    cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.acyclic


@dataclass(frozen=True)
class PathCountMatrix:
    """The matrix p with p(i, j) = number of directed paths from i to j.

    For an acyclic quiver this is the dimension of the space of paths from i
    to j inside the path algebra; p(i, i) = 1 (the trivial path) and p
    satisfies p(i, j) = delta_ij + sum over arrows a with target j of
    p(i, source(a)).
    """

    vertices: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]
    _index: dict[str, int] = field(repr=False, hash=False, compare=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "_index", {v: k for k, v in enumerate(self.vertices)})

    def count(self, i: str, j: str) -> int:
        try:
            return self.entries[self._index[i]][self._index[j]]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex in pair ({i!r}, {j!r})") from None

    def __getitem__(self, pair: tuple[str, str]) -> int:
        return self.count(*pair)

    def total(self) -> int:
        return sum(sum(row) for row in self.entries)


@dataclass(frozen=True)
class Path:
    """A directed path: a source vertex and a composable arrow-index sequence.

    The empty sequence is the trivial path at ``source``.  Arrows compose left
    to right: ``arrows[0]`` starts at ``source``.
    """

    source: str
    arrows: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)

    def target(self, q: Quiver) -> str:
        at = self.source
        for k in self.arrows:
            s, t = q.arrows[k]
            if s != at:
                raise ValueError(f"path not composable at arrow #{k}: at {at!r}, arrow starts {s!r}")
            at = t
        return at


def is_acyclic(q: Quiver) -> AcyclicityCertificate:
    """Decide acyclicity, returning a topological order or a cycle witness.

    Kahn's algorithm produces the order; on failure a directed cycle inside
    the leftover subgraph is extracted by walking arrows (smallest arrow index
    first) until a vertex repeats.
    """
    n = len(q.vertices)
    indeg = [0] * n
    out: list[list[tuple[int, int]]] = [[] for _ in range(n)]  # (target, arrow index)
    for k, (s, t) in enumerate(q.arrow_indices):
        indeg[t] += 1
        out[s].append((t, k))
    queue = [v for v in range(n) if indeg[v] == 0]
    order: list[int] = []
    indeg = list(indeg)
    while queue:
        v = queue.pop(0)
        order.append(v)
        for t, _ in out[v]:
            indeg[t] -= 1
            if indeg[t] == 0:
                queue.append(t)
    if len(order) == n:
        return AcyclicityCertificate(True, topological_order=tuple(q.vertices[v] for v in order))

    # Every leftover vertex keeps an incoming arrow from another leftover
    # vertex (its residual in-degree is positive), so walking those arrows
    # backwards must revisit a vertex; the revisited stretch is a cycle.
    remaining = {v for v in range(n) if indeg[v] > 0}
    incoming: dict[int, tuple[int, int]] = {}
    for k, (s, t) in enumerate(q.arrow_indices):
        if s in remaining and t in remaining and t not in incoming:
            incoming[t] = (s, k)
    seen: dict[int, int] = {}
    walk: list[int] = []  # arrow indices, traversed target-to-source
    at = min(remaining)
    while at not in seen:
        seen[at] = len(walk)
        s, k = incoming[at]
        walk.append(k)
        at = s
    cycle = tuple(reversed(walk[seen[at]:]))
    return AcyclicityCertificate(False, cycle=cycle)


def connected_components(q: Quiver) -> tuple[frozenset[str], ...]:
    """Connected components of the underlying undirected graph."""
    n = len(q.vertices)
    neighbors: list[set[int]] = [set() for _ in range(n)]
    for s, t in q.arrow_indices:
        neighbors[s].add(t)
        neighbors[t].add(s)
    unvisited = set(range(n))
    components = []
    while unvisited:
        root = min(unvisited)
        stack = [root]
        comp = set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(neighbors[v] - comp)
        unvisited -= comp
        components.append(frozenset(q.vertices[v] for v in comp))
    return tuple(components)


def is_connected(q: Quiver) -> bool:
    return len(connected_components(q)) <= 1


def euler_form(q: Quiver, e: VertexVector, f: VertexVector) -> int:
    """The Euler form <e, f> = sum_i e_i f_i - sum_a e_{s(a)} f_{t(a)}.

    Bilinear in each slot.  This is the adopted standard convention for the
    homological Euler form of an acyclic quiver; together with the slope
    ``mu(e) = theta(e)/|e|`` it is the convention under which strong ample
    stability implies ample stability.
    """
    ev = e.aligned(q.vertices)
    fv = f.aligned(q.vertices)
    value = sum(a * b for a, b in zip(ev, fv))
    for s, t in q.arrow_indices:
        value -= ev[s] * fv[t]
    return value


def slope(theta: StabilityParameter, e: VertexVector) -> Fraction:
    """mu(e) = theta(e) / sum_i e_i, exact; undefined (raises) for total 0."""
    total = e.total()
    if total == 0:
        raise ZeroDivisionError("slope undefined for a vector of total dimension 0")
    return Fraction(theta(e), total)


def path_count_matrix(q: Quiver) -> PathCountMatrix:
    """Count directed paths between all vertex pairs by exact integer recursion.

    Processing targets in topological order gives
    p(i, j) = delta_ij + sum over arrows a with target j of p(i, source(a)),
    which is the entrywise statement that p = (I - A)^{-1} for the arrow-count
    adjacency matrix A.
    """
    cert = is_acyclic(q)
    if not cert:
        raise CyclicQuiverError(f"path counts are infinite on a cyclic quiver (cycle arrows {cert.cycle})")
    n = len(q.vertices)
    idx = {v: k for k, v in enumerate(q.vertices)}
    p = [[0] * n for _ in range(n)]
    for j_name in cert.topological_order or ():
        j = idx[j_name]
        for i in range(n):
            acc = 1 if i == j else 0
            for s, t in q.arrow_indices:
                if t == j:
                    acc += p[i][s]
            p[i][j] = acc
    return PathCountMatrix(q.vertices, tuple(tuple(row) for row in p))


def enumerate_paths(q: Quiver, src: str, dst: str, _cert: AcyclicityCertificate | None = None) -> tuple[Path, ...]:
    """All directed paths src -> dst, sorted by their arrow-index sequences.

    Requires an acyclic quiver (the path set is infinite otherwise).  The
    sort order makes path-indexed bases deterministic.
    """
    cert = _cert if _cert is not None else is_acyclic(q)
    if not cert:
        raise CyclicQuiverError("path enumeration requires an acyclic quiver")
    q.vertex_index(src)
    q.vertex_index(dst)
    found: list[tuple[int, ...]] = []

    def extend(at: str, prefix: tuple[int, ...]) -> None:
        if at == dst:
            found.append(prefix)
        for k in q.arrows_out_of(at):
            extend(q.arrows[k][1], prefix + (k,))

    extend(src, ())
    return tuple(Path(src, arrows) for arrows in sorted(found))


def canonical_stability(q: Quiver, d: DimensionVector) -> StabilityParameter:
    """The canonical stability parameter theta_can(e) = <d, e> - <e, d>.

    Always pairs to zero with ``d``.  The formula is the adopted standard
    convention; it reproduces (2, 1, -3) on the three-vertex running example.
    """
    dv = d.aligned(q.vertices)
    n = len(q.vertices)
    # The symmetric sums cancel; only the arrow terms survive.
    coeffs = [0] * n
    for s, t in q.arrow_indices:
        coeffs[t] -= dv[s]
        coeffs[s] += dv[t]
    return StabilityParameter({q.vertices[i]: coeffs[i] for i in range(n)})


def weight_one_character(d: DimensionVector) -> Character:
    """A covector a with a(d) = 1, by a deterministic extended-gcd sweep.

    Entries are folded in vertex-name order; once the running gcd reaches 1
    all later coefficients are 0, so d = (1, 1, 1) yields the first unit
    covector.  Raises when gcd(d) > 1 (no weight-one character exists, i.e.
    the dimension vector is divisible).
    """
    if d.is_zero():
        raise ValueError("weight-one character undefined for the zero dimension vector")

    def egcd(a: int, b: int) -> tuple[int, int, int]:
        if b == 0:
            return a, 1, 0
        g, x, y = egcd(b, a % b)
        return g, y, x - (a // b) * y

    g = 0
    coeffs: list[int] = []
    for _, c in d.entries:
        if g == 1:
            coeffs.append(0)
            continue
        g2, x, y = egcd(g, c)
        coeffs = [cf * x for cf in coeffs]
        coeffs.append(y)
        g = g2
    if g != 1:
        raise DivisibleDimensionVectorError(f"dimension vector is divisible (gcd {g})")
    return Character({v: coeffs[k] for k, (v, _) in enumerate(d.entries)})
