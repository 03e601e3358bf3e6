"""Graph representation, colorings and DIMACS serialization.

Vertex sets are Python ints used as bitsets: bit ``v`` is set iff vertex ``v``
is a member. Public functions that take vertex sets also accept any iterable
of vertex indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Sequence

from .errors import ContractError, ParseError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the members of a bitset in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    """Index of the lowest set bit (mask must be nonzero)."""
    return (mask & -mask).bit_length() - 1


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the open neighbourhood of ``v`` as a bitset.
    """

    __slots__ = ("n", "adj", "_m", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or len(adj) != n:
            raise ContractError("adjacency length must equal n")
        adj = tuple(int(a) for a in adj)
        full = (1 << n) - 1
        deg_sum = 0
        for v, a in enumerate(adj):
            if a & ~full:
                raise ContractError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if a >> v & 1:
                raise ContractError(f"loop at vertex {v}")
            for u in iter_bits(a):
                if not adj[u] >> v & 1:
                    raise ContractError(f"asymmetric adjacency between {v} and {u}")
            deg_sum += a.bit_count()
        self.n = n
        self.adj = adj
        self._m = deg_sum // 2
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ContractError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def m(self) -> int:
        return self._m

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits_list(self.adj[v])

    def closed(self, v: int) -> int:
        """Closed neighbourhood of ``v`` as a bitset."""
        return self.adj[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs ``(u, v)`` with ``u < v``."""
        out = []
        for u, a in enumerate(self.adj):
            for v in iter_bits(a >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def is_clique(self, s: int | Iterable[int]) -> bool:
        s = to_mask(s)
        for v in iter_bits(s):
            if (s & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_stable(self, s: int | Iterable[int]) -> bool:
        s = to_mask(s)
        return all(not (self.adj[v] & s) for v in iter_bits(s))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, [full & ~a & ~(1 << v) for v, a in enumerate(g.adj)])


def induced(g: Graph, s: int | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``s``; vertices keep their relative order.

    Returns the subgraph and the old-to-new index map.
    """
    members = bits_list(to_mask(s))
    index = {old: new for new, old in enumerate(members)}
    adj = []
    for old in members:
        a = 0
        for u in iter_bits(g.adj[old] & to_mask(members)):
            a |= 1 << index[u]
        adj.append(a)
    return Graph(len(members), adj), index


def remove_vertices(g: Graph, s: int | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    return induced(g, g.full & ~to_mask(s))


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return frozenset(iter_bits(g.closed(v)))


def remove_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = list(g.adj)
    for u, v in edges:
        if not adj[u] >> v & 1:
            raise ContractError(f"({u}, {v}) is not an edge")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, adj)


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = list(g.adj)
    for u, v in edges:
        if u == v:
            raise ContractError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(g.n, adj)


@dataclass(frozen=True)
class Coloring:
    """Total map from vertices to non-negative color indices."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 0 for c in self.colors):
            raise ContractError("color indices must be non-negative")

    @property
    def k(self) -> int:
        return len(set(self.colors))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def classes(self) -> dict[int, int]:
        """Color -> bitset of its color class."""
        out: dict[int, int] = {}
        for v, c in enumerate(self.colors):
            out[c] = out.get(c, 0) | (1 << v)
        return out

    def normalized(self) -> "Coloring":
        """Relabel colors 0..k-1 in order of first appearance."""
        relabel: dict[int, int] = {}
        return Coloring(tuple(relabel.setdefault(c, len(relabel)) for c in self.colors))


def check_coloring(g: Graph, c: Coloring | Sequence[int]) -> tuple[bool, tuple[int, int] | None]:
    """Return ``(True, None)`` if proper, else ``(False, first violating edge)``."""
    colors = c.colors if isinstance(c, Coloring) else tuple(c)
    if len(colors) != g.n:
        raise ContractError(f"coloring has {len(colors)} entries for {g.n} vertices")
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return False, (u, v)
    return True, None


def parse_dimacs(text: str | IO[str]) -> Graph:
    """Parse DIMACS ``.col`` text (1-based ``e u v`` lines)."""
    lines = text.splitlines() if isinstance(text, str) else text.read().splitlines()
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                n, _ = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if n < 0:
                raise ParseError("negative vertex count", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"malformed edge line {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"loop at vertex {u}", lineno)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    return Graph.from_edges(n, sorted(edges))


def emit_dimacs(g: Graph) -> str:
    edges = g.edges()
    out = [f"p edge {g.n} {len(edges)}"]
    out.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(out) + "\n"
