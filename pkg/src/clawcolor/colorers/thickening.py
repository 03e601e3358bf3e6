"""Thickenings: blow each base vertex up into a clique, optionally thinning matched edges."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ContractError
from ..graph import Graph, iter_bits

FAMILIES = ("icosahedral-G0", "icosahedral-G1", "icosahedral-G2", "antihat", "generic", "strip-internal")


@dataclass(frozen=True)
class ThickeningSpec:
    """A base graph, clique sizes per base vertex and fuzzy patterns on matched edges.

    ``fuzzy`` maps a base edge ``(u, v)`` with ``u < v`` to the set of removed
    local pairs ``(i, j)``, meaning the i-th copy of ``u`` and the j-th copy of
    ``v`` become nonadjacent. Each pattern must be a nonempty proper subset of
    all pairs, and the fuzzy edges must form a matching.
    """

    base: Graph
    multiplicity: tuple[int, ...]
    fuzzy: dict = field(default_factory=dict, hash=False)
    family: str = "generic"
    names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "multiplicity", tuple(int(m) for m in self.multiplicity))
        fz = {}
        for (u, v), pat in self.fuzzy.items():
            if u > v:
                u, v = v, u
                pat = {(j, i) for i, j in pat}
            fz[(u, v)] = frozenset((int(i), int(j)) for i, j in pat)
        object.__setattr__(self, "fuzzy", fz)
        if not self.names:
            object.__setattr__(self, "names", tuple(f"v{i}" for i in range(self.base.n)))
        self.check()

    def check(self) -> None:
        g = self.base
        if len(self.multiplicity) != g.n or len(self.names) != g.n:
            raise ContractError("thickening: one multiplicity and one name per base vertex")
        if any(m < 1 for m in self.multiplicity):
            raise ContractError("thickening: multiplicities must be positive")
        if self.family not in FAMILIES:
            raise ContractError(f"thickening: unknown family {self.family!r}")
        touched = set()
        for (u, v), pat in self.fuzzy.items():
            if not g.has_edge(u, v):
                raise ContractError(f"thickening: fuzzy pair ({u}, {v}) is not a base edge")
            if u in touched or v in touched:
                raise ContractError("thickening: fuzzy edges must form a matching")
            touched.update((u, v))
            mu, mv = self.multiplicity[u], self.multiplicity[v]
            if not pat or len(pat) >= mu * mv:
                raise ContractError(f"thickening: pattern on ({u}, {v}) must be a nonempty proper subset")
            if any(not (0 <= i < mu and 0 <= j < mv) for i, j in pat):
                raise ContractError(f"thickening: pattern on ({u}, {v}) out of range")

    def offsets(self) -> list[int]:
        out, acc = [], 0
        for m in self.multiplicity:
            out.append(acc)
            acc += m
        return out

    def classes(self) -> list[int]:
        """I(v) for every base vertex, as bitsets of the realized graph."""
        return [((1 << m) - 1) << off for off, m in zip(self.offsets(), self.multiplicity)]

    def class_of(self, name: str) -> int:
        return self.classes()[self.names.index(name)]

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.base.n,
            "edges": [list(e) for e in self.base.edges()],
            "names": list(self.names),
            "multiplicity": list(self.multiplicity),
            "fuzzy": [{"pair": [u, v], "removed": sorted(list(p) for p in pat)}
                      for (u, v), pat in sorted(self.fuzzy.items())],
        }

    @classmethod
    def from_json(cls, d: dict) -> "ThickeningSpec":
        base = Graph.from_edges(d["n"], [tuple(e) for e in d["edges"]])
        fuzzy = {tuple(f["pair"]): {tuple(p) for p in f["removed"]} for f in d["fuzzy"]}
        return cls(base, tuple(d["multiplicity"]), fuzzy, d["family"], tuple(d["names"]))


def realize(spec: ThickeningSpec) -> tuple[Graph, list[int]]:
    """The thickened graph and, for each of its vertices, the owning base vertex."""
    offs = spec.offsets()
    owner = [u for u, m in enumerate(spec.multiplicity) for _ in range(m)]
    classes = spec.classes()
    n = len(owner)
    adj = [0] * n
    for u in range(spec.base.n):
        for x in iter_bits(classes[u]):
            adj[x] |= classes[u] & ~(1 << x)
    for u, v in spec.base.edges():
        pat = spec.fuzzy.get((u, v), ())
        for x in iter_bits(classes[u]):
            adj[x] |= classes[v]
        for y in iter_bits(classes[v]):
            adj[y] |= classes[u]
        for i, j in pat:
            x, y = offs[u] + i, offs[v] + j
            adj[x] &= ~(1 << y)
            adj[y] &= ~(1 << x)
    return Graph(n, adj), owner
