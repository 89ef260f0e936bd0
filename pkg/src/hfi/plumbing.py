"""Plumbing trees: intersection forms, rationality, and almost-rationality.

A plumbing graph is a finite weighted tree; its intersection form has the
vertex weights on the diagonal and 1 for each edge.  Rationality is decided
by Laufer's computation sequence for the minimal cycle (the fundamental
cycle Z_min satisfies chi(Z_min) = 1 exactly for rational graphs), and the
almost-rational check lowers one vertex weight at a time within a bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class PlumbingGraph:
    vertices: tuple[tuple[str, int], ...]  # (id, weight)
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        ids = [v for v, _ in self.vertices]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate vertex ids")
        idx = {v: i for i, v in enumerate(ids)}
        for a, b in self.edges:
            if a not in idx or b not in idx:
                raise ValueError(f"edge ({a}, {b}) references unknown vertex")
            if a == b:
                raise ValueError("self-loops are not allowed")
        n = len(ids)
        if len(self.edges) != n - 1:
            raise ValueError("a plumbing tree on n vertices needs n-1 edges")
        # connectivity
        seen = {ids[0]} if ids else set()
        frontier = list(seen)
        adj: dict[str, list[str]] = {v: [] for v in ids}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        if len(seen) != n:
            raise ValueError("plumbing graph is not connected")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def ids(self) -> list[str]:
        return [v for v, _ in self.vertices]

    def weights(self) -> list[int]:
        return [w for _, w in self.vertices]

    def adjacency(self) -> list[list[int]]:
        idx = {v: i for i, (v, _) in enumerate(self.vertices)}
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[idx[a]].append(idx[b])
            adj[idx[b]].append(idx[a])
        return adj

    def reweighted(self, vertex_id: str, new_weight: int) -> "PlumbingGraph":
        verts = tuple((v, new_weight if v == vertex_id else w)
                      for v, w in self.vertices)
        return PlumbingGraph(verts, self.edges)


def intersection_form(g: PlumbingGraph) -> list[list[int]]:
    n = g.n
    idx = {v: i for i, (v, _) in enumerate(g.vertices)}
    m = [[0] * n for _ in range(n)]
    for i, (_, w) in enumerate(g.vertices):
        m[i][i] = w
    for a, b in g.edges:
        m[idx[a]][idx[b]] = 1
        m[idx[b]][idx[a]] = 1
    return m


def canonical_K(g: PlumbingGraph) -> list[int]:
    """Values K(v) = -m(v) - 2 of the canonical characteristic element."""
    return [-w - 2 for w in g.weights()]


def _leading_minor_dets(m: list[list[int]]) -> list[Fraction]:
    """Exact determinants of all leading principal minors (fraction-free)."""
    n = len(m)
    dets = []
    for k in range(1, n + 1):
        a = [[Fraction(m[i][j]) for j in range(k)] for i in range(k)]
        det = Fraction(1)
        sign = 1
        for col in range(k):
            piv = next((r for r in range(col, k) if a[r][col] != 0), None)
            if piv is None:
                det = Fraction(0)
                break
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                sign = -sign
            det *= a[col][col]
            for r in range(col + 1, k):
                f = a[r][col] / a[col][col]
                for c in range(col, k):
                    a[r][c] -= f * a[col][c]
        dets.append(sign * det)
    return dets


def is_negative_definite(g: PlumbingGraph) -> bool:
    """Exact test: leading principal minors alternate in sign, starting negative."""
    dets = _leading_minor_dets(intersection_form(g))
    return all(d != 0 and (d > 0) == (k % 2 == 1)
               for k, d in enumerate(dets))


def chi(g: PlumbingGraph, x: list[int]) -> Fraction:
    """chi(x) = -( <x, x> + <K, x> ) / 2."""
    m = intersection_form(g)
    K = canonical_K(g)
    xx = sum(x[i] * m[i][j] * x[j] for i in range(g.n) for j in range(g.n))
    kx = sum(K[i] * x[i] for i in range(g.n))
    return Fraction(-(xx + kx), 2)


def minimal_cycle(g: PlumbingGraph) -> list[int]:
    """Laufer's computation sequence for the fundamental (minimal) cycle.

    Start from the sum of all basis vectors; while some vertex pairs
    positively with the cycle, add that vertex.  Requires negative
    definiteness (guaranteed termination).
    """
    if not is_negative_definite(g):
        raise ValueError("plumbing graph is not negative definite")
    weights = g.weights()
    adj = g.adjacency()
    x = [1] * g.n
    # pairing[v] = <x, E_v>
    pairing = [weights[v] + len(adj[v]) for v in range(g.n)]
    stack = [v for v in range(g.n) if pairing[v] > 0]
    while stack:
        v = stack.pop()
        if pairing[v] <= 0:
            continue
        x[v] += 1
        pairing[v] += weights[v]
        for w in adj[v]:
            pairing[w] += 1
            if pairing[w] > 0:
                stack.append(w)
        if pairing[v] > 0:
            stack.append(v)
    return x


def is_rational(g: PlumbingGraph) -> bool:
    """Artin's criterion via Laufer: rational iff chi(minimal cycle) = 1."""
    return chi(g, minimal_cycle(g)) == 1


@dataclass(frozen=True)
class ARVerdict:
    verdict: str  # "yes" or "inconclusive"
    witness: tuple[str, int] | None  # (vertex id, lowered weight) when "yes"
    bound: int

    def __str__(self) -> str:
        if self.verdict == "yes":
            v, w = self.witness
            return f"almost rational (vertex {v} at weight {w} is rational)"
        return f"inconclusive within {self.bound} decrements per vertex"


def is_almost_rational(g: PlumbingGraph, bound: int = 64) -> ARVerdict:
    """Search for a single-vertex weight decrease that makes the graph rational.

    A rational graph is almost rational as-is.  The search is bounded; at the
    bound the result is "inconclusive" rather than a guess.
    """
    if not is_negative_definite(g):
        raise ValueError("plumbing graph is not negative definite")
    if is_rational(g):
        vid, w = g.vertices[0]
        return ARVerdict("yes", (vid, w), bound)
    for vid, w in g.vertices:
        for dec in range(1, bound + 1):
            if is_rational(g.reweighted(vid, w - dec)):
                return ARVerdict("yes", (vid, w - dec), bound)
    return ARVerdict("inconclusive", None, bound)


def k_squared(g: PlumbingGraph) -> Fraction:
    """<K, K> computed exactly: solve M x = K and return K . x."""
    m = intersection_form(g)
    K = canonical_K(g)
    n = g.n
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(K[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * p for v, p in zip(a[r], a[col])]
    x = [a[i][n] for i in range(n)]
    return sum(Fraction(K[i]) * x[i] for i in range(n))


# ---------------------------------------------------------------------------
# plumbing graph file format: lines "vertex <id> <weight>" / "edge <id> <id>"


def graph_from_text(text: str) -> PlumbingGraph:
    verts: list[tuple[str, int]] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex" and len(parts) == 3:
            verts.append((parts[1], int(parts[2])))
        elif parts[0] == "edge" and len(parts) == 3:
            edges.append((parts[1], parts[2]))
        else:
            raise ValueError(f"line {lineno}: expected 'vertex <id> <weight>' or "
                             f"'edge <id> <id>', got {raw!r}")
    return PlumbingGraph(tuple(verts), tuple(edges))


def graph_to_text(g: PlumbingGraph) -> str:
    lines = [f"vertex {v} {w}" for v, w in g.vertices]
    lines += [f"edge {a} {b}" for a, b in g.edges]
    return "\n".join(lines) + "\n"
