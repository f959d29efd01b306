"""Marked floor diagrams for the plane and for Hirzebruch surfaces.

A degree datum is a balanced, h-transverse collection of integer vectors:
every vector is (0, +-1) or has horizontal component +-1, and the collection
sums to zero.  Only three derived quantities matter combinatorially:

* ``d_b`` / ``d_t`` -- the numbers of (0,-1) / (0,1) vectors, i.e. of bottom
  incoming / top outgoing unbounded edges;
* the height ``h`` -- the common cardinality of the left and right vector
  subsets, i.e. the number of floors (vertices);
* the multiset of per-floor divergences, where the divergence of a floor is
  (sum of incoming edge weights) - (sum of outgoing edge weights).

The two families of interest are ``degree_p2(d)`` (d copies each of (-1,0),
(0,-1), (1,1); every divergence 1) and ``degree_hirzebruch(k, h, d)``
(d + k*h copies of (0,-1), d of (0,1), h of (-1,0), h of (1,k); every
divergence k).

A *marked* floor diagram on n points is a connected weighted acyclic digraph
together with an order-preserving bijection of its h vertices and n - h
edges onto the positions 1..n; marking rigidifies the diagram, so
isomorphism classes are exactly the distinct position-labelled structures.
``enumerate_marked`` produces one representative per class by a left-to-right
sweep over positions, branching at each position over the element placed
there; see its docstring for the exact branching order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .algebra import LaurentPolyS, Partition, lp_eval_at_one, q_integer


class DiagramError(ValueError):
    """Invalid degree data or invalid request."""


class InvalidDiagram(DiagramError):
    """A structure violating the marked-floor-diagram invariants."""


class HTransverseDegree:
    """Degree datum: the balanced h-transverse vector collection.

    Exposes the derived quantities ``d_b``, ``d_t``, ``height``, ``size``
    (= d_b + d_t + 2*height) and the sorted divergence multiset.  Build
    instances through :func:`degree_p2`, :func:`degree_hirzebruch` or
    :func:`general_degree`.
    """

    __slots__ = ("family", "params", "vectors", "d_b", "d_t", "height", "divergences")

    def __init__(self, family: str, params: tuple, vectors: tuple):
        vectors = tuple((int(x), int(y)) for x, y in vectors)
        sx = sum(v[0] for v in vectors)
        sy = sum(v[1] for v in vectors)
        if (sx, sy) != (0, 0):
            raise DiagramError(f"vector collection is not balanced: sums to {(sx, sy)}")
        for v in vectors:
            if v == (0, 0):
                raise DiagramError("zero vector is not allowed")
            if v[0] not in (-1, 0, 1) or (v[0] == 0 and v[1] not in (-1, 1)):
                raise DiagramError(f"vector {v} is not h-transverse")
        left = sorted(v[1] for v in vectors if v[0] == -1)
        right = sorted(v[1] for v in vectors if v[0] == 1)
        if len(left) != len(right):
            raise DiagramError("left and right vector counts differ")
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "vectors", vectors)
        object.__setattr__(self, "d_b", sum(1 for v in vectors if v == (0, -1)))
        object.__setattr__(self, "d_t", sum(1 for v in vectors if v == (0, 1)))
        object.__setattr__(self, "height", len(left))
        # Divergence multiset from the canonical sorted pairing of left and
        # right vectors.  For the named families all left vectors (and all
        # right vectors) coincide, so the pairing is immaterial; for general
        # collections this is a documented convention.
        object.__setattr__(
            self, "divergences", tuple(sorted(l + r for l, r in zip(left, right)))
        )

    def __setattr__(self, name, value):
        raise AttributeError("HTransverseDegree is immutable")

    @property
    def size(self) -> int:
        return self.d_b + self.d_t + 2 * self.height

    def genus_for_points(self, n: int) -> int:
        return n + 1 - self.size

    def max_bounded_weight(self) -> int:
        """Flow bound on bounded edge weights: d_b plus total negative divergence."""
        return self.d_b + sum(max(-d, 0) for d in self.divergences)

    @property
    def label(self) -> str:
        if self.family == "p2":
            return f"P2(d={self.params[0]})"
        if self.family == "hirzebruch":
            k, h, d = self.params
            return f"F{k}(h={h},d={d})"
        return f"general{self.vectors}"

    def __eq__(self, other) -> bool:
        return isinstance(other, HTransverseDegree) and sorted(self.vectors) == sorted(
            other.vectors
        )

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.vectors)))

    def __repr__(self) -> str:
        return f"HTransverseDegree<{self.label}>"

    def to_json(self) -> dict:
        out: dict = {"family": self.family}
        if self.family == "p2":
            out["degree"] = self.params[0]
        elif self.family == "hirzebruch":
            out["k"], out["h"], out["d"] = self.params
        else:
            out["vectors"] = [list(v) for v in self.vectors]
        out["d_b"] = self.d_b
        out["d_t"] = self.d_t
        out["height"] = self.height
        return out


def degree_p2(d: int) -> HTransverseDegree:
    """Degree-d curves in the plane: d_b = d, d_t = 0, height = d."""
    if d <= 0:
        raise DiagramError(f"plane degree must be positive, got {d}")
    vectors = [(-1, 0)] * d + [(0, -1)] * d + [(1, 1)] * d
    return HTransverseDegree("p2", (d,), tuple(vectors))


def degree_hirzebruch(k: int, h: int, d: int) -> HTransverseDegree:
    """Class h*D_k + d*F on the Hirzebruch surface F_k.

    Requires k >= 0, h >= 0, d >= 0, d + k*h >= 0 and h + d >= 1.  Derived:
    d_b = d + k*h, d_t = d, height = h, every divergence = k.
    """
    if k < 0 or h < 0 or d < 0:
        raise DiagramError(f"Hirzebruch parameters must be nonnegative, got {(k, h, d)}")
    if d + k * h < 0:
        raise DiagramError("d + k*h must be nonnegative")
    if h + d < 1:
        raise DiagramError("h + d must be at least 1")
    vectors = [(0, -1)] * (d + k * h) + [(0, 1)] * d + [(-1, 0)] * h + [(1, k)] * h
    return HTransverseDegree("hirzebruch", (k, h, d), tuple(vectors))


def general_degree(vectors: Iterable[tuple[int, int]]) -> HTransverseDegree:
    """Any balanced h-transverse collection.

    Refined counts for general collections are an extension beyond the two
    named families: the per-floor data is reduced to divergence values (via
    the canonical sorted pairing of left and right vectors), which is the
    only information the named families carry.
    """
    return HTransverseDegree("general", (), tuple(vectors))


def points_for_genus(delta: HTransverseDegree, g: int) -> int:
    """The point count n with genus(delta, n) = g, i.e. n = g - 1 + |delta|."""
    if g < 0:
        raise DiagramError(f"genus must be nonnegative, got {g}")
    return g - 1 + delta.size


@dataclass(frozen=True)
class Edge:
    """One edge of a marked diagram.

    ``source is None`` marks an incoming unbounded edge, ``target is None``
    an outgoing unbounded one; bounded edges carry both endpoints.  Endpoints
    are marking positions of vertices.
    """

    position: int
    source: int | None
    target: int | None
    weight: int


@dataclass(frozen=True)
class MarkedFloorDiagram:
    """A marked floor diagram, identified with its position-labelled structure."""

    n: int
    vertex_positions: tuple[int, ...]
    divergences: tuple[int, ...]  # aligned with vertex_positions
    edges: tuple[Edge, ...]

    def divergence_at(self, position: int) -> int:
        for p, d in zip(self.vertex_positions, self.divergences):
            if p == position:
                return d
        raise DiagramError(f"position {position} is not a vertex")

    def bounded_edges(self) -> list[Edge]:
        return [e for e in self.edges if e.source is not None and e.target is not None]

    def betti(self) -> int:
        return len(self.bounded_edges()) - len(self.vertex_positions) + 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertices": list(self.vertex_positions),
            "divergences": {str(p): d for p, d in zip(self.vertex_positions, self.divergences)},
            "edges": [
                {
                    "position": e.position,
                    "source": e.source,
                    "target": e.target,
                    "weight": e.weight,
                }
                for e in self.edges
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MarkedFloorDiagram":
        vertices = tuple(int(p) for p in data["vertices"])
        div_map = {int(p): int(d) for p, d in data["divergences"].items()}
        if set(div_map) != set(vertices):
            raise InvalidDiagram("divergence keys do not match the vertex list")
        edges = tuple(
            Edge(
                int(e["position"]),
                None if e["source"] is None else int(e["source"]),
                None if e["target"] is None else int(e["target"]),
                int(e["weight"]),
            )
            for e in data["edges"]
        )
        return cls(int(data["n"]), vertices, tuple(div_map[p] for p in vertices), edges)


def multiplicity(diagram: MarkedFloorDiagram) -> int:
    """Product of squared edge weights over all edges (unbounded ones weigh 1)."""
    m = 1
    for e in diagram.edges:
        m *= e.weight * e.weight
    return m


def refined_multiplicity(diagram: MarkedFloorDiagram) -> LaurentPolyS:
    """Product of squared q-integers of the edge weights; palindromic."""
    m = LaurentPolyS.one()
    for e in diagram.edges:
        if e.weight != 1:
            m = m * (q_integer(e.weight) ** 2)
    return m


def vertex_partitions(diagram: MarkedFloorDiagram, position: int) -> tuple[Partition, Partition]:
    """(mu, nu) at a vertex: weights of outgoing resp. incoming edges."""
    if position not in diagram.vertex_positions:
        raise DiagramError(f"position {position} is not a vertex of the diagram")
    mu = Partition(e.weight for e in diagram.edges if e.source == position)
    nu = Partition(e.weight for e in diagram.edges if e.target == position)
    return mu, nu


def validate_diagram(diagram: MarkedFloorDiagram, delta: HTransverseDegree) -> None:
    """Check every marked-floor-diagram invariant; raise InvalidDiagram on failure.

    Checks: positions partition {1..n}; unbounded edge counts and weights;
    order compatibility of the marking; per-vertex divergence against the
    degree's divergence multiset; connectivity; first Betti number equal to
    n + 1 - |delta| >= 0.
    """
    n = diagram.n
    vset = set(diagram.vertex_positions)
    positions = sorted(list(vset) + [e.position for e in diagram.edges])
    if positions != list(range(1, n + 1)):
        raise InvalidDiagram("positions do not partition 1..n into vertices and edges")
    if len(diagram.vertex_positions) != delta.height:
        raise InvalidDiagram(
            f"expected {delta.height} vertices, found {len(diagram.vertex_positions)}"
        )
    if sorted(diagram.divergences) != list(delta.divergences):
        raise InvalidDiagram("vertex divergences do not match the degree's multiset")

    incoming_unbounded = outgoing_unbounded = 0
    for e in diagram.edges:
        if e.weight < 1:
            raise InvalidDiagram(f"edge at position {e.position} has weight {e.weight}")
        if e.source is None and e.target is None:
            raise InvalidDiagram("edge with no endpoint")
        if e.source is not None and e.source not in vset:
            raise InvalidDiagram(f"edge source {e.source} is not a vertex")
        if e.target is not None and e.target not in vset:
            raise InvalidDiagram(f"edge target {e.target} is not a vertex")
        if e.source is None:
            incoming_unbounded += 1
            if e.weight != 1:
                raise InvalidDiagram("incoming unbounded edge of weight != 1")
            if not e.position < e.target:
                raise InvalidDiagram("incoming unbounded edge not before its target")
        elif e.target is None:
            outgoing_unbounded += 1
            if e.weight != 1:
                raise InvalidDiagram("outgoing unbounded edge of weight != 1")
            if not e.source < e.position:
                raise InvalidDiagram("outgoing unbounded edge not after its source")
        else:
            if not e.source < e.position < e.target:
                raise InvalidDiagram(
                    f"bounded edge at {e.position} violates source < position < target"
                )
    if incoming_unbounded != delta.d_b:
        raise InvalidDiagram(f"expected {delta.d_b} incoming unbounded edges")
    if outgoing_unbounded != delta.d_t:
        raise InvalidDiagram(f"expected {delta.d_t} outgoing unbounded edges")

    for p in diagram.vertex_positions:
        flow = 0
        for e in diagram.edges:
            if e.target == p:
                flow += e.weight
            if e.source == p:
                flow -= e.weight
        if flow != diagram.divergence_at(p):
            raise InvalidDiagram(f"divergence mismatch at vertex {p}")

    bounded = diagram.bounded_edges()
    if vset:
        reached = {diagram.vertex_positions[0]}
        frontier = [diagram.vertex_positions[0]]
        while frontier:
            v = frontier.pop()
            for e in bounded:
                for w in (e.source, e.target):
                    if w not in reached and v in (e.source, e.target):
                        reached.add(w)
                        frontier.append(w)
        if reached != vset:
            raise InvalidDiagram("underlying graph is disconnected")

    g = delta.genus_for_points(n)
    if g < 0:
        raise InvalidDiagram(f"genus {g} is negative")
    if diagram.betti() != g:
        raise InvalidDiagram(f"first Betti number {diagram.betti()} != genus {g}")


def enumerate_marked(delta: HTransverseDegree, n: int) -> list[MarkedFloorDiagram]:
    """All isomorphism classes of marked floor diagrams on n points.

    Sweep enumeration: positions 1..n are processed in increasing order,
    maintaining the placed vertices with their remaining outgoing-weight
    budgets and the multiset of pending edge heads (positioned edges whose
    target vertex comes later).  At each position the branches are, in this
    fixed order:

    * edge roles first -- a new incoming unbounded head (while fewer than
      d_b are used), then a bounded edge for each placed source vertex in
      ascending position and each weight from 1 to that vertex's remaining
      budget, then an outgoing unbounded edge for each placed source vertex
      in ascending position with budget >= 1 (while fewer than d_t are
      used);
    * then a vertex -- for each distinct remaining divergence value in
      ascending order, and for each subset of pending heads (by ascending
      subset size, each size in lexicographic order of head positions),
      attach the subset as incoming edges and open an outgoing budget of
      (attached weight sum) - divergence, pruning negative budgets.

    A completed sweep must use every unbounded edge, attach every head,
    exhaust every budget and yield a connected graph.  Each surviving trace
    is a distinct isomorphism class (markings rigidify), so no deduplication
    is performed; selecting between equal-weight pending heads by position
    produces genuinely distinct marked diagrams.
    """
    from itertools import combinations

    g = delta.genus_for_points(n)
    if g < 0:
        raise DiagramError(
            f"no diagrams: n = {n} gives negative genus {g} for {delta.label}"
        )
    h = delta.height
    if h == 0:
        return []
    d_b, d_t = delta.d_b, delta.d_t
    total_bounded = n - h - d_b - d_t
    if total_bounded != g + h - 1:
        raise AssertionError("element count bookkeeping is inconsistent")

    div_remaining: dict[int, int] = {}
    for d in delta.divergences:
        div_remaining[d] = div_remaining.get(d, 0) + 1

    results: list[MarkedFloorDiagram] = []
    vertices: list[int] = []  # placed vertex positions, ascending
    divs: list[int] = []  # chosen divergences, aligned with vertices
    budgets: dict[int, int] = {}
    edges: list[list] = []  # [position, source, target, weight]
    pending: list[int] = []  # indices into edges lacking a target
    counts = {"in": 0, "out": 0, "bd": 0}

    def finish() -> None:
        if any(budgets[v] for v in vertices):
            return
        # connectivity over vertices through bounded edges
        if len(vertices) > 1:
            adj = {v: [] for v in vertices}
            for e in edges:
                if e[1] is not None and e[2] is not None:
                    adj[e[1]].append(e[2])
                    adj[e[2]].append(e[1])
            seen = {vertices[0]}
            stack = [vertices[0]]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != len(vertices):
                return
        results.append(
            MarkedFloorDiagram(
                n,
                tuple(vertices),
                tuple(divs),
                tuple(Edge(e[0], e[1], e[2], e[3]) for e in edges),
            )
        )

    def place(pos: int) -> None:
        if pos > n:
            finish()
            return
        placed = len(vertices)
        # --- edge branches ---
        if placed < h and counts["in"] < d_b:
            edges.append([pos, None, None, 1])
            pending.append(len(edges) - 1)
            counts["in"] += 1
            place(pos + 1)
            counts["in"] -= 1
            pending.pop()
            edges.pop()
        if placed < h and counts["bd"] < total_bounded:
            for v in vertices:
                for w in range(1, budgets[v] + 1):
                    edges.append([pos, v, None, w])
                    pending.append(len(edges) - 1)
                    budgets[v] -= w
                    counts["bd"] += 1
                    place(pos + 1)
                    counts["bd"] -= 1
                    budgets[v] += w
                    pending.pop()
                    edges.pop()
        if counts["out"] < d_t:
            for v in vertices:
                if budgets[v] >= 1:
                    edges.append([pos, v, None, 1])
                    budgets[v] -= 1
                    counts["out"] += 1
                    place(pos + 1)
                    counts["out"] -= 1
                    budgets[v] += 1
                    edges.pop()
        # --- vertex branch ---
        if placed < h:
            last = placed == h - 1
            if last and (counts["in"] < d_b or counts["bd"] < total_bounded):
                return
            if last:
                head_choices = [tuple(sorted(pending))]
            else:
                # lexicographic order of head-position tuples (edge indices
                # increase with position, so index order is position order)
                head_choices = sorted(
                    subset
                    for r in range(len(pending) + 1)
                    for subset in combinations(sorted(pending), r)
                )
            for div in sorted(k for k, c in div_remaining.items() if c > 0):
                for subset in head_choices:
                    budget = sum(edges[i][3] for i in subset) - div
                    if budget < 0:
                        continue
                    vertices.append(pos)
                    divs.append(div)
                    budgets[pos] = budget
                    div_remaining[div] -= 1
                    removed = list(subset)
                    for i in removed:
                        edges[i][2] = pos
                        pending.remove(i)
                    place(pos + 1)
                    for i in removed:
                        edges[i][2] = None
                    pending.extend(removed)
                    pending.sort()
                    div_remaining[div] += 1
                    del budgets[pos]
                    divs.pop()
                    vertices.pop()

    place(1)
    return results


def refined_count(delta: HTransverseDegree, n: int) -> LaurentPolyS:
    """Sum of refined multiplicities over all marked diagrams on n points."""
    total = LaurentPolyS.zero()
    for diagram in enumerate_marked(delta, n):
        total = total + refined_multiplicity(diagram)
    return total


def classical_count(delta: HTransverseDegree, n: int) -> int:
    """The refined count at q = 1, i.e. the plain count with multiplicity."""
    return lp_eval_at_one(refined_count(delta, n))
