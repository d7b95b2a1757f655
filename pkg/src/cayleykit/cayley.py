"""Cayley graphs of generating sets, the point-level cycle graph, and the
local cycle-structure probes used to pin down automorphisms.

Edge convention, fixed package-wide: vertices x and y are adjacent iff
y * x^-1 lies in T union T^-1, i.e. y = t * x with the generator applied
first (left multiplication in the left-to-right word order).  Under this
rule right translation x -> x * g is a graph automorphism, which the
automorphism module relies on.

Graph construction is single-threaded and deterministic: vertices are the
BFS closure order of the group engine, so indices are reproducible.  A
finished graph is never mutated.
"""

from __future__ import annotations

from typing import Optional, Sequence

from . import groups
from .graphs import SimpleGraph
from .gensets import GeneratorSet, is_split
from .perms import Permutation


class CayleyGraph:
    """Cay(<T>, T) as an undirected simple graph with labeled edges.

    ``vertex_perm[i]`` is the group element of vertex i (vertex 0 is the
    identity); ``perm_index`` is the reverse lookup.  ``adjacency[u]`` lists
    (neighbor, labels) pairs where each label is a (generator index,
    direction) pair with direction +1 for y = t*x and -1 for y = t^-1 * x;
    for involutions the two coincide and a single +1 label is kept.
    """

    def __init__(self, generating_set: GeneratorSet, cap: int = 1_000_000):
        if len(generating_set) == 0:
            raise ValueError("cannot build a Cayley graph on an empty generating set")
        self.generating_set = generating_set
        self.vertex_perm = groups.enumerate_elements(
            generating_set.elements, generating_set.degree, cap
        )
        self.perm_index = {p: i for i, p in enumerate(self.vertex_perm)}
        self.vertex_count = len(self.vertex_perm)

        gens = generating_set.elements
        inverses = [g.inverse() for g in gens]
        labeled: dict = {}
        for u, x in enumerate(self.vertex_perm):
            for i, (t, t_inv) in enumerate(zip(gens, inverses)):
                involution = t == t_inv
                for direction, gen in ((1, t), (-1, t_inv)):
                    if direction == -1 and involution:
                        continue
                    v = self.perm_index[gen * x]
                    if u < v:
                        labeled.setdefault((u, v), []).append((i, direction))
                    elif v < u:
                        # Seen again from the other endpoint with the mirrored
                        # direction; record only once, from the smaller side.
                        continue
        self.edge_labels_raw = {
            e: tuple(sorted(set(labels))) for e, labels in labeled.items()
        }
        self.edges = tuple(sorted(self.edge_labels_raw))
        adjacency: list = [[] for _ in range(self.vertex_count)]
        for (u, v), labels in sorted(self.edge_labels_raw.items()):
            adjacency[u].append((v, labels))
            mirrored = tuple(sorted((i, -d) if not self._is_involution(i) else (i, d)
                                    for i, d in labels))
            adjacency[v].append((u, mirrored))
        self.adjacency = [sorted(entry) for entry in adjacency]
        self.neighbors = [sorted(v for v, _ in entry) for entry in self.adjacency]

    def _is_involution(self, i: int) -> bool:
        g = self.generating_set.elements[i]
        return g == g.inverse()

    @property
    def edge_labels(self) -> dict:
        """Edge -> printable label strings, e.g. ('0+', '2-')."""
        out = {}
        for (u, v), labels in self.edge_labels_raw.items():
            out[(u, v)] = tuple(f"{i}{'+' if d > 0 else '-'}" for i, d in labels)
        return out

    def label_multiplicity(self, u: int) -> int:
        """Degree counting labels, i.e. |T union T^-1| for every vertex."""
        return sum(len(labels) for _, labels in self.adjacency[u])

    def vertex_of(self, perm: Permutation) -> int:
        try:
            return self.perm_index[perm]
        except KeyError:
            raise ValueError(f"{perm.to_text()} is not a vertex") from None

    def to_simple_graph(self) -> SimpleGraph:
        graph = SimpleGraph(self.vertex_count, self.edges)
        graph.edge_labels = self.edge_labels  # type: ignore[attr-defined]
        return graph


def build_cayley(generating_set: GeneratorSet, cap: int = 1_000_000) -> CayleyGraph:
    """Cayley graph of <T> with x ~ y iff y * x^-1 in T union T^-1."""
    return CayleyGraph(generating_set, cap)


# -- the cycle graph on points ----------------------------------------------


class CycleGraph:
    """Graph on the points 1..n with the path edges of each generator cycle.

    A generator (x1 x2 .. xk) contributes edges x1x2, .., x(k-1)xk for the
    chosen writing of the cycle; writings start at each cycle's smallest
    support point unless a different start is requested, and the choice is
    recorded so tests can vary it.
    """

    def __init__(self, generating_set: GeneratorSet, starts: Optional[dict] = None):
        if any(len(g.cycles()) != 1 for g in generating_set.elements):
            raise ValueError("the cycle graph is defined for sets of single cycles")
        self.generating_set = generating_set
        self.points = generating_set.degree
        self.chosen_start = {}
        edges = []
        self.edge_owner: dict = {}
        for idx, g in enumerate(generating_set.elements):
            cycle = g.cycles()[0]
            start = (starts or {}).get(idx, min(cycle))
            if start not in cycle:
                raise ValueError(f"start {start} not in the support of element {idx}")
            offset = cycle.index(start)
            writing = cycle[offset:] + cycle[:offset]
            self.chosen_start[idx] = writing
            for a, b in zip(writing, writing[1:]):
                edge = (min(a, b) - 1, max(a, b) - 1)
                edges.append(edge)
                self.edge_owner.setdefault(edge, idx)
        self.graph = SimpleGraph(self.points, edges)
        self.parallel_free = len(edges) == len(set(edges))

    def is_tree(self) -> bool:
        g = self.graph
        return (
            self.parallel_free
            and len(g.edges) == g.vertex_count - 1
            and g.is_connected()
        )


def cyc_graph(generating_set: GeneratorSet, starts: Optional[dict] = None) -> CycleGraph:
    return CycleGraph(generating_set, starts)


def element_degrees(generating_set: GeneratorSet) -> list:
    """Per element: how many of its support points other elements also move."""
    sups = generating_set.supports()
    out = []
    for i, s in enumerate(sups):
        others = set()
        for j, t in enumerate(sups):
            if i != j:
                others |= s & t
        out.append(len(others))
    return out


def is_normal(generating_set: GeneratorSet, starts: Optional[dict] = None) -> tuple:
    """Decide the tree-with-sparse-leaves condition; returns (bool, reasons).

    Requires: more than two single-cycle elements, a split set, an acyclic
    and connected cycle graph, and every element sharing support with at most
    one leaf (a leaf is an element of degree 1).
    """
    reasons = []
    if len(generating_set) <= 2:
        reasons.append(f"|T| = {len(generating_set)} (need more than two cycles)")
    if not is_split(generating_set):
        reasons.append("set is not split")
        return False, reasons
    cg = cyc_graph(generating_set, starts)
    if not cg.is_tree():
        reasons.append("cycle graph is not a tree")
    degrees = element_degrees(generating_set)
    leaves = {i for i, d in enumerate(degrees) if d == 1}
    sups = generating_set.supports()
    for i, s in enumerate(sups):
        adjacent_leaves = [
            j for j in leaves if j != i and s & sups[j]
        ]
        if len(adjacent_leaves) > 1:
            reasons.append(
                f"element {i} touches {len(adjacent_leaves)} leaves"
            )
    return (not reasons), reasons


# -- local cycle-structure probes ---------------------------------------------


def count_4cycles_through(graph: CayleyGraph, edge: tuple) -> int:
    """Number of 4-cycles through the undirected edge {x, y}."""
    x, y = edge
    nx = set(graph.neighbors[x])
    ny = set(graph.neighbors[y])
    if y not in nx:
        raise ValueError(f"({x}, {y}) is not an edge")
    count = 0
    for a in nx - {y}:
        for b in ny - {x}:
            if a != b and b in graph.neighbors[a]:
                count += 1
    return count


def same_element_criterion(graph: CayleyGraph, x: int, y: int, z: int) -> bool:
    """True iff edges xy and yz carry equal 4-cycle counts.

    For tree-with-sparse-leaves sets this matches whether the two edges
    represent the same group element.
    """
    return count_4cycles_through(graph, (x, y)) == count_4cycles_through(graph, (y, z))


def commuting_4cycle(graph: CayleyGraph, t1: Permutation, t2: Permutation,
                     strict: Optional[bool] = None):
    """The unique 4-cycle through the path t2 -> identity -> t1, if any.

    For split sets one exists iff t1 and t2 commute, and it is
    identity -> t1 -> t1*t2 -> t2 -> identity; this is verified against an
    exhaustive common-neighbor search.  For non-split sets the probe still
    runs but the iff is not asserted unless ``strict`` is forced.
    """
    if t1 == t2:
        return None
    e = 0
    v1 = graph.vertex_of(t1)
    v2 = graph.vertex_of(t2)
    common = (set(graph.neighbors[v1]) & set(graph.neighbors[v2])) - {e}
    if strict is None:
        strict = is_split(graph.generating_set)
    if t1 * t2 == t2 * t1:
        w = graph.vertex_of(t1 * t2)
        if strict and common != {w}:
            raise AssertionError(
                "commuting generators must close a unique 4-cycle through the product"
            )
        return (e, v1, w, v2)
    if strict and common:
        raise AssertionError("non-commuting generators closed an unexpected 4-cycle")
    return None


def commutator_cycle(t1: Permutation, t2: Permutation) -> list:
    """Vertex word of the closed commutator walk at the identity.

    For transpositions the word is (t1 t2)^3 (six steps); otherwise it is
    (t1 t2 t1^-1 t2^-1)^3 (twelve steps).  Returns the partial products
    [e, w1, w1*w2, ...]; the last entry equals the identity and all the
    intermediate vertices are distinct, so the word traces a genuine cycle.
    """
    if t1 * t2 == t2 * t1:
        raise ValueError("commutator cycles need non-commuting generators")
    if t1.cycle_type().parts == (2,) and t2.cycle_type().parts == (2,):
        letters = [t1, t2] * 3
    else:
        letters = [t1, t2, t1.inverse(), t2.inverse()] * 3
    word = [Permutation.identity(t1.degree)]
    for letter in letters:
        word.append(word[-1] * letter)
    if not word[-1].is_identity():
        raise AssertionError("commutator word did not close at the identity")
    interior = word[:-1]
    if len(set(interior)) != len(interior):
        raise AssertionError("commutator word revisited a vertex")
    return word


def walk_in_graph(graph: CayleyGraph, word: list) -> list:
    """Map a closed vertex word to the literal walk in the graph.

    Under the left-quotient edge rule the inverse images of the partial
    products step by single generators, so that is the walk returned; it is
    verified edge by edge.
    """
    walk = [graph.vertex_of(p.inverse()) for p in word]
    for a, b in zip(walk, walk[1:]):
        if b not in graph.neighbors[a]:
            raise AssertionError("vertex word does not trace a walk in the graph")
    return walk
