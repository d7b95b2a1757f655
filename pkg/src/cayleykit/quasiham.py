"""Cycle factors with forced edges via symmetric bipartite flow, the
quasi-hamiltonicity hierarchy, Hamiltonicity detection, and left coset
partitions.

The doubling network has nodes s, t, x_0..x_{m-1}, y_0..y_{m-1}; each graph
adjacency (i, j) contributes unit arcs x_i->y_j and x_j->y_i, and s feeds
every x (capacity 2) while every y drains into t (capacity 2).  A cycle
factor containing the forced edge set R exists iff a flow of value 2m exists
with all R arcs saturated.  Augmentations are applied in mirror pairs (swap
the two sides and reverse the path), which keeps flow(x_i->y_j) equal to
flow(x_j->y_i) at every step; this symmetry is what rules out doubled-edge
components, and it is asserted after every augmentation.

Flow computation is single-threaded per instance; instances are independent
and the brute-force oracles deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import SimpleGraph, connected_components
from .perms import Permutation

__all__ = [
    "SimpleGraph",
    "CycleFactor",
    "FlowNetwork",
    "cycle_factor_forced",
    "brute_cycle_factor",
    "brute_hamiltonian",
    "QuasiHamiltonian",
    "qh_set",
    "is_k_quasi_hamiltonian",
    "hamiltonian_via_qh",
    "qh_report",
    "coset_partition",
]


def _normalize_edges(edges: Iterable[tuple]) -> frozenset:
    return frozenset((min(u, v), max(u, v)) for u, v in edges)


@dataclass(frozen=True)
class CycleFactor:
    """A spanning subgraph in which every vertex has degree exactly 2."""

    edges: frozenset

    @staticmethod
    def validate(edges: frozenset, graph: SimpleGraph) -> "CycleFactor":
        degree = [0] * graph.vertex_count
        edge_set = set(graph.edges)
        for u, v in edges:
            if (u, v) not in edge_set:
                raise ValueError(f"factor edge ({u},{v}) not in the graph")
            degree[u] += 1
            degree[v] += 1
        if any(d != 2 for d in degree):
            raise ValueError("factor is not 2-regular spanning")
        return CycleFactor(frozenset(edges))


class FlowNetwork:
    """The bipartite doubling of a graph with mirror-paired augmentation.

    Node encoding: x_i = i, y_j = m + j, s = 2m, t = 2m + 1.  ``flow`` maps
    ordered pairs (i, j) over adjacencies to 0/1; ``sx``/``yt`` hold the
    source and sink arc flows (capacity 2).  Locked arcs are forced and never
    cancelled.  All mutations go through a journal so speculative forcing can
    roll back.
    """

    def __init__(self, graph: SimpleGraph):
        self.graph = graph
        self.m = graph.vertex_count
        self.adj = graph.adjacency
        self.flow: dict = {}
        for u, v in graph.edges:
            self.flow[(u, v)] = 0
            self.flow[(v, u)] = 0
        self.sx = [0] * self.m
        self.yt = [0] * self.m
        self.locked: set = set()
        self._journal: list = []
        self.mirror_checks = 0

    # -- journaled mutations ------------------------------------------------

    def _set_flow(self, arc: tuple, value: int) -> None:
        self._journal.append(("flow", arc, self.flow[arc]))
        self.flow[arc] = value

    def _bump_sx(self, i: int, delta: int) -> None:
        self._journal.append(("sx", i, self.sx[i]))
        self.sx[i] += delta

    def _bump_yt(self, j: int, delta: int) -> None:
        self._journal.append(("yt", j, self.yt[j]))
        self.yt[j] += delta

    def _lock(self, arc: tuple) -> None:
        if arc not in self.locked:
            self._journal.append(("lock", arc, None))
            self.locked.add(arc)

    def checkpoint(self) -> int:
        return len(self._journal)

    def rollback(self, mark: int) -> None:
        while len(self._journal) > mark:
            kind, key, old = self._journal.pop()
            if kind == "flow":
                self.flow[key] = old
            elif kind == "sx":
                self.sx[key] = old
            elif kind == "yt":
                self.yt[key] = old
            elif kind == "lock":
                self.locked.discard(key)

    # -- residual structure ---------------------------------------------------

    def value(self) -> int:
        return sum(self.sx)

    def _node_x(self, i: int) -> int:
        return i

    def _node_y(self, j: int) -> int:
        return self.m + j

    def _residual_from(self, node: int, terminals: bool):
        """Deterministic residual out-arcs.

        With ``terminals`` the walk may route through s and t, including the
        t->s circulation return that lets a repair raise the total flow;
        plain augmentation searches stay internal (a path that re-enters the
        terminals would be value-neutral and could loop forever).
        """
        m = self.m
        if node == 2 * m:  # s
            for i in range(m):
                if self.sx[i] < 2:
                    yield i
        elif node == 2 * m + 1:  # t
            for j in range(m):
                if self.yt[j] > 0:
                    yield m + j
            yield 2 * m  # circulation return t -> s
        elif node < m:  # x_i
            i = node
            for j in self.adj[i]:
                if self.flow[(i, j)] == 0:
                    yield m + j
            if terminals and self.sx[i] > 0:
                yield 2 * m  # cancel s->x_i
        else:  # y_j
            j = node - m
            for i in self.adj[j]:
                if self.flow[(i, j)] == 1 and (i, j) not in self.locked:
                    yield i
            if terminals and self.yt[j] < 2:
                yield 2 * m + 1  # forward into t

    def _bfs(self, source: int, targets, banned_arcs: frozenset = frozenset(),
             terminals: bool = False):
        """Shortest residual path from ``source`` to any node in ``targets``."""
        if source in targets:
            return [source]
        parent = {source: None}
        frontier = [source]
        while frontier:
            nxt = []
            for node in frontier:
                for nb in self._residual_from(node, terminals):
                    if nb in parent or (node, nb) in banned_arcs:
                        continue
                    parent[nb] = node
                    if nb in targets:
                        path = [nb]
                        while parent[path[-1]] is not None:
                            path.append(parent[path[-1]])
                        path.reverse()
                        return path
                    nxt.append(nb)
            frontier = nxt
        return None

    def _path_arcs(self, path: list) -> list:
        return list(zip(path, path[1:]))

    def _feasible(self, a: int, b: int) -> bool:
        m = self.m
        if a == 2 * m:
            return b < m and self.sx[b] < 2
        if a == 2 * m + 1:
            if b == 2 * m:
                return True  # circulation return
            return m <= b < 2 * m and self.yt[b - m] > 0
        if a < m:
            if b == 2 * m:
                return self.sx[a] > 0
            return m <= b < 2 * m and self.flow[(a, b - m)] == 0
        j = a - m
        if b == 2 * m + 1:
            return self.yt[j] < 2
        return b < m and self.flow[(b, j)] == 1 and (b, j) not in self.locked

    def _apply_path(self, path: list) -> None:
        m = self.m
        for a, b in self._path_arcs(path):
            if a == 2 * m + 1 and b == 2 * m:
                continue  # circulation return carries no state
            if a == 2 * m:
                self._bump_sx(b, +1)
            elif b == 2 * m:
                self._bump_sx(a, -1)
            elif b == 2 * m + 1:
                self._bump_yt(a - m, +1)
            elif a == 2 * m + 1:
                self._bump_yt(b - m, -1)
            elif a < m:
                self._set_flow((a, b - m), 1)
            else:
                self._set_flow((b, a - m), 0)

    def _mirror_node(self, node: int) -> int:
        m = self.m
        if node == 2 * m:
            return 2 * m + 1
        if node == 2 * m + 1:
            return 2 * m
        if node < m:
            return m + node
        return node - m

    def mirror_path(self, path: list) -> list:
        """Swap the two sides and reverse the orientation."""
        return [self._mirror_node(node) for node in reversed(path)]

    def _path_feasible(self, path: list) -> bool:
        return all(self._feasible(a, b) for a, b in self._path_arcs(path))

    # -- conflict-free search -------------------------------------------------
    #
    # A path whose mirror must be applied alongside it may not consume an arc
    # whose mirror it also consumes.  Arcs fall into mirror orbits: the two
    # push arcs of an edge, the two cancel arcs of an edge, and the terminal
    # pairs (s->x_v with y_v->t, and x_v->s with t->y_v); the t->s return is
    # its own mirror with unlimited capacity.  Using both members of a
    # terminal orbit is fine exactly when both carry two units of headroom.

    def _arc_orbit(self, a: int, b: int):
        m = self.m
        if a == 2 * m + 1 and b == 2 * m:
            return None  # circulation return, self-mirrored, unlimited
        if a == 2 * m:
            return ("s+", b)
        if b == 2 * m + 1:
            return ("s+", a - m)
        if b == 2 * m:
            return ("s-", a)
        if a == 2 * m + 1:
            return ("s-", b - m)
        if a < m:
            i, j = a, b - m
            return ("push", min(i, j), max(i, j))
        i, j = b, a - m
        return ("cancel", min(i, j), max(i, j))

    def _orbit_headroom(self, orbit) -> int:
        """How many times a path may cross this mirror orbit in total."""
        if orbit[0] == "s+":
            v = orbit[1]
            return min(2 - self.sx[v], 2 - self.yt[v], 2)
        if orbit[0] == "s-":
            v = orbit[1]
            return min(self.sx[v], self.yt[v], 2)
        return 1  # unit arcs: an edge's push (or cancel) pair supports one use

    def _conflict_free_path(self, source: int, targets, terminals: bool,
                            banned_arcs: frozenset = frozenset()):
        """Exhaustive DFS for a simple residual path whose mirror is jointly
        feasible with it; None when no such path exists.  Deterministic."""
        used_orbits: dict = {}
        path = [source]
        on_path = {source}

        def descend(node: int):
            for nb in self._residual_from(node, terminals):
                if nb in on_path or (node, nb) in banned_arcs:
                    continue
                orbit = self._arc_orbit(node, nb)
                if orbit is not None:
                    if used_orbits.get(orbit, 0) + 1 > self._orbit_headroom(orbit):
                        continue
                    used_orbits[orbit] = used_orbits.get(orbit, 0) + 1
                path.append(nb)
                on_path.add(nb)
                found = list(path) if nb in targets else descend(nb)
                if found is not None:
                    return found
                path.pop()
                on_path.discard(nb)
                if orbit is not None:
                    used_orbits[orbit] -= 1
                    if not used_orbits[orbit]:
                        del used_orbits[orbit]
            return None

        if source in targets:
            return [source]
        return descend(source)

    def assert_mirror(self) -> None:
        """The symmetric-augmentation invariant, checked after every step."""
        self.mirror_checks += 1
        for (i, j), f in self.flow.items():
            if f != self.flow[(j, i)]:
                raise AssertionError(f"mirror invariant broken at arc ({i},{j})")
        for i in range(self.m):
            if self.sx[i] != self.yt[i]:
                raise AssertionError(f"mirror invariant broken at terminal {i}")

    # -- forcing and augmentation ---------------------------------------------

    def force_edge_pair(self, i: int, j: int) -> bool:
        """Force flow through both arcs of the undirected edge {i, j},
        mirror-pairing the repair paths; False (with rollback) if impossible.

        One repair path is searched for the first arc (it may route through
        t and s, raising the total flow); the second arc is repaired by the
        mirror of that path.  When the mirror collides with an arc the first
        path already consumed, the offending arc is banned and the search
        retried, so the invariant flow(x_a->y_b) == flow(x_b->y_a) survives
        every forcing step.
        """
        if self.flow[(i, j)] == 1 and self.flow[(j, i)] == 1:
            self._lock((i, j))
            self._lock((j, i))
            return True
        mark = self.checkpoint()
        x_i, y_j = self._node_x(i), self._node_y(j)
        # The partner arc belongs to this forcing step; the repair path must
        # not consume it.
        base_banned = frozenset({(self._node_x(j), self._node_y(i))})
        self._set_flow((i, j), 1)
        self._lock((i, j))
        inner = self.checkpoint()

        def attempt(path):
            """(success, first infeasible mirror arc); rolls back on failure."""
            self._apply_path(path)
            self._set_flow((j, i), 1)
            self._lock((j, i))
            mirrored = self.mirror_path(path)
            conflict = next(
                (arc for arc in self._path_arcs(mirrored) if not self._feasible(*arc)),
                None,
            )
            if conflict is None:
                self._apply_path(mirrored)
                self.assert_mirror()
                return True, None
            self.rollback(inner)
            return False, conflict

        banned = base_banned
        path = self._bfs(y_j, {x_i}, banned, terminals=True)
        if path is None:
            # plainly unreachable, so no conflict-free repair exists either
            self.rollback(mark)
            return False
        for _ in range(8):
            ok, conflict = attempt(path)
            if ok:
                return True
            banned = banned | {(self._mirror_node(conflict[1]), self._mirror_node(conflict[0]))}
            path = self._bfs(y_j, {x_i}, banned, terminals=True)
            if path is None:
                break
        # exhaustive fallback: a repair whose mirror cannot collide with it
        path = self._conflict_free_path(y_j, {x_i}, terminals=True,
                                        banned_arcs=base_banned)
        if path is not None and attempt(path)[0]:
            return True
        self.rollback(mark)
        return False

    def _try_mirror_pair(self, full: list) -> bool:
        """Apply an s-t path and its mirror atomically; rolls back on collision."""
        mark = self.checkpoint()
        self._apply_path(full)
        mirrored = self.mirror_path(full)
        if self._path_feasible(mirrored):
            self._apply_path(mirrored)
            self.assert_mirror()
            return True
        self.rollback(mark)
        return False

    def _start_targets(self, a: int):
        allow_self = self.sx[a] == 0
        return {
            self._node_y(b)
            for b in range(self.m)
            if self.yt[b] < 2 and (b != a or allow_self)
        }

    def augment_pair(self) -> bool:
        """One symmetric augmentation (value +2); False when none was found.

        Shortest mirror-pairable paths are tried first; only when every BFS
        path collides with its own mirror does the exhaustive conflict-free
        search run, settling the question exactly (a start with no plain
        path at all cannot have a conflict-free one).
        """
        m = self.m
        reachable_starts = []
        for a in range(m):
            if self.sx[a] >= 2:
                continue
            targets = self._start_targets(a)
            if not targets:
                continue
            banned: frozenset = frozenset()
            found_any = False
            for _ in range(3):
                path = self._bfs(self._node_x(a), targets, banned)
                if path is None:
                    break
                found_any = True
                if self._try_mirror_pair([2 * m, *path, 2 * m + 1]):
                    return True
                collision = next(
                    (
                        arc
                        for arc in self._path_arcs(path)
                        if (self._mirror_node(arc[1]), self._mirror_node(arc[0]))
                        in self._path_arcs(path)
                    ),
                    None,
                )
                if collision is None:
                    break
                banned = banned | {collision}
            if found_any:
                reachable_starts.append(a)
        for a in reachable_starts:
            path = self._conflict_free_path(
                self._node_x(a), self._start_targets(a), terminals=False
            )
            if path is not None and self._try_mirror_pair([2 * m, *path, 2 * m + 1]):
                return True
        return False

    def run_to_max(self) -> int:
        while self.value() < 2 * self.m:
            if not self.augment_pair():
                break
        return self.value()

    def saturated_edges(self) -> frozenset:
        return frozenset(
            (i, j) for (i, j) in self.flow if i < j and self.flow[(i, j)] == 1 and self.flow[(j, i)] == 1
        )

    def edge_usable(self, i: int, j: int) -> bool:
        """Whether some symmetric maximum flow also saturates edge {i, j};
        decided by speculatively forcing the pair and rolling back."""
        if self.flow[(i, j)] == 1 and self.flow[(j, i)] == 1:
            return True
        mark = self.checkpoint()
        value_before = self.value()
        ok = self.force_edge_pair(i, j) and self.value() == value_before
        self.rollback(mark)
        return ok


def cycle_factor_forced(graph: SimpleGraph, forced: Iterable[tuple]) -> Optional[CycleFactor]:
    """A cycle factor containing every edge of ``forced``, or None.

    Thm-6 style: force flow through both mirror arcs of every forced edge,
    then push mirror-paired augmentations to a flow of 2m; the saturated
    symmetric arcs are the factor.
    """
    R = _normalize_edges(forced)
    edge_set = set(graph.edges)
    for e in R:
        if e not in edge_set:
            raise ValueError(f"forced edge {e} is not an edge of the graph")
    if graph.vertex_count == 0:
        return CycleFactor(frozenset())
    net = FlowNetwork(graph)
    for i, j in sorted(R):
        if not net.force_edge_pair(i, j):
            return None
    if net.run_to_max() != 2 * net.m:
        return None
    factor = net.saturated_edges()
    if not R <= factor:
        raise AssertionError("forced edges missing from the computed factor")
    return CycleFactor.validate(factor, graph)


# -- brute-force oracles ------------------------------------------------------

_BRUTE_VERTEX_GUARD = 12


def brute_cycle_factor(graph: SimpleGraph, forced: Iterable[tuple]) -> Optional[CycleFactor]:
    """Exhaustive 2-regular spanning subgraph search (independent oracle)."""
    if graph.vertex_count > _BRUTE_VERTEX_GUARD:
        raise ValueError(f"oracle guarded to {_BRUTE_VERTEX_GUARD} vertices")
    R = _normalize_edges(forced)
    edge_set = set(graph.edges)
    for e in R:
        if e not in edge_set:
            raise ValueError(f"forced edge {e} is not an edge of the graph")
    n = graph.vertex_count
    adj = graph.adjacency
    chosen: set = set()

    def descend(v: int) -> Optional[frozenset]:
        if v == n:
            return frozenset(chosen)
        have = sum(1 for w in adj[v] if (min(v, w), max(v, w)) in chosen and w < v)
        must = [w for w in adj[v] if w > v and (v, w) in R]
        candidates = [w for w in adj[v] if w > v]
        need = 2 - have
        if need < len(must) or need > len(candidates):
            return None
        for combo in itertools.combinations(candidates, need):
            if not set(must) <= set(combo):
                continue
            added = [(v, w) for w in combo]
            # partner vertices must keep room for degree 2
            ok = True
            for v2, w in added:
                w_have = sum(1 for u in adj[w] if (min(u, w), max(u, w)) in chosen)
                if w_have >= 2:
                    ok = False
                    break
            if not ok:
                continue
            chosen.update(added)
            feasible = all(
                sum(1 for u in adj[w] if (min(u, w), max(u, w)) in chosen) <= 2
                for _, w in added
            )
            result = descend(v + 1) if feasible else None
            if result is not None:
                return result
            chosen.difference_update(added)
        return None

    solution = descend(0)
    if solution is None:
        return None
    return CycleFactor.validate(solution, graph)


def brute_hamiltonian(graph: SimpleGraph) -> bool:
    """Backtracking Hamiltonian-cycle search (independent oracle)."""
    n = graph.vertex_count
    if n > _BRUTE_VERTEX_GUARD:
        raise ValueError(f"oracle guarded to {_BRUTE_VERTEX_GUARD} vertices")
    if n < 3:
        return False
    if not graph.is_connected():
        return False
    adj = graph.adjacency
    start = 0
    visited = [False] * n
    visited[start] = True

    def descend(v: int, count: int) -> bool:
        if count == n:
            return start in adj[v]
        for w in adj[v]:
            if not visited[w]:
                visited[w] = True
                if descend(w, count + 1):
                    return True
                visited[w] = False
        return False

    return descend(start, 1)


# -- the quasi-hamiltonicity hierarchy ----------------------------------------


class QuasiHamiltonian:
    """Memoized evaluation of the recursive edge sets QH_k(G, R).

    QH_1(G, R) holds the edges that extend R inside some cycle factor; for
    k > 1, QH_k(G, R) holds the edges e for which QH_{k-1}(G, e u R) is
    connected.  "Connected" for an edge set means spanning and connected:
    the set touches every vertex and forms one component.  Results are
    memoized by (k, R); since every level sits inside QH_1 of the same R,
    a disconnected QH_1 empties all deeper levels immediately.
    """

    def __init__(self, graph: SimpleGraph):
        self.graph = graph
        self._qh1_cache: dict = {}
        self._memo: dict = {}

    def _spanning_connected(self, edges: frozenset) -> bool:
        if not edges:
            return False
        touched = {v for e in edges for v in e}
        if len(touched) != self.graph.vertex_count:
            return False
        comps = connected_components(self.graph.vertex_count, sorted(edges))
        return len(comps) == 1

    def qh1(self, R: frozenset) -> frozenset:
        if R in self._qh1_cache:
            return self._qh1_cache[R]
        net = FlowNetwork(self.graph)
        result: frozenset
        if all(net.force_edge_pair(i, j) for i, j in sorted(R)) and net.run_to_max() == 2 * net.m:
            members = []
            for i, j in self.graph.edges:
                if (i, j) in R or net.edge_usable(i, j):
                    members.append((i, j))
            result = frozenset(members)
        else:
            result = frozenset()
        self._qh1_cache[R] = result
        return result

    def qh_set(self, R: Iterable[tuple], k: int) -> frozenset:
        if k < 1:
            raise ValueError("k must be >= 1")
        R = _normalize_edges(R)
        key = (k, R)
        if key in self._memo:
            return self._memo[key]
        base = self.qh1(R)
        if k == 1:
            result = base
        elif not self._spanning_connected(base):
            # deeper sets live inside base, so none can be spanning-connected
            result = frozenset()
        else:
            result = frozenset(
                e
                for e in base
                if self._spanning_connected(self.qh_set(R | {e}, k - 1))
            )
        self._memo[key] = result
        return result

    def is_k_quasi_hamiltonian(self, k: int) -> bool:
        return self._spanning_connected(self.qh_set(frozenset(), k))


def qh_set(graph: SimpleGraph, R: Iterable[tuple], k: int) -> frozenset:
    return QuasiHamiltonian(graph).qh_set(R, k)


def is_k_quasi_hamiltonian(graph: SimpleGraph, k: int) -> bool:
    if not graph.is_connected():
        raise ValueError("quasi-hamiltonicity is defined for connected graphs")
    return QuasiHamiltonian(graph).is_k_quasi_hamiltonian(k)


def hamiltonian_via_qh(graph: SimpleGraph) -> bool:
    """Hamiltonicity decided through (n-2)-quasi-hamiltonicity."""
    n = graph.vertex_count
    if n < 3:
        raise ValueError("hamiltonicity via the hierarchy needs n >= 3")
    if not graph.is_connected():
        return False
    return QuasiHamiltonian(graph).is_k_quasi_hamiltonian(n - 2)


def qh_report(graph: SimpleGraph, k_max: int) -> list:
    """Rows (k, |QH_k(G, {})|, spanning-connected?) for k = 1..k_max."""
    analyzer = QuasiHamiltonian(graph)
    rows = []
    for k in range(1, k_max + 1):
        edges = analyzer.qh_set(frozenset(), k)
        rows.append((k, len(edges), analyzer._spanning_connected(edges)))
    return rows


# -- left coset partitions -----------------------------------------------------


def coset_partition(group_elements: Sequence[Permutation], subset: Sequence[Permutation]):
    """A set S with the translates sT (s in S) exactly tiling the group, or None.

    Exact-cover backtracking over left translates; an immediate None when |T|
    does not divide the group size.  The returned witness is verified.
    """
    if not subset:
        raise ValueError("the translated subset must be nonempty")
    elements = list(group_elements)
    index = {g: i for i, g in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("duplicate group elements")
    size = len(elements)
    t_size = len(set(subset))
    if t_size != len(subset):
        raise ValueError("duplicate elements in the subset")
    if size % t_size != 0:
        return None

    translate_cache: dict = {}

    def translate(s: Permutation) -> Optional[int]:
        if s in translate_cache:
            return translate_cache[s]
        mask = 0
        for t in subset:
            product = s * t
            pos = index.get(product)
            if pos is None:
                translate_cache[s] = None
                return None
            mask |= 1 << pos
        if mask.bit_count() != t_size:
            mask = None
        translate_cache[s] = mask
        return mask

    full = (1 << size) - 1
    witness: list = []

    def cover(done: int) -> bool:
        if done == full:
            return True
        pivot = (done ^ full) & -(done ^ full)
        for s in elements:
            mask = translate(s)
            if mask is None or not mask & pivot or mask & done:
                continue
            witness.append(s)
            if cover(done | mask):
                return True
            witness.pop()
        return False

    if not cover(0):
        return None
    covered: set = set()
    for s in witness:
        block = {s * t for t in subset}
        if covered & block:
            raise AssertionError("witness translates overlap")
        covered |= block
    if covered != set(elements):
        raise AssertionError("witness translates do not tile the group")
    return sorted(witness)
