"""Permutation-group machinery: stabilizer chains, orbits, closure enumeration.

The stabilizer chain is a Schreier-Sims construction with two phases.  A
seeded, reproducible element pump first feeds products of generators into the
chain; because the product of level-orbit sizes can never exceed the group
order, reaching n! (or n!/2 when every generator is even) certifies the chain
is complete with no further work.  Groups that miss those targets fall back
to the classical deterministic Schreier verification, which is exact for any
input.  Orders are Python integers, so 22! and beyond stay exact.

Finished chains are immutable in practice and safe to share between threads;
all queries are pure.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceeded
from .perms import Permutation

_PUMP_SEED = 0x5EED


def _compose(a: tuple, b: tuple) -> tuple:
    """Apply ``a`` then ``b`` (0-based image tables)."""
    return tuple(b[x] for x in a)


def _invert(a: tuple) -> tuple:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


class _Level:
    """One chain level: base point, level generators, orbit transversal.

    ``transversal[p]`` holds (u, u^-1) with u mapping the base point to p.
    ``gens`` holds every strong generator fixing all earlier base points, so
    the lists are nested level to level as classical Schreier-Sims requires.
    """

    __slots__ = ("point", "gens", "transversal", "_order")

    def __init__(self, point: int, identity: tuple):
        self.point = point
        self.gens: list = []
        self.transversal: dict = {point: (identity, identity)}
        self._order: list = [point]

    def add_gen(self, g: tuple) -> None:
        self.gens.append(g)
        # Extend the orbit: sweep existing points with the new generator,
        # then grow the frontier with the full generator list.
        frontier = []
        for p in self._order:
            q = g[p]
            if q not in self.transversal:
                u = _compose(self.transversal[p][0], g)
                self.transversal[q] = (u, _invert(u))
                self._order.append(q)
                frontier.append(q)
        while frontier:
            nxt = []
            for p in frontier:
                up = self.transversal[p][0]
                for h in self.gens:
                    q = h[p]
                    if q not in self.transversal:
                        u = _compose(up, h)
                        self.transversal[q] = (u, _invert(u))
                        self._order.append(q)
                        nxt.append(q)
            frontier = nxt


class StabilizerChain:
    """Base-and-transversal data for the group generated by ``gens``.

    ``base`` lists the base points (1-based); ``levels`` expose, per base
    point, the transversal (orbit point -> coset representative) and the
    level generators.  The product of transversal sizes is the exact group
    order.
    """

    def __init__(self, gens: Sequence[Permutation], n: int):
        for g in gens:
            if g.degree != n:
                raise ValueError(f"generator degree {g.degree} != {n}")
        self.degree = n
        self.generators = list(gens)
        self._identity = tuple(range(n))
        self._levels: list[_Level] = []
        for g in gens:
            self._add_element(g._map)
        if not self._pump():
            self._verify_schreier()

    # -- construction ---------------------------------------------------

    def _strip(self, g: tuple, start: int):
        """Sift ``g`` through levels ``start``..; return (residue, stop_level)."""
        for i in range(start, len(self._levels)):
            level = self._levels[i]
            p = g[level.point]
            if p == level.point:
                continue
            entry = level.transversal.get(p)
            if entry is None:
                return g, i
            g = _compose(g, entry[1])
        return g, len(self._levels)

    def _add_element(self, g: tuple, start: int = 0):
        """Sift ``g``; install a non-identity residue. Returns the stop level or None."""
        residue, stop = self._strip(g, start)
        if residue == self._identity:
            return None
        if stop == len(self._levels):
            base_point = next(i for i, x in enumerate(residue) if x != i)
            self._levels.append(_Level(base_point, self._identity))
        # The residue fixes every base point above its stop level, so it is a
        # level generator for each of those levels as well (nesting).
        for j in range(stop + 1):
            self._levels[j].add_gen(residue)
        return stop

    def _pump(self) -> bool:
        """Feed seeded generator products into the chain until the order
        matches its parity-forced ceiling (n! or n!/2); True on success."""
        if not self.generators:
            return True
        n = self.degree
        target = math.factorial(n)
        if all(g.parity() == 0 for g in self.generators):
            target = max(1, target // 2)
        if self.order() == target:
            return True
        rng = random.Random(_PUMP_SEED)
        state = [g._map for g in self.generators]
        stall = 0
        limit = 60 + 6 * len(state) + 2 * n
        while stall < limit:
            i = rng.randrange(len(state))
            j = rng.randrange(len(state))
            word = _compose(state[i], state[j])
            state[i] = word
            before = self.order()
            self._add_element(word)
            now = self.order()
            if now == target:
                return True
            stall = 0 if now > before else stall + 1
        return False

    def _verify_schreier(self) -> None:
        # Bottom-up verification: every Schreier generator of level i must
        # sift to the identity through the deeper levels; a failure installs
        # the residue and re-verifies from its stop level downward-first.
        i = len(self._levels) - 1
        while i >= 0:
            stop = self._check_level(i)
            i = i - 1 if stop is None else stop

    def _check_level(self, i: int):
        level = self._levels[i]
        for p in sorted(level.transversal):
            u = level.transversal[p][0]
            for g in list(level.gens):
                q = g[p]
                uq_inv = level.transversal[q][1]
                schreier = _compose(_compose(u, g), uq_inv)
                if schreier == self._identity:
                    continue
                stop = self._add_element(schreier, i + 1)
                if stop is not None:
                    return stop
        return None

    # -- queries ----------------------------------------------------------

    @property
    def base(self) -> list:
        return [level.point + 1 for level in self._levels]

    @property
    def levels(self) -> list:
        """Per base point: (transversal {point: Permutation}, level generators)."""
        out = []
        for level in self._levels:
            trans = {
                p + 1: Permutation._from_zero_based(u)
                for p, (u, _) in level.transversal.items()
            }
            gens = [Permutation._from_zero_based(g) for g in level.gens]
            out.append((trans, gens))
        return out

    def order(self) -> int:
        result = 1
        for level in self._levels:
            result *= len(level.transversal)
        return result

    def contains(self, sigma: Permutation) -> bool:
        if sigma.degree != self.degree:
            raise ValueError(f"degree mismatch: {sigma.degree} != {self.degree}")
        residue, _ = self._strip(sigma._map, 0)
        return residue == self._identity


def build_chain(gens: Sequence[Permutation], n: int) -> StabilizerChain:
    """Stabilizer chain for <gens> acting on 1..n; deterministic for fixed input order."""
    return StabilizerChain(gens, n)


def group_order(chain: StabilizerChain) -> int:
    return chain.order()


def contains(chain: StabilizerChain, sigma: Permutation) -> bool:
    return chain.contains(sigma)


@dataclass(frozen=True)
class OrbitPartition:
    """Partition of {1..n} into orbits, each block sorted, blocks by minimum."""

    blocks: tuple

    @property
    def is_single(self) -> bool:
        return len(self.blocks) == 1


def orbits(gens: Sequence[Permutation], n: int) -> OrbitPartition:
    """Connected components of the action of ``gens`` on 1..n (singletons allowed)."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if g.degree != n:
            raise ValueError(f"generator degree {g.degree} != {n}")
        for i, x in enumerate(g._map):
            ri, rx = find(i), find(x)
            if ri != rx:
                parent[max(ri, rx)] = min(ri, rx)

    groups: dict = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i + 1)
    blocks = tuple(tuple(b) for b in sorted(groups.values()))
    return OrbitPartition(blocks)


def generates(gens: Sequence[Permutation], n: int) -> str:
    """Classify <gens>: ``symmetric``, ``alternating`` or ``other``.

    Compares the exact chain order against n! and n!/2; an intransitive group
    reports ``other`` regardless of order.
    """
    order = build_chain(gens, n).order()
    full = math.factorial(n)
    if order == full:
        return "symmetric"
    if 2 * order == full and orbits(gens, n).is_single:
        return "alternating"
    return "other"


def enumerate_elements(gens: Sequence[Permutation], n: int, cap: int) -> list:
    """BFS closure of <gens> from the identity, in (word length, generator index) order.

    Raises CapExceeded as soon as the closure would outgrow ``cap``.  The
    order is fixed so Cayley-graph vertex indices are reproducible.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    for g in gens:
        if g.degree != n:
            raise ValueError(f"generator degree {g.degree} != {n}")
    identity = tuple(range(n))
    seen = {identity}
    order: list[tuple] = [identity]
    tables = [g._map for g in gens]
    frontier = [identity]
    while frontier:
        nxt = []
        for w in frontier:
            for t in tables:
                candidate = tuple(t[x] for x in w)
                if candidate not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"group closure exceeds cap {cap}")
                    seen.add(candidate)
                    order.append(candidate)
                    nxt.append(candidate)
        frontier = nxt
    return [Permutation._from_zero_based(t) for t in order]
