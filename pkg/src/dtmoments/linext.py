"""Counting the total orders of an oriented tree that extend its arrows.

Each oriented quotient tree induces a partial order: an arrow into a vertex
places that vertex below the arrow's source.  The number of linear extensions
of this order is the combinatorial weight attached to a non-crossing pairing.
Counts are exact Python integers (they exceed 64 bits well before the cap).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError
from .ncpair import (
    OrientedQuotientGraph,
    Pairing,
    StarWord,
    is_compatible,
    is_noncrossing,
    quotient_graph,
)

DEFAULT_VERTEX_CAP = 24


@dataclass(frozen=True)
class TreePoset:
    """A partial order on 0..n-1 whose cover relation's support is a tree.

    ``covers`` holds pairs (a, b) meaning "a below b".
    """

    n_vertices: int
    covers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "covers", tuple(sorted(set(self.covers))))
        n = self.n_vertices
        if n < 1:
            raise ValueError("poset needs at least one vertex")
        if len(self.covers) != n - 1:
            raise ValueError("cover support of a tree has exactly n-1 edges")
        adj: dict[int, set[int]] = {v: set() for v in range(n)}
        for a, b in self.covers:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise ValueError(f"bad cover pair ({a}, {b})")
            adj[a].add(b)
            adj[b].add(a)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            raise ValueError("cover support is not connected")
        # connected with n-1 edges => acyclic; transitive closure is antisymmetric

    @classmethod
    def from_quotient(cls, q: OrientedQuotientGraph) -> "TreePoset":
        """Relabel a quotient tree's vertices to 0..n-1 (sorted id order)."""
        index = {v: i for i, v in enumerate(q.vertices)}
        covers = tuple((index[dst], index[src]) for src, dst in q.edges)
        return cls(len(q.vertices), covers)


def count_linear_extensions(p: TreePoset, cap: int = DEFAULT_VERTEX_CAP) -> int:
    """Exact number of total orders of 0..n-1 extending the cover relation.

    Dynamic programming over down-sets: a valid prefix of a linear extension
    is exactly a down-set, and extending a prefix appends any minimal element
    of the complement.  The memo is per invocation.
    """
    n = p.n_vertices
    if n > cap:
        raise CapExceededError(f"poset has {n} vertices, exceeding the cap of {cap}")
    below = [0] * n  # bitmask of elements required below v
    for a, b in p.covers:
        below[b] |= 1 << a

    full = (1 << n) - 1
    memo: dict[int, int] = {full: 1}

    def ways(placed: int) -> int:
        cached = memo.get(placed)
        if cached is not None:
            return cached
        total = 0
        rest = full & ~placed
        m = rest
        while m:
            bit = m & -m
            v = bit.bit_length() - 1
            if below[v] & ~placed == 0:  # all of v's lower covers already placed
                total += ways(placed | bit)
            m ^= bit
        memo[placed] = total
        return total

    return ways(0)


def count_linear_extensions_brute(p: TreePoset) -> int:
    """Independent oracle: filter all n! permutations (small n only)."""
    import itertools

    n = p.n_vertices
    count = 0
    for perm in itertools.permutations(range(n)):
        pos = {v: i for i, v in enumerate(perm)}
        if all(pos[a] < pos[b] for a, b in p.covers):
            count += 1
    return count


def nto(sigma: Pairing, eps: StarWord, cap: int = DEFAULT_VERTEX_CAP) -> int:
    """Ordering count of the folded tree.

    Crossing pairings count 0 outright; a non-crossing pairing must be
    compatible with the star-word for the folded order to exist.
    """
    if not is_noncrossing(sigma):
        return 0
    if not is_compatible(sigma, eps):
        raise ValueError("pairing is not compatible with the star-word")
    q = quotient_graph(sigma, eps)
    return count_linear_extensions(TreePoset.from_quotient(q), cap=cap)
