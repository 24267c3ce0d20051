"""Labelled rooted trees on {0, ..., n} (root 0), their statistics, and codecs."""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from .parking import PrefVector, is_parking_function


@dataclass(frozen=True)
class RootedTree:
    """``parent[v-1]`` is the parent of vertex ``v`` for ``v = 1..n``."""

    parent: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parent", tuple(self.parent))
        n = self.n
        for v, par in enumerate(self.parent, 1):
            if not 0 <= par <= n or par == v:
                raise ValueError(f"bad parent {par} for vertex {v}")
        for v in range(1, n + 1):
            seen = set()
            u = v
            while u != 0:
                if u in seen:
                    raise ValueError("parent array has a cycle")
                seen.add(u)
                u = self.parent[u - 1]

    @property
    def n(self) -> int:
        return len(self.parent)

    def children(self) -> Dict[int, List[int]]:
        ch: Dict[int, List[int]] = {v: [] for v in range(self.n + 1)}
        for v, par in enumerate(self.parent, 1):
            ch[par].append(v)
        return ch

    def edges(self) -> List[Tuple[int, int]]:
        return [(par, v) for v, par in enumerate(self.parent, 1)]


@dataclass(frozen=True)
class TreeStats:
    inv: int
    nld: int
    ldr: int
    lev: int
    deg0: int
    edes: int

    def get(self, name: str) -> int:
        return getattr(self, name)


TREE_STAT_NAMES = ("inv", "nld", "ldr", "lev", "deg0", "edes")


def tree_stats(T: RootedTree) -> TreeStats:
    n = T.n
    ch = T.children()
    # subtree minima, children before parents
    order = []
    stack = [0]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(ch[v])
    submin = {}
    for v in reversed(order):
        submin[v] = min([v] + [submin[c] for c in ch[v]])
    ldr = sum(1 for v in range(1, n + 1) if submin[v] == v)
    inv = 0
    for v in range(1, n + 1):
        u = T.parent[v - 1]
        while u != 0:
            if u > v:
                inv += 1
            u = T.parent[u - 1]
    lev = sum(1 for v in range(n + 1) if not ch[v])
    edes = sum(1 for par, v in T.edges() if par > v)
    return TreeStats(inv=inv, nld=n - ldr, ldr=ldr, lev=lev, deg0=len(ch[0]), edes=edes)


def prufer_encode(T: RootedTree) -> Tuple[int, ...]:
    """Strip the largest leaf n-1 times, recording its neighbour; read the record backwards."""
    n = T.n
    if n < 1:
        raise ValueError("tree needs at least one non-root vertex")
    adj = {v: set() for v in range(n + 1)}
    for par, v in T.edges():
        adj[par].add(v)
        adj[v].add(par)
    leaves = [-v for v in adj if len(adj[v]) == 1]
    heapq.heapify(leaves)
    code = []
    for _ in range(n - 1):
        leaf = -heapq.heappop(leaves)
        (nb,) = adj[leaf]
        code.append(nb)
        adj[nb].discard(leaf)
        del adj[leaf]
        if len(adj[nb]) == 1:
            heapq.heappush(leaves, -nb)
    return tuple(reversed(code))


def prufer_decode(code: Sequence[int], n: int | None = None) -> RootedTree:
    code = tuple(code)
    if n is None:
        n = len(code) + 1
    if len(code) != n - 1:
        raise ValueError(f"code for {n + 1} vertices must have length {n - 1}, got {len(code)}")
    if any(not 0 <= c <= n for c in code):
        raise ValueError("code entries must lie in 0..n")
    seq = list(reversed(code))
    degree = [1] * (n + 1)
    for c in seq:
        degree[c] += 1
    leaves = [-v for v in range(n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for c in seq:
        leaf = -heapq.heappop(leaves)
        edges.append((leaf, c))
        degree[c] -= 1
        if degree[c] == 1:
            heapq.heappush(leaves, -c)
    u, v = (-a for a in leaves)
    edges.append((u, v))
    adj = {v: [] for v in range(n + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    parent = [None] * (n + 1)
    seen = {0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b not in seen:
                seen.add(b)
                parent[b] = a
                queue.append(b)
    return RootedTree(tuple(parent[1:]))


def prufer_to_pf_circular(code: Sequence[int]) -> Tuple[int, ...]:
    """Prepend 0, read 0 as spot n+1 on a circle of n+1 spots, return the parking rotation."""
    n = len(code) + 1
    size = n + 1
    base = [size] + [c if c else size for c in code]
    for d in range(size):
        cand = tuple((a - 1 + d) % size + 1 for a in base)
        if is_parking_function(cand):
            return cand
    raise AssertionError("no parking rotation found")  # pragma: no cover


def tree_to_pf_bfs(T: RootedTree) -> Tuple[int, ...]:
    """Car v prefers 1 + (breadth-first rank of its parent), children visited by label."""
    ch = T.children()
    rank = {}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        rank[v] = len(rank)
        queue.extend(sorted(ch[v]))
    return tuple(1 + rank[par] for par in T.parent)


def enumerate_trees(n: int) -> Iterator[RootedTree]:
    """All (n+1)^(n-1) rooted trees on {0..n} via their codes."""
    if n == 0:
        yield RootedTree(())
        return
    for code in itertools.product(range(n + 1), repeat=n - 1):
        yield prufer_decode(code, n)


@dataclass(frozen=True)
class Forest:
    """Parent map on vertices 0..n; vertices in ``roots`` have parent -1."""

    parent: Tuple[int, ...]
    roots: Tuple[int, ...]


def enumerate_forests(vertices: int, roots: int) -> Iterator[Forest]:
    """Rooted spanning forests of {0..vertices-1} whose roots are {0..roots-1}.

    Obtained as trees on an extra super-root whose children are exactly the
    designated roots.
    """
    if not 1 <= roots <= vertices:
        raise ValueError("need 1 <= roots <= vertices")
    n = vertices  # super-root is vertex 0, original vertex j is j+1
    root_set = set(range(1, roots + 1))
    for T in enumerate_trees(n):
        ch0 = {v for v, par in enumerate(T.parent, 1) if par == 0}
        if ch0 != root_set:
            continue
        parent = tuple(-1 if par == 0 else par - 1 for par in T.parent)
        yield Forest(parent, tuple(range(roots)))


def forest_count(vertices: int, roots: int) -> int:
    # Cayley: k n^(n-k-1) forests on n labelled vertices with k specified roots
    if roots == vertices:
        return 1
    return roots * vertices ** (vertices - roots - 1)


def pf_count(n: int) -> int:
    return (n + 1) ** (n - 1) if n else 1


__all__ = [
    "RootedTree",
    "TreeStats",
    "Forest",
    "tree_stats",
    "prufer_encode",
    "prufer_decode",
    "prufer_to_pf_circular",
    "tree_to_pf_bfs",
    "enumerate_trees",
    "enumerate_forests",
    "forest_count",
    "PrefVector",
]
