"""Enumeration of small loop-free digraphs, ordered by adjacency bitmask."""
from __future__ import annotations

from itertools import permutations

from .errors import HatError, TooManyNodes

MAX_NODES = 5
MODES = ("all", "connected-only", "up-to-iso")


def off_diagonal(n: int) -> list[tuple[int, int]]:
    """Bit i of a mask stands for the i-th pair here (row-major)."""
    return [(a, b) for a in range(n) for b in range(n) if a != b]


def edges_of(mask: int, n: int) -> frozenset:
    return frozenset(e for i, e in enumerate(off_diagonal(n)) if mask >> i & 1)


def mask_of(edges, n: int) -> int:
    index = {e: i for i, e in enumerate(off_diagonal(n))}
    return sum(1 << index[e] for e in edges)


def weakly_connected(edges, n: int) -> bool:
    if n <= 1:
        return True
    adj = {a: set() for a in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, todo = {0}, [0]
    while todo:
        for b in adj[todo.pop()]:
            if b not in seen:
                seen.add(b)
                todo.append(b)
    return len(seen) == n


def relabel(edges, perm) -> frozenset:
    return frozenset((perm[a], perm[b]) for a, b in edges)


def canonical_mask(edges, n: int, labels=None) -> tuple:
    """Least (labels, mask) over all relabelings; ``labels`` is an optional
    per-node tuple (e.g. innings) that must be carried along."""
    best = None
    for perm in permutations(range(n)):
        lab = None
        if labels is not None:
            lab = [0] * n
            for a in range(n):
                lab[perm[a]] = labels[a]
            lab = tuple(lab)
        key = (lab, mask_of(relabel(edges, perm), n))
        if best is None or key < best:
            best = key
    return best


def enumerate_digraphs(n: int, mode: str = "all"):
    """Yield edge sets of every loop-free digraph on n nodes, by ascending mask."""
    if n > MAX_NODES:
        raise TooManyNodes(f"{n} nodes exceeds the cap of {MAX_NODES}")
    if n < 0:
        raise HatError("node count must be nonnegative")
    if mode not in MODES:
        raise HatError(f"unknown enumeration mode {mode!r}")
    m = n * (n - 1)
    for mask in range(1 << m):
        edges = edges_of(mask, n)
        if mode == "connected-only" and not weakly_connected(edges, n):
            continue
        if mode == "up-to-iso" and canonical_mask(edges, n)[1] != mask:
            continue
        yield edges
