"""Tree generation for exhaustive and randomized sweeps.

Labeled trees are enumerated through their length-(n-2) vertex sequences
(each sequence over [0, n) corresponds to exactly one labeled tree), giving
complete coverage at small n. Random trees inside the even-leaf-distance
class are grown by attaching length-2 paths, which cannot leave the class.
"""

from __future__ import annotations

import heapq
import itertools
import random
from typing import Iterator, Sequence

from .errors import LabelOutOfRange, TooLarge
from .graph import Edge, Graph, edge

MAX_ENUMERATION_N = 9  # 9^7 trees, just under five million

RNG_NAME = "python-random-mersenne-twister"


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """The unique labeled tree on ``n`` vertices with this code sequence."""
    if n < 2:
        raise ValueError("decoding needs at least two vertices")
    if len(seq) != n - 2:
        raise ValueError(f"sequence length must be {n - 2}, got {len(seq)}")
    for s in seq:
        if not 0 <= s < n:
            raise LabelOutOfRange(f"label {s} not in [0, {n})")
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges: list[Edge] = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append(edge(leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    edges.append(edge(a, b))
    return Graph.from_edges(edges, n=n)


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on ``n`` vertices, streamed in code order."""
    if n < 2:
        raise ValueError("enumeration needs at least two vertices")
    if n > MAX_ENUMERATION_N:
        raise TooLarge(
            f"{n ** (n - 2)} labeled trees on {n} vertices exceeds the enumeration cap"
        )
    return (prufer_decode(seq, n) for seq in itertools.product(range(n), repeat=n - 2))


def random_even_leaf_tree(cherries: int, seed: int) -> Graph:
    """Random tree with pairwise-even leaf distances, deterministic per seed.

    Grows from a single root by attaching ``cherries`` length-2 paths, each
    at a uniformly random vertex of the root's parity class. Every leaf ends
    up in that class, so leaf distances are even by construction. The result
    has 2 * cherries + 1 vertices. Randomness comes from ``random.Random``
    (Mersenne Twister), so a fixed seed reproduces the tree everywhere.
    """
    if cherries < 1:
        raise ValueError("at least one attached path is required")
    rng = random.Random(seed)
    edges: list[Edge] = []
    anchors = [0]  # root-parity vertices: the root plus every path tip
    next_label = 1
    for _ in range(cherries):
        x = anchors[rng.randrange(len(anchors))]
        mid, tip = next_label, next_label + 1
        next_label += 2
        edges.append(edge(x, mid))
        edges.append(edge(mid, tip))
        anchors.append(tip)
    return Graph.from_edges(edges, n=next_label)
