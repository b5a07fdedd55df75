"""The k = 2 case: graphical degree sequences, decided three ways.

eg_check evaluates the Erdos-Gallai inequality family in its two-index
(j, l) form. hh_realize runs the Havel-Hakimi construction and returns an
actual realization, which doubles as an independent oracle for eg_check.
graph_bruteforce enumerates every labeled graph on [n] (n <= 7) and is the
ground truth both are measured against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence, Union

import numpy as np

from .core import CertificateCheck, DegreeSequence, InstanceTooLargeError

Pair = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A simple graph on [n]: strictly increasing list of index pairs."""

    n: int
    edges: tuple[Pair, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"ground-set size must be a nonnegative integer, got {self.n!r}")
        canon = []
        prev = None
        for edge in self.edges:
            try:
                i, j = edge
            except (TypeError, ValueError):
                raise ValueError(f"edge {edge!r} is not an index pair") from None
            if not 0 <= i < j < self.n:
                raise ValueError(f"edge ({i}, {j}) invalid for ground set of size {self.n}")
            e = (i, j)
            if prev is not None and e <= prev:
                raise ValueError(f"edges not strictly increasing at {e}")
            canon.append(e)
            prev = e
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def degrees(self) -> tuple[int, ...]:
        counts = [0] * self.n
        for i, j in self.edges:
            counts[i] += 1
            counts[j] += 1
        return tuple(counts)


def eg_check(d: DegreeSequence) -> bool:
    """True iff d is graphical, by the Erdos-Gallai conditions.

    Requires the degree total to be even and, for d sorted descending,
    sum(d[:j]) - sum(d[l:]) <= j * (l - 1) for all 1 <= j <= l <= n.
    The O(n^2) pair loop is deliberate; n is small here and the brute-force
    and Havel-Hakimi oracles guard against transcription error.
    """
    vals = d.values
    total = sum(vals)
    if total % 2:
        return False
    s = sorted(vals, reverse=True)
    n = len(s)
    pre = [0] * (n + 1)
    acc = 0
    for i in range(n):
        acc += s[i]
        pre[i + 1] = acc
    for l in range(1, n + 1):
        tail = total - pre[l]
        lm1 = l - 1
        for j in range(1, l + 1):
            if pre[j] - tail > j * lm1:
                return False
    return True


def hh_realize(d: DegreeSequence) -> Union[Graph, None]:
    """Havel-Hakimi construction: a Graph realizing d, or None.

    Deterministic: each round picks the vertex with the highest residual
    degree (lowest index on ties) and connects it to the highest-residual
    other vertices (again lowest index on ties).
    """
    r = list(d.values)
    n = len(r)
    edges: list[Pair] = []
    while True:
        v = 0
        best = r[0] if n else 0
        for u in range(1, n):
            if r[u] > best:
                best = r[u]
                v = u
        if n == 0 or best == 0:
            break
        need = r[v]
        r[v] = 0
        targets = sorted((u for u in range(n) if u != v and r[u] > 0), key=lambda u: (-r[u], u))
        if len(targets) < need:
            return None
        for u in targets[:need]:
            r[u] -= 1
            edges.append((v, u) if v < u else (u, v))
    edges.sort()
    return Graph(n, tuple(edges))


@lru_cache(maxsize=None)
def _graph_degree_vectors(n: int) -> frozenset[tuple[int, ...]]:
    """Degree vectors of all 2^C(n,2) labeled graphs on [n], enumerated once."""
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    if m == 0:
        return frozenset({(0,) * n})
    codes = np.arange(1 << m, dtype=np.uint32)
    cols = []
    for v in range(n):
        mask = 0
        for e, (i, j) in enumerate(pairs):
            if v == i or v == j:
                mask |= 1 << e
        cols.append(np.bitwise_count(codes & np.uint32(mask)).astype(np.uint8))
    arr = np.stack(cols, axis=1)
    uniq = np.unique(arr, axis=0)
    return frozenset(map(tuple, uniq.tolist()))


def graph_bruteforce(d: DegreeSequence) -> bool:
    """Ground truth for graphicality by exhausting all graphs on [n], n <= 7."""
    n = d.n
    if n > 7:
        raise InstanceTooLargeError(f"graph brute force limited to n <= 7, got n = {n}")
    return d.values in _graph_degree_vectors(n)


def verify_graph_certificate(
    edges: Sequence[Sequence[int]], d: DegreeSequence
) -> CertificateCheck:
    """Check raw pair edges form a simple graph on [n] with degree vector d."""
    n = d.n
    counts = [0] * n
    prev = None
    for edge in edges:
        try:
            i, j = edge
        except (TypeError, ValueError):
            return CertificateCheck(False, "malformed_edge")
        if not (isinstance(i, int) and isinstance(j, int)) or not 0 <= i < j < n:
            return CertificateCheck(False, "malformed_edge")
        e = (i, j)
        if prev is not None and e <= prev:
            return CertificateCheck(False, "edges_out_of_order")
        prev = e
        counts[i] += 1
        counts[j] += 1
    if tuple(counts) != d.values:
        return CertificateCheck(False, "degree_mismatch")
    return CertificateCheck(True)
