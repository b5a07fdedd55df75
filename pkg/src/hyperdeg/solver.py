"""Exact deciders with certificates for the three decision problems.

One search engine serves all three: depth-first over a static candidate
triple list with include/exclude branching, include tried first. The list
is sorted once, highest total demand d_i + d_j + d_k first with
lexicographic tie-break: triples the target leans on hardest are decided
first, which on reduced instances reaches the forced part of the
certificate before the search can wander (pure lexicographic order needs
billions of nodes there). At each node, on residual degrees r and the
undecided candidate counts per vertex, a branch is cut when

  (a) some r_v would go negative (includes are guarded, so never),
  (b) the residual total is not divisible by 3,
  (c) some r_v exceeds a third of the residual total, or
  (d) some r_v exceeds the number of undecided candidates containing v
      that are still includable (maintained incrementally; a candidate
      stops being includable once any of its vertices is saturated).

Each rule is a cheap necessary condition on any completion, so the search
is exact: YES comes with a certificate, NO means the space was exhausted.
The budget is a node-expansion count, not wall time, so outcomes are
reproducible across machines; exceeding it yields UNKNOWN, and any larger
budget returns the same YES/NO on instances already decided.

The engine exists twice with identical semantics: a pure-Python reference
and a numba-compiled transliteration used when numba imports. Tests pin
the two to the same answers, certificates, and node counts; the node
budget and certificate are engine-independent.

The brute-force oracles at the bottom are deliberately independent of the
engine (and of the core degree arithmetic): they enumerate subsets by
bitmask popcounts, or perfect triple partitions directly, and exist to
catch bugs in everything above them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from time import perf_counter
from typing import Literal, Sequence, Union

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is an install-time choice
    njit = None

from .core import (
    CertificateCheck,
    DegreeSequence,
    Hypergraph,
    InstanceTooLargeError,
    Triple,
    checked_sum,
    enumerate_triples,
    i64,
    sign_partition,
    verify_certificate,
)
from .reduction import ThreePartitionInstance, ZeroWeightInstance

DEFAULT_BUDGET = 10_000_000

Answer = Literal["YES", "NO", "UNKNOWN"]


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    millis: int
    budget_used: float


@dataclass(frozen=True)
class DecisionOutcome:
    answer: Answer
    certificate: Union[Hypergraph, None]
    stats: SearchStats


class _BudgetExhausted(Exception):
    pass


def prefilter_degseq(d: DegreeSequence) -> Union[str, None]:
    """Cheap necessary conditions on d; a reason string means NO.

    Returns None (PASS) when no condition fires; PASS does not imply YES.
    """
    vals = d.values
    n = len(vals)
    total = checked_sum(vals, "degree total")
    if total % 3:
        return f"degree total {total} is not divisible by 3"
    per_vertex_cap = comb(n - 1, 2) if n >= 1 else 0
    for v, x in enumerate(vals):
        if x > per_vertex_cap:
            return f"d[{v}] = {x} exceeds the per-vertex maximum C(n-1,2) = {per_vertex_cap}"
    edges = total // 3
    if edges > comb(n, 3):
        return f"implied edge count {edges} exceeds C(n,3) = {comb(n, 3)}"
    for v, x in enumerate(vals):
        if x > edges:
            return f"d[{v}] = {x} exceeds the implied edge count {edges}"
    return None


def _search(
    n: int, candidates: Sequence[Triple], target: Sequence[int], budget: int
) -> tuple[Answer, Union[tuple[Triple, ...], None], int]:
    """Run the include/exclude DFS; returns (answer, edges or None, nodes).

    avail[v] counts the undecided candidates containing v that are still
    includable; when an include saturates a vertex, the remaining
    candidates through it are marked dead and removed from the counts of
    their other vertices (and resurrected on backtrack).
    """
    m = len(candidates)
    r = list(target)
    total = sum(r)
    if total % 3:
        return "NO", None, 0
    avail = [0] * n
    by_vertex: list[list[int]] = [[] for _ in range(n)]
    for idx, (i, j, k) in enumerate(candidates):
        avail[i] += 1
        avail[j] += 1
        avail[k] += 1
        by_vertex[i].append(idx)
        by_vertex[j].append(idx)
        by_vertex[k].append(idx)
    alive = bytearray([1]) * m
    chosen: list[Triple] = []
    nodes = 0

    def rec(idx: int, total: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        if total == 0:
            return True
        if idx == m:
            return False
        for v in range(n):
            rv = r[v]
            if 3 * rv > total or rv > avail[v]:
                return False
        while not alive[idx]:
            # dead candidates can only be excluded; their counts are gone
            idx += 1
            if idx == m:
                return False
        t = candidates[idx]
        i, j, k = t
        avail[i] -= 1
        avail[j] -= 1
        avail[k] -= 1
        if r[i] and r[j] and r[k]:
            r[i] -= 1
            r[j] -= 1
            r[k] -= 1
            killed: list[int] = []
            for u in t:
                if r[u] == 0:
                    for idx2 in by_vertex[u]:
                        if idx2 > idx and alive[idx2]:
                            alive[idx2] = 0
                            killed.append(idx2)
                            a2, b2, c2 = candidates[idx2]
                            avail[a2] -= 1
                            avail[b2] -= 1
                            avail[c2] -= 1
            chosen.append(t)
            if rec(idx + 1, total - 3):
                return True
            chosen.pop()
            for idx2 in reversed(killed):
                alive[idx2] = 1
                a2, b2, c2 = candidates[idx2]
                avail[a2] += 1
                avail[b2] += 1
                avail[c2] += 1
            r[i] += 1
            r[j] += 1
            r[k] += 1
        if rec(idx + 1, total):
            return True
        avail[i] += 1
        avail[j] += 1
        avail[k] += 1
        return False

    try:
        found = rec(0, total)
    except _BudgetExhausted:
        return "UNKNOWN", None, budget
    if found:
        return "YES", tuple(chosen), nodes
    return "NO", None, nodes


if njit is not None:

    @njit(cache=True)
    def _rec_compiled(pos, total, cand, by_off, by_idx, r, avail, alive, chosen, killed, counters, budget):  # pragma: no cover - exercised via _search_compiled
        # transliteration of the rec() closure in _search; counters hold
        # (nodes, killed-stack top, chosen length)
        counters[0] += 1
        if counters[0] > budget:
            return -1
        if total == 0:
            return 1
        m = cand.shape[0]
        if pos == m:
            return 0
        n = r.shape[0]
        for v in range(n):
            rv = r[v]
            if 3 * rv > total or rv > avail[v]:
                return 0
        while alive[pos] == 0:
            pos += 1
            if pos == m:
                return 0
        i = cand[pos, 0]
        j = cand[pos, 1]
        k = cand[pos, 2]
        avail[i] -= 1
        avail[j] -= 1
        avail[k] -= 1
        if r[i] > 0 and r[j] > 0 and r[k] > 0:
            r[i] -= 1
            r[j] -= 1
            r[k] -= 1
            kstart = counters[1]
            for u in (i, j, k):
                if r[u] == 0:
                    for p in range(by_off[u], by_off[u + 1]):
                        idx2 = by_idx[p]
                        if idx2 > pos and alive[idx2] == 1:
                            alive[idx2] = 0
                            killed[counters[1]] = idx2
                            counters[1] += 1
                            avail[cand[idx2, 0]] -= 1
                            avail[cand[idx2, 1]] -= 1
                            avail[cand[idx2, 2]] -= 1
            chosen[counters[2]] = pos
            counters[2] += 1
            st = _rec_compiled(pos + 1, total - 3, cand, by_off, by_idx, r, avail, alive, chosen, killed, counters, budget)
            if st != 0:
                return st
            counters[2] -= 1
            for q in range(counters[1] - 1, kstart - 1, -1):
                idx2 = killed[q]
                alive[idx2] = 1
                avail[cand[idx2, 0]] += 1
                avail[cand[idx2, 1]] += 1
                avail[cand[idx2, 2]] += 1
            counters[1] = kstart
            r[i] += 1
            r[j] += 1
            r[k] += 1
        st = _rec_compiled(pos + 1, total, cand, by_off, by_idx, r, avail, alive, chosen, killed, counters, budget)
        if st != 0:
            return st
        avail[i] += 1
        avail[j] += 1
        avail[k] += 1
        return 0

else:
    _rec_compiled = None


def _search_compiled(
    n: int, candidates: Sequence[Triple], target: Sequence[int], budget: int
) -> tuple[Answer, Union[tuple[Triple, ...], None], int]:
    """Same contract and node accounting as _search, via the numba engine."""
    m = len(candidates)
    r = list(target)
    total = sum(r)
    if total % 3:
        return "NO", None, 0
    if budget < 1:
        return "UNKNOWN", None, 0
    # everything inside the compiled engine must stay far from the int64
    # edge; a residual above the candidate count dies at the root node of
    # the reference engine, so report the same single node here
    if any(rv > m for rv in r):
        return "NO", None, 1
    cand = np.array(candidates, dtype=np.int64).reshape(m, 3) if m else np.zeros((0, 3), dtype=np.int64)
    lists: list[list[int]] = [[] for _ in range(n)]
    avail = np.zeros(n, dtype=np.int64)
    for idx, (i, j, k) in enumerate(candidates):
        avail[i] += 1
        avail[j] += 1
        avail[k] += 1
        lists[i].append(idx)
        lists[j].append(idx)
        lists[k].append(idx)
    by_off = np.zeros(n + 1, dtype=np.int64)
    for v in range(n):
        by_off[v + 1] = by_off[v] + len(lists[v])
    flat = [x for lst in lists for x in lst]
    by_idx = np.array(flat if flat else [0], dtype=np.int64)
    alive = np.ones(max(m, 1), dtype=np.uint8)
    chosen = np.zeros(max(m, 1), dtype=np.int64)
    killed = np.zeros(max(m, 1), dtype=np.int64)
    counters = np.zeros(3, dtype=np.int64)
    status = _rec_compiled(
        0,
        total,
        cand,
        by_off,
        by_idx,
        np.array(r, dtype=np.int64),
        avail,
        alive,
        chosen,
        killed,
        counters,
        budget,
    )
    nodes = int(counters[0])
    if status < 0:
        return "UNKNOWN", None, budget
    if status == 1:
        edges = tuple(candidates[chosen[q]] for q in range(int(counters[2])))
        return "YES", edges, nodes
    return "NO", None, nodes


def _ordered_candidates(
    candidates: Sequence[Triple], target: Sequence[int]
) -> list[Triple]:
    """Static branching order: highest total demand first, then lexicographic."""
    return sorted(candidates, key=lambda t: (-(target[t[0]] + target[t[1]] + target[t[2]]), t))


def _run_search(
    n: int, candidates: Sequence[Triple], target: Sequence[int], budget: int
) -> tuple[Answer, Union[tuple[Triple, ...], None], int]:
    """Order, search, and canonicalize; solves the sparser side.

    A subset S of the candidates has degree vector t exactly when its
    complement within the candidates has degree vector cand_deg - t, so
    when t asks for more than half the candidates the engine runs on the
    complement target and the chosen set is flipped back afterwards.
    """
    if not isinstance(budget, int) or budget < 0:
        raise ValueError(f"budget must be a nonnegative integer, got {budget!r}")
    budget = min(budget, 1 << 62)
    target = tuple(target)
    cand_deg = [0] * n
    for i, j, k in candidates:
        cand_deg[i] += 1
        cand_deg[j] += 1
        cand_deg[k] += 1
    total = sum(target)
    flipped = (
        total % 3 == 0
        and 2 * (total // 3) > len(candidates)
        and all(t <= cd for t, cd in zip(target, cand_deg))
    )
    effective = (
        tuple(cd - t for cd, t in zip(cand_deg, target)) if flipped else target
    )
    ordered = _ordered_candidates(candidates, effective)
    if _rec_compiled is not None:
        answer, edges, nodes = _search_compiled(n, ordered, effective, budget)
    else:
        answer, edges, nodes = _search(n, ordered, effective, budget)
    if edges is not None:
        if flipped:
            complement = set(edges)
            edges = tuple(e for e in candidates if e not in complement)
        edges = tuple(sorted(edges))
    return answer, edges, nodes


def _outcome(
    answer: Answer,
    certificate: Union[Hypergraph, None],
    nodes: int,
    budget: int,
    started: float,
) -> DecisionOutcome:
    millis = int((perf_counter() - started) * 1000)
    used = nodes / budget if budget > 0 else 1.0
    return DecisionOutcome(answer, certificate, SearchStats(nodes, millis, used))


def decide_degseq(d: DegreeSequence, budget: int = DEFAULT_BUDGET) -> DecisionOutcome:
    """Decide whether d is the degree sequence of a 3-hypergraph on [n]."""
    started = perf_counter()
    if prefilter_degseq(d) is not None:
        return _outcome("NO", None, 0, budget, started)
    answer, edges, nodes = _run_search(d.n, enumerate_triples(d.n), d.values, budget)
    certificate = None
    if answer == "YES":
        assert edges is not None
        certificate = Hypergraph(d.n, edges)
        if not verify_certificate(certificate, d):
            raise RuntimeError("internal error: search returned an invalid certificate")
    return _outcome(answer, certificate, nodes, budget, started)


def decide_zero(inst: ZeroWeightInstance, budget: int = DEFAULT_BUDGET) -> DecisionOutcome:
    """Decide whether some G inside the zero-weight triples has degrees c.

    Same engine as decide_degseq, restricted to the S0 candidate list.
    """
    started = perf_counter()
    sp = sign_partition(inst.w)
    answer, edges, nodes = _run_search(inst.n, sp.s_zero.edges, inst.c.values, budget)
    certificate = None
    if answer == "YES":
        assert edges is not None
        certificate = Hypergraph(inst.n, edges)
        if not verify_zero_certificate(certificate.edges, inst):
            raise RuntimeError("internal error: search returned an invalid certificate")
    return _outcome(answer, certificate, nodes, budget, started)


def decide_partition(
    inst: ThreePartitionInstance, budget: int = DEFAULT_BUDGET
) -> DecisionOutcome:
    """Decide 3-partition: cover every index once by triples of a-value b.

    Immediately NO when n is not divisible by 3 (a perfect triple cover
    needs 3 | n); otherwise the engine runs on the value-b triples with the
    all-ones target.
    """
    started = perf_counter()
    if inst.n % 3:
        return _outcome("NO", None, 0, budget, started)
    a = inst.a
    b = inst.b
    candidates = [
        x
        for x in enumerate_triples(inst.n)
        if i64(a[x[0]] + a[x[1]] + a[x[2]], "a.x") == b
    ]
    answer, edges, nodes = _run_search(inst.n, candidates, (1,) * inst.n, budget)
    certificate = None
    if answer == "YES":
        assert edges is not None
        certificate = Hypergraph(inst.n, edges)
        if not verify_partition_certificate(certificate.edges, inst):
            raise RuntimeError("internal error: search returned an invalid certificate")
    return _outcome(answer, certificate, nodes, budget, started)


def verify_zero_certificate(
    edges: Sequence[Sequence[int]], inst: ZeroWeightInstance
) -> CertificateCheck:
    """Check a zero-weight certificate: well-formed, degrees c, all w.x = 0."""
    base = verify_certificate(edges, inst.c)
    if not base:
        return base
    w = inst.w.values
    for i, j, k in edges:
        if w[i] + w[j] + w[k] != 0:
            return CertificateCheck(False, "edge_outside_zero_set")
    return CertificateCheck(True)


def verify_partition_certificate(
    edges: Sequence[Sequence[int]], inst: ThreePartitionInstance
) -> CertificateCheck:
    """Check a 3-partition certificate: covers every index once, a-values b."""
    base = verify_certificate(edges, DegreeSequence((1,) * inst.n))
    if not base:
        return base
    a = inst.a
    for i, j, k in edges:
        if a[i] + a[j] + a[k] != inst.b:
            return CertificateCheck(False, "edge_value_mismatch")
    return CertificateCheck(True)


def _exists_subset_with_degrees(
    n: int, candidates: Sequence[Triple], target: Sequence[int]
) -> bool:
    """Exhaustively test all 2^len(candidates) subsets for degree vector target.

    Bitmask enumeration: subset code s has degree popcount(s & mask_v) at
    vertex v. Vectorized in chunks; exact, no pruning beyond the fact that
    no degree can exceed the candidate count.
    """
    m = len(candidates)
    tgt = [int(x) for x in target]
    if any(x < 0 or x > m for x in tgt):
        return False
    masks = [0] * n
    for e, (i, j, k) in enumerate(candidates):
        masks[i] |= 1 << e
        masks[j] |= 1 << e
        masks[k] |= 1 << e
    chunk = 1 << 16
    for lo in range(0, 1 << m, chunk):
        codes = np.arange(lo, min(lo + chunk, 1 << m), dtype=np.uint32)
        ok = np.ones(codes.shape, dtype=bool)
        for v in range(n):
            ok &= np.bitwise_count(codes & np.uint32(masks[v])) == tgt[v]
            if not ok.any():
                break
        if ok.any():
            return True
    return False


def bruteforce_degseq(d: DegreeSequence) -> bool:
    """Ground truth for realizability by exhausting all triple subsets, n <= 6."""
    n = d.n
    if n > 6:
        raise InstanceTooLargeError(f"degree-sequence brute force limited to n <= 6, got n = {n}")
    return _exists_subset_with_degrees(
        n, list(itertools.combinations(range(n), 3)), d.values
    )


def bruteforce_zero(inst: ZeroWeightInstance) -> bool:
    """Ground truth for the zero-weight problem; requires |S0| <= 20.

    Recomputes the zero-weight triples inline rather than reusing the sign
    partition, to stay independent of the code it checks.
    """
    w = inst.w.values
    candidates = [
        x
        for x in itertools.combinations(range(inst.n), 3)
        if w[x[0]] + w[x[1]] + w[x[2]] == 0
    ]
    if len(candidates) > 20:
        raise InstanceTooLargeError(
            f"zero-weight brute force limited to |S0| <= 20, got {len(candidates)}"
        )
    return _exists_subset_with_degrees(inst.n, candidates, inst.c.values)


def bruteforce_partition(inst: ThreePartitionInstance) -> bool:
    """Ground truth for 3-partition by exhausting perfect triple partitions.

    NO outright when 3 does not divide n; enforced n <= 12 (15400 partitions).
    """
    n = inst.n
    if n % 3:
        return False
    if n > 12:
        raise InstanceTooLargeError(f"partition brute force limited to n <= 12, got n = {n}")
    a = inst.a
    b = inst.b

    def cover(unused: list[int]) -> bool:
        if not unused:
            return True
        first = unused[0]
        rest = unused[1:]
        for second, third in itertools.combinations(rest, 2):
            if a[first] + a[second] + a[third] != b:
                continue
            remaining = [u for u in rest if u != second and u != third]
            if cover(remaining):
                return True
        return False

    return cover(list(range(n)))
