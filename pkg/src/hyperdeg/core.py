"""Ground-set combinatorics for 3-uniform hypergraphs.

Edges are sorted index triples (i, j, k) with 0 <= i < j < k < n, kept in
strictly increasing lexicographic order inside a hypergraph, so edge sets
are duplicate-free by construction. The 0/1 incidence-vector view of an
edge is recoverable as the indicator vector of {i, j, k}.

Every aggregate value carries its ground-set size n and operations reject
operands that disagree on n. All integer arithmetic is checked against the
signed 64-bit range: a result outside [-2^63, 2^63 - 1] raises
Int64OverflowError. Python ints never wrap, so the explicit check is what
enforces the 64-bit contract.

Everything here is an immutable value; all operations are pure functions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

I64_MIN = -(1 << 63)
I64_MAX = (1 << 63) - 1

Triple = tuple[int, int, int]


class Int64OverflowError(OverflowError):
    """A computed value left the signed 64-bit range."""


class GroundSetMismatchError(ValueError):
    """Operands disagree on the ground-set size n."""


class InstanceTooLargeError(ValueError):
    """Instance exceeds the enforced size guard of an exhaustive routine."""


class CertificateError(ValueError):
    """A certificate map was applied to a hypergraph that cannot certify."""


def i64(value: int, what: str = "value") -> int:
    """Return `value` unchanged, or raise if it is outside the i64 range."""
    if value < I64_MIN or value > I64_MAX:
        raise Int64OverflowError(f"{what} = {value} is outside the signed 64-bit range")
    return value


def checked_sum(values: Iterable[int], what: str = "sum") -> int:
    """Sum with every partial sum checked against the i64 range."""
    total = 0
    for v in values:
        total = i64(total + v, what)
    return total


def checked_dot(u: Sequence[int], v: Sequence[int], what: str = "inner product") -> int:
    """Inner product with every term and partial sum checked against i64."""
    if len(u) != len(v):
        raise GroundSetMismatchError(
            f"inner product needs equal lengths, got {len(u)} and {len(v)}"
        )
    total = 0
    for a, b in zip(u, v):
        total = i64(total + i64(a * b, what), what)
    return total


def _validate_triple(edge: Sequence[int], n: int) -> Triple:
    try:
        i, j, k = edge
    except (TypeError, ValueError):
        raise ValueError(f"edge {edge!r} is not an index triple") from None
    if not (isinstance(i, int) and isinstance(j, int) and isinstance(k, int)):
        raise ValueError(f"edge {edge!r} has non-integer indices")
    if not 0 <= i < j < k < n:
        raise ValueError(f"edge ({i}, {j}, {k}) invalid for ground set of size {n}")
    return (i, j, k)


@dataclass(frozen=True)
class Hypergraph:
    """A set of triples on ground set [n], stored in increasing lex order."""

    n: int
    edges: tuple[Triple, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"ground-set size must be a nonnegative integer, got {self.n!r}")
        canon = []
        prev = None
        for edge in self.edges:
            t = _validate_triple(edge, self.n)
            if prev is not None and t <= prev:
                raise ValueError(f"edges not strictly increasing at {t}")
            canon.append(t)
            prev = t
        object.__setattr__(self, "edges", tuple(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Hypergraph":
        """Build from edges in any order; sorts and rejects duplicates."""
        return cls(n, tuple(sorted(tuple(e) for e in edges)))

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, edge: object) -> bool:
        return edge in set(self.edges)


@dataclass(frozen=True)
class DegreeSequence:
    """Nonnegative integer vector of length n; entry v counts edges at v."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(self.values)
        for v, x in enumerate(vals):
            if not isinstance(x, int):
                raise ValueError(f"degree at index {v} is not an integer: {x!r}")
            if x < 0:
                raise ValueError(f"degree at index {v} is negative: {x}")
            i64(x, f"degree at index {v}")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]


@dataclass(frozen=True)
class WeightVector:
    """Signed integer vector of length n, entries within the i64 range."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(self.values)
        for v, x in enumerate(vals):
            if not isinstance(x, int):
                raise ValueError(f"weight at index {v} is not an integer: {x!r}")
            i64(x, f"weight at index {v}")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


@dataclass(frozen=True)
class SignPartition:
    """All triples of [n] split by the sign of their weight sum."""

    s_minus: Hypergraph
    s_zero: Hypergraph
    s_plus: Hypergraph

    def __post_init__(self) -> None:
        if not (self.s_minus.n == self.s_zero.n == self.s_plus.n):
            raise GroundSetMismatchError("sign partition parts disagree on n")

    @property
    def n(self) -> int:
        return self.s_zero.n


@dataclass(frozen=True)
class CertificateCheck:
    """Outcome of a certificate verification; falsy iff the check failed."""

    ok: bool
    reason: Union[str, None] = None

    def __bool__(self) -> bool:
        return self.ok


def enumerate_triples(n: int) -> list[Triple]:
    """All C(n, 3) triples of [n] in lexicographic order (empty for n < 3)."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"ground-set size must be a nonnegative integer, got {n!r}")
    return list(itertools.combinations(range(n), 3))


def degree_sum(h: Hypergraph) -> DegreeSequence:
    """Per-vertex incidence counts of h; the entries total 3 * |edges|."""
    counts = [0] * h.n
    for i, j, k in h.edges:
        counts[i] += 1
        counts[j] += 1
        counts[k] += 1
    i64(3 * len(h.edges), "degree total")
    return DegreeSequence(tuple(counts))


def weighted_value(w: WeightVector, x: Sequence[int]) -> int:
    """w_i + w_j + w_k for the triple x = (i, j, k), overflow-checked."""
    t = _validate_triple(x, w.n)
    vals = w.values
    return i64(vals[t[0]] + vals[t[1]] + vals[t[2]], "weighted value")


def sign_partition(w: WeightVector) -> SignPartition:
    """Split all triples of [n] by the sign of their w-value.

    Each part keeps the lexicographic enumeration order, so the three
    hypergraphs are canonical. Exact integer signs; no epsilon.
    """
    vals = w.values
    neg: list[Triple] = []
    zero: list[Triple] = []
    pos: list[Triple] = []
    for x in itertools.combinations(range(len(vals)), 3):
        v = i64(vals[x[0]] + vals[x[1]] + vals[x[2]], "weighted value")
        if v < 0:
            neg.append(x)
        elif v > 0:
            pos.append(x)
        else:
            zero.append(x)
    n = len(vals)
    return SignPartition(
        s_minus=Hypergraph(n, tuple(neg)),
        s_zero=Hypergraph(n, tuple(zero)),
        s_plus=Hypergraph(n, tuple(pos)),
    )


def verify_certificate(
    h: Union[Hypergraph, Sequence[Sequence[int]]], d: DegreeSequence
) -> CertificateCheck:
    """Check that h is a well-formed hypergraph on [n] with degree vector d.

    Accepts either a validated Hypergraph or raw (untrusted) edge data, as
    arrives from a certificate file. Never raises on malformed input: the
    result is falsy and carries a machine-readable reason. Runs in time
    linear in the number of edges, hence O(n^3).
    """
    n = d.n
    if isinstance(h, Hypergraph):
        if h.n != n:
            return CertificateCheck(False, "ground_set_mismatch")
        edges: Sequence[Sequence[int]] = h.edges
    else:
        edges = h
    counts = [0] * n
    prev = None
    for edge in edges:
        try:
            t = _validate_triple(edge, n)
        except ValueError:
            return CertificateCheck(False, "malformed_edge")
        if prev is not None and t <= prev:
            return CertificateCheck(False, "edges_out_of_order")
        prev = t
        counts[t[0]] += 1
        counts[t[1]] += 1
        counts[t[2]] += 1
    if tuple(counts) != d.values:
        return CertificateCheck(False, "degree_mismatch")
    return CertificateCheck(True)
