"""Polynomial reductions between the three decision problems.

The chain runs 3-partition -> zero-weight selection -> degree-sequence
realizability:

  (1) 3-partition: given a in Z+^n and b with 3 * sum(a) = n * b, is there
      a set F of triples, each of a-value b, covering every index once?
  (2) zero-weight selection: given w in Z^n and c in Z+^n with w.c = 0, is
      there G inside the zero-weight triples with degree vector c?
  (3) realizability: given d in Z+^n, is there a 3-hypergraph H with
      degree vector d?

Step (1) -> (2) sets w := 3a - b*1 and c := 1, which makes w.x = 3(a.x - b)
for every triple x, so the feasible triple sets coincide and certificates
transfer unchanged. Step (2) -> (3) sets d := c + degree_sum(S+), where
S-/S0/S+ is the sign partition of w. Certificates lift by H := G | S+ and
project by G := H & S0; any H realizing the reduced d is forced to contain
all of S+ and avoid all of S-, which project_certificate checks loudly.

Promise violations (3 * sum(a) != n * b, w.c != 0) are malformed inputs,
rejected at instance construction, never NO answers.
"""

from __future__ import annotations

from typing import NamedTuple

from .core import (
    CertificateError,
    DegreeSequence,
    GroundSetMismatchError,
    Hypergraph,
    SignPartition,
    WeightVector,
    checked_dot,
    checked_sum,
    degree_sum,
    i64,
    sign_partition,
)

from dataclasses import dataclass


class PromiseViolationError(ValueError):
    """An instance violates the stated promise of its problem."""


@dataclass(frozen=True)
class ThreePartitionInstance:
    """Values a and target b, promised to satisfy 3 * sum(a) = n * b."""

    a: tuple[int, ...]
    b: int

    def __post_init__(self) -> None:
        vals = tuple(self.a)
        for v, x in enumerate(vals):
            if not isinstance(x, int) or x < 0:
                raise ValueError(f"a[{v}] must be a nonnegative integer, got {x!r}")
            i64(x, f"a[{v}]")
        object.__setattr__(self, "a", vals)
        if not isinstance(self.b, int) or self.b < 0:
            raise ValueError(f"b must be a nonnegative integer, got {self.b!r}")
        i64(self.b, "b")
        lhs = i64(3 * checked_sum(vals, "sum of a"), "3 * sum(a)")
        rhs = i64(len(vals) * self.b, "n * b")
        if lhs != rhs:
            raise PromiseViolationError(
                f"promise 3 * sum(a) = n * b violated: {lhs} != {rhs}"
            )

    @property
    def n(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class ZeroWeightInstance:
    """Weights w and target c, promised to satisfy w.c = 0."""

    w: WeightVector
    c: DegreeSequence

    def __post_init__(self) -> None:
        if self.w.n != self.c.n:
            raise GroundSetMismatchError(
                f"w has length {self.w.n} but c has length {self.c.n}"
            )
        dot = checked_dot(self.w.values, self.c.values, "w.c")
        if dot != 0:
            raise PromiseViolationError(f"promise w.c = 0 violated: w.c = {dot}")

    @property
    def n(self) -> int:
        return self.w.n


@dataclass(frozen=True)
class DegSeqInstance:
    """A realizability query: uniformity k and target degree vector d."""

    d: DegreeSequence
    k: int = 3

    def __post_init__(self) -> None:
        if self.k not in (2, 3):
            raise ValueError(f"only k in {{2, 3}} is supported, got k = {self.k!r}")

    @property
    def n(self) -> int:
        return self.d.n


class ZeroReduction(NamedTuple):
    degseq: DegSeqInstance
    sign_partition: SignPartition


class PartitionReduction(NamedTuple):
    degseq: DegSeqInstance
    sign_partition: SignPartition
    zero_weight: ZeroWeightInstance


def reduce_partition_to_zero(inst: ThreePartitionInstance) -> ZeroWeightInstance:
    """Map (a, b) to (w, c) with w_i = 3 * a_i - b and c the all-ones vector.

    The output satisfies w.c = 3 * sum(a) - n * b = 0 whenever the input
    promise holds, and w.x = 3 * (a.x - b) for every triple x.
    """
    b = inst.b
    w = WeightVector(
        tuple(i64(i64(3 * ai, "3 * a_i") - b, "weight entry") for ai in inst.a)
    )
    c = DegreeSequence((1,) * inst.n)
    return ZeroWeightInstance(w=w, c=c)


def map_partition_certificate(
    f: Hypergraph, inst: ThreePartitionInstance
) -> Hypergraph:
    """Carry a 3-partition certificate F across the (1) -> (2) reduction.

    The feasible triple sets {x : a.x = b} and {x : w.x = 0} coincide, so F
    transfers unchanged; this checks a.x = b for every edge and re-verifies
    w.x = 0 as a guard.
    """
    if f.n != inst.n:
        raise GroundSetMismatchError(
            f"certificate is on [{f.n}] but instance is on [{inst.n}]"
        )
    a = inst.a
    b = inst.b
    w = reduce_partition_to_zero(inst).w.values
    for i, j, k in f.edges:
        value = i64(a[i] + a[j] + a[k], "a.x")
        if value != b:
            raise CertificateError(
                f"edge ({i}, {j}, {k}) has a-value {value}, expected {b}"
            )
        if i64(w[i] + w[j] + w[k], "w.x") != 0:
            raise CertificateError(
                f"edge ({i}, {j}, {k}) has nonzero w-value after reduction"
            )
    return f


def reduce_zero_to_degseq(inst: ZeroWeightInstance) -> ZeroReduction:
    """Map (w, c) to the realizability target d = c + degree_sum(S+).

    Returns the sign partition of w alongside the reduced instance; the
    certificate maps need exactly this partition and it costs O(n^3) to
    recompute.
    """
    sp = sign_partition(inst.w)
    plus_degrees = degree_sum(sp.s_plus)
    d = DegreeSequence(
        tuple(
            i64(ci + pi, "reduced degree")
            for ci, pi in zip(inst.c.values, plus_degrees.values)
        )
    )
    return ZeroReduction(degseq=DegSeqInstance(d=d, k=3), sign_partition=sp)


def lift_certificate(g: Hypergraph, sp: SignPartition) -> Hypergraph:
    """Lift a zero-weight certificate G (G inside S0) to H = G | S+.

    degree_sum(H) = degree_sum(G) + degree_sum(S+) because the parts are
    disjoint, so H certifies the reduced degree sequence.
    """
    if g.n != sp.n:
        raise GroundSetMismatchError(
            f"certificate is on [{g.n}] but partition is on [{sp.n}]"
        )
    zero = set(sp.s_zero.edges)
    for edge in g.edges:
        if edge not in zero:
            raise CertificateError(f"edge {edge} lies outside the zero-weight triples")
    return Hypergraph(g.n, tuple(sorted(g.edges + sp.s_plus.edges)))


def project_certificate(h: Hypergraph, sp: SignPartition) -> Hypergraph:
    """Project a realizability certificate H down to G = H & S0.

    Any H realizing the reduced d must contain all of S+ and avoid all of
    S-; both forcing conditions are checked and a violation raises, since
    it means H does not certify the reduced instance.
    """
    if h.n != sp.n:
        raise GroundSetMismatchError(
            f"certificate is on [{h.n}] but partition is on [{sp.n}]"
        )
    edges = set(h.edges)
    stray = edges & set(sp.s_minus.edges)
    if stray:
        raise CertificateError(
            f"forcing violated: certificate meets S- at {sorted(stray)[:3]}"
        )
    missing = set(sp.s_plus.edges) - edges
    if missing:
        raise CertificateError(
            f"forcing violated: certificate misses S+ edges {sorted(missing)[:3]}"
        )
    zero = set(sp.s_zero.edges)
    return Hypergraph(h.n, tuple(e for e in h.edges if e in zero))


def reduce_partition_to_degseq(inst: ThreePartitionInstance) -> PartitionReduction:
    """Compose the two reductions, keeping all intermediate data.

    Equals reduce_zero_to_degseq(reduce_partition_to_zero(inst)); the
    zero-weight instance and sign partition are returned so a 3-partition
    witness can be traced to a hypergraph certificate and back.
    """
    zero_inst = reduce_partition_to_zero(inst)
    reduced = reduce_zero_to_degseq(zero_inst)
    return PartitionReduction(
        degseq=reduced.degseq,
        sign_partition=reduced.sign_partition,
        zero_weight=zero_inst,
    )
