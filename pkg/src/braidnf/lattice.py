"""
The weak-order lattice on inversion sets.

Permutations ordered by inclusion of inversion sets form a lattice: the
empty set at the bottom, the full pair set (the reversing permutation) at
the top.  This module provides the validated InversionSet type together
with the lattice structure: complement, star, meet, join, the partial
order, and the degree-lexicographic total order used to rank simple
braids.

The meet here is the honest lattice greatest lower bound.  Two cruder
variants that circulate in the literature (a single betweenness-filter
pass, and collapsing to the empty set whenever the intersection violates
betweenness) are kept available as ``meet_variant`` for comparison; they
disagree with the lattice meet on some inputs and nothing else in this
package uses them.
"""
from __future__ import annotations

import dataclasses
import warnings
from typing import Iterator, Sequence

from .perms import (
    PairSet,
    _pair_of_slot,
    act_on_pairs,
    check_permutation,
    full_bits,
    inversion_bits,
    inversion_set,
    is_inversion_set,
    pair_slot,
    permutation_from_inversions,
)


@dataclasses.dataclass(frozen=True)
class InversionSet:
    """A pair set that is the inversion set of some permutation."""

    pairs: PairSet

    def __post_init__(self):
        if not is_inversion_set(self.pairs):
            raise ValueError(f"not an inversion set: {self.pairs.pairs()}")

    @classmethod
    def from_permutation(cls, p: Sequence[int]) -> InversionSet:
        return cls(inversion_set(p))

    @classmethod
    def from_pairs(cls, n: int, pairs) -> InversionSet:
        return cls(PairSet.from_pairs(n, pairs))

    @property
    def n(self) -> int:
        return self.pairs.n

    @property
    def bits(self) -> int:
        return self.pairs.bits

    def listing(self) -> tuple[tuple[int, int], ...]:
        return self.pairs.pairs()

    def permutation(self) -> tuple[int, ...]:
        return permutation_from_inversions(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair in self.pairs


def complement(r: InversionSet) -> InversionSet:
    """
    The full pair set minus r.  This is again an inversion set: it belongs
    to p*omega when r belongs to p, because appending the reversing
    permutation inverts exactly the previously non-inverted pairs.
    """
    return InversionSet(PairSet(r.n, full_bits(r.n) ^ r.bits))


def star(r: InversionSet, p: Sequence[int]) -> InversionSet:
    """
    The image of r under its own permutation p: the crossings renumbered
    from the bottom of the braid.  Equals the inversion set of the inverse
    permutation.  Requires r == inversion_set(p).
    """
    p = check_permutation(p)
    if inversion_bits(p) != r.bits:
        raise ValueError("pair set is not the inversion set of the given permutation")
    return InversionSet(act_on_pairs(p, r.pairs))


def _between_mask(i: int, k: int) -> int:
    """Strand-index bits j with i < j < k (bit j set for strand j)."""
    return ((1 << k) - 1) & ~((1 << (i + 1)) - 1)


def _interval_closed_fixpoint(n: int, bits: int) -> int:
    """
    Greedily delete pairs violating betweenness until none are left.

    Subsets satisfying betweenness are closed under union (the condition
    only ever asks that some pair be PRESENT, so enlarging a witness set
    never breaks it), hence a unique maximal betweenness-closed subset of
    the input exists.  A pair violating betweenness in the current set
    cannot lie in any betweenness-closed subset of it, so deletion order
    is irrelevant and the fixpoint is exactly that maximal subset.

    When the input is transitive (any intersection of inversion sets is),
    the fixpoint is transitive too: if (i,j) and (j,k) survive, one shows
    by induction on k - i that adding (i,k) back would keep betweenness,
    so maximality forces (i,k) to be present already.  The caller still
    validates the result and has an escape hatch just in case.
    """
    while True:
        rows = [0] * (n + 1)
        b = bits
        while b:
            low = b & -b
            i, j = _pair_of_slot(low.bit_length() - 1)
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            b ^= low
        removed = 0
        b = bits
        while b:
            low = b & -b
            i, k = _pair_of_slot(low.bit_length() - 1)
            if ~rows[i] & ~rows[k] & _between_mask(i, k):
                removed |= low
            b ^= low
        if not removed:
            return bits
        bits &= ~removed


def meet(r1: InversionSet, r2: InversionSet) -> InversionSet:
    """
    The greatest lower bound in the weak order: the unique maximal
    inversion set contained in the intersection of r1 and r2.
    """
    if r1.n != r2.n:
        raise ValueError(f"inversion sets on {r1.n} and {r2.n} strands")
    bits = _interval_closed_fixpoint(r1.n, r1.bits & r2.bits)
    try:
        return InversionSet(PairSet(r1.n, bits))
    except ValueError:  # pragma: no cover - unreachable per the argument above
        warnings.warn("meet fixpoint was not a valid inversion set; falling back to enumeration")
        from .oracle import brute_meet

        return brute_meet(r1, r2)


def meet_variant(r1: InversionSet, r2: InversionSet, mode: str) -> PairSet:
    """
    Two historical shortcuts for the meet, kept only so tests can document
    where they diverge from the lattice meet.

    mode "onepass" applies the betweenness filter once to the intersection;
    mode "collapse" returns the empty set whenever the intersection
    violates betweenness anywhere, and the intersection itself otherwise.
    Neither result is guaranteed to be a valid inversion set.
    """
    if r1.n != r2.n:
        raise ValueError(f"inversion sets on {r1.n} and {r2.n} strands")
    n = r1.n
    inter = PairSet(n, r1.bits & r2.bits)
    ok = lambda i, j: inter.bits >> pair_slot(i, j) & 1  # noqa: E731
    if mode == "onepass":
        keep = [
            (i, k)
            for i, k in inter
            if all(ok(i, j) or ok(j, k) for j in range(i + 1, k))
        ]
        return PairSet.from_pairs(n, keep)
    if mode == "collapse":
        for i, k in inter:
            if not all(ok(i, j) or ok(j, k) for j in range(i + 1, k)):
                return PairSet.empty(n)
        return inter
    raise ValueError(f"unknown meet variant {mode!r}")


def join(r1: InversionSet, r2: InversionSet) -> InversionSet:
    """The least upper bound, via De Morgan over the complement."""
    return complement(meet(complement(r1), complement(r2)))


def leq(r1: InversionSet, r2: InversionSet) -> bool:
    """The weak order itself: containment of inversion sets."""
    if r1.n != r2.n:
        raise ValueError(f"inversion sets on {r1.n} and {r2.n} strands")
    return r1.bits & ~r2.bits == 0


def deglex_key(r: InversionSet) -> tuple[int, tuple[tuple[int, int], ...]]:
    """
    Sort key for the degree-lexicographic order: cardinality first, then
    the pair listing sorted by (first, second) coordinate, compared
    pairwise the same way.
    """
    return (len(r), r.listing())


def deglex_compare(r1: InversionSet, r2: InversionSet) -> int:
    """Three-way degree-lexicographic comparison: -1, 0 or 1."""
    if r1.n != r2.n:
        raise ValueError(f"inversion sets on {r1.n} and {r2.n} strands")
    k1, k2 = deglex_key(r1), deglex_key(r2)
    return (k1 > k2) - (k1 < k2)


def meet_permutations(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """
    The weak-order meet of two permutations, computed in one-line notation.

    This is the longest common left factor: while some generator s_i sits
    below both (i.e. i is a descent of both words), peel it off both and
    append it to the accumulated meet.  When no common descent remains,
    nothing nontrivial divides both quotients, so the accumulator is the
    greatest lower bound.  Produces the same element as ``meet`` on the
    corresponding inversion sets (the test suite cross-checks this
    exhaustively); it exists because the normalizer needs a meet that does
    not materialise pair sets.
    """
    if len(u) != len(v):
        raise ValueError(f"permutations on {len(u)} and {len(v)} strands")
    n = len(u)
    uu, vv = list(u), list(v)
    m = list(range(1, n + 1))
    minv = list(range(1, n + 1))
    # positions worth examining, kept as a stack; i means the pair (i, i+1)
    todo = [i for i in range(n - 1) if uu[i] > uu[i + 1] and vv[i] > vv[i + 1]]
    while todo:
        i = todo.pop()
        if not (uu[i] > uu[i + 1] and vv[i] > vv[i + 1]):
            continue
        uu[i], uu[i + 1] = uu[i + 1], uu[i]
        vv[i], vv[i + 1] = vv[i + 1], vv[i]
        # append s_{i+1} to m: swap the values i+1 and i+2 wherever they sit
        p1, p2 = minv[i] - 1, minv[i + 1] - 1
        m[p1], m[p2] = m[p2], m[p1]
        minv[i], minv[i + 1] = minv[i + 1], minv[i]
        if i > 0:
            todo.append(i - 1)
        todo.append(i)
        if i + 2 < n:
            todo.append(i + 1)
    return tuple(m)
