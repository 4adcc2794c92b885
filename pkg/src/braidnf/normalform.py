"""
Greedy normal forms for positive words and for group elements.

A positive word is a sequence of simple braids.  Its right-greedy normal
form is the unique factorisation into non-identity simple braids in which
no adjacent pair admits a transfer; it is computed by folding the letters
in from the right, threading each new letter through the existing form
with a single left-to-right sweep of transfers.

The same rewriting step (replace an adjacent pair by its head and tail)
applied at arbitrary non-normal positions is confluent and terminating,
so `gs_rewrite_to_fixpoint` reaches the identical form under a leftmost
or rightmost strategy; the oracle module leans on this to test
confluence.

Group elements are canonicalised as delta_power copies of the half twist
followed by a positive normal form with no half-twist factor.  Inverse
generators enter through the identity sigma_i^-1 = Omega^-1 * u_i where
u_i is the simple braid complementing sigma_i to the half twist, and
powers of the half twist commute past positive braids at the price of a
flip.
"""
from __future__ import annotations

import dataclasses
from typing import Callable, Optional, Sequence

from .perms import compose, flip, identity, omega
from .simple import (
    SimpleBraid,
    _is_normal_words,
    _transfer_words,
    generator_braid,
)

# A rewrite-step observer: receives (position, left, right, head, tail) as
# bare one-line words.  Used by the verification suites to watch crossing
# conservation and termination without slowing the plain code path.
StepHook = Optional[Callable[[int, tuple, tuple, tuple, tuple], None]]


@dataclasses.dataclass(frozen=True)
class PositiveWord:
    """A word over simple braids; letters may include the identity."""

    n: int
    letters: tuple[SimpleBraid, ...]

    def __post_init__(self):
        for letter in self.letters:
            if letter.n != self.n:
                raise ValueError(f"letter on {letter.n} strands in a word on {self.n}")

    @classmethod
    def from_braids(cls, n: int, letters) -> PositiveWord:
        return cls(n, tuple(letters))

    @classmethod
    def from_generator_indices(cls, n: int, indices: Sequence[int]) -> PositiveWord:
        return cls(n, tuple(generator_braid(n, i) for i in indices))

    def permutation(self) -> tuple[int, ...]:
        word = identity(self.n)
        for letter in self.letters:
            word = compose(word, letter.perm)
        return word

    def crossing_number(self) -> int:
        return sum(letter.crossings() for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)


def is_normal(factors: Sequence[SimpleBraid]) -> bool:
    """
    Whether a factor sequence is a right-greedy normal form: no identity
    factors, and every adjacent pair admits no transfer.
    """
    if any(f.is_identity() for f in factors):
        return False
    return all(
        _is_normal_words(factors[i].perm, factors[i + 1].perm)
        for i in range(len(factors) - 1)
    )


@dataclasses.dataclass(frozen=True)
class PositiveNormalForm:
    """A validated right-greedy normal form of a positive braid."""

    n: int
    factors: tuple[SimpleBraid, ...]

    def __post_init__(self):
        for f in self.factors:
            if f.n != self.n:
                raise ValueError(f"factor on {f.n} strands in a form on {self.n}")
        if not is_normal(self.factors):
            raise ValueError("factor sequence is not a greedy normal form")

    def permutation(self) -> tuple[int, ...]:
        word = identity(self.n)
        for f in self.factors:
            word = compose(word, f.perm)
        return word

    def crossing_number(self) -> int:
        return sum(f.crossings() for f in self.factors)

    def __len__(self) -> int:
        return len(self.factors)


@dataclasses.dataclass(frozen=True)
class GroupNormalForm:
    """
    Canonical form of a braid group element: delta_power copies of the
    half twist followed by a positive normal form containing none.
    """

    n: int
    delta_power: int
    factors: tuple[SimpleBraid, ...]

    def __post_init__(self):
        for f in self.factors:
            if f.n != self.n:
                raise ValueError(f"factor on {f.n} strands in a form on {self.n}")
        if not is_normal(self.factors):
            raise ValueError("factor sequence is not a greedy normal form")
        top = omega(self.n)
        if any(f.perm == top and self.n > 1 for f in self.factors):
            raise ValueError("half-twist factors belong in delta_power")


# ---------------------------------------------------------------------------
# Rewriting on bare one-line words


def _prepend_word(a: tuple, factors: list, ident: tuple) -> list:
    """
    Normal form of a * factors, given that factors is already normal.

    One left-to-right sweep: carry a across, at each factor splitting the
    carry into an emitted head and a new carry that has absorbed the
    factor.  The sweep stops early at the first normal pair; the emitted
    heads are pairwise normal and identity heads can only arise before any
    non-identity head has been emitted, so dropping them is safe.
    """
    if a == ident:
        return list(factors)
    out: list = []
    carry = a
    for t in range(len(factors)):
        f = factors[t]
        if _is_normal_words(carry, f):
            out.append(carry)
            out.extend(factors[t:])
            return out
        _m, head, carry = _transfer_words(carry, f)
        if head != ident:
            out.append(head)
    out.append(carry)
    return out


def _append_word(core: list, x: tuple, ident: tuple) -> None:
    """
    Append one non-identity letter to a normal factor list, in place.

    The letter bubbles leftwards: rewrite the last pair, then the pair to
    its left, and so on until a pair is already normal.  Everything to the
    right of the current position stays normal throughout: along the
    unbroken chain of rewrites this is the left-normality stopping
    implication, and when a head vanishes the exchange law forces the
    next pair on the left to be normal already (a nontrivial transfer
    there would lengthen a tail the exchange law says is fixed), so the
    loop ends right after any deletion.
    """
    core.append(x)
    i = len(core) - 2
    while i >= 0:
        a, b = core[i], core[i + 1]
        if _is_normal_words(a, b):
            break
        _m, head, tail = _transfer_words(a, b)
        if head == ident:
            core[i : i + 2] = [tail]
        else:
            core[i] = head
            core[i + 1] = tail
        i -= 1


def _normalize_words(n: int, letters: Sequence[tuple]) -> list:
    ident = identity(n)
    factors: list = []
    for word in reversed(letters):
        if word != ident:
            factors = _prepend_word(word, factors, ident)
    return factors


# ---------------------------------------------------------------------------
# Public operations on positive words


def rewrite_pair_at(w: PositiveWord, i: int) -> PositiveWord:
    """
    Replace the adjacent pair (x_i, x_{i+1}) by its transfer (head, tail).
    Leaves the underlying braid, in particular the total permutation and
    every per-strand-pair crossing count, unchanged.
    """
    if not 0 <= i < len(w.letters) - 1:
        raise IndexError(f"no adjacent pair at position {i} in a word of length {len(w.letters)}")
    _m, head, tail = _transfer_words(w.letters[i].perm, w.letters[i + 1].perm)
    letters = (
        w.letters[:i] + (SimpleBraid(head), SimpleBraid(tail)) + w.letters[i + 2 :]
    )
    return PositiveWord(w.n, letters)


def prepend_simple(a: SimpleBraid, nf: PositiveNormalForm) -> PositiveNormalForm:
    """The normal form of a * nf, by a single left-to-right sweep."""
    if a.n != nf.n:
        raise ValueError(f"braid on {a.n} strands, form on {nf.n}")
    ident = identity(nf.n)
    factors = _prepend_word(a.perm, [f.perm for f in nf.factors], ident)
    return PositiveNormalForm(nf.n, tuple(SimpleBraid(f) for f in factors))


def normalize_positive(w: PositiveWord) -> PositiveNormalForm:
    """
    The right-greedy normal form of a positive word, folding letters in
    from the right and prepending each with one transfer sweep.
    """
    factors = _normalize_words(w.n, [letter.perm for letter in w.letters])
    return PositiveNormalForm(w.n, tuple(SimpleBraid(f) for f in factors))


def gs_rewrite_to_fixpoint(
    w: PositiveWord, strategy: str = "leftmost", step_hook: StepHook = None
) -> PositiveNormalForm:
    """
    Normalise by repeatedly rewriting one non-normal adjacent pair chosen
    by the given strategy, dropping identity factors as they appear.
    Confluence makes the result independent of the strategy; termination
    is bounded by the position-weighted crossing count of the input.
    """
    ident = identity(w.n)
    perms = [letter.perm for letter in w.letters if letter.perm != ident]

    def rewrite_at(i: int) -> None:
        a, b = perms[i], perms[i + 1]
        _m, head, tail = _transfer_words(a, b)
        if step_hook is not None:
            step_hook(i, a, b, head, tail)
        if head == ident:
            perms[i : i + 2] = [tail]
        else:
            perms[i] = head
            perms[i + 1] = tail

    if strategy == "leftmost":
        i = 0
        while i < len(perms) - 1:
            if _is_normal_words(perms[i], perms[i + 1]):
                i += 1
                continue
            rewrite_at(i)
            i = max(i - 1, 0)
    elif strategy == "rightmost":
        j = len(perms) - 2
        while j >= 0:
            if _is_normal_words(perms[j], perms[j + 1]):
                j -= 1
                continue
            rewrite_at(j)
            j = min(j + 1, len(perms) - 2)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return PositiveNormalForm(w.n, tuple(SimpleBraid(p) for p in perms))


def rewrite_potential(w: PositiveWord) -> int:
    """
    Termination bound for the pairwise rewriting: crossings weighted by
    distance from the right end.  Each nontrivial rewrite moves at least
    one crossing one slot to the right, so the rewrite count never exceeds
    this number.
    """
    ell = len(w.letters)
    return sum((ell - 1 - idx) * letter.crossings() for idx, letter in enumerate(w.letters))


# ---------------------------------------------------------------------------
# The group normal form


def _adj(n: int, i: int) -> tuple[int, ...]:
    word = list(range(1, n + 1))
    word[i - 1], word[i] = word[i], word[i - 1]
    return tuple(word)


def normalize_group(word) -> GroupNormalForm:
    """
    Canonicalise a signed word over Artin generators and half-twist
    symbols into (delta_power, positive factors).

    The running element is held as Omega^m * core * Omega^trail, with the
    half twists at the right kept as a bare count so that long positive
    stretches never bubble letters through them; at the end the trailing
    power is commuted to the front, flipping the core once per unit.
    """
    n = word.n
    if n == 1:
        # one strand: every symbol is trivial
        return GroupNormalForm(1, 0, ())
    ident = identity(n)
    top = omega(n)
    m = 0
    trail = 0
    core: list = []

    def shift_out_trail() -> None:
        """Move maximal run of trailing half twists from core into trail."""
        nonlocal trail
        while core and core[-1] == top:
            core.pop()
            trail += 1

    def append_letter(x: tuple) -> None:
        nonlocal trail
        if x == ident:  # two strands: the complement of the generator
            return
        if trail % 2:
            x = flip(x)
        if x == top:
            trail += 1
            return
        _append_word(core, x, ident)
        shift_out_trail()

    def times_inverse_half_twist() -> None:
        nonlocal m, trail, core
        if trail > 0:
            trail -= 1
        else:
            m -= 1
            core = [flip(f) for f in core]

    for tok in word.tokens:
        if tok.kind == "gen":
            if tok.sign > 0:
                append_letter(_adj(n, tok.index))
            else:
                times_inverse_half_twist()
                append_letter(compose(top, _adj(n, tok.index)))
        elif tok.kind == "garside":
            if tok.sign > 0:
                trail += 1
            else:
                times_inverse_half_twist()
        else:
            raise ValueError(f"unknown token kind {tok.kind!r}")

    delta = m + trail
    if trail % 2:
        core = [flip(f) for f in core]
    return GroupNormalForm(n, delta, tuple(SimpleBraid(f) for f in core))


def equal(w1, w2) -> bool:
    """Whether two signed words represent the same braid group element."""
    if w1.n != w2.n:
        raise ValueError(f"words on {w1.n} and {w2.n} strands")
    return normalize_group(w1) == normalize_group(w2)


__all__ = [
    "PositiveWord",
    "PositiveNormalForm",
    "GroupNormalForm",
    "is_normal",
    "rewrite_pair_at",
    "prepend_simple",
    "normalize_positive",
    "gs_rewrite_to_fixpoint",
    "rewrite_potential",
    "normalize_group",
    "equal",
]
