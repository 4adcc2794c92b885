"""
The explicit normal-form automaton over simple braids, for small n.

States are all n! simple braids.  Reading an Artin generator from state a
moves to tail_op(a, s_i) and emits head_op(a, s_i); after reading a
positive word the state is the maximal simple tail of the word, i.e. the
last factor of its greedy normal form.  States are ranked by the
degree-lexicographic order of their inversion sets so node identifiers in
exports are stable.
"""
from __future__ import annotations

import dataclasses
import math
from typing import Sequence

from .lattice import deglex_key
from .perms import all_permutations
from .simple import SimpleBraid, _transfer_words

MAX_STATE_STRANDS = 8


@dataclasses.dataclass(frozen=True)
class AutomatonGraph:
    """
    Complete transition table: transitions[s][i-1] is the pair
    (index of tail_op(state s, generator i), index of the emitted head).
    """

    n: int
    states: tuple[SimpleBraid, ...]
    transitions: tuple[tuple[tuple[int, int], ...], ...]

    def state_index(self, braid: SimpleBraid) -> int:
        return self._index()[braid.perm]

    def _index(self) -> dict:
        # Rebuilt on demand; the table is tiny compared to the transitions.
        return {state.perm: k for k, state in enumerate(self.states)}

    def transition_count(self) -> int:
        return sum(len(row) for row in self.transitions)


def build(n: int) -> AutomatonGraph:
    """Materialise the automaton; guarded because the state set is n!."""
    if not 2 <= n <= MAX_STATE_STRANDS:
        raise ValueError(f"state table has n! entries; need 2 <= n <= {MAX_STATE_STRANDS}")
    states = tuple(
        sorted((SimpleBraid(p) for p in all_permutations(n)), key=lambda b: deglex_key(b.inv))
    )
    index = {state.perm: k for k, state in enumerate(states)}
    assert len(states) == math.factorial(n)
    transitions = []
    gens = [tuple(_swap_identity(n, i)) for i in range(1, n)]
    for state in states:
        row = []
        for gen in gens:
            _m, head, tail = _transfer_words(state.perm, gen)
            row.append((index[tail], index[head]))
        transitions.append(tuple(row))
    return AutomatonGraph(n, states, tuple(transitions))


def _swap_identity(n: int, i: int) -> list[int]:
    word = list(range(1, n + 1))
    word[i - 1], word[i] = word[i], word[i - 1]
    return word


def run(g: AutomatonGraph, word: Sequence[int]) -> SimpleBraid:
    """
    Feed a word of generator indices through the automaton, starting at
    the identity state; the final state is the word's maximal simple tail.
    """
    index = 0  # the identity has the empty inversion set, hence rank 0
    for i in word:
        if not 1 <= i <= g.n - 1:
            raise ValueError(f"generator index {i} out of range 1..{g.n - 1}")
        index = g.transitions[index][i - 1][0]
    return g.states[index]


def export_dot(g: AutomatonGraph) -> str:
    """
    Deterministic DOT rendering: nodes in state-rank order labelled with
    one-line permutations, one edge per (state, generator) labelled by the
    generator index.
    """
    lines = [f"digraph braid_automaton_n{g.n} {{", "  rankdir=TB;"]
    for k, state in enumerate(g.states):
        label = " ".join(str(v) for v in state.perm)
        lines.append(f'  s{k} [label="{label}"];')
    for k, row in enumerate(g.transitions):
        for i, (nxt, _emit) in enumerate(row, start=1):
            lines.append(f'  s{k} -> s{nxt} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
