"""Breadth-first rewriting closures over positive words.

These are the elementary-transformation searches: insert or delete a
relation left-hand side anywhere in a word.  They serve two roles —
certifying that generators of a derived group presentation are
two-sided invertible, and acting as an independent equality oracle in
the test suite.  Positive answers are always sound; exhaustion of a
capped search is reported as "don't know" rather than "no".
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional

from .words import Word


def _neighbors(w: Word, relations: tuple[Word, ...], max_len: int):
    for rel in relations:
        rl = len(rel)
        # deletions
        for i in range(len(w) - rl + 1):
            if w[i: i + rl] == rel:
                yield w[:i] + w[i + rl:]
        # insertions
        if len(w) + rl <= max_len:
            for i in range(len(w) + 1):
                yield w[:i] + rel + w[i:]


def reachable_words(
    seed: Word,
    relations: Iterable[Word],
    max_len: int,
    max_states: int,
) -> tuple[set[Word], bool]:
    """Words connected to ``seed`` by insertions/deletions of relation
    left-hand sides, capped at ``max_len`` letters and ``max_states``
    distinct words.  Returns (set, hit_a_cap)."""
    relations = tuple(tuple(r) for r in relations if r)
    seen = {tuple(seed)}
    frontier = deque(seen)
    capped = False
    while frontier:
        w = frontier.popleft()
        if len(w) + min((len(r) for r in relations), default=1) > max_len:
            capped = True  # some insertion neighbor was out of reach
        for v in _neighbors(w, relations, max_len):
            if v not in seen:
                if len(seen) >= max_states:
                    return seen, True
                seen.add(v)
                frontier.append(v)
    return seen, capped


def equal_words_bfs(
    x: Word,
    y: Word,
    relations: Iterable[Word],
    max_len: int,
    max_states: int,
) -> Optional[bool]:
    """Decide x = y by a capped elementary-transformation search.

    True means provably equal.  False is returned only when the whole
    connected component of ``x`` was enumerated without hitting a cap,
    so it is sound.  None means the search was inconclusive.
    """
    x, y = tuple(x), tuple(y)
    if x == y:
        return True
    relations = tuple(tuple(r) for r in relations if r)
    seen = {x}
    frontier = deque(seen)
    capped = False
    while frontier:
        w = frontier.popleft()
        if relations and len(w) + min(len(r) for r in relations) > max_len:
            capped = True
        for v in _neighbors(w, relations, max_len):
            if v == y:
                return True
            if v not in seen:
                if len(seen) >= max_states:
                    return None
                seen.add(v)
                frontier.append(v)
    return None if capped else False


def certify_invertible_generators(
    num_generators: int,
    relations: Iterable[Word],
    max_len: int,
    max_states: int,
) -> set[int]:
    """Generators certified two-sided invertible in the monoid
    presented by ``relations = 1``.

    Enumerates words provably equal to the empty word; a member
    ``g ...`` certifies a right inverse for ``g`` and ``... g`` a left
    inverse.  Returns the set of generators with both certificates,
    stopping as soon as every generator has both.
    """
    relations = tuple(tuple(r) for r in relations if r)
    wanted = set(range(1, num_generators + 1))
    right_ok: set[int] = set()
    left_ok: set[int] = set()

    def done() -> bool:
        return wanted <= right_ok and wanted <= left_ok

    seen: set[Word] = {()}
    frontier = deque(seen)
    while frontier and not done():
        w = frontier.popleft()
        for v in _neighbors(w, relations, max_len):
            if v not in seen and len(seen) < max_states:
                seen.add(v)
                frontier.append(v)
                if v:
                    right_ok.add(v[0])
                    left_ok.add(v[-1])
    return {g for g in wanted if g in right_ok and g in left_ok}
