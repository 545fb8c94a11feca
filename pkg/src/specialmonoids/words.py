"""Core word types over positive and signed alphabets.

A monoid word is a tuple of positive generator ids (1..n); the empty
tuple is the identity.  A group word is a tuple of non-zero ints where
``-g`` denotes the inverse of generator ``g``.  Plain tuples give
structural (graphical) equality, hashing and cheap slicing for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyRelatorError, UnknownGeneratorError

Word = tuple[int, ...]
GroupWord = tuple[int, ...]

EMPTY: Word = ()

_LOWER = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Alphabet:
    """A finite positive alphabet; generators are the integers 1..n."""

    n: int

    def __post_init__(self):
        if not 1 <= self.n <= 26:
            raise ValueError(f"alphabet size must be in 1..26, got {self.n}")

    def contains(self, word: Iterable[int]) -> bool:
        return all(1 <= g <= self.n for g in word)

    def contains_signed(self, word: Iterable[int]) -> bool:
        return all(g != 0 and 1 <= abs(g) <= self.n for g in word)


def free_reduce(w: GroupWord) -> GroupWord:
    """Return the unique freely reduced form of ``w``.

    Deletes adjacent mutually-inverse pairs until none remain; the
    result does not depend on deletion order.
    """
    stack: list[int] = []
    for g in w:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return tuple(stack)


def is_reduced(w: GroupWord) -> bool:
    return all(w[i] != -w[i + 1] for i in range(len(w) - 1))


def inverse(w: GroupWord) -> GroupWord:
    return tuple(-g for g in reversed(w))


def concat_reduce(*parts: GroupWord) -> GroupWord:
    out: list[int] = []
    for part in parts:
        for g in part:
            if out and out[-1] == -g:
                out.pop()
            else:
                out.append(g)
    return tuple(out)


def cyclic_reduce(w: GroupWord) -> GroupWord:
    """Freely reduce, then strip mutually-inverse first/last letters."""
    w = free_reduce(w)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


def is_cyclically_reduced(w: GroupWord) -> bool:
    return is_reduced(w) and not (len(w) >= 2 and w[0] == -w[-1])


def cyclic_permutations(w: GroupWord) -> set[GroupWord]:
    return {w[i:] + w[:i] for i in range(max(len(w), 1))}


@dataclass(frozen=True)
class SymmetrizedSet:
    """Cyclically reduced relators closed under inverses and rotations."""

    relators: frozenset[GroupWord]
    d: int  # maximum relator length

    def __post_init__(self):
        for r in self.relators:
            if not r:
                raise EmptyRelatorError("symmetrized set contains the empty word")
            if not is_cyclically_reduced(r):
                raise EmptyRelatorError(
                    f"symmetrized set member {r} is not cyclically reduced"
                )


def symmetrize(relators: Iterable[GroupWord]) -> SymmetrizedSet:
    """Close the given relators under inversion and cyclic permutation.

    Each input is freely and cyclically reduced first, which makes the
    operation total on non-trivial relators.  Raises
    :class:`EmptyRelatorError` if a relator reduces to the empty word.
    Applying ``symmetrize`` to its own output is the identity.
    """
    closed: set[GroupWord] = set()
    for r in relators:
        r = cyclic_reduce(r)
        if not r:
            raise EmptyRelatorError("relator freely reduces to the empty word")
        for rot in cyclic_permutations(r):
            closed.add(rot)
            closed.add(inverse(rot))
    if not closed:
        raise EmptyRelatorError("no relators given")
    return SymmetrizedSet(frozenset(closed), max(len(r) for r in closed))


# Text encoding shared by the presentation parser and the CLI: lowercase
# letters are positive generators, uppercase letters are their inverses,
# and "-" spells the empty word.

def letter_of(g: int) -> str:
    if g > 0:
        return _LOWER[g - 1]
    return _LOWER[-g - 1].upper()


def word_to_text(w: Iterable[int]) -> str:
    s = "".join(letter_of(g) for g in w)
    return s if s else "1"


def text_to_word(text: str, alphabet: Alphabet) -> Word:
    """Parse a positive (monoid) word; ``-`` denotes the empty word."""
    if text == "-" or text == "1":
        return ()
    letters = []
    for ch in text:
        idx = _LOWER.find(ch)
        if idx < 0 or idx >= alphabet.n:
            raise UnknownGeneratorError(f"unknown generator letter {ch!r}")
        letters.append(idx + 1)
    return tuple(letters)


def text_to_group_word(text: str, alphabet: Alphabet) -> GroupWord:
    """Parse a signed word; uppercase letters are inverse generators."""
    if text == "-" or text == "1":
        return ()
    letters = []
    for ch in text:
        lower = ch.lower()
        idx = _LOWER.find(lower)
        if idx < 0 or idx >= alphabet.n:
            raise UnknownGeneratorError(f"unknown generator letter {ch!r}")
        letters.append(-(idx + 1) if ch.isupper() else idx + 1)
    return tuple(letters)
