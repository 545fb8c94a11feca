"""List reduction, the overlap relation, and the division algorithm.

The division algorithm repeatedly splits a pair of overlapping words
``X = M N`` / ``Y = N L`` (``N`` and ``M L`` non-empty) into the three
factors ``M, N, L`` and re-reduces the list, until no two list members
overlap.  Its output is the unique non-overlapping factor base of the
input words.
"""

from __future__ import annotations

from .errors import EmptyWordInListError, NotReducedError
from .words import Word

WordList = tuple[Word, ...]


def reduce_list(xs) -> WordList:
    """Drop empty words, then later duplicates, keeping first-seen order."""
    out: list[Word] = []
    seen: set[Word] = set()
    for w in xs:
        w = tuple(w)
        if not w or w in seen:
            continue
        seen.add(w)
        out.append(w)
    return tuple(out)


def is_reduced_list(xs) -> bool:
    xs = tuple(tuple(w) for w in xs)
    return all(xs) and len(set(xs)) == len(xs)


def omega(xs) -> int:
    """Sum of (length - 1) over the list; the termination weight of
    the division algorithm."""
    total = 0
    for w in xs:
        if not w:
            raise EmptyWordInListError("omega is undefined on empty words")
        total += len(w) - 1
    return total


def overlap_split(x: Word, y: Word, proper: bool = False):
    """Longest decomposition ``x = M N``, ``y = N L`` with ``N`` and
    ``M L`` non-empty, or None.

    With ``proper`` both M and L must be non-empty as well; this is the
    form required when x and y are the same list entry.
    """
    for t in range(min(len(x), len(y)), 0, -1):
        if proper and (t == len(x) or t == len(y)):
            continue
        if t == len(x) and t == len(y):
            continue  # M and L both empty is not an overlap
        if x[len(x) - t:] == y[:t]:
            return x[: len(x) - t], x[len(x) - t:], y[t:]
    return None


def words_overlap(x: Word, y: Word) -> bool:
    return overlap_split(x, y, proper=(x == y)) is not None


def has_self_overlap(w: Word) -> bool:
    """True when some proper non-empty prefix of w is also a suffix."""
    return overlap_split(w, w, proper=True) is not None


def _period_split(w: Word) -> tuple[Word, Word]:
    """Split a self-overlapping word as P^k Q with P its shortest
    period block and Q the proper remainder prefix.

    This is the stable form the piecewise M, N, L self-split grinds
    down to, and unlike that split it always lowers the list weight:
    the replacement {P, Q} weighs at most |P| + |Q| - 2 < |w| - 1.
    """
    m, n, _ = overlap_split(w, w, proper=True)  # longest border n
    p = len(m)  # shortest period
    k = len(w) // p
    return w[:p], w[k * p:]


def _first_overlap(xs: WordList):
    # Ordered pairs (i, j) scanned lexicographically, i == j included.
    for i in range(len(xs)):
        for j in range(len(xs)):
            if i == j:
                if overlap_split(xs[i], xs[i], proper=True) is not None:
                    return i, j, _period_split(xs[i])
            else:
                split = overlap_split(xs[i], xs[j])
                if split is not None:
                    return i, j, split
    return None


def delta(xs) -> WordList:
    """Run the division algorithm on a reduced list of words.

    The result is a reduced list in which no ordered pair of members
    (a member paired with itself only at a proper offset) overlaps;
    every input word is a product of output words, and every output
    word occurs in such a product.  Each splitting step strictly
    decreases :func:`omega`, which guarantees termination.
    """
    result, _ = delta_trace(xs)
    return result


def delta_trace(xs):
    """Like :func:`delta` but also returns the omega value after every
    splitting step (the initial value first)."""
    working = tuple(tuple(w) for w in xs)
    if not is_reduced_list(working):
        raise NotReducedError("division algorithm requires a reduced list")
    weights = [omega(working)] if working else [0]
    while True:
        hit = _first_overlap(working)
        if hit is None:
            return working, weights
        i, j, pieces = hit
        survivors = [w for k, w in enumerate(working) if k not in (i, j)]
        working = reduce_list(survivors + list(pieces))
        weights.append(omega(working))
        if weights[-1] >= weights[-2]:
            raise AssertionError("splitting step failed to decrease omega")
