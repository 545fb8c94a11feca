"""Decision procedures over a distinguished tuple.

Every word has a finite set of non-increasing rewrites: delete a
relation left-hand side, or swap an integral subword (a product of
c-words) for an equally-indexed integral word that is no longer.  Two
words are equal in the monoid exactly when these reachability sets
intersect; divisibility, invertibility and the maximal subgroup all
reduce to that single primitive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cwords import CWordSets, KLTuple, generate_c_words, is_distinguished
from .errors import InvariantViolationError, NotFinalError, NotInvertibleError
from .presentation import GroupPresentation
from .words import Word, word_to_text

Factors = tuple[tuple[int, Word], ...]  # (family index, member word)


@dataclass(frozen=True)
class IntegralWord:
    word: Word
    factors: Factors


@dataclass(frozen=True)
class Representation:
    """A final word split into stable letters and the maximal c-word
    runs (main integral words) between them."""

    stable_positions: tuple[int, ...]
    stable_word: Word
    segments: tuple[Word, ...]  # one integral word per gap, len(stable)+1

    def reassemble(self) -> Word:
        out: list[int] = list(self.segments[0])
        for letter, seg in zip(self.stable_word, self.segments[1:]):
            out.append(letter)
            out.extend(seg)
        return tuple(out)


def _families(t: KLTuple, cs: CWordSets | None) -> CWordSets:
    cs = cs if cs is not None else generate_c_words(t)
    if not is_distinguished(t):
        raise InvariantViolationError("decision procedures need a distinguished tuple")
    return cs


def _prefix_table(t: KLTuple, cs: CWordSets):
    # first letter -> [(family, member)]; at most one member of the
    # union can be a prefix at any position once no two c-words overlap.
    if "prefix_table" not in t._cache:
        table: dict[int, list[tuple[int, Word]]] = {}
        for i, fam in enumerate(cs.families):
            for c in fam:
                table.setdefault(c[0], []).append((i, c))
        t._cache["prefix_table"] = table
    return t._cache["prefix_table"]


def integral_decompose(w: Word, t: KLTuple, cs: CWordSets | None = None):
    """The unique factorization of ``w`` into c-words, or None.

    Greedy scanning is exact: distinct c-words never overlap, so at
    most one of them matches at each position.
    """
    cs = _families(t, cs)
    table = _prefix_table(t, cs)
    factors: list[tuple[int, Word]] = []
    pos = 0
    while pos < len(w):
        for i, c in table.get(w[pos], ()):
            if w[pos: pos + len(c)] == c:
                factors.append((i, c))
                pos += len(c)
                break
        else:
            return None
    return IntegralWord(w, tuple(factors))


def f_map(a: IntegralWord) -> Word:
    """Index word of an integral word: one derived-group letter per
    c-word factor.  Homomorphic under concatenation."""
    return tuple(i + 1 for i, _ in a.factors)


def _equivalent_integral_words(t: KLTuple, cs: CWordSets, target: Word, max_len: int):
    """All integral words B with |B| <= max_len and f(B) equal to
    ``target`` in the derived group."""
    cache = t._cache.setdefault("equiv_integral", {})
    key = (target, max_len)
    if key in cache:
        return cache[key]
    lengths = [len(c) for c in t.cwords]
    words: list[Word] = []

    def expand(seq: tuple[int, ...]):
        # all member choices along a family index sequence
        partial: list[Word] = [()]
        for fam_idx in seq:
            partial = [w + c for w in partial for c in cs.families[fam_idx]]
        words.extend(partial)

    def search(prefix: list[int], room: int):
        word = tuple(i + 1 for i in prefix)
        if t.gamma_equal(word, target):
            expand(tuple(prefix))
        for i, ln in enumerate(lengths):
            if ln <= room:
                prefix.append(i)
                search(prefix, room - ln)
                prefix.pop()

    search([], max_len)
    cache[key] = tuple(sorted(set(words)))
    return cache[key]


def t_set(w: Word, t: KLTuple, cs: CWordSets | None = None) -> frozenset[Word]:
    """All words reachable from ``w`` by non-increasing replacements.

    Closure under (a) deletion of relation left-hand sides and (b)
    replacement of an integral subword by any equivalent integral word
    of at most its length.  The closure is finite: members never exceed
    ``len(w)`` letters.
    """
    cs = _families(t, cs)
    cache = t._cache.setdefault("tset", {})
    w = tuple(w)
    if w in cache:
        return cache[w]
    n = t.presentation.alphabet.n
    # members never get longer, so the word count of the ball is a hard
    # ceiling; anything past it is a closure bug
    bound = sum(n**length for length in range(len(w) + 1))
    seen = {w}
    queue = [w]
    while queue:
        x = queue.pop()
        neighbors: set[Word] = set()
        for rel in t.presentation.relations:
            rl = len(rel)
            for i in range(len(x) - rl + 1):
                if x[i: i + rl] == rel:
                    neighbors.add(x[:i] + x[i + rl:])
        for i in range(len(x)):
            for j in range(i + 1, len(x) + 1):
                sub = x[i:j]
                dec = integral_decompose(sub, t, cs)
                if dec is None:
                    continue
                for b in _equivalent_integral_words(t, cs, f_map(dec), len(sub)):
                    if b != sub:
                        neighbors.add(x[:i] + b + x[j:])
        for y in neighbors:
            if y not in seen:
                seen.add(y)
                queue.append(y)
        if len(seen) > bound:
            raise InvariantViolationError(
                f"reachability set of {word_to_text(w)} exceeds the "
                f"{len(w)}-ball over {n} letters"
            )
    result = frozenset(seen)
    cache[w] = result
    return result


def is_final(w: Word, t: KLTuple, cs: CWordSets | None = None) -> bool:
    """True when no reachable word is shorter."""
    return all(len(b) == len(w) for b in t_set(w, t, cs))


def words_equal(x: Word, y: Word, t: KLTuple, cs: CWordSets | None = None) -> bool:
    """Monoid equality: the reachability sets intersect."""
    return bool(t_set(x, t, cs) & t_set(y, t, cs))


def _strippable(w: Word, ln: int, cwords_all: tuple[Word, ...], from_left: bool) -> bool:
    # The end piece of length ln may be removed when it overlaps some
    # c-word: a suffix of w that begins a c-word (right end), or a
    # prefix of w that ends one (left end).  Coinciding whole-word /
    # whole-c-word matches are not overlaps.
    piece = w[:ln] if from_left else w[len(w) - ln:]
    for c in cwords_all:
        if ln == len(w) and ln == len(c):
            continue
        if ln > len(c):
            continue
        match = c[len(c) - ln:] if from_left else c[:ln]
        if match == piece:
            return True
    return False


def _strip_end_overlaps(w: Word, cwords_all: tuple[Word, ...], from_left: bool) -> Word:
    """Remove, to a fixpoint, the longest end segment that overlaps a
    c-word.  Each removed piece keeps divisibility unchanged."""
    while w:
        best = next(
            (
                ln
                for ln in range(len(w), 0, -1)
                if _strippable(w, ln, cwords_all, from_left)
            ),
            0,
        )
        if not best:
            break
        w = w[best:] if from_left else w[: len(w) - best]
    return w


def _minimal_member(words: frozenset[Word]) -> Word:
    return min(words, key=lambda v: (len(v), v))


def divides_left(x: Word, y: Word, t: KLTuple, cs: CWordSets | None = None) -> bool:
    """Is x left divisible by y (some z with x = y z in the monoid)?

    Reduce y to a minimal (hence final) reachable form, peel off end
    pieces of c-words, then test whether some prefix of x equals the
    remainder.
    """
    cs = _families(t, cs)
    y1 = _minimal_member(t_set(y, t, cs))
    yk = _strip_end_overlaps(y1, tuple(sorted(cs.all_words())), from_left=False)
    return any(words_equal(x[:i], yk, t, cs) for i in range(len(x) + 1))


def divides_right(x: Word, y: Word, t: KLTuple, cs: CWordSets | None = None) -> bool:
    """Mirror of :func:`divides_left`: some z with x = z y."""
    cs = _families(t, cs)
    y1 = _minimal_member(t_set(y, t, cs))
    yk = _strip_end_overlaps(y1, tuple(sorted(cs.all_words())), from_left=True)
    return any(
        words_equal(x[len(x) - i:], yk, t, cs) for i in range(len(x) + 1)
    )


def is_invertible(x: Word, t: KLTuple, cs: CWordSets | None = None) -> bool:
    """Two-sided invertibility: some reachable word is integral."""
    cs = _families(t, cs)
    return any(
        integral_decompose(z, t, cs) is not None for z in t_set(x, t, cs)
    )


def mu(x: Word, t: KLTuple, cs: CWordSets | None = None) -> Word:
    """Image of an invertible word in the maximal subgroup: the index
    word of an integral word it reaches.  Well-defined up to derived
    group equality."""
    cs = _families(t, cs)
    integral = [
        dec
        for z in sorted(t_set(x, t, cs), key=lambda v: (len(v), v))
        if (dec := integral_decompose(z, t, cs)) is not None
    ]
    if not integral:
        raise NotInvertibleError(f"{word_to_text(x)} is not invertible")
    return f_map(integral[0])


def maximal_subgroup(t: KLTuple) -> GroupPresentation:
    """The derived group presents the subgroup of two-sided invertible
    elements."""
    _families(t, None)
    return t.gamma


def representation(w: Word, t: KLTuple, cs: CWordSets | None = None) -> Representation:
    """Split a final word into stable letters and maximal c-word runs.

    A c-word occurrence counts only when no other c-word occurrence
    properly contains it; the survivors are pairwise disjoint, and the
    letters they leave uncovered are the stable letters.
    """
    cs = _families(t, cs)
    if not is_final(w, t, cs):
        raise NotFinalError(f"{word_to_text(w)} is not final")
    occurrences: list[tuple[int, int]] = []
    for c in cs.all_words():
        for i in range(len(w) - len(c) + 1):
            if w[i: i + len(c)] == c:
                occurrences.append((i, i + len(c)))
    occurrences = sorted(set(occurrences))
    maximal = [
        (s, e)
        for (s, e) in occurrences
        if not any(
            (s2 <= s and e <= e2) and (e2 - s2 > e - s) for (s2, e2) in occurrences
        )
    ]
    covered = [False] * len(w)
    for s, e in maximal:
        if any(covered[s:e]):
            raise InvariantViolationError("maximal c-word occurrences overlap")
        for idx in range(s, e):
            covered[idx] = True
    stable_positions = tuple(i for i, c in enumerate(covered) if not c)
    stable_word = tuple(w[i] for i in stable_positions)
    segments: list[Word] = []
    prev = 0
    for pos in stable_positions:
        segments.append(w[prev:pos])
        prev = pos + 1
    segments.append(w[prev:])
    rep = Representation(stable_positions, stable_word, tuple(segments))
    if rep.reassemble() != w:
        raise InvariantViolationError("representation does not reassemble")
    return rep
