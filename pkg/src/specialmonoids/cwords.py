"""Tuple formation, c-word generation, and the distinguishing loop.

A tuple pairs a special presentation with a chosen factor base (its
C-words) whose derived group has every generator two-sided invertible.
Each C-word spawns a finite family of same-or-shorter variants (its
c-words) by replacing factor-base products in its interior with
products the derived group cannot tell apart.  The distinguishing loop
rewrites the tuple until the families are length-preserving, pairwise
disjoint and mutually non-overlapping, strictly decreasing the tuple
index at every move.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from .errors import InvariantViolationError, OracleInconclusiveError
from .oracle import Budget, OracleHandle, Verdict, select_oracle
from .overlap import WordList, delta, omega, reduce_list, words_overlap, has_self_overlap
from .presentation import (
    GroupPresentation,
    SpecialPresentation,
    b_words,
    factor_over,
)
from .rewrite import certify_invertible_generators
from .words import Word, word_to_text


class TupleIndex(NamedTuple):
    alpha: int  # total relation length
    beta: int   # omega of the C-word list


@dataclass(frozen=True, eq=False)
class KLTuple:
    presentation: SpecialPresentation
    cwords: WordList
    gamma: GroupPresentation
    oracle: OracleHandle
    budget: Budget

    def __post_init__(self):
        object.__setattr__(self, "_cache", {})

    def gamma_equal(self, u: Word, v: Word) -> bool:
        """Definite equality of two positive index words in the derived
        group; raises when the oracle cannot decide."""
        if u == v:
            return True
        verdict = self.oracle.decide_equal(u, v)
        if verdict is Verdict.UNKNOWN:
            raise OracleInconclusiveError(
                f"cannot decide {u} = {v} in the derived group"
            )
        return verdict is Verdict.YES


@dataclass(frozen=True)
class CWordSets:
    families: tuple[frozenset[Word], ...]

    def all_words(self) -> frozenset[Word]:
        out: set[Word] = set()
        for fam in self.families:
            out |= fam
        return frozenset(out)


@dataclass(frozen=True)
class PropertyFlags:
    length_preserving: bool   # every family member as long as its C-word
    families_disjoint: bool
    non_overlapping: bool

    def all_hold(self) -> bool:
        return self.length_preserving and self.families_disjoint and self.non_overlapping


def tuple_from_cwords(
    p: SpecialPresentation, cwords: WordList, budget: Optional[Budget] = None
) -> KLTuple:
    """Assemble and certify a tuple from an explicit factor base."""
    budget = budget or Budget()
    factorizations = []
    for rel in p.relations:
        factors = factor_over(rel, cwords)
        if factors is None:
            raise InvariantViolationError(
                f"relation {word_to_text(rel)} does not factor over the C-words"
            )
        factorizations.append(tuple(idx + 1 for idx in factors))
    gamma = GroupPresentation(len(cwords), tuple(factorizations))
    certified = certify_invertible_generators(
        gamma.num_generators, gamma.relations, budget.max_len, budget.max_states
    )
    missing = set(range(1, gamma.num_generators + 1)) - certified
    if missing:
        raise OracleInconclusiveError(
            f"cannot certify two-sided invertibility of generators {sorted(missing)}"
        )
    oracle = select_oracle(gamma, budget)
    return KLTuple(p, cwords, gamma, oracle, budget)


def make_tuple(p: SpecialPresentation, budget: Optional[Budget] = None) -> KLTuple:
    """Build the tuple of a presentation from its division-algorithm
    factor base, certifying that the derived group is a group."""
    return tuple_from_cwords(p, b_words(p).words, budget)


def _index_words_matching(
    t: KLTuple, target: Word, max_len: int
) -> tuple[tuple[int, ...], ...]:
    """All C-word index sequences whose total length fits ``max_len``
    and whose index word equals ``target`` in the derived group."""
    cache = t._cache.setdefault("match", {})
    key = (target, max_len)
    if key in cache:
        return cache[key]
    lengths = [len(c) for c in t.cwords]
    found: list[tuple[int, ...]] = []

    def extend(prefix: list[int], room: int):
        seq = tuple(prefix)
        word = tuple(i + 1 for i in seq)
        if t.gamma_equal(word, target):
            found.append(seq)
        for i, ln in enumerate(lengths):
            if ln <= room:
                prefix.append(i)
                extend(prefix, room - ln)
                prefix.pop()

    extend([], max_len)
    cache[key] = tuple(found)
    return cache[key]


def _generate_family(t: KLTuple, i: int) -> frozenset[Word]:
    seed = t.cwords[i]
    n = t.presentation.alphabet.n
    # variants never get longer, so the ball size caps the family
    bound = sum(n**length for length in range(len(seed) + 1))
    members = {seed}
    queue = [seed]
    while queue:
        w = queue.pop()
        for p in range(1, len(w)):
            for q in range(p, len(w)):
                mid = w[p:q]
                ks = factor_over(mid, t.cwords)
                if ks is None:
                    continue
                target = tuple(k + 1 for k in ks)
                for mseq in _index_words_matching(t, target, len(mid)):
                    replacement: list[int] = []
                    for m in mseq:
                        replacement.extend(t.cwords[m])
                    v = w[:p] + tuple(replacement) + w[q:]
                    if v not in members:
                        members.add(v)
                        queue.append(v)
        if len(members) > bound:
            raise InvariantViolationError(
                f"family of {word_to_text(seed)} exceeds the "
                f"{len(seed)}-ball over {n} letters"
            )
    return frozenset(members)


def generate_c_words(t: KLTuple) -> CWordSets:
    """The least fixpoint of the generating operation for every C-word.

    Re-running the operation on the output adds nothing; each family
    contains its C-word and only words of at most its length.
    """
    if "cwordsets" not in t._cache:
        t._cache["cwordsets"] = CWordSets(
            tuple(_generate_family(t, i) for i in range(len(t.cwords)))
        )
    return t._cache["cwordsets"]


def tuple_index(t: KLTuple) -> TupleIndex:
    return TupleIndex(
        alpha=sum(len(rel) for rel in t.presentation.relations),
        beta=omega(t.cwords),
    )


def check_properties(t: KLTuple, cs: CWordSets) -> PropertyFlags:
    length_preserving = all(
        len(c) == len(t.cwords[i])
        for i, fam in enumerate(cs.families)
        for c in fam
    )
    families_disjoint = True
    for i in range(len(cs.families)):
        for j in range(i + 1, len(cs.families)):
            if cs.families[i] & cs.families[j]:
                families_disjoint = False
    all_words = sorted(cs.all_words())
    non_overlapping = not any(
        words_overlap(x, y) for x in all_words for y in all_words
    )
    return PropertyFlags(length_preserving, families_disjoint, non_overlapping)


def is_distinguished(t: KLTuple) -> bool:
    if "distinguished" not in t._cache:
        t._cache["distinguished"] = check_properties(t, generate_c_words(t)).all_hold()
    return t._cache["distinguished"]


def _substitute(index_word: Word, replacements: WordList) -> Word:
    out: list[int] = []
    for g in index_word:
        out.extend(replacements[g - 1])
    return tuple(out)


def _substituted_presentation(t: KLTuple, replacements: WordList) -> SpecialPresentation:
    relations = reduce_list(
        _substitute(rel, replacements) for rel in t.gamma.relations
    )
    return SpecialPresentation(t.presentation.alphabet, relations, t.presentation.ell)


def _move_shorten(t: KLTuple, cs: CWordSets) -> KLTuple:
    # Replace the first C-word that admits a strictly shorter family
    # member, then rebuild everything from the new relation system.
    for i, fam in enumerate(cs.families):
        shorter = sorted(
            (c for c in fam if len(c) < len(t.cwords[i])), key=lambda c: (len(c), c)
        )
        if shorter:
            replacements = t.cwords[:i] + (shorter[0],) + t.cwords[i + 1:]
            return make_tuple(_substituted_presentation(t, replacements), t.budget)
    raise InvariantViolationError("no shorter family member found")


def _move_merge_families(t: KLTuple, cs: CWordSets) -> KLTuple:
    # Two families share a word; they must then coincide, and the other
    # family's C-word is a member of this one.  Substituting it for our
    # C-word drops one generator and shortens the C-word list.
    for i in range(len(cs.families)):
        for mu in range(len(cs.families)):
            if i == mu or not (cs.families[i] & cs.families[mu]):
                continue
            if cs.families[i] != cs.families[mu]:
                raise InvariantViolationError(
                    "families share a word but do not coincide"
                )
            c_mu = t.cwords[mu]
            if c_mu not in cs.families[i]:
                raise InvariantViolationError(
                    "coinciding family does not contain the other C-word"
                )
            replacements = t.cwords[:i] + (c_mu,) + t.cwords[i + 1:]
            new_cwords = t.cwords[:i] + t.cwords[i + 1:]
            return tuple_from_cwords(
                _substituted_presentation(t, replacements), new_cwords, t.budget
            )
    raise InvariantViolationError("no shared family word found")


def _move_remove_overlap(t: KLTuple, cs: CWordSets) -> KLTuple:
    # An overlap between a C-word and a c-word of another family lets
    # us substitute that c-word for its C-word and re-run the division
    # algorithm, which splits the overlap and lowers the list weight.
    # Failing that, some family member overlaps itself and the same
    # substitution applies to it.
    choice = None
    for mu, fam in enumerate(cs.families):
        for c in sorted(fam, key=lambda w: (len(w), w)):
            for j in range(len(t.cwords)):
                if j == mu:
                    continue
                if words_overlap(t.cwords[j], c) or words_overlap(c, t.cwords[j]):
                    choice = (mu, c)
                    break
            if choice:
                break
        if choice:
            break
    if choice is None:
        for mu, fam in enumerate(cs.families):
            for c in sorted(fam, key=lambda w: (len(w), w)):
                if has_self_overlap(c):
                    choice = (mu, c)
                    break
            if choice:
                break
    if choice is None:
        raise InvariantViolationError(
            "no overlapping C-word/c-word pair and no self-overlapping c-word"
        )
    mu, c = choice
    replacements = t.cwords[:mu] + (c,) + t.cwords[mu + 1:]
    new_cwords = delta(reduce_list(replacements))
    return tuple_from_cwords(
        _substituted_presentation(t, replacements), new_cwords, t.budget
    )


def distinguish(
    t: KLTuple,
    budget: Optional[Budget] = None,
    on_step: Optional[Callable[[KLTuple, KLTuple], None]] = None,
) -> KLTuple:
    """Rewrite the tuple until its families satisfy all three
    properties, keeping the relation system equivalent throughout.

    Every move strictly decreases the lexicographic tuple index, which
    bounds the number of iterations.
    """
    current = t
    if budget is not None and budget != t.budget:
        current = tuple_from_cwords(t.presentation, t.cwords, budget)
    while True:
        cs = generate_c_words(current)
        flags = check_properties(current, cs)
        if flags.all_hold():
            current._cache["distinguished"] = True
            return current
        if not flags.length_preserving:
            new = _move_shorten(current, cs)
        elif not flags.families_disjoint:
            new = _move_merge_families(current, cs)
        else:
            new = _move_remove_overlap(current, cs)
        if not tuple_index(new) < tuple_index(current):
            raise InvariantViolationError(
                f"move failed to decrease the tuple index: "
                f"{tuple_index(current)} -> {tuple_index(new)}"
            )
        if on_step is not None:
            on_step(current, new)
        current = new
