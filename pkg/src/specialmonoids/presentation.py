"""Special monoid presentations and their non-overlapping factor base.

A special presentation has relations ``A_i = 1`` only.  Running the
division algorithm on the relation left-hand sides yields the B-words:
a reduced, mutually non-overlapping list over which every relation
factors uniquely.  Replacing each B-word by a fresh generator turns the
relations into the derived group presentation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InvariantViolationError,
    PresentationSyntaxError,
    RelationTooLongError,
    UnknownGeneratorError,
)
from .overlap import WordList, delta, reduce_list
from .words import (
    Alphabet,
    GroupWord,
    Word,
    text_to_group_word,
    text_to_word,
    word_to_text,
)


@dataclass(frozen=True)
class SpecialPresentation:
    alphabet: Alphabet
    relations: tuple[Word, ...]
    ell: int

    def __post_init__(self):
        for rel in self.relations:
            if not self.alphabet.contains(rel):
                raise UnknownGeneratorError(
                    f"relation {word_to_text(rel)} uses letters outside the alphabet"
                )
            if len(rel) > self.ell:
                raise RelationTooLongError(
                    f"relation {word_to_text(rel)} exceeds the length cap {self.ell}"
                )

    @property
    def k(self) -> int:
        return len(self.relations)


@dataclass(frozen=True)
class GroupPresentation:
    """Presentation of the derived group: one generator per B-word,
    relations given by positive index words."""

    num_generators: int
    relations: tuple[Word, ...]

    def __post_init__(self):
        for rel in self.relations:
            if not all(1 <= g <= self.num_generators for g in rel):
                raise UnknownGeneratorError(
                    f"group relation {rel} uses letters outside 1..{self.num_generators}"
                )


@dataclass(frozen=True)
class BWordList:
    """The factor base plus, for each relation, its index sequence."""

    words: WordList
    factorizations: tuple[tuple[int, ...], ...]  # 0-based indices into words


def make_presentation(n: int, relations, ell: int | None = None) -> SpecialPresentation:
    relations = tuple(tuple(r) for r in relations)
    if ell is None:
        ell = max((len(r) for r in relations), default=0)
    return SpecialPresentation(Alphabet(n), relations, ell)


def _parse_lines(text: str):
    """Yield (lineno, key, value) for non-blank, non-comment lines."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise PresentationSyntaxError("expected 'key: value'", lineno)
        key, _, value = line.partition(":")
        yield lineno, key.strip(), value.strip()


def _parse_header(items):
    items = list(items)
    if not items:
        raise PresentationSyntaxError("empty presentation", 1)
    lineno, key, value = items[0]
    if key != "generators":
        raise PresentationSyntaxError("first line must declare generators", lineno)
    letters = value.split()
    if not letters:
        raise PresentationSyntaxError("no generators declared", lineno)
    expected = [chr(ord("a") + i) for i in range(len(letters))]
    if letters != expected:
        raise PresentationSyntaxError(
            f"generators must be the letters {' '.join(expected)}", lineno
        )
    return Alphabet(len(letters)), items[1:]


def parse_presentation(text: str, ell: int | None = None) -> SpecialPresentation:
    """Parse a monoid presentation file.

    Format, one item per line: ``generators: a b c`` first, then any
    number of ``relation: <word>`` lines (lowercase letters only), with
    blank lines and ``#`` comments ignored.  An optional ``ell: N``
    line caps relation lengths; otherwise the cap is the maximum
    relation length seen.
    """
    alphabet, rest = _parse_header(_parse_lines(text))
    relations: list[Word] = []
    explicit_ell = ell
    for lineno, key, value in rest:
        if key == "relation":
            try:
                relations.append(text_to_word(value, alphabet))
            except UnknownGeneratorError as exc:
                raise PresentationSyntaxError(str(exc), lineno) from exc
        elif key == "ell":
            try:
                explicit_ell = int(value)
            except ValueError:
                raise PresentationSyntaxError("ell must be an integer", lineno)
        else:
            raise PresentationSyntaxError(f"unknown key {key!r}", lineno)
    if explicit_ell is None:
        explicit_ell = max((len(r) for r in relations), default=0)
    return SpecialPresentation(alphabet, tuple(relations), explicit_ell)


def parse_group_relators(text: str) -> tuple[Alphabet, tuple[GroupWord, ...]]:
    """Parse a group relator file: the same format, but relation words
    may use uppercase letters for inverse generators."""
    alphabet, rest = _parse_header(_parse_lines(text))
    relators: list[GroupWord] = []
    for lineno, key, value in rest:
        if key != "relation":
            raise PresentationSyntaxError(f"unknown key {key!r}", lineno)
        try:
            relators.append(text_to_group_word(value, alphabet))
        except UnknownGeneratorError as exc:
            raise PresentationSyntaxError(str(exc), lineno) from exc
    return alphabet, tuple(relators)


def factor_over(w: Word, bs: BWordList | WordList):
    """The unique factorization of ``w`` as a product of base words,
    or None if there is none.

    Because the base words are mutually non-overlapping, at most one of
    them is a prefix of any suffix of ``w``, so a single greedy scan is
    exact: it succeeds if and only if a factorization exists, and the
    one it finds is the only one.
    """
    base = bs.words if isinstance(bs, BWordList) else tuple(bs)
    by_first: dict[int, list[int]] = {}
    for idx, b in enumerate(base):
        by_first.setdefault(b[0], []).append(idx)
    out: list[int] = []
    pos = 0
    while pos < len(w):
        for idx in by_first.get(w[pos], ()):
            b = base[idx]
            if w[pos: pos + len(b)] == b:
                out.append(idx)
                pos += len(b)
                break
        else:
            return None
    return tuple(out)


def b_words(p: SpecialPresentation) -> BWordList:
    """Compute the factor base of the relation left-hand sides.

    Runs the division algorithm on the reduced relation list, then
    records the factorization of every relation over the output.
    """
    base = delta(reduce_list(p.relations))
    factorizations = []
    for rel in p.relations:
        factors = factor_over(rel, base)
        if factors is None:
            raise InvariantViolationError(
                f"relation {word_to_text(rel)} does not factor over the base"
            )
        factorizations.append(factors)
    return BWordList(base, tuple(factorizations))


def derived_group(p: SpecialPresentation, bs: BWordList) -> GroupPresentation:
    """Replace each B-word by its generator in the relation list."""
    relations = tuple(
        tuple(idx + 1 for idx in factors) for factors in bs.factorizations
    )
    for rel, orig in zip(relations, p.relations):
        if len(rel) > len(orig):
            raise InvariantViolationError("index word longer than its relation")
    return GroupPresentation(len(bs.words), relations)
