"""Group word-problem oracles for derived group presentations.

Three backends: free reduction for relation-free groups, the
small-cancellation Dehn engine when the symmetrized relator closure
satisfies the 2/11 condition, and a bounded congruence-closure search
otherwise.  Yes/No answers are sound for the target group; Unknown is
reserved for budget exhaustion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import smallcancel
from .errors import AlphabetMismatchError
from .presentation import GroupPresentation
from .verdict import Verdict
from .words import GroupWord, SymmetrizedSet, concat_reduce, free_reduce, inverse, symmetrize

__all__ = [
    "Budget",
    "Verdict",
    "OracleHandle",
    "select_oracle",
]


@dataclass(frozen=True)
class Budget:
    max_len: int = 16
    max_states: int = 100_000
    dehn_budget: int = smallcancel.DEFAULT_BUDGET


class _FreeGroupBackend:
    name = "free"

    def decide(self, w: GroupWord) -> Verdict:
        return Verdict.of(not free_reduce(w))


class _DehnBackend:
    name = "dehn"

    def __init__(self, sym: SymmetrizedSet, budget: Budget, greendlinger: bool):
        self.sym = sym
        self.budget = budget
        self.greendlinger = greendlinger

    def decide(self, w: GroupWord) -> Verdict:
        return smallcancel.decide_identity(
            w, self.sym, self.budget.dehn_budget, greendlinger=self.greendlinger
        )


class _BoundedBFSBackend:
    """Congruence closure over the ball of short reduced words.

    All reduced words up to a fully-enumerated radius are merged along
    relator-insertion edges, then the partition is closed under
    compatibility with right multiplication.  If every class then has a
    total multiplication row the quotient is the group itself, and
    verdicts are exact for arbitrary query words; otherwise only
    within-ball coincidence with the identity class (a sound Yes) is
    reported, and everything else is Unknown.
    """

    name = "bfs"

    def __init__(self, gp: GroupPresentation, budget: Budget):
        self.gp = gp
        self.budget = budget
        self._built = False

    # union-find
    def _root(self, w: GroupWord) -> GroupWord:
        parent = self._parent
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    def _union(self, a: GroupWord, b: GroupWord) -> bool:
        ra, rb = self._root(a), self._root(b)
        if ra == rb:
            return False
        self._parent[max(ra, rb)] = min(ra, rb)
        return True

    def _build(self):
        self._built = True
        p = self.gp.num_generators
        letters = [g for g in range(1, p + 1)] + [-g for g in range(1, p + 1)]
        # Enumerate complete length levels of reduced words.
        levels: list[list[GroupWord]] = [[()]]
        total = 1
        radius = 0
        while radius < self.budget.max_len:
            nxt = [
                w + (g,)
                for w in levels[-1]
                for g in letters
                if not w or w[-1] != -g
            ]
            if not nxt or total + len(nxt) > self.budget.max_states:
                break
            levels.append(nxt)
            total += len(nxt)
            radius += 1
        self._radius = radius
        ball = [w for level in levels for w in level]
        self._parent = {w: w for w in ball}
        variants = set()
        for r in self.gp.relations:
            if r:
                variants.add(tuple(r))
                variants.add(inverse(tuple(r)))
        for w in ball:
            for r in variants:
                for i in range(len(w) + 1):
                    v = concat_reduce(w[:i], r, w[i:])
                    if len(v) <= radius:
                        self._union(w, v)
        # Close under compatibility with right multiplication: words in
        # one class must step to one class.
        def successor(w: GroupWord, g: int) -> GroupWord:
            return w[:-1] if w and w[-1] == -g else w + (g,)

        while True:
            changed = False
            seen_step: dict[tuple[GroupWord, int], GroupWord] = {}
            for w in ball:
                for g in letters:
                    v = successor(w, g)
                    if len(v) > radius:
                        continue
                    key = (self._root(w), g)
                    rv = self._root(v)
                    prev = seen_step.get(key)
                    if prev is None:
                        seen_step[key] = rv
                    elif self._root(prev) != rv:
                        self._union(prev, rv)
                        changed = True
            if not changed:
                break
        table: dict[tuple[GroupWord, int], GroupWord] = {}
        for w in ball:
            for g in letters:
                v = successor(w, g)
                if len(v) <= radius:
                    table[(self._root(w), g)] = self._root(v)
        roots = {self._root(w) for w in ball}
        self._table = table
        self._total = all((r, g) in table for r in roots for g in letters)
        self._identity = self._root(())

    def _evaluate(self, w: GroupWord) -> GroupWord:
        cls = self._identity
        for g in w:
            cls = self._table[(cls, g)]
        return cls

    def decide(self, w: GroupWord) -> Verdict:
        w = free_reduce(w)
        if not w:
            return Verdict.YES
        if not self._built:
            self._build()
        if self._total:
            return Verdict.of(self._evaluate(w) == self._identity)
        if len(w) <= self._radius and self._root(w) == self._identity:
            return Verdict.YES
        return Verdict.UNKNOWN


@dataclass(eq=False)
class OracleHandle:
    """Equality oracle for words of a derived group presentation."""

    target: GroupPresentation
    backend: object
    _memo: dict = field(default_factory=dict, repr=False)

    @property
    def backend_name(self) -> str:
        return self.backend.name

    def decide_equal(self, u: GroupWord, v: GroupWord) -> Verdict:
        u, v = tuple(u), tuple(v)
        for w in (u, v):
            if any(g == 0 or abs(g) > self.target.num_generators for g in w):
                raise AlphabetMismatchError(
                    f"word {w} is not over 1..{self.target.num_generators}"
                )
        ru, rv = free_reduce(u), free_reduce(v)
        if ru == rv:
            return Verdict.YES
        key = (ru, rv) if ru <= rv else (rv, ru)
        if key not in self._memo:
            self._memo[key] = self.backend.decide(concat_reduce(ru, inverse(rv)))
        return self._memo[key]

    def is_identity(self, u: GroupWord) -> Verdict:
        return self.decide_equal(u, ())


def select_oracle(g: GroupPresentation, budget: Optional[Budget] = None) -> OracleHandle:
    """Pick the strongest sound backend for the presentation.

    No relations: free reduction decides everything.  If the
    symmetrized closure of the relators satisfies the 2/11 condition,
    the Dehn engine is used (with the direct-No shortcut enabled when
    the strict one-sixth metric condition also holds).  Otherwise the
    bounded congruence-closure search is the fallback.
    """
    budget = budget or Budget()
    relators = [tuple(r) for r in g.relations if r]
    if not relators:
        return OracleHandle(g, _FreeGroupBackend())
    sym = symmetrize(relators)
    if smallcancel.k_alpha_check(sym).passed:
        shortcut = smallcancel.greendlinger_condition(sym)
        return OracleHandle(g, _DehnBackend(sym, budget, shortcut))
    return OracleHandle(g, _BoundedBFSBackend(g, budget))
