"""Small-cancellation engine: the 2/11 class check, generalized Dehn
rewriting, and the bounded identity-problem decision.

The Dehn rewriter applies three strictly length-decreasing operations
to a fixpoint: free reduction, replacing a majority piece of a relator
by the inverse of the minority piece, and splicing across two relators
that share a cancelling middle segment.  A word equal to the identity
either reaches the empty word this way, or survives as a short residue
whose trivialization certificate is bounded by ``27 e^3 (d+1)^(6e)``;
the fallback search runs only when that bound fits the caller's budget.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotK211Error
from .verdict import Verdict
from .words import (
    GroupWord,
    SymmetrizedSet,
    concat_reduce,
    free_reduce,
    inverse,
    is_reduced,
)

K_DEFAULT_ALPHA = Fraction(2, 11)
DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class KAlphaReport:
    alpha: Fraction
    passed: bool
    worst: tuple[GroupWord, GroupWord, int] | None  # (R_i, R_j, cancelled)

    @property
    def max_cancelled(self) -> int:
        return self.worst[2] if self.worst else 0


@dataclass(frozen=True)
class DehnStep:
    op: str  # "free", "beta" or "gamma"
    position: int
    removed: GroupWord
    inserted: GroupWord
    length_after: int


@dataclass(frozen=True)
class DehnState:
    word: GroupWord
    log: tuple[DehnStep, ...]


def cancelled_letters(x: GroupWord, y: GroupWord) -> int:
    """Letters deleted from each factor when freely reducing x·y."""
    return (len(x) + len(y) - len(concat_reduce(x, y))) // 2


def k_alpha_check(m: SymmetrizedSet, alpha: Fraction = K_DEFAULT_ALPHA) -> KAlphaReport:
    """Exact cancellation scan over all ordered relator pairs.

    The set passes when every ordered pair (R_i, R_j) with R_j not the
    inverse of R_i cancels strictly fewer than ``alpha * |R_i|``
    letters of R_i.
    """
    worst: tuple[GroupWord, GroupWord, int] | None = None
    worst_fraction = Fraction(-1)
    members = sorted(m.relators)
    for ri in members:
        ri_inv = inverse(ri)
        for rj in members:
            if rj == ri_inv:
                continue
            c = cancelled_letters(ri, rj)
            fraction = Fraction(c, len(ri))
            if fraction > worst_fraction:
                worst_fraction = fraction
                worst = (ri, rj, c)
    passed = worst is None or worst_fraction < alpha
    return KAlphaReport(alpha, passed, worst)


def certificate_bound(e: int, d: int) -> int:
    """Exact size bound 27 e^3 (d+1)^(6e) on the trivialization
    certificate of a length-e Dehn residue over relators of length
    at most d."""
    if e < 1 or d < 1:
        raise ValueError("certificate_bound requires e >= 1 and d >= 1")
    return 27 * e**3 * (d + 1) ** (6 * e)


@lru_cache(maxsize=None)
def _beta_rules(m: SymmetrizedSet) -> tuple[tuple[GroupWord, GroupWord], ...]:
    # S -> T whenever S·inverse(T) is a relator and |S| > |T|.
    rules = set()
    for r in m.relators:
        for j in range(len(r) // 2 + 1, len(r) + 1):
            rules.add((r[:j], inverse(r[j:])))
    return tuple(sorted(rules, key=lambda st: (-len(st[0]), st[0], len(st[1]), st[1])))


@lru_cache(maxsize=None)
def _gamma_rules(m: SymmetrizedSet) -> tuple[tuple[GroupWord, GroupWord], ...]:
    # S1·S2 -> T1·T2 whenever S1·X·inverse(T1) and inverse(X)·S2·inverse(T2)
    # are relators, X is non-empty and |S1 S2| > |T1 T2|.
    by_prefix: dict[GroupWord, list[GroupWord]] = {}
    for r in m.relators:
        for t in range(1, len(r) + 1):
            by_prefix.setdefault(r[:t], []).append(r)
    rules = set()
    for ra in m.relators:
        for i in range(len(ra) + 1):
            for j in range(i + 1, len(ra) + 1):
                s1, x, t1bar = ra[:i], ra[i:j], ra[j:]
                for rb in by_prefix.get(inverse(x), ()):
                    rest = rb[len(x):]
                    for k in range(len(rest) + 1):
                        s2, t2bar = rest[:k], rest[k:]
                        pattern = s1 + s2
                        if len(pattern) <= len(t1bar) + len(t2bar):
                            continue
                        if not is_reduced(pattern):
                            continue  # cannot occur inside a reduced word
                        rules.add((pattern, inverse(t1bar) + inverse(t2bar)))
    return tuple(sorted(rules, key=lambda st: (-len(st[0]), st[0], len(st[1]), st[1])))


def _scan_apply(word: GroupWord, rules, op: str, log: list[DehnStep]):
    """Apply the first matching rule (positions left to right, longest
    pattern first at each position); None if nothing matches."""
    for pos in range(len(word)):
        for pattern, repl in rules:
            if word[pos: pos + len(pattern)] == pattern:
                new = free_reduce(word[:pos] + repl + word[pos + len(pattern):])
                log.append(DehnStep(op, pos, pattern, repl, len(new)))
                return new
    return None


def dehn_reduce(w: GroupWord, m: SymmetrizedSet) -> DehnState:
    """Run the three-operation rewriting to a fixpoint.

    Every logged step strictly decreases the length (free reduction
    included), so the loop terminates; the result admits no further
    application of any of the three operations.
    """
    log: list[DehnStep] = []
    word = free_reduce(w)
    if word != tuple(w):
        log.append(DehnStep("free", 0, tuple(w), word, len(word)))
    beta = _beta_rules(m)
    gamma = None
    while True:
        before = len(word)
        new = _scan_apply(word, beta, "beta", log)
        if new is None:
            if gamma is None:
                gamma = _gamma_rules(m)
            new = _scan_apply(word, gamma, "gamma", log)
        if new is None:
            return DehnState(word, tuple(log))
        if len(new) >= before:
            raise AssertionError("Dehn step failed to shorten the word")
        word = new


def max_piece(m: SymmetrizedSet) -> int:
    """Length of the longest common prefix of two distinct members."""
    members = sorted(m.relators)
    best = 0
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            t = 0
            while t < min(len(x), len(y)) and x[t] == y[t]:
                t += 1
            best = max(best, t)
    return best


def greendlinger_condition(m: SymmetrizedSet) -> bool:
    """Strict metric condition: every piece is shorter than one sixth
    of the shortest relator."""
    return 6 * max_piece(m) < min(len(r) for r in m.relators)


def _fallback_search(
    start: GroupWord, m: SymmetrizedSet, length_cap: int, state_cap: int
) -> Verdict:
    # Complete closure under relator insertion (the set is symmetrized,
    # so deletions arrive as insertions of the inverse).
    seen = {start}
    frontier = deque([start])
    relators = sorted(m.relators)
    capped = False
    while frontier:
        w = frontier.popleft()
        for r in relators:
            for i in range(len(w) + 1):
                v = concat_reduce(w[:i], r, w[i:])
                if not v:
                    return Verdict.YES
                if len(v) > length_cap:
                    capped = True
                    continue
                if v not in seen:
                    if len(seen) >= state_cap:
                        return Verdict.UNKNOWN
                    seen.add(v)
                    frontier.append(v)
    return Verdict.UNKNOWN if capped else Verdict.NO


def decide_identity(
    w: GroupWord,
    m: SymmetrizedSet,
    budget: int = DEFAULT_BUDGET,
    greendlinger: bool = False,
) -> Verdict:
    """Decide w = 1 in the group presented by the symmetrized set.

    Requires the 2/11 cancellation condition (NotK211Error otherwise).
    An empty Dehn fixpoint is a definite Yes.  A non-empty fixpoint of
    length e is certified non-trivial only by exhausting the bounded
    fallback search (cap ``certificate_bound(e, d)``); when the bound
    exceeds the budget the verdict is Unknown.  With ``greendlinger``
    and the strict metric condition, a non-empty fixpoint is already a
    definite No.
    """
    report = k_alpha_check(m, K_DEFAULT_ALPHA)
    if not report.passed:
        raise NotK211Error(
            f"worst pair cancels {report.max_cancelled} letters; "
            f"the 2/11 condition fails"
        )
    state = dehn_reduce(w, m)
    if not state.word:
        return Verdict.YES
    if greendlinger and greendlinger_condition(m):
        return Verdict.NO
    bound = certificate_bound(len(state.word), m.d)
    if bound > budget:
        return Verdict.UNKNOWN
    return _fallback_search(state.word, m, bound, budget)
