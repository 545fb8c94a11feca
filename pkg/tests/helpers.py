"""Shared test utilities: independent rewriting oracles and random data.

The equality oracles here deliberately avoid the reachability-set
machinery under test: they work by elementary insert/delete moves on a
capped universe of words, so agreement between the two routes is a real
check.
"""

from __future__ import annotations

import itertools
import random


class UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def all_words(n: int, max_len: int):
    for ln in range(max_len + 1):
        for combo in itertools.product(range(1, n + 1), repeat=ln):
            yield combo


def rewriting_classes(relations, n: int, max_len: int) -> UnionFind:
    """Union-find over all words of length <= max_len, with one edge per
    deletion of a relation left-hand side (insertions are the same
    edges read backwards)."""
    relations = [tuple(r) for r in relations if r]
    uf = UnionFind()
    for w in all_words(n, max_len):
        uf.add(w)
    for w in uf.parent.copy():
        for rel in relations:
            rl = len(rel)
            for i in range(len(w) - rl + 1):
                if w[i: i + rl] == rel:
                    uf.union(w, w[:i] + w[i + rl:])
    return uf


def bfs_equal(uf: UnionFind, x, y) -> bool:
    return uf.find(tuple(x)) == uf.find(tuple(y))


def random_word(rng: random.Random, n: int, max_len: int, min_len: int = 0):
    ln = rng.randint(min_len, max_len)
    return tuple(rng.randint(1, n) for _ in range(ln))


def random_reduced_group_word(rng: random.Random, n: int, length: int):
    letters = [g for g in range(1, n + 1)] + [-g for g in range(1, n + 1)]
    word = []
    for _ in range(length):
        choices = [g for g in letters if not word or g != -word[-1]]
        word.append(rng.choice(choices))
    return tuple(word)


def random_presentation(rng: random.Random, max_n=3, max_k=3, max_ell=4):
    from specialmonoids import make_presentation

    n = rng.randint(2, max_n)
    k = rng.randint(1, max_k)
    relations = []
    for _ in range(k):
        ln = rng.randint(1, max_ell)
        relations.append(tuple(rng.randint(1, n) for _ in range(ln)))
    return make_presentation(n, relations)


def planted_equal_pair(rng: random.Random, relations, n: int, max_len: int):
    """A pair (x, y) equal by construction: y is x with relation
    occurrences inserted/deleted, both within max_len letters."""
    relations = [tuple(r) for r in relations if r]
    x = random_word(rng, n, max_len)
    y = x
    for _ in range(rng.randint(1, 3)):
        if rng.random() < 0.5 and relations:
            rel = rng.choice(relations)
            if len(y) + len(rel) <= max_len:
                i = rng.randint(0, len(y))
                y = y[:i] + rel + y[i:]
        else:
            hits = [
                (i, rel)
                for rel in relations
                for i in range(len(y) - len(rel) + 1)
                if y[i: i + len(rel)] == rel
            ]
            if hits:
                i, rel = rng.choice(hits)
                y = y[:i] + y[i + len(rel):]
    return x, y
