"""Todd-Coxeter coset enumeration over a finite presentation.

The enumerator computes the action of the group generators on the right
cosets of a finitely generated subgroup, when that index is finite and
within budget.  Strategy: HLT relator scanning with filling, coincidences
handled through a union-find queue with path compression.  A completed
table is renumbered into breadth-first standard form (columns ordered
g1, g1^-1, g2, g2^-1, ...), which makes the result independent of the
internal deduction order; witness words fall out of the BFS tree.

Cosets are numbered 1..index and coset 1 is the subgroup itself.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import CosetRangeError, ResourceExhausted
from .word_algebra import GroupPresentation, Word


@dataclass(frozen=True)
class EnumerationLimits:
    """Hard resource budget for one enumeration run."""

    max_live_cosets: int = 1_000_000
    max_total_defined: int = 10_000_000

    def __post_init__(self):
        if self.max_live_cosets <= 0 or self.max_total_defined <= 0:
            raise ValueError("limits must be positive")
        if self.max_total_defined < self.max_live_cosets:
            raise ValueError("max_total_defined must be >= max_live_cosets")


def _columns(word: Word) -> tuple[int, ...]:
    # column 2i carries generator i, column 2i+1 its inverse; col ^ 1 flips
    return tuple(2 * i + (0 if s > 0 else 1) for i, s in word)


def _column_letter(col: int) -> tuple[int, int]:
    return (col // 2, 1 if col % 2 == 0 else -1)


class CosetTable:
    """Complete standardized right-coset table.

    The action maps (coset, signed generator) to a coset and restricts to
    a permutation of 1..index on each signed generator.  Every relator
    traces each coset to itself and every subgroup generator fixes
    coset 1.  witness(c) is a word carrying coset 1 to c along the BFS
    discovery tree (witness(1) is the empty word).
    """

    def __init__(self, subgroup_generators: Sequence[Word], n_generators: int,
                 rows: list[list[int]], parents: list[Optional[tuple[int, int]]],
                 total_defined: int):
        self.subgroup_generators = tuple(subgroup_generators)
        self.n_generators = n_generators
        self._rows = rows
        self._parents = parents
        self.total_defined = total_defined

    @property
    def index(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return 2 * self.n_generators

    def letter_action(self, coset: int, letter: tuple[int, int]) -> int:
        i, s = letter
        return self._rows[coset - 1][2 * i + (0 if s > 0 else 1)]

    def trace(self, start: int, word: Word) -> int:
        """Apply the word left to right starting from the given coset."""
        if not 1 <= start <= self.index:
            raise CosetRangeError(start, self.index)
        ncols = self.ncols
        c = start
        rows = self._rows
        for i, s in word:
            col = 2 * i + (0 if s > 0 else 1)
            if col >= ncols:
                raise ValueError("word uses a generator outside this table's alphabet")
            c = rows[c - 1][col]
        return c

    def membership(self, word: Word) -> bool:
        """True iff the word lies in the subgroup (traces coset 1 to itself)."""
        return self.trace(1, word) == 1

    def witness(self, coset: int) -> Word:
        """A word with trace(1, word) == coset, read off the BFS tree."""
        if not 1 <= coset <= self.index:
            raise CosetRangeError(coset, self.index)
        letters = []
        c = coset
        while self._parents[c - 1] is not None:
            parent, col = self._parents[c - 1]
            letters.append(_column_letter(col))
            c = parent
        return Word(tuple(reversed(letters)))

    def __repr__(self):
        return f"<CosetTable index={self.index} on {self.n_generators} generators>"


class _Enumeration:
    """One HLT run; internal cosets are 0-based until standardization."""

    def __init__(self, pres: GroupPresentation, subgroup: Sequence[Word],
                 limits: EnumerationLimits):
        self.ncols = 2 * len(pres.generators)
        self.relators = [_columns(r) for r in pres.relators]
        self.subgroup = [_columns(w) for w in subgroup]
        self.limits = limits
        self.table: list[list[Optional[int]]] = [[None] * self.ncols]
        self.p = [0]
        self.live = 1
        self.defined = 1

    def rep(self, k: int) -> int:
        p = self.p
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def merge(self, a: int, b: int, queue: deque) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.p[b] = a
        self.live -= 1
        queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        table = self.table
        queue: deque[int] = deque()
        self.merge(a, b, queue)
        while queue:
            gamma = queue.popleft()
            for col in range(self.ncols):
                delta = table[gamma][col]
                if delta is None:
                    continue
                # dismantle the dead row, re-install the edge at representatives
                table[delta][col ^ 1] = None
                mu = self.rep(gamma)
                nu = self.rep(delta)
                if table[mu][col] is not None:
                    self.merge(nu, table[mu][col], queue)
                elif table[nu][col ^ 1] is not None:
                    self.merge(mu, table[nu][col ^ 1], queue)
                else:
                    table[mu][col] = nu
                    table[nu][col ^ 1] = mu

    def define(self, alpha: int, col: int) -> None:
        if self.live >= self.limits.max_live_cosets or \
                self.defined >= self.limits.max_total_defined:
            raise ResourceExhausted(self.limits, self.live, self.defined)
        beta = len(self.table)
        self.table.append([None] * self.ncols)
        self.p.append(beta)
        self.live += 1
        self.defined += 1
        self.table[alpha][col] = beta
        self.table[beta][col ^ 1] = alpha

    def scan_and_fill(self, alpha: int, word: tuple[int, ...]) -> None:
        if not word:
            return
        table = self.table
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            self.define(f, word[i])

    def run(self) -> tuple[list[list[int]], list[Optional[tuple[int, int]]], int]:
        for w in self.subgroup:
            self.scan_and_fill(0, w)
        alpha = 0
        while alpha < len(self.table):
            if self.p[alpha] == alpha:
                for rel in self.relators:
                    self.scan_and_fill(alpha, rel)
                    if self.p[alpha] < alpha:
                        break
                if self.p[alpha] == alpha:
                    row = self.table[alpha]
                    for col in range(self.ncols):
                        if row[col] is None:
                            self.define(alpha, col)
            alpha += 1
        return self._standardize()

    def _standardize(self):
        """Renumber live cosets in BFS order by (coset, column) from coset 0."""
        table, ncols = self.table, self.ncols
        order = [0]  # coset 0 survives every merge (min index wins)
        number = {0: 0}
        parents: list[Optional[tuple[int, int]]] = [None]
        pos = 0
        while pos < len(order):
            c = order[pos]
            pos += 1
            for col in range(ncols):
                d = table[c][col]
                if d is None:
                    raise AssertionError("incomplete row after enumeration")
                d = self.rep(d)
                if d not in number:
                    number[d] = len(order)
                    parents.append((number[c] + 1, col))
                    order.append(d)
        if len(order) != self.live:
            raise AssertionError("coset table is not connected")
        rows = [[number[self.rep(table[c][col])] + 1 for col in range(ncols)]
                for c in order]
        return rows, parents, self.defined


def _verify(table: CosetTable, pres: GroupPresentation,
            subgroup: Sequence[Word]) -> None:
    """Cheap linear post-checks of the table invariants."""
    n = table.index
    for col in range(table.ncols):
        seen = [False] * n
        for c in range(1, n + 1):
            d = table._rows[c - 1][col]
            if not 1 <= d <= n or seen[d - 1]:
                raise AssertionError("column is not a permutation")
            seen[d - 1] = True
            if table._rows[d - 1][col ^ 1] != c:
                raise AssertionError("action is not inverse-consistent")
    for rel in pres.relators:
        for c in range(1, n + 1):
            if table.trace(c, rel) != c:
                raise AssertionError("relator does not close")
    for w in subgroup:
        if not table.membership(w):
            raise AssertionError("subgroup generator moved coset 1")
    for c in range(2, n + 1):
        parent, col = table._parents[c - 1]
        if table._rows[parent - 1][col] != c:
            raise AssertionError("witness tree is inconsistent")


def enumerate_cosets(pres: GroupPresentation, subgroup: Sequence[Word],
                     limits: Optional[EnumerationLimits] = None) -> CosetTable:
    """Enumerate the cosets of the subgroup generated by the given words.

    Returns a complete standardized table, or raises ResourceExhausted if
    the limits are hit first (which is inconclusive about the index).
    """
    if limits is None:
        limits = EnumerationLimits()
    ngens = len(pres.generators)
    for w in subgroup:
        if w.max_generator_index() >= ngens:
            raise ValueError("subgroup word uses a generator outside the presentation")
    rows, parents, defined = _Enumeration(pres, subgroup, limits).run()
    table = CosetTable(subgroup, ngens, rows, parents, defined)
    _verify(table, pres, subgroup)
    return table
