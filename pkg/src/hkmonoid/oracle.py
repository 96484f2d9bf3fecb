"""Brute-force equality in Hecke-Kiselman monoids of arbitrary digraphs.

Two words are equal when a chain of single relation applications joins
them.  Searches are capped in word length (``max(|u|, |v|) + slack``) and
in the number of visited words, so a negative answer is only
"not found".
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from hkmonoid.graphs import Digraph, ensure_valid
from hkmonoid.words import Word, all_words, check_alphabet, deglex_key

EQUAL = "equal"
NOT_FOUND = "not-found"


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Presentation:
    """Generators ``1..m`` and relations ``lhs ~ rhs`` usable in both directions."""

    m: int
    relations: Tuple[Tuple[Word, Word], ...]

    def moves(self) -> Dict[int, List[Tuple[Word, Word]]]:
        """Rewrites indexed by the first letter of the side being replaced."""
        table: Dict[int, List[Tuple[Word, Word]]] = {}
        for lhs, rhs in self.relations:
            table.setdefault(lhs[0], []).append((lhs, rhs))
            table.setdefault(rhs[0], []).append((rhs, lhs))
        return table


def presentation_of(g: Digraph) -> Presentation:
    """Idempotents, commutation of unconnected pairs, and the arrow and edge relations."""
    ensure_valid(g)
    idx = g.index()
    m = len(g.vertices)
    rels: List[Tuple[Word, Word]] = [((x, x), (x,)) for x in range(1, m + 1)]
    linked = set()
    for a, b in g.arrows:
        i, j = idx[a], idx[b]
        linked.add(frozenset((i, j)))
        rels.append(((i, j, i), (i, j)))
        rels.append(((j, i, j), (i, j)))
    for a, b in g.edges:
        i, j = idx[a], idx[b]
        linked.add(frozenset((i, j)))
        rels.append(((i, j, i), (j, i, j)))
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            if frozenset((i, j)) not in linked:
                rels.append(((j, i), (i, j)))
    return Presentation(m, tuple(rels))


def neighbours(moves: Dict[int, List[Tuple[Word, Word]]], w: Word, max_len: int) -> Iterator[Word]:
    """Words one relation application away from ``w`` with length ``<= max_len``."""
    L = len(w)
    for p in range(L):
        for src, dst in moves.get(w[p], ()):
            k = len(src)
            if w[p:p + k] == src and L - k + len(dst) <= max_len:
                yield w[:p] + dst + w[p + k:]


def congruent(p: Presentation, u: Sequence[int], v: Sequence[int], slack: int = 3,
              budget: int = 2_000_000) -> str:
    """Bidirectional breadth-first search between ``u`` and ``v``."""
    u, v = tuple(u), tuple(v)
    check_alphabet(u, p.m)
    check_alphabet(v, p.m)
    if u == v:
        return EQUAL
    cap = max(len(u), len(v)) + slack
    moves = p.moves()
    sides = [{u}, {v}]
    fronts = [[u], [v]]
    visited = 2
    while fronts[0] and fronts[1]:
        s = 0 if len(fronts[0]) <= len(fronts[1]) else 1
        mine, other = sides[s], sides[1 - s]
        nxt = []
        for w in fronts[s]:
            for x in neighbours(moves, w, cap):
                if x in other:
                    return EQUAL
                if x not in mine:
                    mine.add(x)
                    nxt.append(x)
                    visited += 1
                    if visited > budget:
                        return NOT_FOUND
        fronts[s] = nxt
    return NOT_FOUND


def word_class(p: Presentation, w: Sequence[int], max_len: int, budget: int = 2_000_000) -> set:
    """Every word reachable from ``w`` through words of length ``<= max_len``."""
    w = tuple(w)
    moves = p.moves()
    seen = {w}
    queue = deque([w])
    while queue:
        for x in neighbours(moves, queue.popleft(), max_len):
            if x not in seen:
                seen.add(x)
                if len(seen) > budget:
                    raise BudgetExceeded(f"class of {w} exceeds {budget} words")
                queue.append(x)
    return seen


class CongruenceClosure:
    """Connectivity of all words up to ``max_len``, layer by layer.

    After the words of length ``L`` are added, two words are connected
    exactly when a relation chain joins them through words of length
    ``<= L``.  Roots for words of length ``<= keep_len`` are stored at every
    layer, so ``connected(u, v, slack)`` answers the same question as
    ``congruent`` with an unlimited budget.
    """

    def __init__(self, p: Presentation, max_len: int, keep_len: Optional[int] = None,
                 budget: int = 5_000_000):
        self.p = p
        self.max_len = max_len
        self.keep_len = max_len if keep_len is None else min(keep_len, max_len)
        self.index: Dict[Word, int] = {}
        self.words: List[Word] = []
        self.parent: List[int] = []
        self.snapshots: Dict[int, List[int]] = {}
        moves = p.moves()
        kept = 0
        for L in range(max_len + 1):
            for w in all_words(p.m, L, L):
                if len(self.words) >= budget:
                    raise BudgetExceeded(f"closure exceeds {budget} words")
                k = len(self.words)
                self.index[w] = k
                self.words.append(w)
                self.parent.append(k)
                # relations are symmetric: a neighbour not indexed yet links back later
                for x in neighbours(moves, w, L):
                    j = self.index.get(x)
                    if j is not None:
                        self._union(k, j)
            if L <= self.keep_len:
                kept = len(self.words)
            self.snapshots[L] = [self._find(k) for k in range(kept)]

    def _find(self, k: int) -> int:
        parent = self.parent
        root = k
        while parent[root] != root:
            root = parent[root]
        while parent[k] != root:
            parent[k], k = root, parent[k]
        return root

    def _union(self, a: int, b: int) -> None:
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            # keep the deg-lex smaller word as the root
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb

    def connected(self, u: Sequence[int], v: Sequence[int], slack: int = 3) -> bool:
        u, v = tuple(u), tuple(v)
        bound = max(len(u), len(v)) + slack
        if bound > self.max_len or max(len(u), len(v)) > self.keep_len:
            raise ValueError(f"closure built to length {self.max_len}, query needs {bound}")
        roots = self.snapshots[bound]
        return roots[self.index[u]] == roots[self.index[v]]

    def representative(self, w: Sequence[int], bound: Optional[int] = None) -> Word:
        """Deg-lex least word joined to ``w`` within length ``bound``."""
        bound = self.max_len if bound is None else bound
        return self.words[self.snapshots[bound][self.index[tuple(w)]]]


@dataclass(frozen=True)
class ElementClass:
    representative: Word
    members: Tuple[Word, ...]


def enumerate_elements(p: Presentation, maxlen: int, slack: int = 3,
                       budget: int = 5_000_000) -> List[ElementClass]:
    """Classes of all words of length ``<= maxlen``, searched up to ``maxlen + slack``.

    Raises ``BudgetExceeded`` if more than ``budget`` words would be needed.
    """
    if sum(p.m ** L for L in range(maxlen + slack + 1)) > budget:
        raise BudgetExceeded(f"{p.m} generators up to length {maxlen + slack} exceed {budget} words")
    closure = CongruenceClosure(p, maxlen + slack, keep_len=maxlen, budget=budget)
    groups: Dict[int, List[Word]] = {}
    roots = closure.snapshots[maxlen + slack]
    for k, root in enumerate(roots):
        groups.setdefault(root, []).append(closure.words[k])
    out = [ElementClass(closure.words[root], tuple(sorted(ws, key=deglex_key)))
           for root, ws in groups.items()]
    return sorted(out, key=lambda c: deglex_key(c.representative))
