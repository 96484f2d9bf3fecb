"""Normal forms in the cycle monoid ``C_n``.

The reduction system has five rule families (deg-lex decreasing):

    R1  x_i x_i              -> x_i
    R2  x_j x_i              -> x_i x_j            1 < j - i < n - 1
    R3  x_n (x_1..x_i) x_j   -> x_j x_n (x_1..x_i)  i + 1 < j < n - 1
    R4  x_i u x_i            -> x_i u              u != 1, |u|_i = |u|_{i-1} = 0
    R5  x_i v x_i            -> v x_i              v != 1, |v|_i = |v|_{i+1} = 0

with ``i - 1`` and ``i + 1`` read cyclically.  A word is reduced when none
of the left-hand sides occurs in it, and reduced words are exactly the
elements of ``C_n``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from hkmonoid.words import Word, deglex_key, format_word, next_letter, prev_letter, xq_word


@dataclass(frozen=True)
class ReductionRule:
    """One rule instance: its family, parameters and matched length.

    ``params`` is ``(i,)`` for R1, R4 and R5, ``(j, i)`` for R2 and
    ``(i, j)`` for R3.
    """

    kind: int
    params: Tuple[int, ...]
    length: int

    def __post_init__(self):
        arity = {1: 1, 2: 2, 3: 2, 4: 1, 5: 1}.get(self.kind)
        if arity is None or len(self.params) != arity:
            raise ValueError(f"malformed rule: kind {self.kind}, params {self.params}")

    def __str__(self) -> str:
        if self.kind in (1, 4, 5):
            return f"R{self.kind}(i={self.params[0]})"
        if self.kind == 2:
            return f"R2(j={self.params[0]},i={self.params[1]})"
        return f"R3(i={self.params[0]},j={self.params[1]})"


@dataclass(frozen=True)
class TraceStep:
    rule: ReductionRule
    position: int
    before: Word
    after: Word

    def __str__(self) -> str:
        return f"{self.rule}@{self.position}: {format_word(self.before)} -> {format_word(self.after)}"


def _matches_at(n: int, w: Sequence[int], p: int) -> List[ReductionRule]:
    """Every rule whose left-hand side starts at position ``p``, by kind."""
    L = len(w)
    x = w[p]
    found = []
    if p + 1 < L:
        y = w[p + 1]
        if x == y:
            found.append(ReductionRule(1, (x,), 2))
        if 1 < x - y < n - 1:
            found.append(ReductionRule(2, (x, y), 2))
    if x == n:
        t = p + 1
        r = 0
        while t < L and w[t] == r + 1:
            r += 1
            t += 1
        if r >= 1 and t < L and r + 1 < w[t] < n - 1:
            found.append(ReductionRule(3, (r, w[t]), r + 2))
    # R4 / R5 only need the nearest later occurrence of x.
    lo, hi = prev_letter(x, n), next_letter(x, n)
    seen_lo = seen_hi = False
    for q in range(p + 1, L):
        z = w[q]
        if z == x:
            if q >= p + 2:
                if not seen_lo:
                    found.append(ReductionRule(4, (x,), q - p + 1))
                if not seen_hi:
                    found.append(ReductionRule(5, (x,), q - p + 1))
            break
        if z == lo:
            seen_lo = True
        if z == hi:
            seen_hi = True
        if seen_lo and seen_hi:
            break
    return found


def find_redex(n: int, w: Sequence[int]) -> Optional[Tuple[ReductionRule, int]]:
    """Leftmost redex of ``w`` (lowest rule kind on ties), or ``None`` if reduced."""
    for p in range(len(w)):
        found = _matches_at(n, w, p)
        if found:
            return found[0], p
    return None


def all_redexes(n: int, w: Sequence[int]) -> List[Tuple[ReductionRule, int]]:
    return [(rule, p) for p in range(len(w)) for rule in _matches_at(n, w, p)]


def _rewrite(n: int, w: Word, rule: ReductionRule, p: int) -> Word:
    k = rule.kind
    if k == 1:
        return w[:p + 1] + w[p + 2:]
    if k == 2:
        return w[:p] + (w[p + 1], w[p]) + w[p + 2:]
    if k == 3:
        i, j = rule.params
        return w[:p] + (j, n) + tuple(range(1, i + 1)) + w[p + i + 2:]
    if k == 4:
        q = p + rule.length - 1
        return w[:q] + w[q + 1:]
    return w[:p] + w[p + 1:]


def apply_rule(n: int, w: Sequence[int], rule: ReductionRule, position: int) -> Word:
    """Apply ``rule`` at ``position``; raises ``ValueError`` if it does not match there."""
    w = tuple(w)
    if not 0 <= position < len(w) or rule not in _matches_at(n, w, position):
        raise ValueError(f"{rule} does not match {format_word(w)!r} at position {position}")
    return _rewrite(n, w, rule, position)


def _suffix_redex(n: int, w: List[int]) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """Find a redex ending at the last letter of ``w``.

    Assumes ``w[:-1]`` is reduced.  Returns ``(start, tail)`` meaning the
    rewritten word is ``w[:start] + tail``; ``None`` if ``w`` is reduced.
    """
    L = len(w)
    if L < 2:
        return None
    x = w[-1]
    y = w[-2]
    if y == x:
        return L - 1, ()
    if 1 < y - x < n - 1:
        return L - 2, (x, y)
    if 1 <= y and y + 1 < x < n - 1 and L >= y + 2:
        start = L - 2 - y
        if w[start] == n and all(w[start + 1 + k] == k + 1 for k in range(y)):
            return start, (x, n) + tuple(range(1, y + 1))
    lo, hi = prev_letter(x, n), next_letter(x, n)
    seen_lo = seen_hi = False
    for q in range(L - 2, -1, -1):
        z = w[q]
        if z == x:
            if q <= L - 3:
                if not seen_lo:
                    return L - 1, ()
                if not seen_hi:
                    return q, tuple(w[q + 1:])
            return None
        if z == lo:
            seen_lo = True
        if z == hi:
            seen_hi = True
        if seen_lo and seen_hi:
            return None
    return None


def normalize(n: int, w: Sequence[int]) -> Word:
    """Reduced form of ``w`` in ``C_n``.

    Letters are pushed one at a time onto a reduced prefix; a redex can then
    only end at the new letter, and after a rewrite the unchanged prefix is
    kept while the changed tail is pushed again.
    """
    out: List[int] = []
    pending = list(reversed(w))
    while pending:
        out.append(pending.pop())
        hit = _suffix_redex(n, out)
        if hit is not None:
            start, tail = hit
            del out[start:]
            pending.extend(reversed(tail))
    return tuple(out)


def trace_normalize(n: int, w: Sequence[int]) -> Tuple[Word, List[TraceStep]]:
    """Reduce with the leftmost strategy and record every step."""
    w = tuple(w)
    steps = []
    while True:
        hit = find_redex(n, w)
        if hit is None:
            return w, steps
        rule, p = hit
        after = _rewrite(n, w, rule, p)
        if deglex_key(after) >= deglex_key(w):
            raise AssertionError(f"{rule} did not decrease {format_word(w)!r}")
        steps.append(TraceStep(rule, p, w, after))
        w = after


def normalize_with_strategy(n: int, w: Sequence[int], seed: int) -> Word:
    """Reduce by applying a pseudorandomly chosen redex at every step."""
    rng = random.Random(seed)
    w = tuple(w)
    while True:
        options = all_redexes(n, w)
        if not options:
            return w
        rule, p = rng.choice(options)
        w = _rewrite(n, w, rule, p)


def is_reduced(n: int, w: Sequence[int]) -> bool:
    return find_redex(n, w) is None


def multiply(n: int, u: Sequence[int], v: Sequence[int]) -> Word:
    return normalize(n, tuple(u) + tuple(v))


def power_of_q(n: int, i: int, w: Sequence[int]) -> Optional[int]:
    """``k`` if ``w`` is literally ``(x_n q_i)^k`` with ``k >= 1``, else ``None``."""
    base = xq_word(n, i)
    w = tuple(w)
    k, rem = divmod(len(w), len(base))
    if k >= 1 and rem == 0 and w == base * k:
        return k
    return None


def iter_reduced(n: int, max_len: int) -> Iterator[Word]:
    """Reduced words of length ``<= max_len`` in deg-lex order.

    Reducedness is closed under taking prefixes, so each layer is grown from
    the previous one by appending a letter.
    """
    layer: List[Word] = [()]
    for length in range(max_len + 1):
        yield from layer
        if length == max_len:
            return
        nxt = []
        for w in layer:
            buf = list(w)
            for g in range(1, n + 1):
                buf.append(g)
                if _suffix_redex(n, buf) is None:
                    nxt.append(w + (g,))
                buf.pop()
        layer = nxt
