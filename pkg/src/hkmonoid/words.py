"""Words over the alphabet ``1..n``.

A word is a plain tuple of 1-based generator indices; the empty tuple is
the identity.  Every other module passes words around in this form.
"""

from __future__ import annotations

import string
from itertools import product
from typing import Iterable, Iterator, Sequence, Tuple

Word = Tuple[int, ...]

EMPTY: Word = ()


def as_word(letters: Iterable[int]) -> Word:
    return tuple(int(x) for x in letters)


def check_alphabet(w: Sequence[int], n: int) -> None:
    """Raise ``ValueError`` unless every letter of ``w`` lies in ``1..n``."""
    for x in w:
        if not 1 <= x <= n:
            raise ValueError(f"letter {x} outside alphabet 1..{n}")


def check_rank(n: int) -> None:
    if n < 3:
        raise ValueError(f"cycle length must be at least 3, got {n}")


def prev_letter(i: int, n: int) -> int:
    """``i - 1`` with ``0`` wrapped to ``n``."""
    return n if i == 1 else i - 1


def next_letter(i: int, n: int) -> int:
    """``i + 1`` with ``n + 1`` wrapped to ``1``."""
    return 1 if i == n else i + 1


def deglex_key(w: Sequence[int]) -> tuple:
    return (len(w), tuple(w))


def deglex_compare(u: Sequence[int], v: Sequence[int]) -> int:
    """Compare in deg-lex order: -1 if ``u < v``, 0 if equal, 1 if ``u > v``.

    Shorter words are smaller; words of equal length compare letter by
    letter.
    """
    ku, kv = deglex_key(u), deglex_key(v)
    return (ku > kv) - (ku < kv)


def count_letter(w: Sequence[int], q: int) -> int:
    return sum(1 for x in w if x == q)


def q_word(n: int, i: int) -> Word:
    """The word ``q_i = x_1 ... x_i x_{n-1} ... x_{i+1}`` for ``0 <= i <= n-2``."""
    if not 0 <= i <= n - 2:
        raise ValueError(f"index i={i} outside 0..{n - 2}")
    return tuple(range(1, i + 1)) + tuple(range(n - 1, i, -1))


def xq_word(n: int, i: int) -> Word:
    """``x_n q_i``, the generator of the cyclic semigroup behind ``M_i``."""
    return (n,) + q_word(n, i)


def find_factor(w: Sequence[int], pattern: Sequence[int]) -> list[int]:
    """All start positions of ``pattern`` in ``w``, overlaps included."""
    w, pattern = tuple(w), tuple(pattern)
    m = len(pattern)
    if m == 0:
        return list(range(len(w) + 1))
    return [p for p in range(len(w) - m + 1) if w[p:p + m] == pattern]


def has_factor(w: Sequence[int], pattern: Sequence[int]) -> bool:
    w, pattern = tuple(w), tuple(pattern)
    m = len(pattern)
    return any(w[p:p + m] == pattern for p in range(len(w) - m + 1))


def is_periodic_factor(w: Sequence[int], period: Sequence[int]) -> bool:
    """True if ``w`` is a factor of the infinite word ``period period ...``."""
    reps = len(w) // len(period) + 2
    return has_factor(tuple(period) * reps, w)


def parse_word(text: str, n: int | None = None) -> Word:
    """Parse whitespace-separated 1-based indices; ``""`` is the identity."""
    letters = []
    for tok in text.split():
        try:
            x = int(tok)
        except ValueError:
            raise ValueError(f"not a generator index: {tok!r}") from None
        if x < 1 or (n is not None and x > n):
            bound = f"1..{n}" if n is not None else "positive"
            raise ValueError(f"index {x} out of range ({bound})")
        letters.append(x)
    return tuple(letters)


def format_word(w: Sequence[int], letters: bool = False) -> str:
    """Render a word; with ``letters=True`` use ``a, b, c, ...`` (n <= 26)."""
    if letters:
        if not w:
            return "1"
        return "".join(string.ascii_lowercase[x - 1] for x in w)
    return " ".join(str(x) for x in w)


def all_words(n: int, max_len: int, min_len: int = 0) -> Iterator[Word]:
    """Every word over ``1..n`` with length in ``[min_len, max_len]``, deg-lex order."""
    for length in range(min_len, max_len + 1):
        for w in product(range(1, n + 1), repeat=length):
            yield w
