"""Hand-computed boundary sets and sandwich matrices for ``C_3`` and ``C_4``.

Words are written with letters ``a, b, c, d`` for ``x_1 .. x_4`` and ``1``
for the empty word.  Matrix rows and columns follow the listed order, which
is not the deg-lex order used by ``sandwich_matrix``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from hkmonoid.polynomial import IntPolynomial
from hkmonoid.words import Word

T = None  # theta
s = IntPolynomial.monomial(1)
one = IntPolynomial.const(1)


def letters(text: str) -> Word:
    if text == "1":
        return ()
    return tuple(ord(ch) - ord("a") + 1 for ch in text)


def _words(text: str) -> Tuple[Word, ...]:
    return tuple(letters(x) for x in text.split())


@dataclass(frozen=True)
class SandwichFixture:
    rows: Tuple[Word, ...]
    cols: Tuple[Word, ...]
    entries: Tuple[Tuple[Optional[int], ...], ...]
    det: IntPolynomial


BOUNDARY: Dict[int, Dict[int, Tuple[Tuple[Word, ...], Tuple[Word, ...]]]] = {
    3: {
        1: (_words("1 b ab"), _words("1 c ca")),
        0: (_words("1 a ba"), _words("1 c cb")),
    },
    4: {
        2: (_words("1 c bc abc"), _words("1 d da dab")),
        1: (_words("1 b cb acb ab bacb"), _words("1 d da dac dc dacd")),
        0: (_words("1 a ba cba"), _words("1 d dc dcb")),
    },
}

SANDWICH: Dict[int, Dict[int, SandwichFixture]] = {
    3: {
        1: SandwichFixture(
            _words("1 c ca"), _words("1 b ab"),
            ((0, 0, 0),
             (0, 0, 1),
             (0, 1, 1)),
            -((s - one) * (s - one)),
        ),
        0: SandwichFixture(
            _words("1 c cb"), _words("1 a ba"),
            ((0, 0, T),
             (0, T, 1),
             (T, 1, 1)),
            -(s * (s + one)),
        ),
    },
    4: {
        2: SandwichFixture(
            _words("1 d da dab"), _words("1 c bc abc"),
            ((0, 0, 0, 0),
             (0, 0, 0, 1),
             (0, 0, 1, 1),
             (0, 1, 1, 1)),
            -((s - one) * (s - one) * (s - one)),
        ),
        1: SandwichFixture(
            _words("1 d dc dac da dacd"), _words("1 b cb acb ab bacb"),
            ((0, 0, T, T, 0, T),
             (0, 0, T, 1, T, 1),
             (T, T, T, 1, 1, 1),
             (T, 1, 1, 1, 1, T),
             (0, T, 1, 1, T, T),
             (T, 1, 1, T, T, 2)),
            # positive in this order; swapping rows dc and da flips the sign
            s * s * s * (s + one) * (s + one) * (s + one),
        ),
        0: SandwichFixture(
            _words("1 d dc dcb"), _words("1 a ba cba"),
            ((0, 0, T, T),
             (0, T, T, 1),
             (T, T, 1, 1),
             (T, 1, 1, T)),
            -(s * s * (s - one)),
        ),
    },
}
