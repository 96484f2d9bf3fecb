"""Maps on ``C_n``: the coordinate-copy representation ``f`` and the
involutions used to pair up left and right boundary sets.

``f`` sends each generator to a self-map of ``Z^n``.  Every map reachable
from the generators copies coordinates and adds a nonnegative constant,
so it is stored as two arrays: output coordinate ``j`` equals
``m[src[j]] + shift[j]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from hkmonoid.words import Word, check_alphabet


@dataclass(frozen=True)
class AffineProjectionMap:
    src: Tuple[int, ...]
    shift: Tuple[int, ...]

    def __post_init__(self):
        if len(self.src) != len(self.shift):
            raise ValueError("src and shift must have the same length")
        n = len(self.src)
        if any(not 1 <= s <= n for s in self.src) or any(c < 0 for c in self.shift):
            raise AssertionError(f"map left the copy-plus-shift form: {self}")

    @property
    def n(self) -> int:
        return len(self.src)

    @classmethod
    def identity(cls, n: int) -> "AffineProjectionMap":
        return cls(tuple(range(1, n + 1)), (0,) * n)

    def __call__(self, m: Sequence[int]) -> Tuple[int, ...]:
        return tuple(m[s - 1] + c for s, c in zip(self.src, self.shift))

    def then_apply(self, right: "AffineProjectionMap") -> "AffineProjectionMap":
        """The composite ``self o right``: first ``right``, then ``self``."""
        src = tuple(right.src[s - 1] for s in self.src)
        shift = tuple(c + right.shift[s - 1] for s, c in zip(self.src, self.shift))
        return AffineProjectionMap(src, shift)

    __matmul__ = then_apply

    def support(self) -> frozenset:
        return frozenset(self.src)

    def to_json(self) -> dict:
        return {"src": list(self.src), "shift": list(self.shift), "support": sorted(self.support())}


def f_letter(n: int, g: int) -> AffineProjectionMap:
    src = list(range(1, n + 1))
    shift = [0] * n
    if g == n:
        src[n - 1] = 1
        shift[n - 1] = 1
    else:
        src[g - 1] = g + 1
    return AffineProjectionMap(tuple(src), tuple(shift))


def f_word(n: int, w: Sequence[int]) -> AffineProjectionMap:
    """``f(w)`` with ``f(uv)(m) = f(u)(f(v)(m))``; the empty word gives the identity."""
    check_alphabet(w, n)
    h = AffineProjectionMap.identity(n)
    for g in w:
        h = h @ f_letter(n, g)
    return h


def support(h: AffineProjectionMap) -> frozenset:
    return h.support()


def q_member(n: int, w: Sequence[int], i: int) -> bool:
    """Whether ``w`` lies in ``Q_i``: ``f(w)`` depends on at most ``n - i - 2`` coordinates."""
    if not 0 <= i <= n - 2:
        raise ValueError(f"index i={i} outside 0..{n - 2}")
    return len(f_word(n, w).support()) <= n - i - 2


def tau(n: int, w: Sequence[int]) -> Word:
    """The anti-automorphism ``x_g -> x_{n-g}`` (``x_n`` fixed), applied with reversal."""
    return tuple(g if g == n else n - g for g in reversed(w))


def sigma(n: int, w: Sequence[int], m: int = 1) -> Word:
    """The cyclic shift ``x_g -> x_{g+m}`` (indices mod ``n``)."""
    return tuple((g - 1 + m) % n + 1 for g in w)


def chi(n: int, i: int, w: Sequence[int]) -> Word:
    """``chi_i = sigma^(i+1) tau``; exchanges the left and right boundary sets of ``M_i``."""
    return sigma(n, tau(n, w), i + 1)


def embed(n: int, w: Sequence[int]) -> Word:
    """Send a word of ``C_{n-1}`` into ``C_n``: ``y_g -> x_{g+1}`` and ``y_{n-1} -> x_n x_1``."""
    check_alphabet(w, n - 1)
    out = []
    for g in w:
        if g == n - 1:
            out.extend((n, 1))
        else:
            out.append(g + 1)
    return tuple(out)
