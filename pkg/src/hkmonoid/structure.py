"""Matrix-type pieces of ``C_n``.

Every reduced word containing a factor ``x_n q_i`` is ``a (x_n q_i)^k b``
with ``a`` from a finite left boundary set ``A_i`` and ``b`` from a finite
right boundary set ``B_i``.  Multiplying two such words either lands in
the same shape again, with the exponent read off a ``B_i x A_i`` sandwich
matrix, or falls into the ideal ``I_i`` (the zero ``theta``).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from hkmonoid.maps import chi, f_word, q_member
from hkmonoid.polynomial import IntPolynomial, determinant
from hkmonoid.rewrite import is_reduced, iter_reduced, normalize, power_of_q
from hkmonoid.words import Word, check_rank, deglex_key, format_word, has_factor, xq_word

YES, NO, UNKNOWN = "yes", "no", "unknown"


def _check_index(n: int, i: int) -> None:
    check_rank(n)
    if not 0 <= i <= n - 2:
        raise ValueError(f"index i={i} outside 0..{n - 2}")


@lru_cache(maxsize=None)
def right_boundary(n: int, i: int) -> FrozenSet[Word]:
    """Words ``b`` free of ``x_n q_i`` with ``(x_n q_i) b`` reduced.

    The set is prefix-closed, so it is grown letter by letter.
    """
    _check_index(n, i)
    base = xq_word(n, i)
    found = {()}
    frontier = [()]
    while frontier:
        nxt = []
        for b in frontier:
            for g in range(1, n + 1):
                c = b + (g,)
                if not has_factor(c, base) and is_reduced(n, base + c):
                    found.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(found)


@lru_cache(maxsize=None)
def left_boundary(n: int, i: int) -> FrozenSet[Word]:
    """Words ``a`` free of ``x_n q_i`` with ``a (x_n q_i)`` reduced (suffix-closed)."""
    _check_index(n, i)
    base = xq_word(n, i)
    found = {()}
    frontier = [()]
    while frontier:
        nxt = []
        for a in frontier:
            for g in range(1, n + 1):
                c = (g,) + a
                if not has_factor(c, base) and is_reduced(n, c + base):
                    found.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(found)


@dataclass(frozen=True)
class BoundarySets:
    """``A`` sorted deg-lex; ``B[k]`` is the reduced form of ``chi_i(A[k])``."""

    n: int
    i: int
    A: Tuple[Word, ...]
    B: Tuple[Word, ...]

    def to_json(self) -> dict:
        return {"n": self.n, "i": self.i, "A": [list(a) for a in self.A], "B": [list(b) for b in self.B]}


@lru_cache(maxsize=None)
def boundary_sets(n: int, i: int) -> BoundarySets:
    A = tuple(sorted(left_boundary(n, i), key=deglex_key))
    B = tuple(normalize(n, chi(n, i, a)) for a in A)
    if set(B) != right_boundary(n, i) or len(set(B)) != len(B):
        raise AssertionError(f"chi_{i} does not carry A_{i} onto B_{i} for n={n}")
    return BoundarySets(n, i, A, B)


def _desc(hi: int, lo: int) -> Word:
    return tuple(range(hi, lo - 1, -1))


def _increasing_chains(lo: int, hi: int, length: int):
    """Strictly increasing tuples of ``length`` values in ``[lo, hi]``."""
    if length == 0:
        yield ()
        return
    for first in range(lo, hi + 1):
        for rest in _increasing_chains(first + 1, hi, length - 1):
            yield (first,) + rest


def _right_blocks(n: int, i_seq: Sequence[int], j_seq: Sequence[int]) -> Word:
    word: Word = ()
    for ik, jk in zip(i_seq, j_seq):
        word += (n,) + tuple(range(1, ik + 1)) + _desc(n - 1, jk)
    return word


def boundary_sets_parametric(n: int, i: int, truncated: bool = False) -> Tuple[FrozenSet[Word], FrozenSet[Word]]:
    """Boundary sets built from the block parametrisation, as ``(A, B)``.

    ``A`` is the suffix closure of ``(x_{k_s}..x_s)(x_{k_{s+1}}..x_{s+1})...(x_{k_{i+1}}..x_{i+1})``
    with an ascending first block (``k_s <= s``) and descending later blocks
    (``q < k_q``, strictly increasing, ``<= n-1``).  ``B`` is the prefix
    closure of ``x_n(x_1..x_{i_1} x_{n-1}..x_{j_1}) ... x_n x_{n-1}..x_{j_{r+1}}``
    with ``i+1 > i_1 > ... > i_r >= 1`` and ``i+1 < j_1 < ... < j_{r+1} <= n``.

    With ``truncated=True`` the word may instead stop inside one more block
    ``x_n x_1..x_{i'}`` whose descending part and trailing constraint are
    not yet present.
    """
    _check_index(n, i)
    tops = set()
    for s in range(0, i + 2):
        later = i + 1 - s
        firsts = [()] if s == 0 else [tuple(range(k, s + 1)) for k in range(1, s + 1)]
        for ks in _increasing_chains(1, n - 1, later):
            qs = range(s + 1, i + 2)
            if any(k <= q for k, q in zip(ks, qs)):
                continue
            tail = sum((_desc(k, q) for k, q in zip(ks, qs)), ())
            for first in firsts:
                tops.add(first + tail)
    A = {w[p:] for w in tops for p in range(len(w) + 1)}

    heads = set()
    for r in range(0, i + 1):
        for i_chain in _increasing_chains(1, i, r):
            i_seq = tuple(reversed(i_chain))
            for j_seq in _increasing_chains(i + 2, n, r + 1):
                if any(j > n - 1 for j in j_seq[:-1]):
                    continue
                heads.add(_right_blocks(n, i_seq, j_seq) + (n,) + _desc(n - 1, j_seq[-1]))
            if truncated and r:
                # the last block stops after its ascending run
                for j_seq in _increasing_chains(i + 2, n - 1, r - 1):
                    heads.add(_right_blocks(n, i_seq[:-1], j_seq) + (n,) + tuple(range(1, i_seq[-1] + 1)))
    B = {w[:p] for w in heads for p in range(len(w) + 1)}
    return frozenset(A), frozenset(B)


@dataclass(frozen=True)
class MatrixElement:
    """The reduced word ``a (x_n q_i)^k b`` viewed as a triple of ``M_i``."""

    i: int
    a: Word
    k: int
    b: Word

    def word(self, n: int) -> Word:
        return self.a + xq_word(n, self.i) * self.k + self.b

    def to_json(self) -> dict:
        return {"i": self.i, "a": list(self.a), "k": self.k, "b": list(self.b)}


def classify(n: int, w: Sequence[int]) -> Optional[MatrixElement]:
    """Split a reduced word as ``a (x_n q_i)^k b``; ``None`` for exceptional words.

    Raises ``ValueError`` if ``w`` is not reduced and ``AssertionError`` if
    the split does not have the guaranteed shape.
    """
    check_rank(n)
    w = tuple(w)
    if not is_reduced(n, w):
        raise ValueError(f"{format_word(w)!r} is not reduced in C_{n}")
    hits = []
    for j in range(n - 1):
        base = xq_word(n, j)
        m = len(base)
        pos = next((p for p in range(len(w) - m + 1) if w[p:p + m] == base), None)
        if pos is not None:
            hits.append((j, pos))
    if not hits:
        return None
    if len(hits) > 1:
        raise AssertionError(f"{format_word(w)!r} contains x_n q_j for several j: {hits}")
    i, p = hits[0]
    base = xq_word(n, i)
    m = len(base)
    k = 0
    while w[p + k * m:p + (k + 1) * m] == base:
        k += 1
    a, b = w[:p], w[p + k * m:]
    if a not in left_boundary(n, i) or b not in right_boundary(n, i):
        raise AssertionError(f"{format_word(w)!r} splits outside A_{i} x B_{i}: a={a}, b={b}")
    return MatrixElement(i, a, k, b)


def compose(n: int, i: int, a: Sequence[int], k: int, b: Sequence[int]) -> Word:
    a, b = tuple(a), tuple(b)
    _check_index(n, i)
    if k < 1:
        raise ValueError("k must be at least 1")
    if a not in left_boundary(n, i):
        raise ValueError(f"{format_word(a)!r} is not in A_{i}")
    if b not in right_boundary(n, i):
        raise ValueError(f"{format_word(b)!r} is not in B_{i}")
    w = MatrixElement(i, a, k, b).word(n)
    if classify(n, w) != MatrixElement(i, a, k, b):
        raise AssertionError(f"{format_word(w)!r} does not split back into its parts")
    return w


def sandwich_entry(n: int, i: int, b: Sequence[int], a: Sequence[int]) -> Optional[int]:
    """Exponent ``alpha - 2`` if ``(x_n q_i) b a (x_n q_i) = (x_n q_i)^alpha``, else ``None``."""
    base = xq_word(n, i)
    alpha = power_of_q(n, i, normalize(n, base + tuple(b) + tuple(a) + base))
    if alpha is None:
        return None
    if alpha < 2:
        raise AssertionError(f"bracketed product collapsed below the square for b={b}, a={a}")
    return alpha - 2


@dataclass(frozen=True)
class SandwichMatrix:
    """``B_i x A_i`` matrix; ``None`` is theta and ``e`` stands for ``s^e``."""

    n: int
    i: int
    rows: Tuple[Word, ...]
    cols: Tuple[Word, ...]
    entries: Tuple[Tuple[Optional[int], ...], ...]

    def __getitem__(self, key):
        r, c = key
        return self.entries[r][c]

    def entry(self, b: Sequence[int], a: Sequence[int]) -> Optional[int]:
        return self.entries[self.rows.index(tuple(b))][self.cols.index(tuple(a))]

    def polynomial_matrix(self) -> List[List[IntPolynomial]]:
        return [[IntPolynomial() if e is None else IntPolynomial.monomial(e) for e in row]
                for row in self.entries]

    def det(self) -> IntPolynomial:
        return determinant(self.polynomial_matrix())

    def is_symmetric(self) -> bool:
        size = len(self.entries)
        return all(self.entries[r][c] == self.entries[c][r] for r in range(size) for c in range(size))

    def reordered(self, rows: Sequence[Sequence[int]], cols: Sequence[Sequence[int]]) -> "SandwichMatrix":
        rows = tuple(tuple(r) for r in rows)
        cols = tuple(tuple(c) for c in cols)
        if sorted(rows) != sorted(self.rows) or sorted(cols) != sorted(self.cols):
            raise ValueError("reordering must be a permutation of the existing labels")
        entries = tuple(tuple(self.entry(r, c) for c in cols) for r in rows)
        return SandwichMatrix(self.n, self.i, rows, cols, entries)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "i": self.i,
            "rows": [list(r) for r in self.rows],
            "cols": [list(c) for c in self.cols],
            "entries": [list(row) for row in self.entries],
            "det": list(self.det().coeffs),
        }

    def render(self, letters: bool = False) -> str:
        def cell(e):
            if e is None:
                return "θ"
            if e == 0:
                return "1"
            return "s" if e == 1 else f"s^{e}"

        def label(w):
            return format_word(w, letters) if w else "1"

        row_labels = [label(r) for r in self.rows]
        col_labels = [label(c) for c in self.cols]
        cells = [[cell(e) for e in row] for row in self.entries]
        width = max([len(x) for x in col_labels] + [len(x) for row in cells for x in row])
        lead = max(len(x) for x in row_labels)
        lines = [" " * lead + " | " + " ".join(x.rjust(width) for x in col_labels)]
        lines.append("-" * len(lines[0]))
        for lab, row in zip(row_labels, cells):
            lines.append(lab.rjust(lead) + " | " + " ".join(x.rjust(width) for x in row))
        return "\n".join(lines)


@lru_cache(maxsize=None)
def sandwich_matrix(n: int, i: int) -> SandwichMatrix:
    """Sandwich matrix with columns ``A_i`` (deg-lex) and rows their ``chi_i`` images."""
    sets = boundary_sets(n, i)
    entries = tuple(tuple(sandwich_entry(n, i, b, a) for a in sets.A) for b in sets.B)
    return SandwichMatrix(n, i, sets.B, sets.A, entries)


def sandwich_det(matrix: SandwichMatrix) -> IntPolynomial:
    return matrix.det()


def m_mult(n: int, i: int, e1: MatrixElement, e2: MatrixElement) -> Optional[MatrixElement]:
    """Product in ``M_i``; ``None`` is theta."""
    if e1.i != i or e2.i != i:
        raise ValueError("both elements must belong to M_i")
    e = sandwich_entry(n, i, e1.b, e2.a)
    if e is None:
        return None
    return MatrixElement(i, e1.a, e1.k + e2.k + e, e2.b)


def _two_sided_reach(n: int, w: Word, depth: int):
    """Elements ``u w v`` reachable with ``|u| + |v| <= depth``, breadth first."""
    seen = {w}
    queue = deque([(w, 0)])
    while queue:
        x, d = queue.popleft()
        yield x
        if d == depth:
            continue
        for g in range(1, n + 1):
            for y in (normalize(n, (g,) + x), normalize(n, x + (g,))):
                if y not in seen:
                    seen.add(y)
                    queue.append((y, d + 1))


def ideal_member(n: int, w: Sequence[int], i: int, max_depth: Optional[int] = None) -> str:
    """Decide ``w in I_i`` as ``"yes"``, ``"no"`` or ``"unknown"``.

    Words of ``M~_j`` lie in ``I_i`` exactly when ``i < j``.  An exceptional
    word is shown to be outside ``I_i`` by a two-sided multiple ``u w v``
    (``|u| + |v| <= max_depth``) that is a power of ``x_n q_i`` or lands in
    some ``M~_j`` with ``j <= i``.  Nothing else is claimed, so a failed
    search gives ``"unknown"``.
    """
    _check_index(n, i)
    w = normalize(n, w)
    cls = classify(n, w)
    if cls is not None:
        return YES if i < cls.i else NO
    for j in range(i + 1):
        base = xq_word(n, j)
        for x in (base + w, w + base, base + w + base):
            c = classify(n, normalize(n, x))
            if c is not None and c.i <= i:
                return NO
    depth = n if max_depth is None else max_depth
    for x in _two_sided_reach(n, w, depth):
        c = classify(n, x)
        if c is not None and c.i <= i:
            return NO
    return UNKNOWN


def ideal_evidence(n: int, w: Sequence[int], i: int) -> dict:
    """Side information for reports: the ``Q_i`` test and the classification."""
    w = normalize(n, w)
    cls = classify(n, w)
    return {
        "q_member": q_member(n, w, i),
        "support": sorted(f_word(n, w).support()),
        "matrix_index": None if cls is None else cls.i,
    }


def completion_seed(n: int, i: int, b: Sequence[int]) -> Optional[Word]:
    """For ``b = x_n x_{n-1} .. x_j`` the word ``x_1..x_i x_{j-1}..x_{i+1}`` closes it up."""
    b = tuple(b)
    if not b or b[0] != n or b[1:] != _desc(n - 1, n - len(b) + 1):
        return None
    j = n - len(b) + 1
    if j <= i + 1:
        return None
    return tuple(range(1, i + 1)) + _desc(j - 1, i + 1)


def find_completion(n: int, i: int, side: str, x: Sequence[int], max_len: int = 12) -> Optional[Word]:
    """A reduced ``w`` with ``w x`` (``side="left"``) or ``x w`` (``side="right"``) a power of ``x_n q_i``.

    Candidates are scanned in deg-lex order up to ``max_len``; ``None`` means
    the cap was exhausted.
    """
    _check_index(n, i)
    x = tuple(x)
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")

    def closes(w: Word) -> bool:
        prod = w + x if side == "left" else x + w
        return power_of_q(n, i, normalize(n, prod)) is not None

    if side == "right":
        seed = completion_seed(n, i, x)
        if seed is not None and closes(seed):
            return seed
    for w in iter_reduced(n, max_len):
        if closes(w):
            return w
    return None
