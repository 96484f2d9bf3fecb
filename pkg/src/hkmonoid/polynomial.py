"""Integer polynomials in one variable ``s`` and exact determinants over ``Z[s]``."""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple


class IntPolynomial:
    """Polynomial with integer coefficients, constant term first.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and equality is coefficient-wise.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: Tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * e + [c])

    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Quotient when ``other`` divides ``self`` in ``Z[s]``; raises otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.coeffs
        lead = d[-1]
        q = [0] * max(len(rem) - len(d) + 1, 0)
        for k in range(len(q) - 1, -1, -1):
            top = rem[k + len(d) - 1]
            if top % lead:
                raise ArithmeticError(f"{other} does not divide {self}")
            c = top // lead
            q[k] = c
            if c:
                for t, y in enumerate(d):
                    rem[k + t] -= c * y
        if any(rem):
            raise ArithmeticError(f"{other} does not divide {self}")
        return IntPolynomial(q)

    def __call__(self, s):
        out = 0
        for c in reversed(self.coeffs):
            out = out * s + c
        return out

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "s" if e == 1 else f"s^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def determinant(matrix: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Determinant over ``Z[s]`` by fraction-free (Bareiss) elimination."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("matrix must be square")
    if size == 0:
        return IntPolynomial.const(1)
    a: List[List[IntPolynomial]] = [list(row) for row in matrix]
    sign = 1
    prev = IntPolynomial.const(1)
    for k in range(size - 1):
        if a[k][k].is_zero():
            swap: Optional[int] = next((r for r in range(k + 1, size) if not a[r][k].is_zero()), None)
            if swap is None:
                return IntPolynomial()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for r in range(k + 1, size):
            for c in range(k + 1, size):
                a[r][c] = (a[r][c] * pivot - a[r][k] * a[k][c]).exact_div(prev)
            a[r][k] = IntPolynomial()
        prev = pivot
    return a[-1][-1] * sign


def cofactor_determinant(matrix: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Laplace expansion along the first row; exponential, for small matrices."""
    size = len(matrix)
    if size == 0:
        return IntPolynomial.const(1)
    if size == 1:
        return matrix[0][0]
    total = IntPolynomial()
    for c in range(size):
        entry = matrix[0][c]
        if entry.is_zero():
            continue
        minor = [row[:c] + row[c + 1:] for row in matrix[1:]]
        term = entry * cofactor_determinant(minor)
        total = total - term if c % 2 else total + term
    return total
