"""Exact Laurent polynomials in one variable ``t`` over the integers.

A :class:`LaurentPoly` is an immutable map ``exponent -> coefficient`` with no
zero coefficients stored; the zero polynomial is the empty map.  Matrices of
Laurent polynomials are plain square sequences of rows, and :func:`det`
computes their determinant exactly.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

__all__ = ["LaurentPoly", "T", "ONE", "ZERO", "det", "block_diag", "normalize"]


class LaurentPoly:
    """Immutable Laurent polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, e: int) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], low: int = 0) -> "LaurentPoly":
        """Build ``sum(coeffs[i] * t**(low + i))``."""
        return cls((low + i, c) for i, c in enumerate(coeffs))

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(dict(self._terms))

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[0][0]

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) == 1 and abs(self._terms[0][1]) == 1:
                e, c = self._terms[0]
                return LaurentPoly({e * n: c ** -n})
            raise ValueError("only units may be raised to negative powers")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, s: int) -> "LaurentPoly":
        """Multiply by ``t**s``."""
        return LaurentPoly((e + s, c) for e, c in self._terms)

    def invert_variable(self) -> "LaurentPoly":
        """Substitute ``t -> t**-1``."""
        return LaurentPoly((-e, c) for e, c in self._terms)

    def eval(self, a) -> Fraction:
        """Exact value at ``t = a``; ``a`` must be a nonzero integer or rational."""
        a = Fraction(a)
        if a == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at t = 0")
        return sum((c * a**e for e, c in self._terms), Fraction(0))

    __call__ = eval

    def normalized(self) -> "LaurentPoly":
        """Canonical representative of ``{±t^s * self}``.

        The lowest exponent is shifted to 0 and the constant term made positive.
        """
        if not self._terms:
            return self
        low, c = self._terms[0]
        sign = 1 if c > 0 else -1
        return LaurentPoly((e - low, sign * cc) for e, cc in self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self._terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if i == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.monomial(1, 1)


def normalize(p: LaurentPoly) -> LaurentPoly:
    return p.normalized()


def block_diag(*blocks: Sequence[Sequence[LaurentPoly]]) -> list[list[LaurentPoly]]:
    size = sum(len(b) for b in blocks)
    out = [[ZERO] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, entry in enumerate(row):
                out[offset + i][offset + j] = entry
        offset += len(b)
    return out


# Dense integer polynomials: coefficient lists, index = exponent, no trailing zeros.

def _dense_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _dense_sub(p: list[int], q: list[int]) -> list[int]:
    n = max(len(p), len(q))
    out = [0] * n
    for i, c in enumerate(p):
        out[i] = c
    for i, c in enumerate(q):
        out[i] -= c
    return _dense_trim(out)


def _dense_mul(p: list[int], q: list[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _dense_trim(out)


def _dense_exact_div(p: list[int], q: list[int]) -> list[int]:
    """Quotient of ``p / q`` in Z[t]; the division must be exact."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if not p:
        return []
    rem = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quot = [0] * (len(p) - dq) if len(p) > dq else []
    for k in range(len(p) - 1 - dq, -1, -1):
        c = rem[k + dq]
        if c == 0:
            continue
        qc, r = divmod(c, lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[k] = qc
        for j, b in enumerate(q):
            rem[k + j] -= qc * b
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _dense_trim(quot)


def det(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a square matrix of Laurent polynomials.

    Each row is multiplied by ``t**s_i`` so that all exponents are non-negative,
    fraction-free (Bareiss) elimination runs over Z[t], and the result is
    divided by ``t**sum(s_i)``.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return ONE
    total_shift = 0
    rows: list[list[list[int]]] = []
    for row in matrix:
        row = [e if isinstance(e, LaurentPoly) else LaurentPoly.constant(e) for e in row]
        lows = [e.min_degree() for e in row if e]
        s = -min(lows) if lows else 0
        total_shift += s
        dense_row = []
        for e in row:
            d = [0] * (e.max_degree() + s + 1) if e else []
            for exp, c in e.items():
                d[exp + s] = c
            dense_row.append(d)
        rows.append(dense_row)

    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not rows[k][k]:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            for j in range(k + 1, n):
                num = _dense_sub(_dense_mul(rows[i][j], pivot), _dense_mul(rik, rows[k][j]))
                rows[i][j] = _dense_exact_div(num, prev)
            rows[i][k] = []
        prev = pivot
    result = LaurentPoly.from_coefficients(rows[n - 1][n - 1])
    if sign < 0:
        result = -result
    return result.shift(-total_shift)
