"""Integer symmetric bilinear forms and their exact invariants.

Signatures are computed by congruence diagonalization over the rationals, so
no floating point is involved anywhere.  The standard lattices used by the
Kummer construction (hyperbolic plane, E8, and ``3H + 2E8``) live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .errors import ValidationError

__all__ = [
    "SymForm",
    "FormInvariants",
    "signature",
    "direct_sum",
    "e8",
    "hyperbolic",
    "kummer_form",
    "form_invariants",
    "integer_det",
]

# E8 Dynkin diagram: nodes 1..7 in a chain, node 8 attached to node 5 (1-based).
E8_EDGES = ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8))


@dataclass(frozen=True)
class SymForm:
    """Symmetric integer matrix, validated on construction."""

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValidationError(f"row {i + 1} has {len(row)} entries, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValidationError(
                        f"matrix is not symmetric: entry ({i + 1},{j + 1}) = {rows[i][j]} "
                        f"but ({j + 1},{i + 1}) = {rows[j][i]}"
                    )
        object.__setattr__(self, "entries", rows)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __neg__(self) -> "SymForm":
        return SymForm([[-x for x in row] for row in self.entries])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def congruent(self, u: Sequence[Sequence[int]]) -> "SymForm":
        """Return ``U^T F U``."""
        n = self.size
        fu = [[sum(self.entries[i][k] * u[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        return SymForm([[sum(u[k][i] * fu[k][j] for k in range(n)) for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class FormInvariants:
    rank: int
    signature: int
    determinant: int
    even: bool

    def __str__(self) -> str:
        return (
            f"rank={self.rank} sig={self.signature} det={self.determinant} "
            f"even={'yes' if self.even else 'no'}"
        )


def _as_form(f) -> SymForm:
    return f if isinstance(f, SymForm) else SymForm(f)


def _diagonalize(f: SymForm) -> tuple[int, int]:
    """Congruence-diagonalize over Q; return (#positive, #negative) directions."""
    m = [[Fraction(x) for x in row] for row in f.entries]
    active = list(range(f.size))
    pos = neg = 0
    while active:
        piv = next((i for i in active if m[i][i] != 0), None)
        if piv is not None:
            d = m[piv][piv]
            active.remove(piv)
            for k in active:
                c = m[k][piv] / d
                if c:
                    for j in active:
                        m[k][j] -= c * m[piv][j]
                    m[k][piv] = Fraction(0)
            if d > 0:
                pos += 1
            else:
                neg += 1
            continue
        pair = next(((i, j) for i in active for j in active if i < j and m[i][j] != 0), None)
        if pair is None:
            break
        # Zero diagonal facing a nonzero off-diagonal entry: the 2x2 block
        # [[0, b], [b, 0]] is a hyperbolic pair and contributes (+1, -1).
        i, j = pair
        b = m[i][j]
        active.remove(i)
        active.remove(j)
        ci = {k: m[k][j] / b for k in active}
        cj = {k: m[k][i] / b for k in active}
        for k in active:
            for l in active:
                m[k][l] -= ci[k] * m[i][l] + cj[k] * m[j][l]
        pos += 1
        neg += 1
    return pos, neg


def signature(f: SymForm | Sequence[Sequence[int]]) -> int:
    """Number of positive minus number of negative eigen-directions."""
    pos, neg = _diagonalize(_as_form(f))
    return pos - neg


def rank(f: SymForm | Sequence[Sequence[int]]) -> int:
    pos, neg = _diagonalize(_as_form(f))
    return pos + neg


def integer_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by Bareiss elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def direct_sum(*forms: SymForm) -> SymForm:
    size = sum(f.size for f in forms)
    out = [[0] * size for _ in range(size)]
    offset = 0
    for f in forms:
        for i, row in enumerate(f.entries):
            out[offset + i][offset : offset + f.size] = row
        offset += f.size
    return SymForm(out)


def hyperbolic() -> SymForm:
    return SymForm([[0, 1], [1, 0]])


def e8(sign: Literal["positive", "negative"] = "negative") -> SymForm:
    """Rank-8 even unimodular definite form (Cartan matrix of E8, up to sign)."""
    if sign not in ("positive", "negative"):
        raise ValueError(f"sign must be 'positive' or 'negative', not {sign!r}")
    s = 1 if sign == "positive" else -1
    m = [[0] * 8 for _ in range(8)]
    for i in range(8):
        m[i][i] = 2 * s
    for a, b in E8_EDGES:
        m[a - 1][b - 1] = m[b - 1][a - 1] = -s
    return SymForm(m)


def kummer_form() -> SymForm:
    """Intersection form of the punctured Kummer surface: 3H + 2E8 (negative)."""
    h = hyperbolic()
    e = e8("negative")
    return direct_sum(h, h, h, e, e)


def form_invariants(f: SymForm | Sequence[Sequence[int]]) -> FormInvariants:
    f = _as_form(f)
    pos, neg = _diagonalize(f)
    return FormInvariants(
        rank=pos + neg,
        signature=pos - neg,
        determinant=integer_det(f.entries),
        even=all(f.entries[i][i] % 2 == 0 for i in range(f.size)),
    )
