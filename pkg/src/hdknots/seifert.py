"""Seifert matrices of odd-dimensional knots and the invariants read off them.

A Seifert matrix ``A`` of a ``(2k+1)``-knot gives

* the Alexander polynomial ``det(t*A - (-1)^k * A^T)``, up to units ``±t^s``;
* for ``k`` odd, the signature of the symmetric form ``A + A^T``.

:class:`KnotModel` bundles the derived invariants of a knot so that they can
be carried through connected sums, mirrors and spinning even after the
Seifert matrix itself is no longer available.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Optional, Sequence

from . import forms
from .errors import PreconditionError, UnsupportedError, ValidationError
from .laurent import ONE, LaurentPoly, det

__all__ = [
    "SeifertMatrix",
    "KnotModel",
    "alexander",
    "alexander_matrix",
    "alexander_normal_form",
    "is_valid",
    "knot_signature",
    "connected_sum",
    "mirror_reverse",
    "is_unknotted_simple",
    "realizable_3knot_signature",
    "kummer_seifert",
    "trefoil",
    "unknot",
    "knot_from_seifert",
    "knot_sum",
    "knot_mirror",
    "kummer_knot",
]


@dataclass(frozen=True)
class SeifertMatrix:
    """Seifert matrix ``A`` of a ``(2k+1)``-knot."""

    k: int
    matrix: tuple[tuple[int, ...], ...]

    def __init__(self, k: int, matrix: Sequence[Sequence[int]] = ()):
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        n = len(rows)
        if k < 0:
            raise ValidationError(f"k must be non-negative, got {k}")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValidationError(f"Seifert matrix row {i + 1} has {len(row)} entries, expected {n}")
        object.__setattr__(self, "k", int(k))
        object.__setattr__(self, "matrix", rows)

    @property
    def size(self) -> int:
        return len(self.matrix)

    @property
    def dimension(self) -> int:
        """Dimension ``2k+1`` of the knot."""
        return 2 * self.k + 1

    @property
    def epsilon(self) -> int:
        return -1 if self.k % 2 else 1

    def transpose(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.matrix)) if self.matrix else ()

    def symmetrized(self) -> list[list[int]]:
        """``A - (-1)^k A^T``."""
        n, a, e = self.size, self.matrix, self.epsilon
        return [[a[i][j] - e * a[j][i] for j in range(n)] for i in range(n)]


def alexander_matrix(s: SeifertMatrix) -> list[list[LaurentPoly]]:
    """The matrix ``t*A - (-1)^k * A^T``."""
    idx = range(s.size)
    a, e = s.matrix, s.epsilon
    return [[LaurentPoly({1: a[i][j], 0: -e * a[j][i]}) for j in idx] for i in idx]


def alexander_normal_form(p: LaurentPoly) -> LaurentPoly:
    """Shift to lowest exponent 0; fix the sign so ``p(1) = 1`` when ``|p(1)| = 1``.

    Otherwise the constant term is made positive.
    """
    p = p.normalized()
    if p.eval(1) == -1:
        p = -p
    return p


@lru_cache(maxsize=256)
def _alexander_cached(s: SeifertMatrix) -> LaurentPoly:
    return alexander_normal_form(det(alexander_matrix(s)))


def alexander(s: SeifertMatrix) -> LaurentPoly:
    """Alexander polynomial ``det(t*A - (-1)^k A^T)`` in normal form.

    >>> str(alexander(trefoil()))
    '1 - t + t^2'
    """
    return _alexander_cached(s)


def is_valid(s: SeifertMatrix) -> bool:
    """True iff ``|det(A - (-1)^k A^T)| = 1``."""
    return abs(forms.integer_det(s.symmetrized())) == 1


def knot_signature(s: SeifertMatrix) -> int:
    if s.k % 2 == 0:
        raise UnsupportedError(
            f"signature is only defined here for k odd (knot dimension 3 mod 4); got k={s.k}"
        )
    a = s.matrix
    n = s.size
    return forms.signature([[a[i][j] + a[j][i] for j in range(n)] for i in range(n)])


def connected_sum(s1: SeifertMatrix, s2: SeifertMatrix) -> SeifertMatrix:
    if s1.k != s2.k:
        raise ValidationError(f"cannot add Seifert matrices with k={s1.k} and k={s2.k}")
    n1, n2 = s1.size, s2.size
    rows = [list(r) + [0] * n2 for r in s1.matrix]
    rows += [[0] * n1 + list(r) for r in s2.matrix]
    return SeifertMatrix(s1.k, rows)


def mirror_reverse(s: SeifertMatrix) -> SeifertMatrix:
    """Seifert matrix ``-A^T`` of the reversed mirror image."""
    return SeifertMatrix(s.k, [[-x for x in row] for row in s.transpose()])


def realizable_3knot_signature(sigma: int) -> bool:
    return sigma % 16 == 0


@lru_cache(maxsize=1)
def kummer_seifert() -> SeifertMatrix:
    """Seifert matrix of a 3-knot bounding the punctured Kummer surface.

    Strict upper triangle of the Kummer form plus half its (even) diagonal, so
    that ``A + A^T`` is the Kummer form.
    """
    f = forms.kummer_form().entries
    n = len(f)
    a = [[f[i][j] if j > i else (f[i][i] // 2 if i == j else 0) for j in range(n)] for i in range(n)]
    return SeifertMatrix(1, a)


def trefoil() -> SeifertMatrix:
    return SeifertMatrix(0, [[-1, 1], [0, -1]])


@dataclass(frozen=True)
class KnotModel:
    """Algebraic model of an ``n``-knot.

    ``seifert`` is kept while the model is built from Seifert matrices and
    dropped once the knot is spun.  ``sigma`` is present only for knots of
    dimension ``3 mod 4`` with a Seifert matrix.  ``spin_depth`` counts the
    spins applied on top of the odd-dimensional knot the model came from.
    """

    n: int
    delta: LaurentPoly
    simple: bool
    seifert: Optional[SeifertMatrix] = None
    sigma: Optional[int] = None
    origin: str = "seifert"
    spin_depth: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"knot dimension must be >= 1, got {self.n}")
        if self.seifert is not None and self.seifert.dimension != self.n:
            raise ValidationError(
                f"Seifert matrix with k={self.seifert.k} describes a {self.seifert.dimension}-knot, not n={self.n}"
            )
        if alexander_normal_form(self.delta) != self.delta:
            raise ValidationError(f"delta {self.delta} is not in normal form")

    @property
    def root_dimension(self) -> int:
        return self.n - self.spin_depth

    def describe(self) -> str:
        sigma = "undefined" if self.sigma is None else str(self.sigma)
        return (
            f"n={self.n} delta={self.delta} sigma={sigma} "
            f"simple={'yes' if self.simple else 'no'} origin={self.origin}"
        )


def knot_from_seifert(s: SeifertMatrix, simple: bool | None = None, origin: str = "seifert") -> KnotModel:
    """Model of the ``(2k+1)``-knot with Seifert matrix ``s``.

    ``simple`` defaults to True for ``k >= 1`` (the hypersurface is taken to be
    simply connected) and for the empty matrix; a classical knot with a
    nonempty Seifert matrix is not simple.
    """
    if simple is None:
        simple = s.k >= 1 or s.size == 0
    return KnotModel(
        n=s.dimension,
        delta=alexander(s),
        simple=simple,
        seifert=s,
        sigma=knot_signature(s) if s.k % 2 == 1 else None,
        origin=origin,
    )


def unknot(n: int = 3) -> KnotModel:
    """Unknotted ``n``-knot; for odd ``n`` it carries the empty Seifert matrix."""
    if n % 2 == 1:
        return knot_from_seifert(SeifertMatrix((n - 1) // 2), simple=True, origin="unknot")
    return KnotModel(n=n, delta=ONE, simple=True, origin="unknot")


@lru_cache(maxsize=1)
def kummer_knot() -> KnotModel:
    return knot_from_seifert(kummer_seifert(), simple=True, origin="kummer")


def knot_sum(k1: KnotModel, k2: KnotModel) -> KnotModel:
    """Connected sum; Alexander polynomials multiply and signatures add."""
    if k1.n != k2.n:
        raise ValidationError(f"cannot add a {k1.n}-knot and a {k2.n}-knot")
    seifert = None
    if k1.seifert is not None and k2.seifert is not None:
        seifert = connected_sum(k1.seifert, k2.seifert)
    sigma = None
    if k1.sigma is not None and k2.sigma is not None:
        sigma = k1.sigma + k2.sigma
    return KnotModel(
        n=k1.n,
        delta=alexander_normal_form(k1.delta * k2.delta),
        simple=k1.simple and k2.simple,
        seifert=seifert,
        sigma=sigma,
        origin=f"sum({k1.origin},{k2.origin})",
        spin_depth=min(k1.spin_depth, k2.spin_depth),
    )


def knot_mirror(k: KnotModel) -> KnotModel:
    """Model of ``-K*``: signature negated, ``delta(t) -> delta(1/t)``."""
    return replace(
        k,
        delta=alexander_normal_form(k.delta.invert_variable()),
        seifert=None if k.seifert is None else mirror_reverse(k.seifert),
        sigma=None if k.sigma is None else -k.sigma,
        origin=f"mirror({k.origin})",
    )


def is_unknotted_simple(k: KnotModel) -> bool:
    """Unknottedness of a simple ``(2k+1)``-knot, ``k >= 1``: trivial Alexander polynomial."""
    if not k.simple:
        raise PreconditionError("unknotting criterion applies only to simple knots")
    if k.n < 3 or k.n % 2 == 0:
        raise PreconditionError(f"unknotting criterion needs n = 2k+1 with k >= 1, got n={k.n}")
    return k.delta == ONE
