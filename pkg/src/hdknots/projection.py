"""Projections of knots built from the Kummer template, their lifts, and
the liftability rules for immersed spheres.

A projection is a small expression tree:

* ``Base(mu)`` -- the immersed 3-sphere whose lifts bound the punctured Kummer
  surface; its singular set is ``mu`` double-point tori.
* ``Stack(parts)`` -- parts displaced in parallel and joined; lifts are
  connected sums.
* ``Double(inner)`` -- ``inner`` placed next to its reversed mirror.
* ``Mirror(inner)`` -- opposite orientation.
* ``Spin(inner)`` -- the spun projection, one dimension higher.

Lifts are indexed by over/under choices ``rho`` in ``{+1, -1}^mu``.  Equal
``rho`` gives equivalent knots; nothing is claimed for distinct ``rho``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional, Sequence, Union

from .errors import PreconditionError, ValidationError
from .laurent import LaurentPoly
from .seifert import KnotModel, is_unknotted_simple, knot_mirror, knot_sum, kummer_knot
from .spin import is_knotted_tower, spin_knot

DEFAULT_MU = 21
EXHAUSTIVE_LIMIT = 20
DEFAULT_SAMPLE = 100

CLASS_CAVEAT = (
    "equivalence classes, upper bound 2^mu distinct: equal rho implies equivalent lifts, "
    "distinct rho are not claimed inequivalent"
)


# -- projection expressions ---------------------------------------------------

@dataclass(frozen=True)
class Base:
    mu: int = DEFAULT_MU
    template: str = "kummer"

    def __post_init__(self):
        if self.template != "kummer":
            raise ValidationError(f"unknown template {self.template!r}")
        if self.mu < 1:
            raise ValidationError(f"mu must be positive, got {self.mu}")


@dataclass(frozen=True)
class Stack:
    parts: tuple["ProjectionExpr", ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValidationError("stack needs at least one part")
        dims = {dimension(p) for p in self.parts}
        if len(dims) > 1:
            raise ValidationError(f"stack parts have different dimensions {sorted(dims)}")


@dataclass(frozen=True)
class Double:
    inner: "ProjectionExpr"


@dataclass(frozen=True)
class Mirror:
    inner: "ProjectionExpr"


@dataclass(frozen=True)
class Spin:
    inner: "ProjectionExpr"


ProjectionExpr = Union[Base, Stack, Double, Mirror, Spin]


def dimension(p: ProjectionExpr) -> int:
    if isinstance(p, Base):
        return 3
    if isinstance(p, Stack):
        return dimension(p.parts[0])
    if isinstance(p, Spin):
        return dimension(p.inner) + 1
    return dimension(p.inner)


def mu(p: ProjectionExpr) -> int:
    """Number of double-point components of the singular set."""
    if isinstance(p, Base):
        return p.mu
    if isinstance(p, Stack):
        return sum(mu(q) for q in p.parts)
    if isinstance(p, Double):
        return 2 * mu(p.inner)
    return mu(p.inner)


def signature_index(p: ProjectionExpr) -> int:
    """The ``r`` with lift signature ``16 r``: each Base counts -1, Mirror
    negates, Double contributes 0."""
    if isinstance(p, Base):
        return -1
    if isinstance(p, Stack):
        return sum(signature_index(q) for q in p.parts)
    if isinstance(p, Double):
        return 0
    if isinstance(p, Mirror):
        return -signature_index(p.inner)
    return signature_index(p.inner)


def render(p: ProjectionExpr) -> str:
    if isinstance(p, Base):
        return f"base({p.template})" if p.mu == DEFAULT_MU else f"base({p.template},mu={p.mu})"
    if isinstance(p, Stack):
        return "stack(" + ",".join(render(q) for q in p.parts) + ")"
    name = {Double: "double", Mirror: "mirror", Spin: "spin"}[type(p)]
    return f"{name}({render(p.inner)})"


@dataclass(frozen=True)
class SingularComponent:
    """One component of the singular set: a torus times ``spin_depth`` circles."""

    id: int
    spin_depth: int
    double_points_only: bool = True

    @property
    def topology(self) -> str:
        return " x ".join(["Torus"] + ["S^1"] * self.spin_depth)


def singular_components(p: ProjectionExpr) -> list[SingularComponent]:
    depths: list[int] = []

    def walk(q: ProjectionExpr, depth: int) -> None:
        if isinstance(q, Base):
            depths.extend([depth] * q.mu)
        elif isinstance(q, Stack):
            for part in q.parts:
                walk(part, depth)
        elif isinstance(q, Double):
            walk(q.inner, depth)
            walk(q.inner, depth)
        elif isinstance(q, Spin):
            walk(q.inner, depth + 1)
        else:
            walk(q.inner, depth)

    walk(p, 0)
    return [SingularComponent(i, d) for i, d in enumerate(depths)]


# -- lifts ------------------------------------------------------------------

def lift(p: ProjectionExpr, rho: Sequence[int]) -> KnotModel:
    """A knot whose projection is ``p`` with over/under data ``rho``.

    ``rho`` selects the knot within its equivalence class; the algebraic
    invariants returned do not depend on it.
    """
    rho = tuple(rho)
    if len(rho) != mu(p):
        raise ValidationError(f"rho has length {len(rho)} but the projection has mu={mu(p)}")
    if any(x not in (1, -1) for x in rho):
        raise ValidationError("rho entries must be +1 or -1")
    return _lift(p, rho)


def _lift(p: ProjectionExpr, rho: tuple[int, ...]) -> KnotModel:
    if isinstance(p, Base):
        return kummer_knot()
    if isinstance(p, Stack):
        result = None
        offset = 0
        for part in p.parts:
            m = mu(part)
            k = _lift(part, rho[offset : offset + m])
            offset += m
            result = k if result is None else knot_sum(result, k)
        return result
    if isinstance(p, Double):
        half = len(rho) // 2
        return knot_sum(_lift(p.inner, rho[:half]), knot_mirror(_lift(p.inner, rho[half:])))
    if isinstance(p, Mirror):
        return knot_mirror(_lift(p.inner, rho))
    return spin_knot(_lift(p.inner, rho))


def is_knotted(k: KnotModel) -> Optional[bool]:
    """Best available knottedness verdict for a lift, or None when undecided."""
    if not k.simple:
        return None
    try:
        if k.spin_depth == 0:
            return not is_unknotted_simple(k)
        return is_knotted_tower(k)
    except PreconditionError:
        return None


@dataclass(frozen=True)
class LiftClass:
    rho: tuple[int, ...]
    n: int
    sigma: Optional[int]
    delta: LaurentPoly
    knotted: Optional[bool]

    def invariants(self) -> tuple:
        return (self.n, self.sigma, self.delta, self.knotted)


@dataclass(frozen=True)
class LiftClassification:
    mu: int
    exhaustive: bool
    classes: tuple[LiftClass, ...]
    caveat: str = field(default=CLASS_CAVEAT)

    def __len__(self) -> int:
        return len(self.classes)


def rho_from_index(index: int, length: int) -> tuple[int, ...]:
    """Assignment at position ``index`` in lexicographic order with +1 < -1."""
    return tuple(-1 if (index >> (length - 1 - i)) & 1 else 1 for i in range(length))


def _assignments(m: int, sample: Optional[int], seed: int) -> tuple[bool, Iterator[tuple[int, ...]]]:
    if m <= EXHAUSTIVE_LIMIT:
        return True, product((1, -1), repeat=m)
    size = DEFAULT_SAMPLE if sample is None else sample
    rng = random.Random(seed)
    # random.sample needs len(range(2**m)), which overflows for large mu
    target = min(size, 2**m)
    picks: set[int] = set()
    while len(picks) < target:
        picks.add(rng.randrange(2**m))
    return False, (rho_from_index(i, m) for i in sorted(picks))


def classify_lifts(p: ProjectionExpr, sample: Optional[int] = None, seed: int = 0) -> LiftClassification:
    """Partition the assignments ``rho`` into classes and annotate each lift.

    All ``2^mu`` assignments are enumerated when ``mu <= 20``; beyond that a
    seeded uniform sample of ``sample`` distinct assignments is used.
    """
    m = mu(p)
    exhaustive, rhos = _assignments(m, sample, seed)
    classes = []
    for rho in rhos:
        k = lift(p, rho)
        classes.append(LiftClass(rho, k.n, k.sigma, k.delta, is_knotted(k)))
    return LiftClassification(mu=m, exhaustive=exhaustive, classes=tuple(classes))


def realize_signature(r: int, mu: int = DEFAULT_MU) -> ProjectionExpr:
    """Projection all of whose lifts are knotted 3-knots of signature ``16 r``."""
    if r == 0:
        return Double(Base(mu))
    bases = [Base(mu) for _ in range(abs(r))]
    body = bases[0] if len(bases) == 1 else Stack(tuple(bases))
    return body if r < 0 else Mirror(body)


# -- liftability of immersed spheres -----------------------------------------

@dataclass(frozen=True)
class Giller:
    """Giller's immersed 2-sphere in 3-space, which admits no lift."""


@dataclass(frozen=True)
class Embedded:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"sphere dimension must be positive, got {self.n}")


@dataclass(frozen=True)
class SpinI:
    inner: "ImmersedSphereExpr"


@dataclass(frozen=True)
class ConnSum:
    left: "ImmersedSphereExpr"
    right: "ImmersedSphereExpr"

    def __post_init__(self):
        dl, dr = imm_dimension(self.left), imm_dimension(self.right)
        if dl != dr:
            raise ValidationError(f"connected sum of spheres of dimensions {dl} and {dr}")


ImmersedSphereExpr = Union[Giller, Embedded, SpinI, ConnSum]


def imm_dimension(e: ImmersedSphereExpr) -> int:
    if isinstance(e, Giller):
        return 2
    if isinstance(e, Embedded):
        return e.n
    if isinstance(e, SpinI):
        return imm_dimension(e.inner) + 1
    return imm_dimension(e.left)


def render_imm(e: ImmersedSphereExpr) -> str:
    if isinstance(e, Giller):
        return "giller"
    if isinstance(e, Embedded):
        return f"embedded({e.n})"
    if isinstance(e, SpinI):
        return f"spin({render_imm(e.inner)})"
    return f"connsum({render_imm(e.left)},{render_imm(e.right)})"


class Verdict(enum.Enum):
    LIFTABLE = "Liftable"
    NON_LIFTABLE = "NonLiftable"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


def liftable_trace(e: ImmersedSphereExpr) -> tuple[Verdict, list[str]]:
    """Verdict plus the chain of rules used, innermost first."""
    chain: list[str] = []

    def go(x: ImmersedSphereExpr) -> Verdict:
        if isinstance(x, Embedded):
            v = Verdict.LIFTABLE
            chain.append(f"{render_imm(x)}: an embedded sphere is its own lift -> {v}")
        elif isinstance(x, Giller):
            v = Verdict.NON_LIFTABLE
            chain.append(f"{render_imm(x)}: Giller's immersed 2-sphere does not lift -> {v}")
        elif isinstance(x, SpinI):
            v = go(x.inner)
            chain.append(f"{render_imm(x)}: spinning preserves and reflects liftability -> {v}")
        else:
            vl, vr = go(x.left), go(x.right)
            if Verdict.NON_LIFTABLE in (vl, vr):
                v = Verdict.NON_LIFTABLE
                chain.append(f"{render_imm(x)}: if the sum lifted so would each summand -> {v}")
            else:
                v = Verdict.UNKNOWN
                chain.append(f"{render_imm(x)}: no rule shows a connected sum lifts -> {v}")
        return v

    return go(e), chain


def liftable(e: ImmersedSphereExpr) -> Verdict:
    return liftable_trace(e)[0]
