"""Immersed disk systems with signed double points, framings, and the
intersection forms of 2-handlebodies attached along framed links."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import forms
from .errors import ValidationError
from .forms import SymForm

KIRBY_DISKS = 22


@dataclass(frozen=True)
class DiskSystem:
    """Signs of the double points on each disk, and the target sign-sum per disk."""

    disks: tuple[tuple[int, ...], ...]
    targets: tuple[int, ...]

    def __init__(self, disks: Sequence[Sequence[int]], targets: Sequence[int]):
        disks = tuple(tuple(int(s) for s in d) for d in disks)
        targets = tuple(int(t) for t in targets)
        if len(disks) != len(targets):
            raise ValidationError(f"{len(disks)} disks but {len(targets)} targets")
        for i, d in enumerate(disks):
            if any(s not in (1, -1) for s in d):
                raise ValidationError(f"disk {i + 1}: double-point signs must be +1 or -1")
        object.__setattr__(self, "disks", disks)
        object.__setattr__(self, "targets", targets)

    def sums(self) -> list[int]:
        return [sum(d) for d in self.disks]

    def framings(self) -> list[int]:
        return [framing_of(d) for d in self.disks]

    def at_targets(self) -> bool:
        return self.sums() == list(self.targets)


@dataclass(frozen=True)
class Move:
    """Connected sum of disk ``disk`` (0-based) with a sphere carrying one double point of sign ``epsilon``."""

    disk: int
    epsilon: int


def framing_of(disk: Sequence[int]) -> int:
    return 2 * sum(disk)


def adjust_to_targets(ds: DiskSystem) -> list[Move]:
    """Shortest move list bringing every disk's sign-sum to its target.

    Each move changes one sum by exactly one, so the length is
    ``sum(|target - current|)``.
    """
    moves = []
    for i, (cur, target) in enumerate(zip(ds.sums(), ds.targets)):
        deficit = target - cur
        eps = 1 if deficit > 0 else -1
        moves.extend(Move(i, eps) for _ in range(abs(deficit)))
    return moves


def apply_moves(ds: DiskSystem, moves: Sequence[Move]) -> DiskSystem:
    disks = [list(d) for d in ds.disks]
    for m in moves:
        if not 0 <= m.disk < len(disks):
            raise ValidationError(f"move refers to disk {m.disk + 1}, system has {len(disks)}")
        if m.epsilon not in (1, -1):
            raise ValidationError("move sign must be +1 or -1")
        disks[m.disk].append(m.epsilon)
    return DiskSystem(disks, ds.targets)


def kirby_disk_targets() -> tuple[int, ...]:
    """Target sign-sums for the disks spanning the Kummer framed link: 0, then -1 twenty-one times."""
    return (0,) + (-1,) * (KIRBY_DISKS - 1)


def kirby_disk_system() -> DiskSystem:
    """22 disks with no double points yet, aimed at :func:`kirby_disk_targets`."""
    return DiskSystem([()] * KIRBY_DISKS, kirby_disk_targets())


@dataclass(frozen=True)
class FramedLink:
    """Linking numbers between components (zero diagonal) and per-component framings."""

    linking: tuple[tuple[int, ...], ...]
    framings: tuple[int, ...]

    def __init__(self, linking: Sequence[Sequence[int]], framings: Sequence[int]):
        linking = tuple(tuple(int(x) for x in row) for row in linking)
        framings = tuple(int(f) for f in framings)
        n = len(framings)
        if len(linking) != n or any(len(row) != n for row in linking):
            raise ValidationError(f"linking matrix must be {n}x{n}")
        for i in range(n):
            if linking[i][i] != 0:
                raise ValidationError(f"linking matrix diagonal entry {i + 1} must be 0")
            for j in range(i + 1, n):
                if linking[i][j] != linking[j][i]:
                    raise ValidationError(f"linking matrix not symmetric at ({i + 1},{j + 1})/({j + 1},{i + 1})")
        object.__setattr__(self, "linking", linking)
        object.__setattr__(self, "framings", framings)

    @property
    def size(self) -> int:
        return len(self.framings)


def intersection_form(fl: FramedLink) -> SymForm:
    return SymForm(
        [[fl.framings[i] if i == j else fl.linking[i][j] for j in range(fl.size)] for i in range(fl.size)]
    )


def framed_link_from_form(f: SymForm) -> FramedLink:
    n = f.size
    return FramedLink(
        [[0 if i == j else f.entries[i][j] for j in range(n)] for i in range(n)],
        [f.entries[i][i] for i in range(n)],
    )


@dataclass(frozen=True)
class KummerReport:
    invariants: forms.FormInvariants
    checks: tuple[tuple[str, bool], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)

    def __str__(self) -> str:
        return str(self.invariants)


def verify_kummer(f: SymForm) -> KummerReport:
    """Check the invariants of the punctured Kummer surface: rank 22, signature -16,
    determinant -1, even.  Integral congruence to 3H + 2E8 is not decided."""
    inv = forms.form_invariants(f)
    checks = (
        ("rank=22", inv.rank == 22),
        ("sig=-16", inv.signature == -16),
        ("det=-1", inv.determinant == -1),
        ("even", inv.even),
    )
    return KummerReport(inv, checks)
