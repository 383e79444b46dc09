"""Spun knots: raise the dimension by one, carrying the Alexander data along."""

from __future__ import annotations

from dataclasses import replace

from .errors import PreconditionError, UnsupportedError
from .laurent import ONE
from .seifert import KnotModel

__all__ = ["spin_knot", "spin_tower", "is_knotted_tower"]


def spin_knot(k: KnotModel) -> KnotModel:
    """Spun ``(n+1)``-knot of ``k``.

    The rational Alexander module, hence ``delta``, is unchanged provided the
    Seifert hypersurface has vanishing first homology; that is guaranteed here
    only through the ``simple`` flag.  The signature is not carried over.
    """
    if k.n < 1:
        raise PreconditionError(f"cannot spin a knot of dimension {k.n}")
    if not k.simple:
        raise UnsupportedError(
            "cannot transfer the Alexander polynomial to the spun knot: "
            "the model is not simple, so H_1 of the Seifert hypersurface may not vanish"
        )
    return replace(
        k,
        n=k.n + 1,
        seifert=None,
        sigma=None,
        origin=f"spin({k.origin})",
        spin_depth=k.spin_depth + 1,
    )


def spin_tower(k: KnotModel, times: int) -> KnotModel:
    if times < 0:
        raise ValueError(f"times must be non-negative, got {times}")
    for _ in range(times):
        k = spin_knot(k)
    return k


def is_knotted_tower(k: KnotModel) -> bool:
    """Knottedness of an iterated spin of a simple ``(2k+1)``-knot, ``k >= 1``.

    A nontrivial Alexander polynomial certifies the knot is not unknotted at
    every level of the tower.
    """
    if not k.simple:
        raise PreconditionError("knottedness via the spin tower needs a simple knot")
    root = k.root_dimension
    if root < 3 or root % 2 == 0:
        raise PreconditionError(
            f"model is not a spin of a simple (2k+1)-knot with k >= 1 (base dimension {root})"
        )
    return k.delta != ONE
