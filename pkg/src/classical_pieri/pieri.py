"""Closed-form Pieri rules.

GL(n): tensoring with an exterior (symmetric) power adds a vertical
(horizontal) strip. Sp(2n), SO(2n), SO(2n+1): tensoring a regular highest
weight with an exterior power goes up a vertical strip to an overlay ``xi``
and back down another vertical strip; each overlay counts once.
"""

from __future__ import annotations

import warnings
from collections import defaultdict
from typing import Iterable

from .partition import Partition, strips_above, strips_below
from .rootdata import GroupType, Weight
from .tensor import Decomposition


class NonRegularWeightWarning(UserWarning):
    """The overlay count was computed outside the regular chamber."""


def _as_partition(lam: Iterable[int]) -> Partition:
    if isinstance(lam, Weight):
        if not lam.is_integral:
            raise ValueError(f"spin weight {lam} is not handled by the Pieri rules")
        return lam.as_partition()
    return Partition(lam)


def _decomposition(g: GroupType, counts) -> Decomposition:
    return Decomposition(g, {Weight.from_partition(mu, g.rank): m for mu, m in counts.items()})


def gl_exterior(lam: Iterable[int], i: int, n: int) -> Decomposition:
    """``Pi_lam ⊗ Λ^i C^n`` for GL(n): one term per vertical ``i``-strip."""
    lam = _as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} rows")
    if not 0 <= i <= n:
        raise ValueError(f"exterior power {i} out of range 0..{n}")
    return _decomposition(GroupType("A", n), {mu: 1 for mu in strips_above("vertical", lam, i, n)})


def gl_symmetric(lam: Iterable[int], i: int, n: int) -> Decomposition:
    """``Pi_lam ⊗ Sym^i C^n`` for GL(n): one term per horizontal ``i``-strip."""
    lam = _as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} rows")
    if i < 0:
        raise ValueError(f"symmetric power must be nonnegative, got {i}")
    return _decomposition(GroupType("A", n), {mu: 1 for mu in strips_above("horizontal", lam, i, n)})


def is_pieri_regular(lam: Partition, rank: int) -> bool:
    """``lam_1 > lam_2 > ... > lam_rank > 0``."""
    rows = lam.padded(rank)
    return rows[-1] > 0 and all(a > b for a, b in zip(rows, rows[1:]))


def overlay_counts(lam: Partition, rank: int, sizes: Iterable[int]) -> dict[Partition, int]:
    """Count overlays ``xi`` with ``xi/lam`` and ``xi/mu`` vertical strips of total size in ``sizes``."""
    counts: dict[Partition, int] = defaultdict(int)
    for total in sizes:
        for up in range(0, min(total, rank) + 1):
            for xi in strips_above("vertical", lam, up, rank):
                for mu in strips_below("vertical", xi, total - up):
                    counts[mu] += 1
    return counts


def classical_exterior(g: GroupType, lam: Iterable[int], i: int, force: bool = False) -> Decomposition:
    """``Pi_lam ⊗ Λ^i V`` for Sp(2n), SO(2n+1), SO(2n) and regular ``lam``.

    ``m(mu)`` is the number of overlays ``xi ⊇ lam, mu`` (length <= rank)
    with both skew shapes vertical strips and
    ``(|xi| - |lam|) + (|xi| - |mu|) = i``; for SO(2n+1) a total of ``i - 1``
    is allowed as well.

    The count is only guaranteed for ``lam_1 > ... > lam_n > 0``. With
    ``force=True`` a non-regular ``lam`` is accepted with a warning.
    """
    if g.family not in ("B", "C", "D"):
        raise ValueError(f"classical_exterior needs family B, C or D, got {g}")
    lam = _as_partition(lam)
    if len(lam) > g.rank:
        raise ValueError(f"{lam} has more than {g.rank} rows")
    if not 0 <= i <= g.defining_dim:
        raise ValueError(f"exterior power {i} out of range 0..{g.defining_dim}")
    if not is_pieri_regular(lam, g.rank):
        if not force:
            raise ValueError(f"{lam} is not regular (need lam_1 > ... > lam_{g.rank} > 0); use force")
        warnings.warn(
            f"{lam} is not regular for {g}: the overlay count may differ from the true decomposition",
            NonRegularWeightWarning,
            stacklevel=2,
        )
    sizes = (i, i - 1) if g.family == "B" and i >= 1 else (i,)
    return _decomposition(g, overlay_counts(lam, g.rank, sizes))
