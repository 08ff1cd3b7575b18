"""Root data of the classical families A (GL(n)), B (SO(2n+1)), C (Sp(2n)), D (SO(2n)).

Weights are stored in doubled coordinates: the integer vector ``2*w`` in the
standard epsilon basis. This keeps the half-integral rho of type B (and spin
weights of B and D) inside integer arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

FAMILIES = ("A", "B", "C", "D")


@dataclass(frozen=True, order=True)
class GroupType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        if self.family == "D" and self.rank < 2:
            raise ValueError("D1 is excluded; SO(2n) needs rank >= 2")

    @classmethod
    def parse(cls, text: str) -> "GroupType":
        """Parse ``A3``, ``C2``, ... ; ``GL3`` is accepted as ``A3``."""
        m = re.fullmatch(r"\s*(GL|[ABCD])\s*(\d+)\s*", text.upper())
        if not m:
            raise ValueError(f"malformed group {text!r}; expected e.g. A3, B2, C3, D4")
        family = "A" if m.group(1) == "GL" else m.group(1)
        return cls(family, int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def classical_name(self) -> str:
        n = self.rank
        return {"A": f"GL({n})", "B": f"SO({2 * n + 1})", "C": f"Sp({2 * n})", "D": f"SO({2 * n})"}[
            self.family
        ]

    @property
    def defining_dim(self) -> int:
        n = self.rank
        return {"A": n, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[self.family]

    @property
    def weyl_order(self) -> int:
        n = self.rank
        if self.family == "A":
            return factorial(n)
        if self.family == "D":
            return factorial(n) * 2 ** (n - 1)
        return factorial(n) * 2**n

    @property
    def allows_spin(self) -> bool:
        """Whether half-integral (odd doubled) weights are lattice weights."""
        return self.family in ("B", "D")

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in true (integer) epsilon coordinates."""
        return _positive_roots(self.family, self.rank)

    @cached_property
    def simple_coroots(self) -> tuple[tuple[Fraction, ...], ...]:
        out = []
        for alpha in _simple_roots(self.family, self.rank):
            norm = sum(a * a for a in alpha)
            out.append(tuple(Fraction(2 * a, norm) for a in alpha))
        return tuple(out)


def _unit(n: int, i: int, c: int = 1) -> list[int]:
    v = [0] * n
    v[i] = c
    return v


def _positive_roots(family: str, n: int) -> tuple[tuple[int, ...], ...]:
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            minus = _unit(n, i)
            minus[j] = -1
            roots.append(tuple(minus))
            if family != "A":
                plus = _unit(n, i)
                plus[j] = 1
                roots.append(tuple(plus))
    if family == "B":
        roots += [tuple(_unit(n, i)) for i in range(n)]
    elif family == "C":
        roots += [tuple(_unit(n, i, 2)) for i in range(n)]
    return tuple(roots)


def _simple_roots(family: str, n: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(n - 1):
        v = _unit(n, i)
        v[i + 1] = -1
        out.append(tuple(v))
    if family == "B":
        out.append(tuple(_unit(n, n - 1)))
    elif family == "C":
        out.append(tuple(_unit(n, n - 1, 2)))
    elif family == "D":
        v = _unit(n, n - 2)
        v[n - 1] = 1
        out.append(tuple(v))
    return out


def _to_doubled(x) -> int:
    if isinstance(x, str):
        x = Fraction(x.strip())
    q = Fraction(x) * 2
    if q.denominator != 1:
        raise ValueError(f"coordinate {x} is not a multiple of 1/2")
    return int(q)


class Weight(tuple):
    """Integer vector of doubled coordinates (stored value = 2 x true coordinate).

    Parity is uniform: either every entry is even (an integral weight) or
    every entry is odd (a spin weight).
    """

    def __new__(cls, coords2: Iterable[int]) -> "Weight":
        coords2 = tuple(int(c) for c in coords2)
        if len({c & 1 for c in coords2}) > 1:
            raise ValueError(f"mixed parity in doubled coordinates {coords2}")
        return super().__new__(cls, coords2)

    @classmethod
    def from_true(cls, coords: Iterable) -> "Weight":
        """Build from true coordinates (ints, Fractions, floats or ``'3/2'`` strings)."""
        return cls(_to_doubled(c) for c in coords)

    @classmethod
    def from_partition(cls, lam: Iterable[int], rank: int) -> "Weight":
        lam = tuple(lam)
        while lam and lam[-1] == 0:
            lam = lam[:-1]
        if len(lam) > rank:
            raise ValueError(f"partition {lam} longer than rank {rank}")
        return cls(2 * p for p in lam + (0,) * (rank - len(lam)))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @property
    def true(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, 2) for c in self)

    @property
    def is_integral(self) -> bool:
        return all(c % 2 == 0 for c in self)

    def plus(self, other: Sequence[int]) -> "Weight":
        return Weight(a + b for a, b in zip(self, other, strict=True))

    def minus(self, other: Sequence[int]) -> "Weight":
        return Weight(a - b for a, b in zip(self, other, strict=True))

    def as_partition(self):
        """The Partition with these (true) parts; fails for non-polynomial weights."""
        from .partition import Partition

        if not self.is_integral:
            raise ValueError(f"{self} is a spin weight, not a partition")
        return Partition(c // 2 for c in self)

    def __repr__(self) -> str:
        return f"Weight({format_true(self)})"

    def __str__(self) -> str:
        return format_true(self)


def format_coord(c2: int) -> str:
    return str(c2 // 2) if c2 % 2 == 0 else f"{c2}/2"


def format_true(w: Sequence[int]) -> str:
    return "(" + ",".join(format_coord(c) for c in w) + ")"


def check_weight(g: GroupType, w: Sequence[int]) -> Weight:
    """Validate ``w`` as a lattice weight of ``g`` (length, parity)."""
    w = w if isinstance(w, Weight) else Weight(w)
    if len(w) != g.rank:
        raise ValueError(f"weight {w} has length {len(w)}, group {g} has rank {g.rank}")
    if not w.is_integral and not g.allows_spin:
        raise ValueError(f"half-integral weight {w} is not a weight of {g}")
    return w


@lru_cache(maxsize=None)
def rho(g: GroupType) -> Weight:
    """Half the sum of the positive roots, doubled."""
    n = g.rank
    if g.family in ("A", "D"):
        return Weight(2 * (n - 1 - i) for i in range(n))
    if g.family == "C":
        return Weight(2 * (n - i) for i in range(n))
    return Weight(2 * n - 1 - 2 * i for i in range(n))


def is_dominant(g: GroupType, w: Sequence[int]) -> bool:
    n = g.rank
    if len(w) != n:
        raise ValueError(f"weight length {len(w)} does not match rank of {g}")
    if g.family == "D":
        return all(w[i] >= w[i + 1] for i in range(n - 2)) and w[n - 2] >= abs(w[n - 1])
    if any(w[i] < w[i + 1] for i in range(n - 1)):
        return False
    return g.family == "A" or w[n - 1] >= 0


def is_regular_dominant(g: GroupType, w: Sequence[int]) -> bool:
    """Dominant and fixed by no reflection of the Weyl group."""
    n = g.rank
    if len(w) != n:
        raise ValueError(f"weight length {len(w)} does not match rank of {g}")
    if g.family == "D":
        return all(w[i] > w[i + 1] for i in range(n - 2)) and w[n - 2] > abs(w[n - 1])
    if any(w[i] <= w[i + 1] for i in range(n - 1)):
        return False
    return g.family == "A" or w[n - 1] > 0


def _sort_sign(keys: Sequence[int]) -> int:
    # parity of the permutation sorting distinct keys into descending order
    inversions = sum(1 for i in range(len(keys)) for j in range(i + 1, len(keys)) if keys[i] < keys[j])
    return -1 if inversions & 1 else 1


def straighten_raw(family: str, w: Sequence[int]) -> tuple[int, tuple[int, ...] | None]:
    """``straighten`` on a bare tuple; the hot path of the Klimyk oracle."""
    if family == "A":
        if len(set(w)) != len(w):
            return 0, None
        return _sort_sign(w), tuple(sorted(w, reverse=True))
    absw = [abs(c) for c in w]
    if len(set(absw)) != len(absw):
        return 0, None
    negatives = sum(1 for c in w if c < 0)
    dom = sorted(absw, reverse=True)
    sign = _sort_sign(absw)
    if family == "D":
        if negatives & 1:
            dom[-1] = -dom[-1]
        return sign, tuple(dom)
    if 0 in absw:
        return 0, None
    if negatives & 1:
        sign = -sign
    return sign, tuple(dom)


def straighten(g: GroupType, w: Sequence[int]) -> tuple[int, Weight | None]:
    """Move ``w`` into the dominant chamber.

    Returns ``(0, None)`` when ``w`` lies on a reflecting hyperplane; otherwise
    the dominant element of the Weyl orbit together with the determinant of
    the (unique) Weyl group element carrying ``w`` there.
    """
    w = check_weight(g, w)
    sign, dom = straighten_raw(g.family, w)
    return sign, (None if dom is None else Weight(dom))


def dominant_rep_raw(family: str, w: Sequence[int]) -> tuple[int, ...]:
    """Dominant element of the Weyl orbit of ``w`` (walls allowed, no sign)."""
    if family == "A":
        return tuple(sorted(w, reverse=True))
    dom = sorted((abs(c) for c in w), reverse=True)
    if family == "D" and sum(1 for c in w if c < 0) & 1:
        dom[-1] = -dom[-1]
    return tuple(dom)


def weyl_orbit(g: GroupType, w: Sequence[int]) -> set[tuple[int, ...]]:
    """The Weyl-group orbit of ``w`` as a set of doubled-coordinate tuples."""
    from itertools import permutations

    n = g.rank
    if g.family == "A":
        return set(permutations(w))
    out: set[tuple[int, ...]] = set()
    has_zero = 0 in w
    for signs in product((1, -1), repeat=n):
        if g.family == "D" and not has_zero and prod(signs) == -1:
            continue
        flipped = tuple(s * c for s, c in zip(signs, w))
        out.update(permutations(flipped))
    return out


def inner(a: Sequence, b: Sequence) -> int:
    return sum(x * y for x, y in zip(a, b))


def weyl_dim(g: GroupType, lam: Sequence[int]) -> int:
    """Dimension of the irreducible representation with highest weight ``lam``."""
    lam = check_weight(g, lam)
    if not is_dominant(g, lam):
        raise ValueError(f"{lam} is not dominant for {g}")
    shifted = lam.plus(rho(g))
    r = rho(g)
    num = prod(inner(shifted, a) for a in g.positive_roots)
    den = prod(inner(r, a) for a in g.positive_roots)
    value = Fraction(num, den)
    assert value.denominator == 1, (g, lam, value)
    return int(value)


def dominant_weights(g: GroupType, max_entry: int, spin: bool = False) -> Iterator[Weight]:
    """Dominant integral weights with every |true coordinate| <= ``max_entry``.

    Type A is restricted to polynomial weights (entries >= 0). With
    ``spin=True`` the half-integral dominant weights of B and D are included.
    """
    n = g.rank
    parities = [0]
    if spin and g.allows_spin:
        parities.append(1)
    for parity in parities:
        values = [v for v in range(0, 2 * max_entry + 1) if v % 2 == parity]
        for combo in product(reversed(values), repeat=n):
            if any(combo[i] < combo[i + 1] for i in range(n - 1)):
                continue
            yield Weight(combo)
            if g.family == "D" and combo[-1] != 0:
                yield Weight(combo[:-1] + (-combo[-1],))
