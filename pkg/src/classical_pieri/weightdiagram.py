"""Weight diagrams: characters on the maximal torus as weight -> multiplicity maps."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Mapping
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Iterable, Iterator, Sequence

from .rootdata import (
    GroupType,
    Weight,
    check_weight,
    dominant_rep_raw,
    inner,
    is_dominant,
    rho,
    weyl_orbit,
)


def _json_coord(c2: int):
    return c2 // 2 if c2 % 2 == 0 else c2 / 2


class WeightMultiset(Mapping):
    """Immutable finite map ``Weight -> positive int`` attached to a group.

    Zero multiplicities are dropped on construction. Iteration and JSON
    output are sorted lexicographically descending.
    """

    _json_list = "entries"
    _json_weight = "w"

    def __init__(self, group: GroupType, data: Mapping | Iterable | None = None):
        self.group = group
        items = data.items() if isinstance(data, Mapping) else (data or ())
        clean: dict[Weight, int] = {}
        for w, m in items:
            w = check_weight(group, w)
            clean[w] = clean.get(w, 0) + int(m)
        for w, m in clean.items():
            if m < 0:
                raise ValueError(f"negative multiplicity {m} at {w}")
        self._data = {w: clean[w] for w in sorted(clean, reverse=True) if clean[w]}

    def __getitem__(self, w) -> int:
        return self._data[w]

    def get(self, w, default=0):
        return self._data.get(w, default)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightMultiset):
            return NotImplemented
        return type(self) is type(other) and self.group == other.group and self._data == other._data

    __hash__ = None

    @property
    def mass(self) -> int:
        """Sum of multiplicities (the dimension, for a character)."""
        return sum(self._data.values())

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {m}" for w, m in self._data.items())
        return f"{type(self).__name__}({self.group}, {{{body}}})"

    def to_json(self) -> dict:
        return {
            "group": str(self.group),
            self._json_list: [
                {self._json_weight: [_json_coord(c) for c in w], "m": m} for w, m in self._data.items()
            ],
        }

    @classmethod
    def from_json(cls, payload: Mapping):
        group = GroupType.parse(payload["group"])
        data = [(Weight.from_true(e[cls._json_weight]), e["m"]) for e in payload[cls._json_list]]
        return cls(group, data)


class WeightDiagram(WeightMultiset):
    """Full weight multiset of a finite-dimensional module."""


def defining_weights(g: GroupType) -> WeightDiagram:
    return WeightDiagram(g, {w: 1 for w in _basis_weights(g)})


def _basis_weights(g: GroupType) -> list[tuple[int, ...]]:
    # one doubled weight per basis vector of the defining representation
    n = g.rank
    basis = []
    for i in range(n):
        v = [0] * n
        v[i] = 2
        basis.append(tuple(v))
    if g.family != "A":
        basis += [tuple(-c for c in v) for v in basis]
    if g.family == "B":
        basis.append((0,) * n)
    return basis


def _sum_multiset(g: GroupType, choices: Iterable[Sequence[tuple[int, ...]]]) -> WeightDiagram:
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    zero = (0,) * g.rank
    for combo in choices:
        w = zero
        for v in combo:
            w = tuple(a + b for a, b in zip(w, v))
        acc[w] += 1
    return WeightDiagram(g, acc)


def exterior_power(g: GroupType, i: int) -> WeightDiagram:
    """Weights of the ``i``-th exterior power of the defining representation."""
    basis = _basis_weights(g)
    if not 0 <= i <= len(basis):
        raise ValueError(f"exterior power {i} out of range 0..{len(basis)} for {g}")
    return _sum_multiset(g, combinations(basis, i))


def symmetric_power(g: GroupType, i: int) -> WeightDiagram:
    """Weights of the ``i``-th symmetric power of the defining representation."""
    if i < 0:
        raise ValueError(f"symmetric power must be nonnegative, got {i}")
    return _sum_multiset(g, combinations_with_replacement(_basis_weights(g), i))


def _in_root_cone(family: str, d: Sequence[int]) -> bool:
    """Is the (true, integral) vector ``d`` a nonnegative integer combination of simple roots?"""
    n = len(d)
    partial = []
    s = 0
    for x in d:
        s += x
        partial.append(s)
    if family == "A":
        return partial[-1] == 0 and all(p >= 0 for p in partial)
    if any(p < 0 for p in partial[: n - 1]) and family != "D":
        return False
    if family == "B":
        return partial[-1] >= 0
    if family == "C":
        return partial[-1] >= 0 and partial[-1] % 2 == 0
    # D: coefficients S_k (k <= n-2), (S_{n-1} - d_n)/2 and S_n/2
    if n > 2 and any(p < 0 for p in partial[: n - 2]):
        return False
    a, b = partial[n - 2] - d[n - 1], partial[n - 1]
    return a >= 0 and b >= 0 and a % 2 == 0 and b % 2 == 0


def _dominant_below(g: GroupType, lam: Weight) -> list[tuple[int, ...]]:
    n, family = g.rank, g.family
    parity = lam[0] & 1
    top = max(abs(c) for c in lam)
    lo = lam[-1] if family == "A" else 0
    values = [v for v in range(lo, top + 1) if v & 1 == parity]
    out = []
    for combo in product(reversed(values), repeat=n):
        if any(combo[i] < combo[i + 1] for i in range(n - 1)):
            continue
        cands = [combo]
        if family == "D" and combo[-1] != 0:
            cands.append(combo[:-1] + (-combo[-1],))
        for mu in cands:
            d = [(a - b) // 2 for a, b in zip(lam, mu)]
            if _in_root_cone(family, d):
                out.append(mu)
    return out


@lru_cache(maxsize=4096)
def _freudenthal_dominant(g: GroupType, lam: Weight) -> dict[tuple[int, ...], int]:
    r = rho(g)
    roots2 = [tuple(2 * a for a in alpha) for alpha in g.positive_roots]

    def norm_shift(mu):
        return sum((a + b) ** 2 for a, b in zip(mu, r))

    top = norm_shift(lam)
    dominant = sorted(_dominant_below(g, lam), key=norm_shift, reverse=True)
    assert dominant[0] == tuple(lam)
    mult: dict[tuple[int, ...], int] = {tuple(lam): 1}
    for mu in dominant[1:]:
        total = 0
        for alpha in roots2:
            k = 1
            while True:
                shifted = tuple(a + k * b for a, b in zip(mu, alpha))
                m = mult.get(dominant_rep_raw(g.family, shifted))
                if not m:
                    break
                total += m * inner(shifted, alpha)
                k += 1
        gap = top - norm_shift(mu)
        value, rem = divmod(2 * total, gap)
        assert rem == 0 and value > 0, (g, lam, mu, total, gap)
        mult[mu] = value
    return mult


def freudenthal(g: GroupType, lam: Sequence[int]) -> WeightDiagram:
    """Full weight diagram of the irreducible module with highest weight ``lam``.

    Multiplicities of dominant weights come from Freudenthal's recursion,
    processed in decreasing ``|mu + rho|``; the remaining weights are filled
    in by Weyl-group invariance.
    """
    lam = check_weight(g, lam)
    if not is_dominant(g, lam):
        raise ValueError(f"{lam} is not dominant for {g}")
    return _freudenthal(g, lam)


@lru_cache(maxsize=1024)
def _freudenthal(g: GroupType, lam: Weight) -> WeightDiagram:
    entries: dict[tuple[int, ...], int] = {}
    for mu, m in _freudenthal_dominant(g, lam).items():
        for w in weyl_orbit(g, mu):
            entries[w] = m
    return WeightDiagram(g, entries)


def convolve(d1: WeightDiagram, d2: WeightDiagram) -> WeightDiagram:
    """Weight diagram of the tensor product."""
    if d1.group != d2.group:
        raise ValueError(f"group mismatch: {d1.group} vs {d2.group}")
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    for w1, m1 in d1.items():
        for w2, m2 in d2.items():
            acc[tuple(a + b for a, b in zip(w1, w2))] += m1 * m2
    return WeightDiagram(d1.group, acc)


def diagram_of_decomposition(g: GroupType, dec: Mapping) -> WeightDiagram:
    """Character of ``sum_nu dec[nu] * Pi_nu`` as a weight diagram."""
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    for nu, m in dec.items():
        for w, k in freudenthal(g, Weight(nu)).items():
            acc[w] += m * k
    return WeightDiagram(g, acc)
