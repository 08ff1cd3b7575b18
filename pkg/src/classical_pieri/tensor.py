"""Tensor product decomposition by Weyl-group straightening (Klimyk's formula)."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from ._parallel import pmap
from .rootdata import (
    GroupType,
    Weight,
    check_weight,
    dominant_rep_raw,
    dominant_weights,
    is_dominant,
    rho,
    straighten_raw,
    weyl_dim,
    weyl_orbit,
)
from .weightdiagram import WeightDiagram, WeightMultiset, freudenthal


class InvalidCharacterError(ValueError):
    """The weight multiset handed to the oracle is not a genuine character."""


class InvariantViolation(AssertionError):
    """An internal mathematical invariant failed; indicates a bug, not bad input."""


class Decomposition(WeightMultiset):
    """Irreducible constituents ``highest weight -> multiplicity``."""

    _json_list = "terms"
    _json_weight = "hw"

    def __init__(self, group: GroupType, data=None):
        super().__init__(group, data)
        for nu in self:
            if not is_dominant(group, nu):
                raise ValueError(f"{nu} is not dominant for {group}")

    def partitions(self) -> dict:
        """Constituents keyed by Partition (polynomial highest weights only)."""
        return {nu.as_partition(): m for nu, m in self.items()}

    @property
    def dimension(self) -> int:
        return sum(m * weyl_dim(self.group, nu) for nu, m in self.items())


def _check_pair(g: GroupType, lam: Sequence[int], u: WeightDiagram) -> Weight:
    lam = check_weight(g, lam)
    if not is_dominant(g, lam):
        raise ValueError(f"{lam} is not dominant for {g}")
    if u.group != g:
        raise ValueError(f"group mismatch: {g} vs {u.group}")
    return lam


def klimyk_decompose(g: GroupType, lam: Sequence[int], u: WeightDiagram) -> Decomposition:
    """Decompose ``Pi_lam ⊗ U`` given the full weight diagram of ``U``.

    Every weight ``eta`` of ``U`` contributes ``sign * m(eta)`` at
    ``straighten(lam + rho + eta) - rho``; weights landing on a wall drop out.
    """
    lam = _check_pair(g, lam, u)
    r = rho(g)
    base = tuple(a + b for a, b in zip(lam, r))
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    for eta, m in u.items():
        sign, dom = straighten_raw(g.family, tuple(a + b for a, b in zip(base, eta)))
        if sign:
            acc[tuple(a - b for a, b in zip(dom, r))] += sign * m
    negative = {nu: c for nu, c in acc.items() if c < 0}
    if negative:
        raise InvalidCharacterError(
            f"negative multiplicities {negative} for {lam} ⊗ U: U is not a character of {g}"
        )
    return Decomposition(g, acc)


def kostant_violations(lam: Sequence[int], u: Mapping, dec: Decomposition) -> list[tuple]:
    """Constituents ``nu`` breaking ``m_nu <= m_U(nu - lam)``; returns (nu, m_nu, bound)."""
    bad = []
    for nu, m in dec.items():
        bound = u.get(tuple(a - b for a, b in zip(nu, lam)), 0)
        if m > bound:
            bad.append((nu, m, bound))
    return bad


def tensor_irreps(g: GroupType, lam: Sequence[int], mu: Sequence[int], check: bool | None = None) -> Decomposition:
    """Decompose ``Pi_lam ⊗ Pi_mu``; the smaller factor is expanded into weights.

    With ``check`` (default on for rank <= 3) the Kostant support bound is
    verified on the result and a failure raises ``InvariantViolation``.
    """
    lam, mu = check_weight(g, lam), check_weight(g, mu)
    for w in (lam, mu):
        if not is_dominant(g, w):
            raise ValueError(f"{w} is not dominant for {g}")
    if weyl_dim(g, lam) < weyl_dim(g, mu):
        top, expanded = mu, freudenthal(g, lam)
    else:
        top, expanded = lam, freudenthal(g, mu)
    dec = klimyk_decompose(g, top, expanded)
    if check is None:
        check = g.rank <= 3
    if check and kostant_violations(top, expanded, dec):
        raise InvariantViolation(f"Kostant bound fails for {lam} ⊗ {mu} in {g}")
    return dec


def weight_translate(g: GroupType, lam: Sequence[int], u: WeightDiagram) -> Decomposition:
    """``{lam + eta : m(eta)}`` restricted to dominant ``lam + eta``."""
    acc = {}
    for eta, m in u.items():
        nu = tuple(a + b for a, b in zip(lam, eta))
        if is_dominant(g, nu):
            acc[nu] = m
    return Decomposition(g, acc)


def deep_chamber_holds(g: GroupType, lam: Sequence[int], u: WeightDiagram) -> bool:
    """Is ``lam + rho + eta`` dominant for every weight ``eta`` of ``u``?"""
    base = tuple(a + b for a, b in zip(lam, rho(g)))
    return all(is_dominant(g, tuple(a + b for a, b in zip(base, eta))) for eta in u)


def deep_pieri(g: GroupType, lam: Sequence[int], u: WeightDiagram) -> tuple[bool, Decomposition | None]:
    """Deep-chamber rule: when it applies, ``Pi_lam ⊗ U`` is read off the weights of ``U``."""
    lam = _check_pair(g, lam, u)
    if not deep_chamber_holds(g, lam, u):
        return False, None
    return True, weight_translate(g, lam, u)


def minuscule_hypothesis(g: GroupType, u: WeightDiagram, lam: Sequence[int] | None = None) -> bool:
    """True iff ``u`` is minuscule: one Weyl orbit, multiplicity one, coroot pairings in {-1, 0, 1}.

    When ``lam`` is supplied and ``u`` is minuscule, the deep-chamber
    hypothesis for ``lam`` is asserted as well.
    """
    if u.group != g:
        raise ValueError(f"group mismatch: {g} vs {u.group}")
    if not u:
        return False
    if any(m != 1 for m in u.values()):
        return False
    for w in u:
        for coroot in g.simple_coroots:
            pairing = sum(Fraction(c, 2) * a for c, a in zip(w, coroot))
            if pairing not in (-1, 0, 1):
                return False
    orbit_reps = {dominant_rep_raw(g.family, w) for w in u}
    if len(orbit_reps) != 1 or len(weyl_orbit(g, orbit_reps.pop())) != len(u):
        return False
    if lam is not None:
        lam = _check_pair(g, lam, u)
        if not deep_chamber_holds(g, lam, u):
            raise InvariantViolation(f"minuscule {u} but deep-chamber hypothesis fails at {lam}")
    return True


@dataclass(frozen=True)
class NecessityRecord:
    """A case where the deep-chamber hypothesis fails but the weight rule still holds."""

    group: GroupType
    lam: Weight
    rep_index: int
    decomposition: Decomposition


def _scan_one(args) -> list[NecessityRecord]:
    g, lam, reps = args
    found = []
    for idx, u in enumerate(reps):
        holds, _ = deep_pieri(g, lam, u)
        if holds:
            continue
        dec = klimyk_decompose(g, lam, u)
        if dec == weight_translate(g, lam, u):
            found.append(NecessityRecord(g, lam, idx, dec))
    return found


def necessity_scan(
    g: GroupType, max_entry: int, reps: Sequence[WeightDiagram], workers: int = 1
) -> list[NecessityRecord]:
    """Look for failures of the deep-chamber hypothesis that leave the weight rule intact.

    Scans every dominant integral ``lam`` with entries ``<= max_entry``.
    An empty result is evidence (not proof) that the hypothesis is necessary.
    """
    reps = list(reps)
    for u in reps:
        if u.group != g:
            raise ValueError(f"group mismatch: {g} vs {u.group}")
    if not reps or max_entry < 0:
        return []
    jobs = [(g, lam, reps) for lam in dominant_weights(g, max_entry)]
    return [rec for chunk in pmap(_scan_one, jobs, workers) for rec in chunk]
