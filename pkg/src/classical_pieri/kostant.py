"""Kostant's support bound and its Siegel-parabolic (GL(W) Levi) refinement."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .partition import Partition, partitions_up_to, strips_above
from .report import Report
from .rootdata import GroupType, Weight, check_weight, is_dominant
from .tensor import Decomposition, klimyk_decompose, kostant_violations, tensor_irreps
from .weightdiagram import WeightDiagram, exterior_power, freudenthal, symmetric_power


def _kostant_report(g: GroupType, lam: Weight, u: WeightDiagram, dec: Decomposition, label: str) -> Report:
    failures = [
        {"nu": nu, "multiplicity": m, "weight_multiplicity": bound}
        for nu, m in kostant_violations(lam, u, dec)
    ]
    gaps = []
    for eta in u:
        nu = Weight(a + b for a, b in zip(lam, eta))
        if is_dominant(g, nu) and nu not in dec:
            gaps.append(nu)
    return Report(
        claim="Kostant: nu - lam is a weight of U and m_nu <= m_U(nu - lam)",
        group=g,
        domain={"lambda": lam, "U": label},
        checked=len(dec),
        mismatches=failures,
        extra={"decomposition": dec.to_json()["terms"], "converse_gaps": sorted(gaps, reverse=True)},
    )


def kostant_bound_check(g: GroupType, lam: Sequence[int], mu: Sequence[int]) -> Report:
    """Check the support/multiplicity bound for ``Pi_lam ⊗ Pi_mu``.

    ``extra["converse_gaps"]`` lists the dominant ``lam + weight`` sums that
    do not occur as constituents.
    """
    lam, mu = check_weight(g, lam), check_weight(g, mu)
    dec = tensor_irreps(g, lam, mu, check=False)
    return _kostant_report(g, lam, freudenthal(g, mu), dec, f"Pi{mu}")


def kostant_power_check(g: GroupType, lam: Sequence[int], power: str, i: int) -> Report:
    """The same bound with ``U = Λ^i V`` or ``Sym^i V`` (``power`` is ``'ext'`` or ``'sym'``)."""
    lam = check_weight(g, lam)
    u = exterior_power(g, i) if power == "ext" else symmetric_power(g, i)
    dec = klimyk_decompose(g, lam, u)
    name = "Λ" if power == "ext" else "Sym"
    return _kostant_report(g, lam, u, dec, f"{name}^{i}")


@dataclass(frozen=True)
class LeviRestriction:
    """``Λ^i V`` restricted to GL(W) as a sum of ``Λ^j W ⊗ Λ^k W*``."""

    summands: tuple[tuple[int, int], ...]


def levi_restrict_exterior(g: GroupType, i: int) -> LeviRestriction:
    if g.family not in ("B", "C", "D"):
        raise ValueError(f"Siegel Levi restriction needs family B, C or D, got {g}")
    if not 0 <= i <= g.defining_dim:
        raise ValueError(f"exterior power {i} out of range 0..{g.defining_dim}")
    n = g.rank
    totals = (i, i - 1) if g.family == "B" else (i,)
    summands = [(j, t - j) for t in totals if t >= 0 for j in range(min(t, n), -1, -1) if t - j <= n]
    return LeviRestriction(tuple(summands))


@lru_cache(maxsize=65536)
def _vertical_above(lam: Partition, k: int, rank: int) -> frozenset:
    return frozenset(strips_above("vertical", lam, k, rank))


def _gl_rows(w: Iterable[int], n: int) -> tuple[int, ...]:
    rows = tuple(int(c) for c in w)
    if len(rows) > n:
        raise ValueError(f"{rows} has more than {n} rows")
    rows += (0,) * (n - len(rows))
    if any(a < b for a, b in zip(rows, rows[1:])):
        raise ValueError(f"not weakly decreasing: {rows}")
    return rows


def extended_kostant_multiplicity(g: GroupType, lam: Iterable[int], nu: Iterable[int], i: int) -> int:
    """``dim Hom_GL(W)(M_nu, M_lam ⊗ Λ^i V|_GL(W))`` via two GL Pieri steps.

    Moving ``Λ^k W*`` across the Hom turns each summand into a count of
    ``xi`` with ``xi/lam`` a vertical ``j``-strip and ``xi/nu`` a vertical
    ``k``-strip. ``lam`` and ``nu`` are GL(W) highest weights; a negative
    entry (possible for SO(2n)) is handled by a determinant twist of both.
    """
    n = g.rank
    lam_rows, nu_rows = _gl_rows(lam, n), _gl_rows(nu, n)
    twist = -min(0, lam_rows[-1], nu_rows[-1])
    lam = Partition(c + twist for c in lam_rows)
    nu = Partition(c + twist for c in nu_rows)
    total = 0
    for j, k in levi_restrict_exterior(g, i).summands:
        if lam.size + j != nu.size + k:
            continue
        total += len(_vertical_above(lam, j, n) & _vertical_above(nu, k, n))
    return total


def levi_equality_check(g: GroupType, lam: Iterable[int], i: int, exploratory: bool = False) -> Report:
    """Compare ``m(Pi_nu, Pi_lam ⊗ Λ^i V)`` with the GL(W) Hom dimension for every ``nu``.

    The equality is expected for Sp(2n); B and D are accepted only with
    ``exploratory=True``, where mismatches are findings rather than bugs.
    """
    if g.family != "C" and not exploratory:
        raise ValueError(f"the multiplicity equality is asserted for type C only; pass exploratory=True for {g}")
    lam = Partition(lam)
    n = g.rank
    dec = klimyk_decompose(g, Weight.from_partition(lam, n), exterior_power(g, i))
    candidates = {Weight.from_partition(nu, n) for nu in partitions_up_to(lam.size + i, n)}
    candidates.update(dec)
    mismatches = []
    for nu in sorted(candidates, reverse=True):
        oracle = dec.get(nu, 0)
        levi = extended_kostant_multiplicity(g, lam, [c // 2 for c in nu], i) if nu.is_integral else 0
        if oracle != levi:
            mismatches.append({"nu": nu, "klimyk": oracle, "levi": levi})
    return Report(
        claim="dim Hom_G(Pi_nu, Pi_lam ⊗ Λ^i V) = dim Hom_GL(W)(M_nu, M_lam ⊗ Λ^i V)",
        group=g,
        domain={"lambda": lam, "i": i, "nu_size_bound": lam.size + i},
        checked=len(candidates),
        mismatches=mismatches,
    )


def _shift_compare(g: GroupType, low: Decomposition, high: Decomposition) -> tuple[list, list]:
    one = (2,) * g.rank
    keys = set(low)
    unpaired = []
    for nu in high:
        mu = tuple(a - b for a, b in zip(nu, one))
        if is_dominant(g, mu):
            keys.add(Weight(mu))
        else:
            unpaired.append(nu)
    diffs = []
    for mu in sorted(keys, reverse=True):
        up = Weight(a + b for a, b in zip(mu, one))
        if low.get(mu, 0) != high.get(up, 0):
            diffs.append({"mu": mu, "m": low.get(mu, 0), "m_shifted": high.get(up, 0)})
    return diffs, sorted(unpaired, reverse=True)


def shift_invariance_check(n: int, lam: Iterable[int], d: int) -> Report:
    """``m(Pi_mu, Pi_lam ⊗ Λ^d) = m(Pi_{mu+1^n}, Pi_{lam+1^n} ⊗ Λ^d)`` on Sp(2n).

    ``mu`` runs over dominant weights. The symmetric-power analogue is
    computed alongside and its violations are reported in ``extra``; the
    shifted constituents with no dominant preimage are listed as ``unpaired``.
    """
    g = GroupType("C", n)
    lam = Partition(lam)
    low = Weight.from_partition(lam, n)
    high = Weight(c + 2 for c in low)
    ext_diffs, ext_unpaired = (
        _shift_compare(g, klimyk_decompose(g, low, exterior_power(g, d)), klimyk_decompose(g, high, exterior_power(g, d)))
        if d <= g.defining_dim
        else ([], [])
    )
    sym_diffs, sym_unpaired = _shift_compare(
        g, klimyk_decompose(g, low, symmetric_power(g, d)), klimyk_decompose(g, high, symmetric_power(g, d))
    )
    return Report(
        claim="exterior-power multiplicities are invariant under lam, mu -> lam + 1^n, mu + 1^n",
        group=g,
        domain={"lambda": lam, "d": d},
        checked=1,
        mismatches=ext_diffs,
        extra={
            "exterior_unpaired": ext_unpaired,
            "symmetric_violations": sym_diffs,
            "symmetric_unpaired": sym_unpaired,
        },
    )
