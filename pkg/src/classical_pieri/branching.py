"""GL(n+1) -> GL(n) branching and the Howe/Cauchy dimension identity."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Iterable

from .partition import Partition, is_strip, partitions_of, partitions_up_to
from .pieri import gl_symmetric
from .report import Report
from .rootdata import GroupType, Weight, weyl_dim
from .tensor import Decomposition


def branch_gl(mu_plus: Iterable[int], n: int) -> Decomposition:
    """Restrict the GL(n+1) module with highest weight ``mu_plus`` to GL(n).

    The constituents are the ``lam`` interleaving ``mu_plus``, each once.
    A nonzero last row is removed by a determinant twist and restored
    afterwards.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    mu = Partition(mu_plus)
    if len(mu) > n + 1:
        raise ValueError(f"{mu} has more than {n + 1} rows")
    rows = mu.padded(n + 1)
    twist = rows[-1]
    rows = tuple(r - twist for r in rows)
    ranges = [range(rows[i + 1], rows[i] + 1) for i in range(n)]
    g = GroupType("A", n)
    return Decomposition(g, {Weight.from_partition([p + twist for p in lam], n): 1 for lam in product(*ranges)})


@dataclass
class BranchReport:
    """Pairwise comparison of branching, symmetric Pieri and horizontal strips."""

    n: int
    degree_bound: int
    checked_pairs: int = 0
    mismatches: list[tuple[Partition, Partition]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "degree_bound": self.degree_bound,
            "checked_pairs": self.checked_pairs,
            "passed": self.passed,
            "mismatches": [[list(mu), list(lam)] for mu, lam in self.mismatches],
        }


def equivalence_check(n: int, size_bound: int) -> BranchReport:
    """For every ``(mu, lam)`` with at most ``n`` rows and ``|mu| <= size_bound``, check

    ``lam`` in the branching of ``mu`` with a zero appended
    iff ``mu`` occurs in ``lam ⊗ Sym^k`` for ``k = |mu| - |lam|``
    iff ``mu/lam`` is a horizontal strip.
    """
    report = BranchReport(n, size_bound)
    partitions = list(partitions_up_to(size_bound, n))
    for mu in partitions:
        mu_w = Weight.from_partition(mu, n)
        branched = branch_gl(mu, n)
        for lam in partitions:
            if lam.size > mu.size:
                continue
            report.checked_pairs += 1
            by_branching = Weight.from_partition(lam, n) in branched
            by_pieri = mu_w in gl_symmetric(lam, mu.size - lam.size, n)
            by_strip = is_strip("horizontal", lam, mu)
            if not by_branching == by_pieri == by_strip:
                report.mismatches.append((mu, lam))
    return report


def cauchy_dimension_check(n: int, m: int, d: int) -> Report:
    """``sum over lam |- d, len <= n of dim_GL(n)(lam) * dim_GL(m)(lam) = C(nm + d - 1, d)``."""
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got n={n}, m={m}")
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")
    gn, gm = GroupType("A", n), GroupType("A", m)
    terms = []
    total = 0
    for lam in partitions_of(d, n):
        a = weyl_dim(gn, Weight.from_partition(lam, n))
        b = weyl_dim(gm, Weight.from_partition(lam, m))
        terms.append({"lambda": lam, "dim_n": a, "dim_m": b})
        total += a * b
    expected = comb(n * m + d - 1, d)
    mismatches = [] if total == expected else [{"sum": total, "binomial": expected}]
    return Report(
        claim="degree-d polynomials on n x m matrices = sum of pi_lam ⊗ pi_lam",
        group=gn,
        domain={"n": n, "m": m, "d": d},
        checked=len(terms),
        mismatches=mismatches,
        extra={"sum": total, "binomial": expected, "terms": terms},
    )
