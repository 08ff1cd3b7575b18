"""Acceptance gate: eleven criteria, one PASS/FAIL line each.

Run under pytest (lines are printed even with output capture on) or
directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
import warnings

import pytest

from classical_pieri.branching import cauchy_dimension_check, equivalence_check
from classical_pieri.kostant import kostant_bound_check, kostant_power_check, levi_equality_check, shift_invariance_check
from classical_pieri.partition import Partition, partitions_up_to
from classical_pieri.pieri import classical_exterior, gl_exterior, gl_symmetric, is_pieri_regular
from classical_pieri.rootdata import GroupType, Weight, dominant_weights, weyl_dim
from classical_pieri.tensor import deep_pieri, klimyk_decompose, minuscule_hypothesis, necessity_scan
from classical_pieri.weightdiagram import (
    convolve,
    defining_weights,
    diagram_of_decomposition,
    exterior_power,
    freudenthal,
    symmetric_power,
)

ORTHO_SYMP = [GroupType(f, n) for f in "BCD" for n in (1, 2, 3) if (f, n) != ("D", 1)]


def P(*parts):
    return Weight(2 * p for p in parts)


def regular_partitions(rank: int, max_entry: int = 4):
    return [lam for lam in partitions_up_to(rank * max_entry, rank, max_entry) if is_pieri_regular(lam, rank)]


def c1_gl_examples():
    ext = gl_exterior((3, 2, 1, 0), 2, 4)
    sym = gl_symmetric((3, 2, 1, 0), 2, 4)
    ext_expected = {(3, 2, 2, 1), (3, 3, 1, 1), (3, 3, 2), (4, 2, 1, 1), (4, 2, 2), (4, 3, 1)}
    sym_expected = ext_expected | {(5, 2, 1)}
    ok = ext.partitions() == dict.fromkeys(ext_expected, 1) and sym.partitions() == dict.fromkeys(sym_expected, 1)
    return ok, f"{len(ext)} exterior terms, {len(sym)} symmetric terms"


def c2_converse_gap():
    a3 = GroupType("A", 3)
    dec = klimyk_decompose(a3, P(2, 1, 1), symmetric_power(a3, 2))
    report = kostant_power_check(a3, P(2, 1, 1), "sym", 2)
    ok = dec.partitions() == {(3, 2, 1): 1, (4, 1, 1): 1} and report.extra["converse_gaps"] == [P(2, 2, 2)]
    return ok, f"gaps {[str(w) for w in report.extra['converse_gaps']]}"


def c3_gl_oracle():
    checked, bad = 0, []
    for n in range(1, 5):
        g = GroupType("A", n)
        for lam in partitions_up_to(6, n):
            w = Weight.from_partition(lam, n)
            for i in range(5):
                if i <= n:
                    checked += 1
                    if gl_exterior(lam, i, n) != klimyk_decompose(g, w, exterior_power(g, i)):
                        bad.append(("ext", n, lam, i))
                checked += 1
                if gl_symmetric(lam, i, n) != klimyk_decompose(g, w, symmetric_power(g, i)):
                    bad.append(("sym", n, lam, i))
    return not bad, f"{checked} products, {len(bad)} mismatches"


def c4_classical_oracle():
    checked, bad = 0, []
    for g in ORTHO_SYMP:
        for lam in regular_partitions(g.rank):
            w = Weight.from_partition(lam, g.rank)
            for i in range(g.defining_dim + 1):
                checked += 1
                if classical_exterior(g, lam, i) != klimyk_decompose(g, w, exterior_power(g, i)):
                    bad.append((str(g), lam, i))
    return not bad, f"{checked} products, {len(bad)} mismatches"


def c5_deep_chamber():
    applied, bad = 0, []
    for g in ORTHO_SYMP:
        for lam in regular_partitions(g.rank):
            w = Weight.from_partition(lam, g.rank)
            for i in range(g.defining_dim + 1):
                u = exterior_power(g, i)
                holds, dec = deep_pieri(g, w, u)
                if holds:
                    applied += 1
                    if dec != klimyk_decompose(g, w, u):
                        bad.append((str(g), lam, i))
    minuscule = 0
    for g in [GroupType("A", n) for n in range(1, 5)] + [GroupType("C", n) for n in range(1, 4)]:
        u = defining_weights(g)
        for w in dominant_weights(g, 4):
            minuscule += 1
            if not minuscule_hypothesis(g, u, w):
                bad.append((str(g), "minuscule", w))
    return not bad, f"deep rule applied {applied} times, minuscule checked at {minuscule} weights, {len(bad)} failures"


def c6_kostant_random():
    rng = random.Random(20240601)
    bad, checked = [], 0
    for family in "ABCD":
        for _ in range(500):
            rank = rng.randint(2 if family == "D" else 1, 3)
            g = GroupType(family, rank)
            weights = list(dominant_weights(g, 3, spin=True))
            lam, mu = rng.choice(weights), rng.choice(weights)
            checked += 1
            if not kostant_bound_check(g, lam, mu).passed:
                bad.append((str(g), lam, mu))
    return not bad, f"{checked} random pairs, {len(bad)} violations"


def c7_levi_equality():
    checked, bad = 0, 0
    for rank in (2, 3):
        g = GroupType("C", rank)
        for lam in partitions_up_to(6, rank):
            for i in range(g.defining_dim + 1):
                report = levi_equality_check(g, lam, i)
                checked += report.checked
                bad += len(report.mismatches)
    return bad == 0, f"{checked} multiplicities compared, {bad} mismatches"


def c8_shift():
    ext_bad, sym_hits, cases = 0, [], 0
    for lam in partitions_up_to(5, 2):
        for d in range(5):
            report = shift_invariance_check(2, lam, d)
            cases += 1
            ext_bad += len(report.mismatches)
            if report.extra["symmetric_violations"]:
                sym_hits.append((lam, d))
    ok = ext_bad == 0 and len(sym_hits) >= 1
    first = f"first lambda={tuple(sym_hits[0][0])}, d={sym_hits[0][1]}" if sym_hits else "none"
    return ok, f"{cases} cases, exterior mismatches {ext_bad}, symmetric counterexamples {len(sym_hits)} ({first})"


def c9_branching():
    pairs, bad = 0, 0
    for n in (1, 2, 3):
        report = equivalence_check(n, 6)
        pairs += report.checked_pairs
        bad += len(report.mismatches)
    cauchy = [(n, m, d) for n in range(1, 4) for m in range(n, 5) for d in range(7)]
    cauchy_bad = [c for c in cauchy if not cauchy_dimension_check(*c).passed]
    return bad == 0 and not cauchy_bad, f"{pairs} pairs ({bad} mismatches), {len(cauchy)} Cauchy cases ({len(cauchy_bad)} failures)"


def c10_character_consistency():
    checked, bad = 0, []

    def check(g, w, u, dec):
        nonlocal checked
        checked += 1
        if diagram_of_decomposition(g, dec) != convolve(freudenthal(g, w), u):
            bad.append((str(g), w, "character"))
        if dec.dimension != weyl_dim(g, w) * u.mass:
            bad.append((str(g), w, "dimension"))

    for n in (1, 2):
        g = GroupType("A", n)
        for lam in partitions_up_to(6, n):
            w = Weight.from_partition(lam, n)
            for i in range(5):
                if i <= n:
                    check(g, w, exterior_power(g, i), gl_exterior(lam, i, n))
                check(g, w, symmetric_power(g, i), gl_symmetric(lam, i, n))
    for g in [g for g in ORTHO_SYMP if g.rank <= 2]:
        for lam in regular_partitions(g.rank):
            w = Weight.from_partition(lam, g.rank)
            for i in range(g.defining_dim + 1):
                check(g, w, exterior_power(g, i), classical_exterior(g, lam, i))
    return not bad, f"{checked} products, {len(bad)} failures"


def c11_necessity():
    groups = [GroupType(f, n) for f in "ABCD" for n in (1, 2) if (f, n) != ("D", 1)]
    found = []
    for g in groups:
        reps = [exterior_power(g, i) for i in range(4) if i <= g.defining_dim]
        reps += [symmetric_power(g, i) for i in range(4)]
        found += necessity_scan(g, 3, reps)
    return not found, f"{len(groups)} groups scanned, {len(found)} counterexamples"


CRITERIA = [
    (1, "GL(4) exterior/symmetric examples", c1_gl_examples, 0.001),
    (2, "GL(3) Sym^2 product and converse gap", c2_converse_gap, 0.010),
    (3, "GL Pieri = Klimyk oracle", c3_gl_oracle, 30.0),
    (4, "Sp/SO exterior Pieri = Klimyk oracle", c4_classical_oracle, 300.0),
    (5, "deep-chamber rule and minuscule weights", c5_deep_chamber, None),
    (6, "Kostant bound on random pairs", c6_kostant_random, 300.0),
    (7, "Levi multiplicity equality for C2, C3", c7_levi_equality, 120.0),
    (8, "exterior shift invariance, symmetric counterexample", c8_shift, None),
    (9, "branching equivalence and Cauchy dimensions", c9_branching, None),
    (10, "character-level consistency", c10_character_consistency, None),
    (11, "necessity scan is empty", c11_necessity, None),
]


def evaluate(number: int, title: str, fn, limit: float | None):
    fn()  # warm caches so timing reflects the computation, not imports
    if limit is not None and limit < 1:
        start = time.perf_counter()
        ok, detail = fn()
        elapsed = time.perf_counter() - start
    else:
        # cold timing for the long scans
        from classical_pieri import kostant, weightdiagram

        weightdiagram._freudenthal.cache_clear()
        weightdiagram._freudenthal_dominant.cache_clear()
        kostant._vertical_above.cache_clear()
        start = time.perf_counter()
        ok, detail = fn()
        elapsed = time.perf_counter() - start
    in_time = limit is None or elapsed < limit
    verdict = "PASS" if ok and in_time else "FAIL"
    budget = f" < {limit:g} s" if limit is not None else ""
    line = f"[{verdict}] criterion {number:>2}: {title}: {detail} ({elapsed:.4f} s{budget})"
    return ok and in_time, line


@pytest.mark.parametrize("number, title, fn, limit", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, fn, limit, capsys):
    ok, line = evaluate(number, title, fn, limit)
    with capsys.disabled():
        print("\n" + line, end="")
    assert ok, line


if __name__ == "__main__":
    warnings.simplefilter("error")
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
