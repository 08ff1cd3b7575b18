from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from classical_pieri.branching import BranchReport, branch_gl, cauchy_dimension_check, equivalence_check
from classical_pieri.partition import Partition, partitions_up_to
from classical_pieri.pieri import gl_symmetric
from classical_pieri.rootdata import GroupType, Weight, weyl_dim


def test_branch_examples():
    assert set(branch_gl((3, 1, 0), 2).partitions()) == {(3, 1), (3,), (2, 1), (2,), (1, 1), (1,)}
    assert branch_gl((2, 2, 2), 2).partitions() == {(2, 2): 1}
    assert set(branch_gl((4,), 1).partitions()) == {(j,) if j else () for j in range(5)}


def test_branch_rejects_long_partition():
    with pytest.raises(ValueError):
        branch_gl((1, 1, 1, 1), 2)


@given(st.lists(st.integers(0, 4), min_size=2, max_size=4))
def test_branching_cardinality_and_dimension(parts):
    mu = Partition(sorted(parts, reverse=True))
    n = len(parts)
    rows = mu.padded(n)
    dec = branch_gl(mu, n - 1)
    assert set(dec.values()) == {1}
    assert len(dec) == prod(rows[i] - rows[i + 1] + 1 for i in range(n - 1))
    assert dec.dimension == weyl_dim(GroupType("A", n), Weight.from_partition(mu, n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_reciprocity_with_symmetric_pieri(n):
    # Hom(π_λ ⊗ S(W), π_μ) summed over degrees is 0 or 1 and matches branching
    shapes = list(partitions_up_to(6, n))
    for mu in shapes:
        branched = branch_gl(mu, n)
        for lam in shapes:
            total = sum(
                gl_symmetric(lam, k, n).get(Weight.from_partition(mu, n), 0) for k in range(0, 7)
            )
            assert total == branched.get(Weight.from_partition(lam, n), 0)


@pytest.mark.parametrize("n, bound", [(1, 6), (2, 6), (3, 4), (3, 6)])
def test_equivalence_check(n, bound):
    report = equivalence_check(n, bound)
    assert isinstance(report, BranchReport)
    assert report.passed and report.checked_pairs > 0
    assert report.to_json()["mismatches"] == []


def test_cauchy_examples():
    r = cauchy_dimension_check(2, 2, 2)
    assert r.passed and r.extra["sum"] == 10 == comb(5, 2)
    assert cauchy_dimension_check(1, 3, 2).extra["sum"] == 6
    assert cauchy_dimension_check(3, 4, 0).extra["sum"] == 1


def test_cauchy_full_domain():
    for n in range(1, 4):
        for m in range(n, 5):
            for d in range(7):
                assert cauchy_dimension_check(n, m, d).passed


def test_cauchy_requires_n_le_m():
    with pytest.raises(ValueError):
        cauchy_dimension_check(3, 2, 1)
