import itertools
import random

import pytest

from wavefront.partitions import Partition, not_dominated, partitions_of
from wavefront.vanishing import (
    BoundExceeded, block_map, cai_sweep, double_cosets, finite_oracle, finite_vanishing_sweep,
    gl_order, weyl_check, weyl_verdict,
)
from wavefront.whittaker import marked_simple_roots

P = Partition


def test_block_map():
    assert block_map(P(2, 1)).index == (0, 0, 1)
    assert block_map(P(1, 1, 1)).index == (0, 1, 2)
    assert block_map(P(3)).n == 3


def test_weyl_verdict():
    assert not weyl_verdict([0, 1, 2], [])
    assert weyl_verdict([0, 1], [(0, 1)])
    assert weyl_verdict([1, 1], [(0, 1)])
    assert not weyl_verdict([1, 0], [(0, 1)])


def test_weyl_check_examples():
    # no marked roots: nothing can pass
    r = weyl_check(P(1, 1, 1), P(3))
    assert (r.all_pass, r.passing, r.failing, r.counterexample) == (False, 0, 6, (0, 1, 2))
    # lambda = [3] marks every simple root; mu^t = [2, 1] has a block of size 2
    r = weyl_check(P(3), P(2, 1))
    assert r.all_pass and r.passing == 6 and r.counterexample is None
    r = weyl_check(P(2), P(1, 1))
    assert r.all_pass and r.passing == 2
    # lambda = [1, 1] is dominated by everything and never passes with P = B
    r = weyl_check(P(1, 1), P(2))
    assert not r.all_pass and r.failing == 2
    with pytest.raises(ValueError):
        weyl_check(P(2), P(1))


def test_weyl_check_counts_against_brute_force():
    # independent count: w passes iff some marked (j, j+1) is not inverted into a later block
    for lam, mu in [(P(3, 1), P(2, 2)), (P(2, 2), P(3, 1)), (P(4), P(2, 1, 1))]:
        blocks = [k for k, d in enumerate(mu.transpose().parts) for _ in range(d)]
        marked = marked_simple_roots(lam)
        expect = sum(1 for w in itertools.permutations(range(4))
                     if any(blocks[w[j]] <= blocks[w[j + 1]] for j, _ in marked))
        assert weyl_check(lam, mu).passing == expect


def test_weyl_verdict_is_left_levi_invariant():
    # permuting positions inside one block of mu^t (left multiplication by the
    # Levi Weyl group) never changes the verdict of w
    rng = random.Random(3)
    lam, mu = P(3, 2), P(2, 2, 1)
    blocks = block_map(mu.transpose()).index
    marked = marked_simple_roots(lam)
    for _ in range(200):
        w = list(range(5))
        rng.shuffle(w)
        sigma = list(range(5))
        for k in set(blocks):
            members = [i for i in range(5) if blocks[i] == k]
            shuffled = rng.sample(members, len(members))
            for a, b in zip(members, shuffled):
                sigma[a] = b
        labels = [blocks[x] for x in w]
        moved = [blocks[sigma[x]] for x in w]
        assert weyl_verdict(labels, marked) == weyl_verdict(moved, marked)


def test_weyl_check_parallel_matches_serial():
    for lam, mu in [(P(2, 2, 1), P(3, 2)), (P(1, 1, 1, 1, 1), P(2, 2, 1))]:
        assert weyl_check(lam, mu) == weyl_check(lam, mu, jobs=3)


def test_weyl_check_bound():
    with pytest.raises(BoundExceeded):
        weyl_check(P(5), P(5), bound=4)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_cai_sweep_no_failures(n):
    summary = cai_sweep(n)
    assert summary.ok and summary.failures == []
    expected = sum(1 for lam in partitions_of(n) for mu in partitions_of(n)
                   if not_dominated(lam, mu)[0])
    assert summary.qualifying == expected == len(summary.lines)


def test_dominated_pairs_can_fail():
    # the criterion is sharp: lambda = mu never passes for the trivial reason
    for n in range(2, 6):
        for mu in partitions_of(n):
            assert not weyl_check(mu, mu).all_pass


# --- finite field oracle ------------------------------------------------------

def test_gl_order():
    assert gl_order(1, 2) == 1
    assert gl_order(2, 2) == 6
    assert gl_order(2, 3) == 48
    assert gl_order(3, 2) == 168
    assert gl_order(3, 3) == 11232


@pytest.mark.parametrize("lam, mu, cosets, hom", [
    (P(2), P(1, 1), 1, 0),
    (P(1, 1), P(1, 1), 1, 1),
    (P(1, 1), P(2), 2, 2),
    (P(2), P(2), 2, 1),
])
def test_finite_oracle_gl2(lam, mu, cosets, hom):
    for q in (2, 3):
        r = finite_oracle(2, q, lam, mu)
        assert (r.double_cosets, r.hom_dim) == (cosets, hom)
        assert r.coset_sizes_total == r.group_order == gl_order(2, q)


def test_finite_oracle_gl3_example():
    r = finite_oracle(3, 2, P(3), P(2, 1))
    assert r.hom_dim == 0 and r.double_cosets == 3 and r.coset_sizes_total == 168


@pytest.mark.parametrize("n, q", [(2, 2), (2, 3), (3, 2)])
def test_borel_case_matches_weyl_count(n, q):
    # with mu = [n] the parabolic is the Borel subgroup, so double cosets are
    # permutations and the Hom dimension counts the failing permutations
    for lam in partitions_of(n):
        r = finite_oracle(n, q, lam, P(n))
        assert r.double_cosets == len(list(itertools.permutations(range(n))))
        assert r.hom_dim == weyl_check(lam, P(n)).failing


def test_parabolic_equal_to_group():
    # mu = [1^n]: P = G, one double coset, and the character restricts trivially
    # exactly when lambda marks nothing
    for lam in partitions_of(3):
        r = finite_oracle(3, 2, lam, P(1, 1, 1))
        assert r.double_cosets == 1
        assert r.hom_dim == (1 if lam == P(1, 1, 1) else 0)


@pytest.mark.parametrize("n, q", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_finite_sweep(n, q):
    summary = finite_vanishing_sweep(n, q)
    assert summary.ok and summary.extra["coset_sizes_match_group_order"]
    assert all(line["coset_sizes_total"] == gl_order(n, q) for line in summary.lines)


def test_weyl_pass_implies_finite_vanishing():
    for n in (2, 3):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                if weyl_check(lam, mu).all_pass:
                    assert finite_oracle(n, 2, lam, mu).hom_dim == 0


def test_double_cosets_sum():
    dc = double_cosets(3, 2, P(2, 1))
    assert sum(dc.sizes) == 168 and len(dc.representatives) == 3


def test_finite_oracle_errors():
    with pytest.raises(ValueError):
        finite_oracle(2, 4, P(2), P(2))
    with pytest.raises(BoundExceeded):
        finite_oracle(3, 3, P(3), P(3), bound=1000)
    with pytest.raises(ValueError):
        finite_oracle(3, 2, P(2), P(3))


def test_halved_variant_runs():
    r = finite_oracle(3, 2, P(3), P(2, 1), unipotent="halved")
    assert r.unipotent == "halved" and r.coset_sizes_total == 168
    assert r.hom_dim >= 0


def test_report_json_is_deterministic():
    r = finite_oracle(2, 2, P(2), P(1, 1))
    assert "wall_time" not in r.to_json()
    assert "wall_time" in r.to_json(timing=True)
