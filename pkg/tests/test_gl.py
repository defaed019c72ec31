import random
from fractions import Fraction

import pytest

from wavefront import linalg
from wavefront.gl import (
    DiagonalSemisimple, GlElement, NotNilpotentError, bracket, centralizer_basis, elementary,
    grade_by, identity, jacobson_morozov, jordan_basis, killing_form, nilpotent_representative,
    orbit_partition, pairing, zero,
)
from wavefront.partitions import Partition, partitions_of, transpose

F = Fraction


def random_element(rng, n, denominators=(1, 2, 3)):
    return GlElement([[F(rng.randint(-4, 4), rng.choice(denominators)) for _ in range(n)]
                      for _ in range(n)])


def random_invertible(rng, n):
    while True:
        g = GlElement([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        if g.rank() == n:
            return g


def test_bracket_examples():
    x = GlElement([[1, 2], [3, 4]])
    assert bracket(x, x) == zero(2)
    s = DiagonalSemisimple([1, -1]).matrix()
    assert bracket(s, elementary(2, 0, 1)) == 2 * elementary(2, 0, 1)
    assert bracket(elementary(2, 0, 1), elementary(2, 1, 0)) == DiagonalSemisimple([1, -1]).matrix()
    with pytest.raises(ValueError):
        bracket(zero(2), zero(3))


def test_jacobi_identity():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 4)
        x, y, z = (random_element(rng, n) for _ in range(3))
        total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert total.is_zero()


def test_pairing_examples():
    assert pairing(elementary(2, 1, 0), elementary(2, 0, 1)) == 1
    for n in range(1, 6):
        assert killing_form(identity(n), identity(n)) == 0


def test_pairing_ad_invariance():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 4)
        x, y, z = (random_element(rng, n) for _ in range(3))
        assert pairing(x, y) == pairing(y, x)
        assert pairing(bracket(z, x), y) + pairing(x, bracket(z, y)) == 0
        assert killing_form(bracket(z, x), y) + killing_form(x, bracket(z, y)) == 0


def test_killing_form_matches_adjoint_trace():
    # oracle: tr(ad X ad Y) computed on the E_ij basis
    rng = random.Random(3)
    for n in (1, 2, 3):
        basis = [elementary(n, i, j) for i in range(n) for j in range(n)]
        for _ in range(5):
            x, y = random_element(rng, n), random_element(rng, n)
            trace = F(0)
            for k, e in enumerate(basis):
                trace += bracket(x, bracket(y, e)).vector()[k]
            assert killing_form(x, y) == trace


@pytest.mark.parametrize("n", range(1, 7))
def test_trace_pairing_normalization(n):
    rng = random.Random(10 + n)
    for lam in partitions_of(n):
        u = nilpotent_representative(lam)
        assert u.trace() == 0
        for _ in range(3):
            x = random_element(rng, n)
            assert pairing(u, x) * 2 * n == killing_form(u, x)


def test_nilpotent_representative_examples():
    assert nilpotent_representative(Partition(1, 1, 1)) == zero(3)
    assert nilpotent_representative(Partition(2, 1)) == elementary(3, 1, 0)
    assert nilpotent_representative(Partition(3)) == elementary(3, 1, 0) + elementary(3, 2, 1)
    with pytest.raises(ValueError):
        nilpotent_representative(Partition(2), 3)


def test_orbit_partition_examples():
    assert orbit_partition(zero(4)) == Partition(1, 1, 1, 1)
    assert orbit_partition(elementary(3, 1, 0) + elementary(3, 2, 1)) == Partition(3)
    with pytest.raises(NotNilpotentError):
        orbit_partition(identity(2))


@pytest.mark.parametrize("n", range(1, 9))
def test_orbit_roundtrip(n):
    for lam in partitions_of(n):
        assert orbit_partition(nilpotent_representative(lam)) == lam


def test_orbit_partition_is_conjugation_invariant():
    rng = random.Random(4)
    for lam in partitions_of(5):
        g = random_invertible(rng, 5)
        g_inv = GlElement(linalg.inverse(g.rows))
        assert orbit_partition(g @ nilpotent_representative(lam) @ g_inv) == lam


def test_grade_by_examples():
    g = grade_by(DiagonalSemisimple([0, 0, 0]))
    assert g.eigenvalues() == [0] and len(g[0]) == 9
    g = grade_by(DiagonalSemisimple([1, 0, -1]))
    assert set(g[2]) == {(0, 2)}
    assert set(g[1]) == {(0, 1), (1, 2)}
    assert set(g[0]) == {(0, 0), (1, 1), (2, 2)}
    assert set(g[-1]) == {(1, 0), (2, 1)}
    assert set(g[-2]) == {(2, 0)}
    assert set(g.geq(1)) == {(0, 1), (1, 2), (0, 2)}
    g = grade_by(DiagonalSemisimple([1, -1]))
    assert g[2] == ((0, 1),) and g[-2] == ((1, 0),) and set(g[0]) == {(0, 0), (1, 1)}


def test_grading_partitions_positions():
    s = DiagonalSemisimple([F(1, 2), 3, -1, F(1, 2)])
    g = grade_by(s)
    positions = [p for ev in g.eigenvalues() for p in g[ev]]
    assert sorted(positions) == [(i, j) for i in range(4) for j in range(4)]
    for ev in g.eigenvalues():
        assert all(s.diag[i] - s.diag[j] == ev for i, j in g[ev])


def test_centralizer_examples():
    assert len(centralizer_basis(zero(3))) == 9
    assert len(centralizer_basis(nilpotent_representative(Partition(4)))) == 4
    assert len(centralizer_basis(nilpotent_representative(Partition(2, 1)))) == 5


@pytest.mark.parametrize("n", range(1, 6))
def test_centralizer_dimension_formula(n):
    # dim of the centralizer of type lam is the sum of squares of the transpose
    for lam in partitions_of(n):
        u = nilpotent_representative(lam)
        basis = centralizer_basis(u)
        assert len(basis) == sum(c * c for c in transpose(lam).parts)
        assert all(bracket(x, u).is_zero() for x in basis)


def test_jacobson_morozov_examples():
    t = jacobson_morozov(zero(2))
    assert t.v.is_zero() and t.s_matrix().is_zero()
    t = jacobson_morozov(elementary(2, 1, 0))
    assert t.v == elementary(2, 0, 1)
    assert t.s == DiagonalSemisimple([1, -1])
    t = jacobson_morozov(nilpotent_representative(Partition(3)))
    assert t.s == DiagonalSemisimple([2, 0, -2])
    assert t.v == elementary(3, 0, 1, 2) + elementary(3, 1, 2, 2)
    with pytest.raises(NotNilpotentError):
        jacobson_morozov(identity(2))


@pytest.mark.parametrize("n", range(1, 8))
def test_jacobson_morozov_standard(n):
    for lam in partitions_of(n):
        t = jacobson_morozov(nilpotent_representative(lam))
        assert t.relations_hold()
        expected = sorted(F(p - 1 - 2 * k) for p in lam.parts for k in range(p))
        assert sorted(t.s.diag) == expected


def test_jacobson_morozov_conjugated():
    rng = random.Random(5)
    for n in (3, 4, 5):
        for lam in partitions_of(n):
            g = random_invertible(rng, n)
            u = g @ nilpotent_representative(lam) @ GlElement(linalg.inverse(g.rows))
            t = jacobson_morozov(u)
            assert t.u == u and t.relations_hold()
            p, mu = jordan_basis(u)
            assert mu == lam
            assert GlElement(linalg.inverse(p.rows)) @ u @ p == nilpotent_representative(lam)


def test_matrix_json():
    assert GlElement([[F(1, 2), -1], [0, 3]]).to_json() == [["1/2", "-1/1"], ["0/1", "3/1"]]
