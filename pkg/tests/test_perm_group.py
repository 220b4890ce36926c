from math import factorial

import pytest

from strong_dichotomies.affine_group import AffineMap, compose, enumerate_group, enumerate_quasipolarities
from strong_dichotomies.errors import BudgetExceeded, NotInGroup
from strong_dichotomies.perm_group import (
    Permutation, affine_embedding, builtin_group, centralizer_size, closure, conjugacy_class,
    quasipolarities_of, quasipolarity_classes,
)


def P(*images):
    return Permutation(images)


def test_permutation_basics():
    p = P(1, 2, 0)
    assert p * p.inverse() == Permutation.identity(3)
    assert (P(1, 0, 2) * P(0, 2, 1))(1) == 2  # applies right factor first
    assert p.cycles() == [(0, 1, 2)]
    with pytest.raises(ValueError):
        P(0, 0, 1)


def test_closure():
    assert len(closure([P(1, 0)])) == 2
    rot = [(x + 1) % 12 for x in range(12)]
    ref = [(-x) % 12 for x in range(12)]
    assert len(closure([rot, ref])) == 24
    transpositions = [Permutation.from_cycles(4, (a, b)) for a in range(4) for b in range(a + 1, 4)]
    assert len(closure(transpositions)) == 24


def test_closure_errors():
    with pytest.raises(BudgetExceeded):
        closure([Permutation.from_cycles(6, (0, 1)), Permutation.from_cycles(6, (0, 1, 2, 3, 4, 5))], cap=100)
    with pytest.raises(ValueError):
        closure([P(1, 0), P(1, 2, 0)])


@pytest.mark.parametrize("kind,n,order", [("dihedral", 12, 24), ("affine", 12, 48), ("symmetric", 4, 24)])
def test_builtin_orders(kind, n, order):
    G = builtin_group(kind, n)
    assert len(G) == order
    assert factorial(n) % len(G) == 0


def test_symmetric_cap():
    with pytest.raises(BudgetExceeded):
        builtin_group("symmetric", 10)


def test_quasipolarities_of():
    S4 = builtin_group("symmetric", 4)
    assert sorted(quasipolarities_of(S4)) == [P(1, 0, 3, 2), P(2, 3, 0, 1), P(3, 2, 1, 0)]
    assert len(quasipolarities_of(builtin_group("dihedral", 12))) == 7
    assert len(quasipolarities_of(builtin_group("affine", 12))) == 12


@pytest.mark.parametrize("n", range(2, 21, 2))
def test_affine_quasipolarities_match_embedding(n):
    G = builtin_group("affine", n)
    assert sorted(quasipolarities_of(G)) == sorted(affine_embedding(g) for g in enumerate_quasipolarities(n))
    for p in quasipolarities_of(G):
        assert G.label(p).images() == tuple(p)


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
def test_embedding_is_homomorphism(n):
    group = enumerate_group(n)
    for g in group:
        for h in group:
            assert affine_embedding(compose(g, h)) == affine_embedding(g) * affine_embedding(h)


def test_centralizer_sizes():
    S4 = builtin_group("symmetric", 4)
    assert centralizer_size(S4, P(1, 0, 3, 2)) == 2**2 * factorial(2)
    D12 = builtin_group("dihedral", 12)
    rotation = affine_embedding(AffineMap(6, 1, 12))
    assert centralizer_size(D12, rotation) == 24
    with pytest.raises(NotInGroup):
        centralizer_size(D12, Permutation.from_cycles(12, (0, 1)))


def test_dihedral_reflection_centralizer():
    # x -> -x + 1 commutes with e, itself, the half-turn x -> x + 6 and their product
    D12 = builtin_group("dihedral", 12)
    reflection = affine_embedding(AffineMap(1, 11, 12))
    assert centralizer_size(D12, reflection) == 4
    commuting = {D12.label(h) for h in D12 if h * reflection == reflection * h}
    assert commuting == {AffineMap(0, 1, 12), AffineMap(6, 1, 12), AffineMap(1, 11, 12), AffineMap(7, 11, 12)}


@pytest.mark.parametrize("n", [4, 6, 8])
def test_symmetric_quasipolarities_form_one_class(n):
    G = builtin_group("symmetric", n)
    ((rep, size, cent),) = quasipolarity_classes(G)
    k = n // 2
    assert size == len(quasipolarities_of(G))
    assert cent == 2**k * factorial(k)
    assert len(conjugacy_class(G, rep)) * cent == len(G)


@pytest.mark.parametrize("kind,n", [(kind, n) for kind in ("affine", "dihedral") for n in range(4, 17, 2)]
                         + [("symmetric", n) for n in (4, 6, 8)])
def test_lagrange(kind, n):
    G = builtin_group(kind, n)
    for q in quasipolarities_of(G):
        assert len(G) % centralizer_size(G, q) == 0
