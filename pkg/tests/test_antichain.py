from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

import oracles
from strong_dichotomies.affine_group import AffineMap
from strong_dichotomies.antichain import (
    bounds, canonicalize, closed_form_bound, cota_bound, format_golden, is_antichain, is_complement_free,
    orbit_traversal, parse_golden, strong_classes,
)
from strong_dichotomies.dichotomy import Dichotomy, act, complement
from strong_dichotomies.errors import BudgetExceeded
from strong_dichotomies.perm_group import builtin_group

GOLDEN = Path(__file__).parent / "golden"


def D(*elements, n=12):
    return Dichotomy.from_elements(elements, n)


@pytest.fixture(scope="module")
def A12():
    return builtin_group("affine", 12)


def test_canonicalize(A12):
    assert canonicalize(D(0, 1, 2, 3, 4, 5), A12) == D(0, 1, 2, 3, 4, 5)
    assert canonicalize(D(1, 2, 5, 6, 10, 11), A12) == canonicalize(D(0, 3, 4, 7, 8, 9), A12)
    d = D(0, 2, 3, 7, 9, 10)
    for g in A12.labels:
        assert canonicalize(act(g, d), A12) == canonicalize(d, A12)


def test_traversal_covers_everything(A12):
    classes = orbit_traversal(A12, 12)
    assert sum(c.orbit_size for c in classes) == 924
    assert all(48 % c.orbit_size == 0 for c in classes)
    assert is_antichain(c.representative for c in classes)


def test_small_traversals():
    (c,) = orbit_traversal(builtin_group("affine", 2), 2)
    assert c.representative == D(0, n=2) and c.orbit_size == 2
    classes = orbit_traversal(builtin_group("affine", 4), 4)
    assert [(c.representative, c.orbit_size) for c in classes] == [(D(0, 1, n=4), 4), (D(0, 2, n=4), 2)]


def test_strong_classes_mod_12(A12):
    classes = strong_classes(A12, 12)
    # masks frozen from oracles.strong_class_masks on the naive affine group
    assert [c.representative.mask for c in classes] == [0x5F, 0xB7, 0xCF, 0x137, 0x15D, 0x19B]
    assert canonicalize(D(0, 3, 4, 7, 8, 9), A12) in [c.representative for c in classes]


def test_strong_classes_small():
    assert strong_classes(builtin_group("affine", 4), 4) == []
    (c,) = strong_classes(builtin_group("affine", 2), 2)
    assert c.representative == D(0, n=2) and c.polarity == AffineMap(1, 1, 2)
    assert strong_classes(builtin_group("symmetric", 6), 6) == []


@pytest.mark.parametrize("kind,n", [("affine", n) for n in range(2, 13, 2)] + [("dihedral", n) for n in range(4, 13, 2)])
def test_strong_classes_match_naive_oracle(kind, n):
    naive = list(oracles.affine_images(n).values()) if kind == "affine" else oracles.dihedral_images(n)
    G = builtin_group(kind, n)
    classes = strong_classes(G, n)
    assert [c.representative.mask for c in classes] == oracles.strong_class_masks(naive, n)
    found = oracles.strong_sets(naive, n)
    for c in classes:
        (swap,) = found[frozenset(c.representative.elements())]
        assert c.polarity.images() == swap


@pytest.mark.parametrize("n", range(2, 17, 2))
def test_strategies_agree(n):
    G = builtin_group("affine", n)
    brute = strong_classes(G, n, "bruteforce")
    via = strong_classes(G, n, "via_Mq")
    assert [(c.representative, c.orbit_size, c.polarity) for c in brute] == \
           [(c.representative, c.orbit_size, c.polarity) for c in via]


def test_strategy_errors():
    with pytest.raises(ValueError):
        strong_classes(builtin_group("dihedral", 6), 6, "via_Mq")
    with pytest.raises(ValueError):
        strong_classes(builtin_group("affine", 6), 6, "guess")
    with pytest.raises(BudgetExceeded):
        strong_classes(builtin_group("affine", 18), 18, "bruteforce")


def test_budget_env_override(monkeypatch):
    G = builtin_group("affine", 8)
    monkeypatch.setenv("ANTICHAIN_BUDGET", "6")
    with pytest.raises(BudgetExceeded):
        strong_classes(G, 8)
    assert len(strong_classes(G, 8, max_n=8)) == 1
    monkeypatch.delenv("ANTICHAIN_BUDGET")
    assert len(strong_classes(G, 8)) == 1


@pytest.mark.parametrize("kind,n", [("affine", n) for n in range(2, 17, 2)]
                         + [("dihedral", n) for n in range(4, 17, 2)] + [("symmetric", n) for n in (4, 6, 8)])
def test_representatives_antichain_and_complement_free(kind, n):
    G = builtin_group(kind, n)
    classes = strong_classes(G, n)
    reps = [c.representative for c in classes]
    assert is_antichain(reps) and is_complement_free(reps)
    for c in classes:
        # the complement lies in the same orbit
        assert canonicalize(complement(c.representative), G) == c.representative
        assert c.orbit_size == len(G)


def test_is_complement_free_detects_pairs():
    assert not is_complement_free([D(0, 1, 2, n=6), D(3, 4, 5, n=6)])
    assert is_complement_free([D(0, 1, 2, n=6), D(0, 1, 3, n=6)])
    assert is_antichain([D(0, 1, n=4), D(0, 2, n=4)])


def test_bounds_affine_12(A12):
    r = bounds(A12, 12)
    assert (r.sperner, r.purdy, r.ekr) == (924, 792, 462)
    assert r.cota == Fraction(64, 48) + Fraction(64, 16) + Fraction(64, 24) + Fraction(64, 8) == 16
    assert r.cota_floor == 16
    assert r.closed_form == 32
    assert r.exact_strong_count == 6


def test_bounds_symmetric_6():
    r = bounds(builtin_group("symmetric", 6), 6)
    assert r.cota == Fraction(2**3, 2**3 * 6) == Fraction(1, 6)
    assert r.cota_floor == 0 and r.exact_strong_count == 0
    assert r.closed_form == Fraction(1, 6)


def test_bounds_dihedral_12():
    r = bounds(builtin_group("dihedral", 12), 12)
    assert r.closed_form == 32 + Fraction(16, 6)
    # reflection class contributes 64/4, half-turn 64/24
    assert r.cota == Fraction(64, 4) + Fraction(64, 24)
    assert r.exact_strong_count <= r.cota_floor


@pytest.mark.parametrize("kind,n", [("affine", n) for n in range(2, 17, 2)]
                         + [("dihedral", n) for n in range(4, 17, 2)] + [("symmetric", n) for n in (4, 6, 8)])
def test_bound_chain(kind, n):
    r = bounds(builtin_group(kind, n), n)
    assert r.exact_strong_count <= r.cota_floor <= int(r.closed_form)
    assert r.exact_strong_count <= r.ekr <= r.purdy <= r.sperner
    assert 2 * r.ekr == r.sperner == comb(n, n // 2)
    if kind == "affine":
        assert r.cota <= 2 ** (n // 2 - 1)


@pytest.mark.parametrize("n", range(2, 21, 2))
def test_affine_cota_below_closing_bound(n):
    assert cota_bound(builtin_group("affine", n)) <= closed_form_bound("affine", n)


def test_golden_round_trip(A12):
    text = format_golden(strong_classes(A12, 12), bounds(A12, 12))
    header, rows = parse_golden(text)
    assert header == {"n": 12, "group": "affine", "count": 6, "cota": Fraction(16)}
    assert [r[0] for r in rows] == [0x5F, 0xB7, 0xCF, 0x137, 0x15D, 0x19B]
    assert text == (GOLDEN / "affine_12.csv").read_text()


def test_golden_needs_affine_labels():
    G = builtin_group("symmetric", 2)
    with pytest.raises(ValueError):
        format_golden(strong_classes(G, 2), bounds(G, 2))
