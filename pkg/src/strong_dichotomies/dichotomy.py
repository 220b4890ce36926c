"""Half-size subsets of Z_n as bit masks, and how a group moves them."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .affine_group import AffineMap
from .errors import ModulusError, NotAQuasipolarity
from .perm_group import PermGroup, Permutation
from .residue_ring import as_modulus

MAX_DEGREE = 64


@dataclass(frozen=True, order=True)
class Dichotomy:
    """A subset D of {0..n-1} with |D| = n/2; bit i of ``mask`` is set iff i in D."""

    mask: int
    n: int

    def __post_init__(self):
        n = as_modulus(self.n).n
        if n > MAX_DEGREE:
            raise ModulusError(f"dichotomies are limited to n <= {MAX_DEGREE}")
        if self.mask < 0 or self.mask >> n:
            raise ValueError(f"mask {self.mask:#x} has bits outside 0..{n - 1}")
        if self.mask.bit_count() != n // 2:
            raise ValueError(f"mask {self.mask:#x} does not have {n // 2} elements")

    @classmethod
    def from_elements(cls, elements, n):
        mask = 0
        for x in elements:
            mask |= 1 << (x % n)
        return cls(mask, n)

    def elements(self) -> list[int]:
        return [i for i in range(self.n) if self.mask >> i & 1]

    def __contains__(self, x):
        return bool(self.mask >> x & 1)

    def issubset(self, other: Dichotomy):
        return self.mask & ~other.mask == 0

    @property
    def hex(self):
        width = (self.n + 3) // 4
        return f"{self.mask:0{width}x}"

    def __str__(self):
        return "{" + ",".join(map(str, self.elements())) + "}"


def all_dichotomies(n):
    n = as_modulus(n).n
    for combo in itertools.combinations(range(n), n // 2):
        yield Dichotomy(sum(1 << i for i in combo), n)


def _images(g, n) -> tuple[int, ...]:
    if isinstance(g, AffineMap):
        if g.n != n:
            raise ModulusError("map and dichotomy over different moduli")
        return g.images()
    if len(g) != n:
        raise ModulusError("permutation and dichotomy of different degree")
    return tuple(g)


def act(g, D: Dichotomy) -> Dichotomy:
    img = _images(g, D.n)
    return Dichotomy(sum(1 << img[i] for i in D.elements()), D.n)


def complement(D: Dichotomy) -> Dichotomy:
    return Dichotomy(~D.mask & ((1 << D.n) - 1), D.n)


def image_masks(G: PermGroup, D: Dichotomy) -> np.ndarray:
    """Masks of gD for every g in G, in element order (uint64)."""
    if G.degree != D.n:
        raise ModulusError("group and dichotomy of different degree")
    shifted = np.left_shift(np.uint64(1), G.table[:, D.elements()].astype(np.uint64))
    return np.bitwise_or.reduce(shifted, axis=1)


@dataclass(frozen=True)
class StrengthReport:
    rigid: bool
    autocomplementarity_witnesses: tuple = field(default=())
    polarity: object = None
    stabilizer_size: int = 1

    @property
    def strong(self):
        return self.rigid and bool(self.autocomplementarity_witnesses)

    @property
    def autocomplementary(self):
        return bool(self.autocomplementarity_witnesses)


def strength(D: Dichotomy, G: PermGroup) -> StrengthReport:
    """Scan all of G for the setwise stabilizer of D and for maps sending D to its complement.

    Witnesses are reported as group labels when the group has them (affine
    maps for the affine group), otherwise as permutations.
    """
    masks = image_masks(G, D)
    stab = int(np.count_nonzero(masks == np.uint64(D.mask)))
    hits = np.flatnonzero(masks == np.uint64(complement(D).mask))
    label = G.labels if G.labels is not None else G.elements
    witnesses = tuple(label[i] for i in hits)
    rigid = stab == 1
    polarity = None
    if rigid and witnesses:
        if len(witnesses) != 1:
            raise AssertionError(f"rigid {D} has {len(witnesses)} complementing maps")
        p = G.elements[hits[0]]
        if not p.is_involutive_derangement():
            raise AssertionError(f"polarity of {D} is not an involutive derangement")
        polarity = witnesses[0]
    return StrengthReport(rigid, witnesses, polarity, stab)


def _as_quasipolarity(q) -> Permutation:
    p = Permutation(q.images()) if isinstance(q, AffineMap) else Permutation(q)
    if not p.is_involutive_derangement():
        raise NotAQuasipolarity(f"{q} is not an involutive derangement")
    return p


def base_set(q) -> Dichotomy:
    """U_q: the smaller point of every 2-cycle of q."""
    p = _as_quasipolarity(q)
    return Dichotomy.from_elements((i for i in range(len(p)) if i < p[i]), len(p))


def members_of_Mq(q) -> list[Dichotomy]:
    """All D with qD = complement(D), built as A | ((S \\ U_q) \\ qA) for A in U_q.

    Subsets A are taken in binary-counter order over the ascending elements of U_q.
    """
    p = _as_quasipolarity(q)
    n = len(p)
    base = base_set(q).elements()
    rest = sum(1 << p[x] for x in base)
    out = []
    for bits in range(1 << len(base)):
        a = qa = 0
        for j, x in enumerate(base):
            if bits >> j & 1:
                a |= 1 << x
                qa |= 1 << p[x]
        out.append(Dichotomy(a | (rest & ~qa), n))
    return out


def members_of_Mq_bruteforce(q) -> list[Dichotomy]:
    p = _as_quasipolarity(q)
    return [D for D in all_dichotomies(len(p)) if act(p, D) == complement(D)]
