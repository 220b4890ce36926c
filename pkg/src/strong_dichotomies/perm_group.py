"""Explicitly materialized permutation groups on {0, ..., n-1}.

Every element is stored; there is no stabilizer chain. This is meant for
small degrees where a full listing is both cheap and easy to audit.
"""
from __future__ import annotations

import itertools
from collections import deque

import numpy as np

from .affine_group import AffineMap, enumerate_group
from .errors import BudgetExceeded, NotInGroup
from .residue_ring import as_modulus

DEFAULT_CAP = 10**6
SYMMETRIC_MAX_DEGREE = 8


class Permutation(tuple):
    """Image tuple: ``p[i]`` is the image of point ``i``."""

    def __new__(cls, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on 0..{len(images) - 1}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n, *cycles):
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)

    @property
    def degree(self):
        return len(self)

    def __call__(self, x):
        return self[x]

    def __mul__(self, other):
        """(self * other)(x) = self(other(x))."""
        if len(self) != len(other):
            raise ValueError("degree mismatch")
        return Permutation(self[i] for i in other)

    def inverse(self):
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self))

    def is_involutive_derangement(self):
        return all(self[j] == i and j != i for i, j in enumerate(self))

    def cycles(self):
        seen, out = set(), []
        for i in range(len(self)):
            if i in seen or self[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self[j]
            out.append(tuple(cyc))
        return out

    def __repr__(self):
        return f"Permutation({list(self)})"


class PermGroup:
    """A finite permutation group given by the full list of its elements.

    ``labels`` optionally carries, position by position, the object each
    element came from (the affine maps for the affine embedding).
    """

    def __init__(self, elements, kind=None, labels=None):
        self.elements = tuple(elements)
        self.degree = len(self.elements[0])
        self.kind = kind
        self.labels = tuple(labels) if labels is not None else None
        self._index = {p: i for i, p in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate group elements")
        self.identity_index = self._index[Permutation.identity(self.degree)]
        self.table = np.array(self.elements, dtype=np.int64).reshape(len(self.elements), self.degree)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return tuple(g) in self._index

    def index(self, g):
        try:
            return self._index[tuple(g)]
        except KeyError:
            raise NotInGroup(f"{g!r} is not an element of the group") from None

    def label(self, g):
        i = self.index(g)
        return self.labels[i] if self.labels is not None else self.elements[i]

    @property
    def order(self):
        return len(self.elements)

    def __repr__(self):
        return f"PermGroup(kind={self.kind!r}, degree={self.degree}, order={self.order})"


def closure(generators, cap=DEFAULT_CAP, kind=None) -> PermGroup:
    gens = [Permutation(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators of different degrees")
    ident = Permutation.identity(degree)
    seen = {ident: None}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g * x
            if y not in seen:
                seen[y] = None
                if len(seen) > cap:
                    raise BudgetExceeded(f"group order exceeds cap {cap}")
                queue.append(y)
    return PermGroup(seen, kind=kind)


def affine_embedding(g: AffineMap) -> Permutation:
    return Permutation(g.images())


def builtin_group(kind: str, n, cap=DEFAULT_CAP) -> PermGroup:
    n = as_modulus(n).n
    if kind == "symmetric":
        if n > SYMMETRIC_MAX_DEGREE:
            raise BudgetExceeded(f"symmetric group capped at degree {SYMMETRIC_MAX_DEGREE}")
        return PermGroup((Permutation(p) for p in itertools.permutations(range(n))),
                         kind="symmetric")
    if kind == "dihedral":
        maps = [AffineMap(a, s, n) for s in sorted({1, n - 1}) for a in range(n)]
        return PermGroup((affine_embedding(g) for g in maps), kind="dihedral", labels=maps)
    if kind == "affine":
        maps = enumerate_group(n)
        if len(maps) > cap:
            raise BudgetExceeded(f"group order exceeds cap {cap}")
        return PermGroup((affine_embedding(g) for g in maps), kind="affine", labels=maps)
    raise ValueError(f"unknown group kind {kind!r}")


def quasipolarities_of(G: PermGroup) -> list[Permutation]:
    return [g for g in G if g.is_involutive_derangement()]


def _conjugates_table(G: PermGroup, g) -> np.ndarray:
    # row h: h g h^-1, i.e. x -> h[g[h^-1[x]]]
    T = G.table
    inv = np.argsort(T, axis=1)
    return np.take_along_axis(T, np.asarray(g)[inv], axis=1)


def centralizer_size(G: PermGroup, g) -> int:
    G.index(g)
    conj = _conjugates_table(G, g)
    return int(np.all(conj == np.asarray(g), axis=1).sum())


def conjugacy_class(G: PermGroup, g) -> set[Permutation]:
    G.index(g)
    return {Permutation(row) for row in np.unique(_conjugates_table(G, g), axis=0)}


def quasipolarity_classes(G: PermGroup) -> list[tuple[Permutation, int, int]]:
    """Conjugacy classes of quasipolarities as (min representative, class size, centralizer size)."""
    remaining = sorted(quasipolarities_of(G))
    out = []
    while remaining:
        rep = remaining[0]
        cls = conjugacy_class(G, rep)
        out.append((rep, len(cls), centralizer_size(G, rep)))
        remaining = [g for g in remaining if g not in cls]
    return out
