"""The affine group of Z_n: maps x -> v*x + u with v a unit.

Composition follows (g*h)(x) = g(h(x)) throughout, matching
:mod:`strong_dichotomies.perm_group`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import ModulusError, VerificationFailure
from .residue_ring import as_modulus, euler_phi, sigma_tau_u0, units_and_involutions


@dataclass(frozen=True)
class AffineMap:
    """The map e^u v : x -> v*x + u on Z_n."""

    u: int
    v: int
    n: int

    def __post_init__(self):
        n = as_modulus(self.n).n
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "u", self.u % n)
        object.__setattr__(self, "v", self.v % n)
        if gcd(self.v, n) != 1:
            raise ModulusError(f"linear part {self.v} is not a unit mod {n}")

    @classmethod
    def identity(cls, n):
        return cls(0, 1, n)

    @property
    def sort_key(self):
        return (self.v, self.u)

    def __call__(self, x):
        return apply(self, x)

    def images(self) -> tuple[int, ...]:
        return tuple((self.v * x + self.u) % self.n for x in range(self.n))

    def __str__(self):
        return f"e^{self.u}*{self.v} mod {self.n}"


def _check(*maps: AffineMap):
    if len({g.n for g in maps}) != 1:
        raise ModulusError("affine maps over different moduli")


def apply(g: AffineMap, x) -> int:
    if hasattr(x, "modulus"):
        if as_modulus(x.modulus).n != g.n:
            raise ModulusError("point and map over different moduli")
        x = x.value
    return (g.v * x + g.u) % g.n


def compose(g: AffineMap, h: AffineMap) -> AffineMap:
    """g after h: x -> g(h(x))."""
    _check(g, h)
    return AffineMap(g.v * h.u + g.u, g.v * h.v, g.n)


def invert(g: AffineMap) -> AffineMap:
    w = pow(g.v, -1, g.n)
    return AffineMap(-w * g.u, w, g.n)


def conjugate(h: AffineMap, g: AffineMap) -> AffineMap:
    """h g h^-1, computed by composition."""
    return compose(h, compose(g, invert(h)))


def conjugate_closed_form(h: AffineMap, g: AffineMap) -> AffineMap:
    """h g h^-1 for h = e^t s, g = e^u v, as e^{t(1-v)+su} v."""
    _check(g, h)
    t, s = h.u, h.v
    return AffineMap(t * (1 - g.v) + s * g.u, g.v, g.n)


def is_involution(g: AffineMap) -> bool:
    """v^2 = 1 and u(v+1) = 0 in Z_n. The identity counts."""
    n = g.n
    return g.v * g.v % n == 1 and g.u * (g.v + 1) % n == 0


def is_quasipolarity_bruteforce(g: AffineMap) -> bool:
    if compose(g, g) != AffineMap.identity(g.n):
        return False
    return all(apply(g, x) != x for x in range(g.n))


def is_quasipolarity_characterized(g: AffineMap) -> bool:
    n = g.n
    if g.v * g.v % n != 1:
        return False
    sigma, _, u0 = sigma_tau_u0(g.v, n)
    if 2 * u0 != sigma:
        return False
    return g.u % sigma == u0 % sigma


def enumerate_group(n) -> list[AffineMap]:
    n = as_modulus(n).n
    units, _ = units_and_involutions(n)
    return [AffineMap(u, v, n) for v in units for u in range(n)]


def enumerate_quasipolarities(n) -> list[AffineMap]:
    """Quasipolarities listed straight from the (v, u0 + sigma*q) parametrization."""
    n = as_modulus(n).n
    out = []
    for v in units_and_involutions(n)[1]:
        sigma, _, u0 = sigma_tau_u0(v, n)
        if 2 * u0 != sigma:
            continue
        out.extend(AffineMap(u, v, n) for u in range(u0, n, sigma))
    return out


@dataclass(frozen=True)
class QuasipolarityClass:
    representative: AffineMap
    members: tuple[AffineMap, ...] = field(repr=False)
    stabilizer_size: int

    @property
    def v(self):
        return self.representative.v

    @property
    def orbit_size(self):
        return len(self.members)


def centralizer_size_bruteforce(g: AffineMap, group=None) -> int:
    group = enumerate_group(g.n) if group is None else group
    return sum(1 for h in group if compose(h, g) == compose(g, h))


def quasipolarity_conjugacy(n, validate=True) -> list[QuasipolarityClass]:
    """Conjugacy classes of quasipolarities under the whole affine group.

    Orbits and centralizers are computed by exhaustive conjugation. With
    ``validate`` set, each class is checked against |stabilizer| = sigma*phi(n)
    and |orbit| = n/sigma, and a mismatch raises VerificationFailure.
    """
    n = as_modulus(n).n
    group = enumerate_group(n)
    phi = euler_phi(n)
    remaining = sorted(enumerate_quasipolarities(n), key=lambda g: g.sort_key)
    classes = []
    while remaining:
        rep = remaining[0]
        orbit = sorted({conjugate(h, rep) for h in group}, key=lambda g: g.sort_key)
        stab = centralizer_size_bruteforce(rep, group)
        if validate:
            sigma = sigma_tau_u0(rep.v, n)[0]
            if stab != sigma * phi or len(orbit) != n // sigma:
                raise VerificationFailure("stabilizer formula", rep)
            if len(orbit) * stab != len(group):
                raise VerificationFailure("orbit-stabilizer", rep)
        classes.append(QuasipolarityClass(rep, tuple(orbit), stab))
        seen = set(orbit)
        remaining = [g for g in remaining if g not in seen]
    return classes
